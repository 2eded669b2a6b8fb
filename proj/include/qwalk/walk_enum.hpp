#pragma once

#include "qwalk/model.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qwalk {

// q(i, j, n): weighted number of n-step quadrant walks from (0,0) to (i,j).
class CountTable
{
public:
    explicit CountTable(int order);

    int order() const { return order_; }
    const Rational& q(int i, int j, int n) const;
    Rational& at(int i, int j, int n);

private:
    int order_;
    std::vector<std::vector<std::vector<Rational>>> q_;  // [n][i][j], 0 <= i, j <= n
    Rational zero_;
};

CountTable count_walks(const WeightedModel& m, int order);

// Polynomial in x, y with rational coefficients; keys are exponent pairs.
using BiPoly = std::map<std::pair<int, int>, Rational>;

// sum_n c_n(x, y) t^n truncated after t^order.
class TruncatedSeries
{
public:
    explicit TruncatedSeries(int order) : terms_(static_cast<std::size_t>(order + 1)) {}

    int order() const { return static_cast<int>(terms_.size()) - 1; }
    const BiPoly& coeff(int n) const { return terms_[n]; }
    void add_term(int n, int i, int j, const Rational& c);

    static TruncatedSeries monomial(int order, int n, int i, int j, const Rational& c);
    // Q(x, y, t) from a count table.
    static TruncatedSeries from_table(const CountTable& tab);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    // Keep only terms with x-exponent 0 (at_x0) or y-exponent 0 (at_y0).
    TruncatedSeries at_x0() const;
    TruncatedSeries at_y0() const;

    bool is_zero() const;

private:
    std::vector<BiPoly> terms_;
};

// K(x,y,t) = xy - t sum d_{i,j} x^(i+1) y^(j+1) as a truncated series.
TruncatedSeries kernel_series(const WeightedModel& m, int order);

// K Q = xy - F1 - F2 + t d_{-1,-1} Q(0,0,t) through t^order, with
// F1 = -K(x,0,t) Q(x,0,t) and F2 = -K(0,y,t) Q(0,y,t).
bool check_functional_equation(const WeightedModel& m, const CountTable& tab);
bool check_functional_equation(const WeightedModel& m, int order);

} // namespace qwalk
