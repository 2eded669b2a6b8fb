#include "qwalk/walk_enum.hpp"

namespace qwalk {

namespace {

void add_into(BiPoly& p, const std::pair<int, int>& e, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0)
        p.erase(it);
}

} // namespace

CountTable::CountTable(int order) : order_(order)
{
    if (order < 0)
        throw ModelError("negative series order");
    for (int n = 0; n <= order; ++n)
        q_.emplace_back(static_cast<std::size_t>(n + 1), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
}

const Rational& CountTable::q(int i, int j, int n) const
{
    if (n < 0 || n > order_ || i < 0 || j < 0 || i > n || j > n)
        return zero_;
    return q_[n][i][j];
}

Rational& CountTable::at(int i, int j, int n)
{
    if (n < 0 || n > order_ || i < 0 || j < 0 || i > n || j > n)
        throw ModelError("count table index out of range");
    return q_[n][i][j];
}

CountTable count_walks(const WeightedModel& m, int order)
{
    CountTable tab(order);
    tab.at(0, 0, 0) = 1;
    auto steps = m.support();
    for (int n = 0; n < order; ++n)
        for (int i = 0; i <= n + 1; ++i)
            for (int j = 0; j <= n + 1; ++j) {
                Rational s = 0;
                for (auto [a, b] : steps)
                    s += m.d(a, b) * tab.q(i - a, j - b, n);
                tab.at(i, j, n + 1) = s;
            }
    return tab;
}

void TruncatedSeries::add_term(int n, int i, int j, const Rational& c)
{
    if (n < 0 || n > order())
        return;
    add_into(terms_[n], {i, j}, c);
}

TruncatedSeries TruncatedSeries::monomial(int order, int n, int i, int j, const Rational& c)
{
    TruncatedSeries s(order);
    s.add_term(n, i, j, c);
    return s;
}

TruncatedSeries TruncatedSeries::from_table(const CountTable& tab)
{
    TruncatedSeries s(tab.order());
    for (int n = 0; n <= tab.order(); ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                s.add_term(n, i, j, tab.q(i, j, n));
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    TruncatedSeries r = *this;
    for (int n = 0; n <= std::min(order(), o.order()); ++n)
        for (const auto& [e, c] : o.terms_[n])
            add_into(r.terms_[n], e, c);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const
{
    TruncatedSeries r = *this;
    for (int n = 0; n <= std::min(order(), o.order()); ++n)
        for (const auto& [e, c] : o.terms_[n])
            add_into(r.terms_[n], e, -c);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    int ord = std::min(order(), o.order());
    TruncatedSeries r(ord);
    for (int a = 0; a <= ord; ++a)
        for (int b = 0; a + b <= ord; ++b)
            for (const auto& [e1, c1] : terms_[a])
                for (const auto& [e2, c2] : o.terms_[b])
                    add_into(r.terms_[a + b], {e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    return r;
}

TruncatedSeries TruncatedSeries::at_x0() const
{
    TruncatedSeries r(order());
    for (int n = 0; n <= order(); ++n)
        for (const auto& [e, c] : terms_[n])
            if (e.first == 0)
                r.terms_[n].emplace(e, c);
    return r;
}

TruncatedSeries TruncatedSeries::at_y0() const
{
    TruncatedSeries r(order());
    for (int n = 0; n <= order(); ++n)
        for (const auto& [e, c] : terms_[n])
            if (e.second == 0)
                r.terms_[n].emplace(e, c);
    return r;
}

bool TruncatedSeries::is_zero() const
{
    for (const auto& t : terms_)
        if (!t.empty())
            return false;
    return true;
}

TruncatedSeries kernel_series(const WeightedModel& m, int order)
{
    TruncatedSeries k = TruncatedSeries::monomial(order, 0, 1, 1, 1);
    for (auto [i, j] : m.support())
        k.add_term(1, i + 1, j + 1, -m.d(i, j));
    return k;
}

bool check_functional_equation(const WeightedModel& m, const CountTable& tab)
{
    const int N = tab.order();
    TruncatedSeries Q = TruncatedSeries::from_table(tab);
    TruncatedSeries K = kernel_series(m, N);
    TruncatedSeries zero(N);
    TruncatedSeries F1 = zero - K.at_y0() * Q.at_y0();
    TruncatedSeries F2 = zero - K.at_x0() * Q.at_x0();
    TruncatedSeries Q00 = Q.at_x0().at_y0();
    TruncatedSeries corner = TruncatedSeries::monomial(N, 1, 0, 0, m.d(-1, -1)) * Q00;
    TruncatedSeries lhs = K * Q;
    TruncatedSeries rhs = TruncatedSeries::monomial(N, 0, 1, 1, 1) - F1 - F2 + corner;
    return (lhs - rhs).is_zero();
}

bool check_functional_equation(const WeightedModel& m, int order)
{
    return check_functional_equation(m, count_walks(m, order));
}

} // namespace qwalk
