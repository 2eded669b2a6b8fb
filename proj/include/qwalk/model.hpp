#pragma once

#include "qwalk/scalar.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

class ModelError : public std::runtime_error
{
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with a 1-based line/column into the source text.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column)
    {
    }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

// Weights d_{i,j} for (i,j) in {-1,0,1}^2.
class WeightedModel
{
public:
    WeightedModel() = default;

    const Rational& d(int i, int j) const { return w_[i + 1][j + 1]; }
    void set(int i, int j, const Rational& v) { w_[i + 1][j + 1] = v; }

    // Throws ModelError unless some step moves up or right and some step moves down or left.
    void validate() const;
    bool nonnegative() const;

    WeightedModel transposed() const;
    WeightedModel scaled(const Rational& s) const;

    std::vector<std::pair<int, int>> support() const;

    // "N=1, SW=2/3, ..." in a fixed step order; zero weights omitted.
    std::string describe() const;

    // Same step set with every present weight set to 1.
    static WeightedModel unweighted(const std::vector<std::pair<int, int>>& steps);

    friend bool operator==(const WeightedModel& a, const WeightedModel& b) { return a.w_ == b.w_; }

private:
    std::array<std::array<Rational, 3>, 3> w_{};
};

// "N", "NE", ..., "0", or "i,j" with i, j in {-1,0,1}.
std::pair<int, int> parse_step(const std::string& name);
std::string step_name(int i, int j);

// Text format: one "step weight" pair per line, separated by '=', ':' or blanks,
// '#' starts a comment. A leading '{' switches to a JSON object of the same map.
WeightedModel parse_model(const std::string& text);
WeightedModel load_model(const std::string& path);

} // namespace qwalk
