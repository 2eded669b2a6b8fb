#include "qwalk/expr.hpp"

#include <cctype>

namespace qwalk {

namespace {

class Parser
{
public:
    Parser(const FunctionField& ff, const std::string& s) : ff_(ff), s_(s) {}

    CurveFunction run()
    {
        CurveFunction f = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, static_cast<int>(pos_) + 1); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    // Accepts the ASCII operator or its typographic form.
    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        static const std::string minus = "\xe2\x88\x92", dot = "\xc2\xb7";
        const std::string* alt = c == '-' ? &minus : c == '*' ? &dot : nullptr;
        if (alt && s_.compare(pos_, alt->size(), *alt) == 0) {
            pos_ += alt->size();
            return true;
        }
        return false;
    }

    CurveFunction expr()
    {
        CurveFunction f = term();
        for (;;) {
            if (accept('+'))
                f = ff_.add(f, term());
            else if (accept('-'))
                f = ff_.sub(f, term());
            else
                return f;
        }
    }

    CurveFunction term()
    {
        CurveFunction f = unary();
        for (;;) {
            if (accept('*')) {
                f = ff_.mul(f, unary());
            } else if (accept('/')) {
                std::size_t at = pos_;
                CurveFunction d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                f = ff_.div(f, d);
            } else {
                return f;
            }
        }
    }

    CurveFunction unary()
    {
        if (accept('-'))
            return ff_.neg(unary());
        if (accept('+'))
            return unary();
        return power();
    }

    CurveFunction power()
    {
        CurveFunction base = atom();
        if (!accept('^'))
            return base;
        skip();
        bool neg = accept('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer exponent");
        int e = std::stoi(s_.substr(start, pos_ - start));
        if (neg && base.is_zero())
            fail("negative power of zero");
        return ff_.pow(base, neg ? -e : e);
    }

    CurveFunction atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of expression");
        char c = s_[pos_];
        if (accept('(')) {
            CurveFunction f = expr();
            if (!accept(')'))
                fail("expected ')'");
            return f;
        }
        if (c == 'x' || c == 'y' || c == 't') {
            ++pos_;
            return c == 'x' ? ff_.x() : c == 'y' ? ff_.y() : ff_.t();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            try {
                return ff_.constant(RatFunT(parse_rational(s_.substr(start, pos_ - start))));
            } catch (const AlgebraError&) {
                pos_ = start;
                fail("malformed number");
            }
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const FunctionField& ff_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

CurveFunction parse_function(const FunctionField& ff, const std::string& text)
{
    return Parser(ff, text).run();
}

} // namespace qwalk
