#ifndef SHUFGEBRA_POLY_IO_HPP
#define SHUFGEBRA_POLY_IO_HPP

#include <cctype>
#include <set>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "polynomial.hpp"

namespace shufgebra {

template <Coefficient K>
struct ParsedPolynomial {
    Polynomial<K> poly;
    // Every variable named in the text, including those raised to the 0th
    // power; callers use it to infer a grading.
    std::set<Variable> mentioned;
};

namespace detail {

template <Coefficient K>
class PolyParser {
public:
    PolyParser(std::string_view text, const field_of<K>& field) : s_(text), field_(field) {}

    ParsedPolynomial<K> run()
    {
        ParsedPolynomial<K> out;
        out.poly = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        out.mentioned = std::move(mentioned_);
        return out;
    }

private:
    Polynomial<K> expr()
    {
        skip();
        Polynomial<K> acc;
        bool negate = false;
        if (peek('+') || peek('-'))
            negate = s_[pos_++] == '-';
        acc = term();
        if (negate)
            acc = -acc;
        while (true) {
            skip();
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial<K> term()
    {
        Polynomial<K> acc = factor();
        while (true) {
            skip();
            if (!peek('*'))
                return acc;
            ++pos_;
            acc *= factor();
        }
    }

    Polynomial<K> factor()
    {
        Polynomial<K> base = primary();
        skip();
        if (peek('^')) {
            ++pos_;
            skip();
            unsigned e = static_cast<unsigned>(std::stoul(digits()));
            if (e == 0)
                return Polynomial<K>(field_(1));
            return base.pow(e);
        }
        return base;
    }

    Polynomial<K> primary()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            skip();
            expect(')');
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::string den = "1";
            skip();
            if (peek('/')) {
                ++pos_;
                skip();
                den = digits();
            }
            mpq_class q(num + "/" + den);
            if (q.get_den() == 0)
                fail("zero denominator");
            q.canonicalize();
            return Polynomial<K>(field_.from_rational(q));
        }
        if (c == 'x' || c == 'w') {
            ++pos_;
            auto idx = indices();
            Variable v;
            if (c == 'x') {
                if (idx.size() != 2)
                    fail("x needs two indices");
                v = Variable::x(idx[0], idx[1]);
            } else {
                if (idx.size() != 3)
                    fail("w needs three indices");
                v = Variable::w(idx[0], idx[1], idx[2]);
            }
            mentioned_.insert(v);
            return Polynomial<K>::var(v, field_(1));
        }
        if (c == 't') {
            ++pos_;
            mentioned_.insert(Variable::t());
            return Polynomial<K>::var(Variable::t(), field_(1));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::vector<unsigned> indices()
    {
        skip();
        expect('[');
        std::vector<unsigned> out;
        while (true) {
            skip();
            out.push_back(static_cast<unsigned>(std::stoul(digits())));
            skip();
            if (peek(',')) {
                ++pos_;
                continue;
            }
            expect(']');
            return out;
        }
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    void expect(char c)
    {
        if (!peek(c))
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw parse_error(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    const field_of<K>& field_;
    std::set<Variable> mentioned_;
};

} // namespace detail

/// Parse a polynomial. Accepts the canonical grammar plus parentheses,
/// whitespace and arbitrary products/powers of subexpressions.
template <Coefficient K>
ParsedPolynomial<K> parse_polynomial_ex(std::string_view text, const field_of<K>& field)
{
    return detail::PolyParser<K>(text, field).run();
}

template <Coefficient K>
Polynomial<K> parse_polynomial(std::string_view text, const field_of<K>& field)
{
    return parse_polynomial_ex<K>(text, field).poly;
}

} // namespace shufgebra

#endif // SHUFGEBRA_POLY_IO_HPP
