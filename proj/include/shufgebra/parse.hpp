#ifndef SHUFGEBRA_PARSE_HPP
#define SHUFGEBRA_PARSE_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "poly_io.hpp"
#include "roots.hpp"
#include "shuffle.hpp"

namespace shufgebra {

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool at_end()
    {
        skip_ws();
        return pos_ == s_.size();
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    unsigned number()
    {
        skip_ws();
        const auto start = pos_;
        unsigned long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(s_[pos_] - '0');
            if (v > 1000000)
                fail("number too large");
            ++pos_;
        }
        if (pos_ == start)
            fail("expected a number");
        return static_cast<unsigned>(v);
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw parse_error(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

inline std::vector<unsigned> number_list(Cursor& c, char close)
{
    std::vector<unsigned> out;
    if (c.accept(close))
        return out;
    do
        out.push_back(c.number());
    while (c.accept(','));
    c.expect(close);
    return out;
}

} // namespace detail

/// "1,1" or "(1,1)": a grading vector of rank length+1.
inline Grading parse_grading(std::string_view text)
{
    detail::Cursor c(text);
    std::vector<unsigned> k;
    if (c.accept('('))
        k = detail::number_list(c, ')');
    else {
        do
            k.push_back(c.number());
        while (c.accept(','));
    }
    if (!c.at_end())
        c.fail("trailing input");
    if (k.empty())
        c.fail("empty grading");
    return Grading(std::move(k));
}

/// "(2,1,0)".
inline Partition parse_partition(std::string_view text)
{
    detail::Cursor c(text);
    c.expect('(');
    auto parts = detail::number_list(c, ')');
    if (!c.at_end())
        c.fail("trailing input");
    return Partition(std::move(parts));
}

/// "{[1,1]:1, [2,2]:1}" for rank n.
inline KostantPartition parse_kostant_partition(std::string_view text, unsigned n)
{
    KostantPartition d(n);
    detail::Cursor c(text);
    c.expect('{');
    if (!c.accept('}')) {
        do {
            c.expect('[');
            Root beta{c.number(), 0};
            c.expect(',');
            beta.j = c.number();
            c.expect(']');
            c.expect(':');
            const unsigned mult = c.number();
            check_root(beta, n);
            d.set(beta, d[beta] + mult);
        } while (c.accept(','));
        c.expect('}');
    }
    if (!c.at_end())
        c.fail("trailing input");
    return d;
}

/// Parse a shuffle element of rank n. Without an explicit grading, k_c is
/// the largest index of x[c,*] named in the text (x[c,r]^0 counts).
template <Coefficient K>
ShuffleElement<K> parse_element(std::string_view text, unsigned n, const field_of<K>& field,
                                const std::optional<Grading>& grading = std::nullopt)
{
    check_rank(n);
    auto parsed = parse_polynomial_ex<K>(text, field);
    Grading k = Grading::zero(n);
    if (grading) {
        if (grading->rank() != n)
            throw invalid_input("grading " + grading->to_string() + " does not have rank " + std::to_string(n));
        k = *grading;
    } else {
        std::vector<unsigned> counts(n - 1, 0);
        for (Variable v : parsed.mentioned) {
            if (v.kind() != Variable::Kind::X)
                throw invalid_input(v.to_string() + " is not a shuffle variable");
            if (v.color() < 1 || v.color() >= n)
                throw invalid_input(v.to_string() + " has no color in rank " + std::to_string(n));
            counts[v.color() - 1] = std::max(counts[v.color() - 1], v.index());
        }
        k = Grading(std::move(counts));
    }
    return ShuffleElement<K>(std::move(k), std::move(parsed.poly), field);
}

} // namespace shufgebra

#endif // SHUFGEBRA_PARSE_HPP
