#ifndef SHUFGEBRA_POLYNOMIAL_HPP
#define SHUFGEBRA_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "scalar.hpp"

namespace shufgebra {

/// Sparse multivariate polynomial over an exact field.
///
/// Terms are stored in strictly decreasing graded-lex order with no zero
/// coefficients, so two polynomials are equal iff their term lists are.
template <Coefficient K>
class Polynomial {
public:
    using coeff_type = K;

    struct Term {
        Monomial mono;
        K coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Polynomial() = default;

    explicit Polynomial(const K& c)
    {
        if (!shufgebra::is_zero(c))
            terms_.push_back({Monomial{}, c});
    }

    static Polynomial term(const Monomial& m, const K& c)
    {
        Polynomial p;
        if (!shufgebra::is_zero(c))
            p.terms_.push_back({m, c});
        return p;
    }

    static Polynomial var(Variable v, const K& one) { return term(Monomial::of(v), one); }

    /// Build from arbitrary (possibly repeated, unordered, zero) terms.
    static Polynomial from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
        Polynomial p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff += t.coeff;
                if (shufgebra::is_zero(p.terms_.back().coeff))
                    p.terms_.pop_back();
            } else if (!shufgebra::is_zero(t.coeff)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const Term& leading_term() const { return terms_.front(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }

    K constant_term() const
    {
        if (!terms_.empty() && terms_.back().mono.is_one())
            return terms_.back().coeff;
        return K{};
    }

    K coefficient(const Monomial& m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& mm) { return t.mono > mm; });
        if (it != terms_.end() && it->mono == m)
            return it->coeff;
        return K{};
    }

    std::set<Variable> variables() const
    {
        std::set<Variable> vs;
        for (const auto& t : terms_)
            for (std::size_t k = 0; k < t.mono.size(); ++k)
                vs.insert(t.mono[k].var);
        return vs;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
    Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
    Polynomial& operator*=(const Polynomial& o) { return *this = multiply(*this, o); }
    Polynomial& operator*=(const K& c)
    {
        if (shufgebra::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_)
            t.coeff *= c;
        return *this;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
    friend Polynomial operator*(Polynomial a, const K& c) { return a *= c; }
    friend Polynomial operator*(const K& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& t : a.terms_)
            t.coeff = -t.coeff;
        return a;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Multiply every monomial by m and every coefficient by c; order is kept.
    Polynomial times_term(const Monomial& m, const K& c) const
    {
        Polynomial r;
        if (shufgebra::is_zero(c))
            return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mono * m, t.coeff * c});
        return r;
    }

    Polynomial pow(unsigned e) const
    {
        if (e == 0) {
            if (terms_.empty())
                throw std::domain_error("0^0 is undefined without a field");
            return Polynomial(one_like());
        }
        Polynomial acc = *this;
        for (unsigned k = 1; k < e; ++k)
            acc = multiply(acc, *this);
        return acc;
    }

    /// Rename variables monomial by monomial (the renaming must be
    /// injective on the variables that occur).
    template <class Rename>
    Polynomial renamed(Rename&& rename) const
    {
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_)
            ts.push_back({t.mono.renamed(rename), t.coeff});
        return from_terms(std::move(ts));
    }

    /// The field element 1 of this polynomial's field; the polynomial must be
    /// nonzero.
    K one_like() const
    {
        const K& c = terms_.front().coeff;
        return c / c;
    }

private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract)
    {
        Polynomial r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            auto cmp = a.terms_[i].mono <=> b.terms_[j].mono;
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                r.terms_.push_back(subtract ? Term{b.terms_[j].mono, -b.terms_[j].coeff} : b.terms_[j]);
                ++j;
            } else {
                K c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
                if (!shufgebra::is_zero(c))
                    r.terms_.push_back({a.terms_[i].mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i)
            r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j)
            r.terms_.push_back(subtract ? Term{b.terms_[j].mono, -b.terms_[j].coeff} : b.terms_[j]);
        return r;
    }

    static Polynomial multiply(const Polynomial& a, const Polynomial& b)
    {
        const Polynomial& small = a.size() <= b.size() ? a : b;
        const Polynomial& big = a.size() <= b.size() ? b : a;
        if (small.is_zero())
            return {};
        if (small.size() <= 8) {
            Polynomial acc = big.times_term(small.terms_[0].mono, small.terms_[0].coeff);
            for (std::size_t k = 1; k < small.size(); ++k)
                acc = merge(acc, big.times_term(small.terms_[k].mono, small.terms_[k].coeff), false);
            return acc;
        }
        std::unordered_map<Monomial, K, MonomialHash> acc;
        acc.reserve(big.size() * 2);
        for (const auto& s : small.terms_)
            for (const auto& t : big.terms_) {
                auto [it, inserted] = acc.try_emplace(s.mono * t.mono, s.coeff * t.coeff);
                if (!inserted)
                    it->second += s.coeff * t.coeff;
            }
        std::vector<Term> ts;
        ts.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!shufgebra::is_zero(c))
                ts.push_back({m, std::move(c)});
        std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
        Polynomial r;
        r.terms_ = std::move(ts);
        return r;
    }

    std::vector<Term> terms_;
};

/// A ring homomorphism given by images of some variables; unmapped
/// variables are fixed.
template <Coefficient K>
using Substitution = std::map<Variable, Polynomial<K>>;

namespace detail {

// Image a*y + c with y a single variable (or absent when a = 0).
template <Coefficient K>
struct AffineImage {
    std::optional<Variable> var;
    K slope;
    K offset;
};

template <Coefficient K>
std::optional<AffineImage<K>> as_affine(const Polynomial<K>& img, const K& zero)
{
    AffineImage<K> out{std::nullopt, zero, zero};
    for (const auto& t : img.terms()) {
        if (t.mono.is_one())
            out.offset = t.coeff;
        else if (t.mono.degree() == 1 && t.mono.size() == 1 && !out.var) {
            out.var = t.mono[0].var;
            out.slope = t.coeff;
        } else
            return std::nullopt;
    }
    return out;
}

// One variable at a time, expanding (a*y + c)^e binomially. Valid when no
// image mentions a variable that is itself substituted.
template <Coefficient K>
Polynomial<K> substitute_affine(const Polynomial<K>& f, const std::vector<std::pair<Variable, AffineImage<K>>>& images,
                                const K& one)
{
    std::vector<typename Polynomial<K>::Term> cur(f.terms().begin(), f.terms().end());
    std::vector<std::vector<K>> binom{{one}};
    for (const auto& [v, img] : images) {
        std::unordered_map<Monomial, K, MonomialHash> acc;
        std::vector<K> slope_pow{one}, offset_pow{one};
        for (const auto& t : cur) {
            auto [rest, e] = t.mono.split(v);
            if (e == 0) {
                auto [it, ins] = acc.try_emplace(t.mono, t.coeff);
                if (!ins)
                    it->second += t.coeff;
                continue;
            }
            while (binom.size() <= e) {
                const auto& prev = binom.back();
                std::vector<K> row(prev.size() + 1, one);
                for (std::size_t k = 1; k < prev.size(); ++k)
                    row[k] = prev[k - 1] + prev[k];
                binom.push_back(std::move(row));
            }
            while (slope_pow.size() <= e) {
                slope_pow.push_back(slope_pow.back() * img.slope);
                offset_pow.push_back(offset_pow.back() * img.offset);
            }
            for (unsigned k = 0; k <= e; ++k) {
                if (k > 0 && !img.var)
                    break;
                K c = t.coeff * binom[e][k] * slope_pow[k] * offset_pow[e - k];
                if (shufgebra::is_zero(c))
                    continue;
                Monomial m = k ? rest * Monomial::of(*img.var, k) : rest;
                auto [it, ins] = acc.try_emplace(m, c);
                if (!ins)
                    it->second += c;
            }
        }
        cur.clear();
        cur.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!shufgebra::is_zero(c))
                cur.push_back({m, std::move(c)});
    }
    return Polynomial<K>::from_terms(std::move(cur));
}

} // namespace detail

template <Coefficient K>
Polynomial<K> substitute(const Polynomial<K>& f, const Substitution<K>& sigma)
{
    if (sigma.empty() || f.is_zero())
        return f;
    {
        const K one = f.one_like();
        const K zero = one - one;
        std::vector<std::pair<Variable, detail::AffineImage<K>>> images;
        bool affine = true;
        for (const auto& [v, img] : sigma) {
            auto a = detail::as_affine(img, zero);
            if (!a || (a->var && sigma.count(*a->var))) {
                affine = false;
                break;
            }
            images.emplace_back(v, std::move(*a));
        }
        if (affine)
            return detail::substitute_affine(f, images, one);
    }
    std::map<std::pair<Variable, unsigned>, Polynomial<K>> powers;
    auto power = [&](Variable v, unsigned e) -> const Polynomial<K>& {
        auto it = powers.find({v, e});
        if (it != powers.end())
            return it->second;
        const auto& img = sigma.at(v);
        unsigned have = 1;
        while (powers.count({v, have + 1}))
            ++have;
        if (have == 1)
            powers.try_emplace({v, 1}, img);
        for (; have < e; ++have)
            powers.try_emplace({v, have + 1}, powers.at({v, have}) * img);
        return powers.at({v, e});
    };
    std::unordered_map<Monomial, K, MonomialHash> acc;
    for (const auto& t : f.terms()) {
        Monomial kept;
        Polynomial<K> factor = Polynomial<K>::term(Monomial{}, t.coeff);
        bool touched = false;
        for (std::size_t k = 0; k < t.mono.size(); ++k) {
            auto e = t.mono[k];
            if (sigma.count(e.var)) {
                factor = factor * power(e.var, e.exp);
                touched = true;
            } else {
                kept = kept * Monomial::of(e.var, e.exp);
            }
        }
        if (!touched) {
            auto [it, ins] = acc.try_emplace(t.mono, t.coeff);
            if (!ins)
                it->second += t.coeff;
            continue;
        }
        for (const auto& s : factor.terms()) {
            auto [it, ins] = acc.try_emplace(s.mono * kept, s.coeff);
            if (!ins)
                it->second += s.coeff;
        }
    }
    std::vector<typename Polynomial<K>::Term> ts;
    ts.reserve(acc.size());
    for (auto& [m, c] : acc)
        ts.push_back({m, std::move(c)});
    return Polynomial<K>::from_terms(std::move(ts));
}

// Canonical text: terms in decreasing graded-lex order, `c*x[i,r]^e*w[i,j,s]^e*t^e`,
// unit coefficients and unit exponents omitted, no spaces. Rational
// coefficients print as `a/b` with the sign pulled into the joining `+`/`-`;
// prime-field coefficients print as residues in [0, p).
template <Coefficient K>
std::string to_string(const Polynomial<K>& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::string c = to_string(t.coeff);
        bool negative = !c.empty() && c[0] == '-';
        if (negative)
            c.erase(0, 1);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";
        first = false;
        if (t.mono.is_one()) {
            out += c;
        } else {
            if (c != "1")
                out += c + "*";
            out += t.mono.to_string();
        }
    }
    return out;
}


namespace detail {

template <Coefficient K>
Polynomial<K> divide_monic_linear(const Polynomial<K>& f, Variable lead, const Polynomial<K>& rest,
                                  const Polynomial<K>& divisor)
{
    // f = sum_e c_e lead^e with c_e free of `lead`; synthetic division by
    // (lead + rest).
    std::map<unsigned, std::vector<typename Polynomial<K>::Term>> by_exp;
    unsigned top = 0;
    for (const auto& t : f.terms()) {
        auto [m, e] = t.mono.split(lead);
        by_exp[e].push_back({m, t.coeff});
        top = std::max(top, e);
    }
    if (f.is_zero())
        return {};
    std::vector<Polynomial<K>> c(top + 1);
    for (auto& [e, ts] : by_exp)
        c[e] = Polynomial<K>::from_terms(std::move(ts));
    if (top == 0)
        throw not_divisible(to_string(f) + " by " + to_string(divisor), to_string(f));
    std::vector<Polynomial<K>> q(top);
    q[top - 1] = c[top];
    for (unsigned k = top - 1; k >= 1; --k)
        q[k - 1] = c[k] - rest * q[k];
    Polynomial<K> remainder = c[0] - rest * q[0];
    if (!remainder.is_zero())
        throw not_divisible(to_string(f) + " by " + to_string(divisor), to_string(remainder));
    std::vector<typename Polynomial<K>::Term> out;
    for (unsigned k = 0; k < top; ++k)
        for (const auto& t : q[k].terms())
            out.push_back({t.mono * Monomial::of(lead, k), t.coeff});
    return Polynomial<K>::from_terms(std::move(out));
}

} // namespace detail

/// Exact quotient f / g. Throws not_divisible if g does not divide f.
///
/// Uses leading-term reduction under the graded-lex order. Divisors of
/// degree one take a synthetic-division path in their leading variable,
/// which computes the same quotient.
template <Coefficient K>
Polynomial<K> exact_divide(const Polynomial<K>& f, const Polynomial<K>& g)
{
    if (g.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (f.is_zero())
        return {};
    const auto& lt = g.leading_term();
    const K inv = g.one_like() / lt.coeff;
    if (g.is_constant())
        return f * inv;
    if (g.degree() == 1) {
        Variable lead = lt.mono[0].var;
        Polynomial<K> rest = (g - Polynomial<K>::term(lt.mono, lt.coeff)) * inv;
        return detail::divide_monic_linear(f, lead, rest, g) * inv;
    }
    std::map<Monomial, K, std::greater<>> rem;
    for (const auto& t : f.terms())
        rem.emplace(t.mono, t.coeff);
    std::vector<typename Polynomial<K>::Term> quot;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lt.mono.divides(it->first))
            throw not_divisible(to_string(f) + " by " + to_string(g),
                                to_string(Polynomial<K>::term(it->first, it->second)));
        Monomial qm = lt.mono.quotient_of(it->first);
        K qc = it->second / lt.coeff;
        for (const auto& t : g.terms()) {
            Monomial m = t.mono * qm;
            auto [pos, ins] = rem.try_emplace(m, -(t.coeff * qc));
            if (!ins) {
                pos->second -= t.coeff * qc;
                if (is_zero(pos->second))
                    rem.erase(pos);
            }
        }
        quot.push_back({qm, qc});
    }
    return Polynomial<K>::from_terms(std::move(quot));
}

/// The grading of the colored variables: k[i-1] variables of color i.
using ColorCounts = std::vector<unsigned>;

/// A permutation of the x-indices of every color: perm[i-1][r-1] is the new
/// index of x[i,r].
using ColorPermutation = std::vector<std::vector<unsigned>>;

template <Coefficient K>
Polynomial<K> permute(const Polynomial<K>& f, const ColorPermutation& perm)
{
    return f.renamed([&](Variable v) {
        if (v.kind() != Variable::Kind::X || v.color() > perm.size() || v.index() > perm[v.color() - 1].size())
            return v;
        return Variable::x(v.color(), perm[v.color() - 1][v.index() - 1]);
    });
}

/// Sum of f over the given permutations, with no normalization.
template <Coefficient K>
Polynomial<K> symmetrize(const Polynomial<K>& f, const ColorCounts& k, const std::vector<ColorPermutation>& perms)
{
    for (Variable v : f.variables())
        if (v.kind() == Variable::Kind::X && (v.color() > k.size() || v.index() > k[v.color() - 1]))
            throw invalid_input(v.to_string() + " lies outside the declared grading");
    for (const auto& perm : perms) {
        if (perm.size() > k.size())
            throw invalid_input("permutation has more colors than the grading");
        for (std::size_t i = 0; i < perm.size(); ++i) {
            std::vector<unsigned> sorted = perm[i];
            std::sort(sorted.begin(), sorted.end());
            bool ok = sorted.size() == k[i];
            for (std::size_t r = 0; ok && r < sorted.size(); ++r)
                ok = sorted[r] == r + 1;
            if (!ok)
                throw invalid_input("permutation of color " + std::to_string(i + 1)
                                    + " touches an index absent from the grading");
        }
    }
    Polynomial<K> acc;
    for (const auto& perm : perms)
        acc += permute(f, perm);
    return acc;
}

/// Every element of the product of symmetric groups for the grading k.
inline std::vector<ColorPermutation> full_symmetric_group(const ColorCounts& k)
{
    std::vector<ColorPermutation> out{ColorPermutation{}};
    for (unsigned ki : k) {
        std::vector<unsigned> base(ki);
        for (unsigned r = 0; r < ki; ++r)
            base[r] = r + 1;
        std::vector<ColorPermutation> next;
        do {
            for (const auto& partial : out) {
                auto ext = partial;
                ext.push_back(base);
                next.push_back(std::move(ext));
            }
        } while (std::next_permutation(base.begin(), base.end()));
        out = std::move(next);
    }
    return out;
}

/// True iff f is invariant under all adjacent transpositions within each
/// color group of k.
template <Coefficient K>
bool is_symmetric(const Polynomial<K>& f, const ColorCounts& k)
{
    for (std::size_t i = 0; i < k.size(); ++i) {
        for (unsigned r = 1; r < k[i]; ++r) {
            auto swapped = f.renamed([&](Variable v) {
                if (v.kind() == Variable::Kind::X && v.color() == i + 1) {
                    if (v.index() == r)
                        return Variable::x(i + 1, r + 1);
                    if (v.index() == r + 1)
                        return Variable::x(i + 1, r);
                }
                return v;
            });
            if (!(swapped == f))
                return false;
        }
    }
    return true;
}

/// True iff every coefficient lies in Z[1/2].
inline bool coeffs_in_half_integers(const Polynomial<Rational>& f)
{
    for (const auto& t : f.terms()) {
        mpz_class d = t.coeff.denominator();
        if (mpz_popcount(d.get_mpz_t()) != 1)
            return false;
    }
    return true;
}

/// Reduce a rational polynomial into F_p. Throws if some denominator is
/// divisible by p.
inline Polynomial<ModP> reduce_mod(const Polynomial<Rational>& f, const PrimeField& field)
{
    std::vector<Polynomial<ModP>::Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms())
        ts.push_back({t.mono, field.from_rational(t.coeff)});
    return Polynomial<ModP>::from_terms(std::move(ts));
}

} // namespace shufgebra

#endif // SHUFGEBRA_POLYNOMIAL_HPP
