#ifndef SHUFGEBRA_RANK1_HPP
#define SHUFGEBRA_RANK1_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linear_algebra.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "shuffle.hpp"

namespace shufgebra {

// Rank one: symmetric polynomials in x[1,1..k], written x_1..x_k below.

inline Variable rank1_var(unsigned s) { return Variable::x(1, s); }

/// The monomial symmetric polynomial m_lambda in x_1..x_k, k = length(lambda).
template <class Field>
Polynomial<typename Field::value_type> m_lambda(const Partition& lambda, const Field& field)
{
    using K = typename Field::value_type;
    std::vector<unsigned> exps(lambda.parts().rbegin(), lambda.parts().rend());
    std::vector<typename Polynomial<K>::Term> terms;
    do {
        Monomial m;
        for (std::size_t s = 0; s < exps.size(); ++s)
            m = m * Monomial::of(rank1_var(static_cast<unsigned>(s + 1)), exps[s]);
        terms.push_back({m, field(1)});
    } while (std::next_permutation(exps.begin(), exps.end()));
    return Polynomial<K>::from_terms(std::move(terms));
}

/// P_lambda = (1/mul(lambda)) x^{lambda_1} * ... * x^{lambda_k}, computed over
/// Q. Throws if a coefficient is not an integer.
inline Polynomial<Rational> hl_p_rational(const Partition& lambda)
{
    const RationalField q;
    auto acc = ShuffleElement<Rational>::unit(2, q);
    for (unsigned part : lambda.parts())
        acc = shuffle_mul(acc, psi_generator(2, 1, part, q));
    Polynomial<Rational> f = acc.numerator() * Rational(mpq_class(1, lambda.mul()));
    for (const auto& t : f.terms())
        if (!t.coeff.is_integer())
            throw std::logic_error("P" + lambda.to_string() + " has non-integral coefficient " + t.coeff.to_string());
    return f;
}

/// P_lambda over the given field: computed over Q, then reduced.
template <class Field>
Polynomial<typename Field::value_type> hl_p(const Partition& lambda, const Field& field)
{
    using K = typename Field::value_type;
    auto f = hl_p_rational(lambda);
    std::vector<typename Polynomial<K>::Term> ts;
    for (const auto& t : f.terms())
        ts.push_back({t.mono, field.from_rational(t.coeff)});
    return Polynomial<K>::from_terms(std::move(ts));
}

namespace detail {

template <Coefficient K>
void require_rank1_symmetric(const Polynomial<K>& f, unsigned k)
{
    for (Variable v : f.variables())
        if (v.kind() != Variable::Kind::X || v.color() != 1 || v.index() > k)
            throw invalid_input(v.to_string() + " is not one of x[1,1.." + std::to_string(k) + "]");
    if (!is_symmetric(f, ColorCounts{k}))
        throw invalid_input("not a symmetric polynomial: " + to_string(f));
}

} // namespace detail

/// Coefficients c_lambda with f = sum c_lambda m_lambda.
template <Coefficient K>
std::map<Partition, K> expand_m(const Polynomial<K>& f, unsigned k)
{
    detail::require_rank1_symmetric(f, k);
    std::map<Partition, K> out;
    for (const auto& t : f.terms()) {
        std::vector<unsigned> exps(k);
        for (unsigned s = 1; s <= k; ++s)
            exps[s - 1] = t.mono.exponent(rank1_var(s));
        if (std::is_sorted(exps.begin(), exps.end(), std::greater<>()))
            out.emplace(Partition(std::move(exps)), t.coeff);
    }
    return out;
}

/// Coefficients c_lambda with f = sum c_lambda P_lambda, by peeling off the
/// largest partition (size, then lexicographic) each step.
template <class Field>
std::map<Partition, typename Field::value_type> expand_hl(const Polynomial<typename Field::value_type>& f, unsigned k,
                                                          const Field& field)
{
    using K = typename Field::value_type;
    detail::require_rank1_symmetric(f, k);
    std::map<Partition, K> out;
    Polynomial<K> rest = f;
    while (!rest.is_zero()) {
        auto m = expand_m(rest, k);
        auto top = std::prev(m.end());
        const Partition lambda = top->first;
        const K c = top->second;
        out.emplace(lambda, c);
        rest -= hl_p(lambda, field) * c;
    }
    return out;
}

/// True iff f vanishes on x_1 = t, x_2 = t - 1, ..., x_p = t - (p-1); vacuous
/// for k < p.
inline bool is_in_J(const Polynomial<ModP>& f, unsigned k, const PrimeField& field)
{
    if (k < field.p)
        return true;
    const auto t = Polynomial<ModP>::var(Variable::t(), field(1));
    Substitution<ModP> sigma;
    for (unsigned s = 1; s <= field.p; ++s)
        sigma.emplace(rank1_var(s), t + Polynomial<ModP>(field(-static_cast<long>(s - 1))));
    return substitute(f, sigma).is_zero();
}

template <Coefficient K>
struct RestrictedExpansion {
    std::map<Partition, K> coefficients;
    std::optional<Partition> witness; // a non-restricted partition when f is not in the image
    bool in_image() const { return !witness.has_value(); }
};

/// Expansion of f in the p-restricted P_lambda, or the first non-restricted
/// partition with a nonzero coefficient.
inline RestrictedExpansion<ModP> express_p_restricted(const Polynomial<ModP>& f, unsigned k, const PrimeField& field)
{
    RestrictedExpansion<ModP> out;
    out.coefficients = expand_hl(f, k, field);
    for (const auto& [lambda, c] : out.coefficients)
        if (!lambda.is_p_restricted(field.p)) {
            out.witness = lambda;
            break;
        }
    return out;
}

/// rho: set the last of k+1 variables to zero.
template <Coefficient K>
Polynomial<K> rho(const Polynomial<K>& f, unsigned k_plus_one)
{
    if (k_plus_one == 0)
        throw invalid_input("rho needs at least one variable");
    return substitute(f, Substitution<K>{{rank1_var(k_plus_one), Polynomial<K>{}}});
}

/// tau: set the last p of k+1 variables to 0, 1, ..., p-1.
inline Polynomial<ModP> tau(const Polynomial<ModP>& f, unsigned k_plus_one, const PrimeField& field)
{
    if (k_plus_one < field.p)
        throw invalid_input("tau needs at least p variables");
    Substitution<ModP> sigma;
    const unsigned first = k_plus_one - field.p + 1;
    for (unsigned s = first; s <= k_plus_one; ++s)
        sigma.emplace(rank1_var(s), Polynomial<ModP>(field(static_cast<long>(s - first))));
    return substitute(f, sigma);
}

struct DimCount {
    std::size_t dimension = 0; // dim of the wheel-p subspace of degree <= D
    std::size_t restricted = 0; // p-restricted partitions of length k, size <= D
    friend bool operator==(const DimCount&, const DimCount&) = default;
};

/// Dimension of {f symmetric in k variables over F_p, deg f <= D, f in J_k}
/// against the number of p-restricted partitions of length k and size <= D.
inline DimCount dim_check(unsigned k, unsigned max_degree, const PrimeField& field)
{
    DimCount out;
    const auto parts = partitions_up_to(k, max_degree);
    for (const auto& lambda : parts)
        out.restricted += lambda.is_p_restricted(field.p);
    if (k < field.p) {
        out.dimension = parts.size();
        return out;
    }
    const auto t = Polynomial<ModP>::var(Variable::t(), field(1));
    Substitution<ModP> sigma;
    for (unsigned s = 1; s <= field.p; ++s)
        sigma.emplace(rank1_var(s), t + Polynomial<ModP>(field(-static_cast<long>(s - 1))));
    std::vector<Polynomial<ModP>> images;
    images.reserve(parts.size());
    for (const auto& lambda : parts)
        images.push_back(substitute(m_lambda(lambda, field), sigma));
    out.dimension = parts.size() - rank(images);
    return out;
}

} // namespace shufgebra

#endif // SHUFGEBRA_RANK1_HPP
