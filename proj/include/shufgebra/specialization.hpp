#ifndef SHUFGEBRA_SPECIALIZATION_HPP
#define SHUFGEBRA_SPECIALIZATION_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pbw.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "roots.hpp"
#include "shuffle.hpp"

namespace shufgebra {

inline Variable w_var(const Root& beta, unsigned s) { return Variable::w(beta.i, beta.j, s); }

/// phi_d applied to a numerator through an explicit variable split.
template <Coefficient K>
Polynomial<K> phi_with_split(const ShuffleElement<K>& F, const KostantPartition& d, const std::vector<SplitEntry>& split)
{
    const auto& field = F.field();
    if (!(F.grading() == d.grading()))
        return {};
    const K one = field(1);
    Substitution<K> sigma;
    for (const auto& e : split) {
        auto img = Polynomial<K>::var(w_var(e.beta, e.s), one) + Polynomial<K>(field(-static_cast<long>(e.ell), 2));
        if (!sigma.emplace(Variable::x(e.ell, e.index), std::move(img)).second)
            throw invalid_input("split uses " + Variable::x(e.ell, e.index).to_string() + " twice");
    }
    return substitute(F.numerator(), sigma);
}

/// The specialization phi_d: x^{(beta,s)}_ell -> w[beta,s] - ell/2 on the
/// numerator, using the canonical split. Zero if the gradings differ.
template <Coefficient K>
Polynomial<K> phi(const KostantPartition& d, const ShuffleElement<K>& F)
{
    if (d.rank() != F.rank())
        throw invalid_input("Kostant partition and element have different rank");
    return phi_with_split(F, d, canonical_split(d));
}

/// G_beta = prod_{s != s'} (w[beta,s] - w[beta,s'] + 1)^{j-i}.
template <class Field>
Polynomial<typename Field::value_type> g_beta(const Root& beta, unsigned d_beta, const Field& field)
{
    using K = typename Field::value_type;
    const K one = field(1);
    Polynomial<K> acc(one);
    for (unsigned s = 1; s <= d_beta; ++s)
        for (unsigned s2 = 1; s2 <= d_beta; ++s2)
            if (s != s2)
                acc *= detail::linear_form(w_var(beta, s), w_var(beta, s2), one, one).pow(beta.j - beta.i);
    return acc;
}

/// G_{beta,beta'} for beta < beta'.
template <class Field>
Polynomial<typename Field::value_type> g_cross(const Root& beta, const Root& beta2, unsigned d_beta, unsigned d_beta2,
                                               const Field& field)
{
    using K = typename Field::value_type;
    if (!(beta < beta2))
        throw invalid_input("g_cross needs " + beta.to_string() + " < " + beta2.to_string());
    const K one = field(1);
    unsigned same = 0, shifted = 0;
    for (unsigned l = beta.i; l <= beta.j; ++l)
        for (unsigned l2 = beta2.i; l2 <= beta2.j; ++l2) {
            same += l == l2;
            shifted += l == l2 + 1;
        }
    const unsigned plain = (beta2.i > beta.i && beta2.contains(beta.j + 1)) ? 1 : 0;
    Polynomial<K> acc(one);
    for (unsigned s = 1; s <= d_beta; ++s)
        for (unsigned s2 = 1; s2 <= d_beta2; ++s2) {
            const Variable a = w_var(beta, s), b = w_var(beta2, s2);
            if (same)
                acc *= detail::linear_form(a, b, one, one).pow(same);
            if (shifted)
                acc *= detail::linear_form(a, b, field(-1), one).pow(shifted);
            if (plain)
                acc *= detail::linear_form(a, b, K{}, one);
        }
    return acc;
}

namespace detail {

// sum over all of S_m acting on w[beta,1..m] of sign * sigma(q), divided by
// prod_{s<s'} (w_s - w_s'); this is Sym(q / Vandermonde).
template <Coefficient K>
Polynomial<K> symmetrize_over_vandermonde(const Polynomial<K>& q, const Root& beta, unsigned m, const K& one)
{
    std::vector<unsigned> perm(m);
    std::iota(perm.begin(), perm.end(), 1U);
    Polynomial<K> sum;
    do {
        unsigned inv = 0;
        for (unsigned a = 0; a < m; ++a)
            for (unsigned b = a + 1; b < m; ++b)
                inv += perm[a] > perm[b];
        auto moved = q.renamed([&](Variable v) {
            if (v.kind() == Variable::Kind::W && v.root_i() == beta.i && v.root_j() == beta.j && v.index() <= m)
                return w_var(beta, perm[v.index() - 1]);
            return v;
        });
        sum += inv % 2U ? -moved : moved;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (unsigned s = 1; s <= m; ++s)
        for (unsigned s2 = s + 1; s2 <= m; ++s2)
            sum = exact_divide(sum, linear_form(w_var(beta, s), w_var(beta, s2), K{}, one));
    return sum;
}

} // namespace detail

/// P~_lambda in the variables w[beta,1..len(lambda)]:
/// Sym( prod_s (w_s - i/2)^{lambda_s} prod_{s<s'} (w_s - w_s' + 1)/(w_s - w_s') ).
template <class Field>
Polynomial<typename Field::value_type> p_tilde(const Partition& lambda, const Root& beta, const Field& field)
{
    using K = typename Field::value_type;
    const K one = field(1);
    const auto m = static_cast<unsigned>(lambda.length());
    Polynomial<K> q(one);
    for (unsigned s = 1; s <= m; ++s) {
        if (lambda[s - 1])
            q *= (Polynomial<K>::var(w_var(beta, s), one) + Polynomial<K>(field(-static_cast<long>(beta.i), 2)))
                     .pow(lambda[s - 1]);
        for (unsigned s2 = s + 1; s2 <= m; ++s2)
            q *= detail::linear_form(w_var(beta, s), w_var(beta, s2), one, one);
    }
    return detail::symmetrize_over_vandermonde(q, beta, m, one);
}

/// Reduced specialization xi_d = phi_d / prod_beta G_beta. Throws
/// not_divisible if the division is not exact.
template <Coefficient K>
Polynomial<K> xi(const KostantPartition& d, const ShuffleElement<K>& F)
{
    Polynomial<K> acc = phi(d, F);
    if (acc.is_zero())
        return acc;
    const K one = F.field()(1);
    for (const Root& beta : positive_roots(d.rank())) {
        const unsigned m = d[beta];
        for (unsigned s = 1; s <= m; ++s)
            for (unsigned s2 = 1; s2 <= m; ++s2)
                if (s != s2)
                    for (unsigned e = 0; e < beta.j - beta.i; ++e)
                        acc = exact_divide(acc, detail::linear_form(w_var(beta, s), w_var(beta, s2), one, one));
    }
    return acc;
}

/// True iff f is symmetric in w[beta,1..d_beta] for every root beta.
template <Coefficient K>
bool is_specialized_symmetric(const Polynomial<K>& f, const KostantPartition& d)
{
    for (const Root& beta : positive_roots(d.rank()))
        for (unsigned s = 1; s < d[beta]; ++s) {
            auto swapped = f.renamed([&](Variable v) {
                if (v == w_var(beta, s))
                    return w_var(beta, s + 1);
                if (v == w_var(beta, s + 1))
                    return w_var(beta, s);
                return v;
            });
            if (!(swapped == f))
                return false;
        }
    return true;
}

/// The root beta and residue of the first violated higher-rank wheel-p
/// condition on xi_d(F), or nullopt. Substitutes w[beta,s] = t - (s-1) for
/// s = 1..p wherever d_beta >= p.
inline std::optional<std::string> wheel_p_violation(const KostantPartition& d, const ShuffleElement<ModP>& F)
{
    const auto& field = F.field();
    const unsigned p = field.p;
    const auto roots = positive_roots(d.rank());
    if (std::none_of(roots.begin(), roots.end(), [&](const Root& b) { return d[b] >= p; }))
        return std::nullopt;
    const auto reduced = xi(d, F);
    const ModP one = field(1);
    const auto t = Polynomial<ModP>::var(Variable::t(), one);
    for (const Root& beta : roots) {
        if (d[beta] < p)
            continue;
        Substitution<ModP> sigma;
        for (unsigned s = 1; s <= p; ++s)
            sigma.emplace(w_var(beta, s), t + Polynomial<ModP>(field(-static_cast<long>(s - 1))));
        auto rest = substitute(reduced, sigma);
        if (!rest.is_zero())
            return beta.to_string() + ": " + to_string(rest);
    }
    return std::nullopt;
}

inline bool check_wheel_p_spec(const KostantPartition& d, const ShuffleElement<ModP>& F)
{
    return !wheel_p_violation(d, F).has_value();
}

/// Membership in the wheel-p subspace: the ordinary wheel conditions plus
/// the higher-rank wheel-p condition for every Kostant partition.
inline bool is_in_w_tilde(const ShuffleElement<ModP>& F)
{
    if (!check_wheel(F))
        return false;
    for (const auto& d : enumerate_kp(F.grading()))
        if (!check_wheel_p_spec(d, F))
            return false;
    return true;
}

/// Checks phi_{d'}(image of E_h) = 0 for every d' < deg(h).
template <class Field>
SuiteReport verify_vanishing(const PBWExponent& h, const Field& field)
{
    SuiteReport rep;
    rep.suite = "specialize-vanish";
    const auto image = psi_pbw_monomial(h, field);
    const auto d = h.deg();
    for (const auto& lower : enumerate_kp(h.gr())) {
        if (!(lower < d))
            break;
        auto value = phi(lower, image);
        rep.check(value.is_zero(), "phi_lower_vanishes", "h=" + h.to_string() + " d'=" + lower.to_string(),
                  to_string(value));
    }
    return rep;
}

/// Outcome of comparing phi_{deg h}(image of E_h) with its predicted factorization.
template <Coefficient K>
struct FactorizationCheck {
    Polynomial<K> lhs;
    Polynomial<K> rhs;
    std::optional<K> scalar; // lhs = scalar * rhs, when such a scalar exists
    bool matches = false;
};

/// The product prod_{beta<beta'} G_{beta,beta'} * prod G_beta * prod P~_{lambda_{h,beta}}.
template <class Field>
Polynomial<typename Field::value_type> factorization_rhs(const PBWExponent& h, const Field& field)
{
    using K = typename Field::value_type;
    const auto d = h.deg();
    const auto roots = positive_roots(h.rank());
    Polynomial<K> rhs(field(1));
    for (std::size_t a = 0; a < roots.size(); ++a) {
        for (std::size_t b = a + 1; b < roots.size(); ++b)
            rhs *= g_cross(roots[a], roots[b], d[roots[a]], d[roots[b]], field);
        rhs *= g_beta(roots[a], d[roots[a]], field);
        rhs *= p_tilde(h.lambda(roots[a]), roots[a], field);
    }
    return rhs;
}

/// Compares both sides up to a scalar fixed by the leading coefficients.
/// Over Q the scalar must be +1 or -1; over F_p any nonzero scalar counts.
template <class Field>
FactorizationCheck<typename Field::value_type> factorization_check(const PBWExponent& h, const Field& field)
{
    using K = typename Field::value_type;
    FactorizationCheck<K> out;
    out.lhs = phi(h.deg(), psi_pbw_monomial(h, field));
    out.rhs = factorization_rhs(h, field);
    if (out.lhs.is_zero() || out.rhs.is_zero()) {
        out.matches = out.lhs.is_zero() && out.rhs.is_zero();
        return out;
    }
    K c = out.lhs.leading_term().coeff / out.rhs.leading_term().coeff;
    if (!(out.lhs == out.rhs * c))
        return out;
    out.scalar = c;
    if constexpr (std::is_same_v<K, Rational>)
        out.matches = c == Rational(1) || c == Rational(-1);
    else
        out.matches = true;
    return out;
}

template <class Field>
SuiteReport verify_factorization(const PBWExponent& h, const Field& field)
{
    SuiteReport rep;
    rep.suite = "specialize-factor";
    auto res = factorization_check(h, field);
    std::string params = "h=" + h.to_string();
    if (res.scalar)
        params += " scalar=" + to_string(*res.scalar);
    std::string witness;
    if (!res.matches)
        witness = "lhs=" + to_string(res.lhs) + " rhs=" + to_string(res.rhs);
    rep.check(res.matches, "phi_deg_factorizes", params, witness);
    return rep;
}

} // namespace shufgebra

#endif // SHUFGEBRA_SPECIALIZATION_HPP
