#ifndef SHUFGEBRA_BASIS_HPP
#define SHUFGEBRA_BASIS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linear_algebra.hpp"
#include "partition.hpp"
#include "pbw.hpp"
#include "rank1.hpp"
#include "shuffle.hpp"
#include "specialization.hpp"

namespace shufgebra {

/// Monomial basis of the numerators of grading k with total degree at most
/// max_degree: products over colors c of m_{lambda_c}(x[c,1..k_c]).
template <class Field>
std::vector<Polynomial<typename Field::value_type>> symmetric_numerator_basis(const Grading& k, unsigned max_degree,
                                                                             const Field& field)
{
    using K = typename Field::value_type;
    std::vector<Polynomial<K>> out;
    std::vector<Polynomial<K>> cur{Polynomial<K>(field(1))};
    std::vector<unsigned> used{0};
    // Extend color by color, tracking the degree spent so far.
    for (unsigned c = 1; c <= k.colors(); ++c) {
        std::vector<Polynomial<K>> next;
        std::vector<unsigned> next_used;
        for (std::size_t a = 0; a < cur.size(); ++a)
            for (const auto& lambda : partitions_up_to(k.at(c), max_degree - used[a])) {
                auto m = m_lambda(lambda, field).renamed([c](Variable v) { return Variable::x(c, v.index()); });
                next.push_back(cur[a] * m);
                next_used.push_back(used[a] + lambda.size());
            }
        cur = std::move(next);
        used = std::move(next_used);
    }
    return cur;
}

namespace detail {

// Basis of {sum c_j v_j : every map(sum c_j v_j) = 0}, for a linear map given
// on the basis vectors.
template <Coefficient K>
std::vector<Polynomial<K>> kernel_combinations(const std::vector<Polynomial<K>>& basis,
                                               const std::vector<Polynomial<K>>& images, const K& one)
{
    std::vector<Polynomial<K>> out;
    if (basis.empty())
        return out;
    for (const auto& coeffs : coefficient_matrix(images).nullspace(one)) {
        Polynomial<K> v;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (!is_zero(coeffs[j]))
                v += basis[j] * coeffs[j];
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

/// Dimension of the wheel-p subspace in grading k among numerators of degree
/// at most max_degree: the ordinary wheel conditions, then the higher-rank
/// wheel-p condition on xi_d for every Kostant partition d.
inline std::size_t w_tilde_dimension(const Grading& k, unsigned max_degree, const PrimeField& field)
{
    const ModP one = field(1);
    auto space = symmetric_numerator_basis(k, max_degree, field);
    auto wrap = [&](const Polynomial<ModP>& f) { return make_trusted<ModP>(k, f, field); };

    // Ordinary wheel conditions: every substituted residue must vanish, so
    // stack the residues with a marker variable per locus to keep them apart.
    std::vector<Polynomial<ModP>> wheel_images(space.size());
    const auto t = Polynomial<ModP>::var(Variable::t(), one);
    unsigned locus = 0;
    for (unsigned c = 1; c <= k.colors(); ++c) {
        if (k.at(c) < 2)
            continue;
        for (int eps : {-1, 1}) {
            const int nb = static_cast<int>(c) + eps;
            if (nb < 1 || nb > static_cast<int>(k.colors()) || k.at(static_cast<unsigned>(nb)) < 1)
                continue;
            Substitution<ModP> sigma;
            sigma.emplace(Variable::x(c, 1), t);
            sigma.emplace(Variable::x(static_cast<unsigned>(nb), 1), t + Polynomial<ModP>(field(-1, 2)));
            sigma.emplace(Variable::x(c, 2), t + Polynomial<ModP>(field(-1)));
            const auto tag = Polynomial<ModP>::var(Variable::w(15, 15, ++locus), one);
            for (std::size_t j = 0; j < space.size(); ++j)
                wheel_images[j] += substitute(space[j], sigma) * tag;
        }
    }
    auto wheel_ok = locus ? detail::kernel_combinations(space, wheel_images, one) : space;

    std::vector<Polynomial<ModP>> p_images(wheel_ok.size());
    const auto roots = positive_roots(k.rank());
    unsigned marker = 0;
    for (const auto& d : enumerate_kp(k)) {
        for (const Root& beta : roots) {
            if (d[beta] < field.p)
                continue;
            Substitution<ModP> sigma;
            for (unsigned s = 1; s <= field.p; ++s)
                sigma.emplace(w_var(beta, s), t + Polynomial<ModP>(field(-static_cast<long>(s - 1))));
            const auto tag = Polynomial<ModP>::var(Variable::w(15, 15, ++marker + locus), one);
            for (std::size_t j = 0; j < wheel_ok.size(); ++j)
                p_images[j] += substitute(xi(d, wrap(wheel_ok[j])), sigma) * tag;
        }
    }
    if (!marker)
        return wheel_ok.size();
    return detail::kernel_combinations(wheel_ok, p_images, one).size();
}

struct BasisCheck {
    std::vector<PBWExponent> exponents;
    std::size_t rank = 0;
    std::size_t w_tilde_dim = 0;
    bool all_in_w_tilde = true;
    std::optional<std::string> dependent; // first h whose image depends on earlier ones

    bool independent() const { return rank == exponents.size(); }
    bool spans() const { return independent() && all_in_w_tilde && rank == w_tilde_dim; }
};

/// Images of the p-restricted PBW monomials of grading k with numerator
/// degree at most max_degree: their rank, membership in the wheel-p
/// subspace, and the dimension of that subspace at the same truncation.
inline BasisCheck pbw_basis_check(const Grading& k, unsigned max_degree, const PrimeField& field)
{
    BasisCheck out;
    out.exponents = enumerate_pbw(k, static_cast<int>(max_degree), field.p);
    std::vector<Polynomial<ModP>> images;
    for (const auto& h : out.exponents) {
        auto img = psi_pbw_monomial(h, field);
        out.all_in_w_tilde = out.all_in_w_tilde && is_in_w_tilde(img);
        images.push_back(img.numerator());
        if (!out.dependent && rank(images) < images.size())
            out.dependent = h.to_string();
    }
    out.rank = rank(images);
    out.w_tilde_dim = w_tilde_dimension(k, max_degree, field);
    return out;
}

} // namespace shufgebra

#endif // SHUFGEBRA_BASIS_HPP
