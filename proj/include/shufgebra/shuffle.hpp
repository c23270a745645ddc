#ifndef SHUFGEBRA_SHUFFLE_HPP
#define SHUFGEBRA_SHUFFLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "pbw.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "roots.hpp"

namespace shufgebra {

/// Type A Cartan matrix entry c_{ij}.
inline int cartan_entry(unsigned i, unsigned j)
{
    if (i == j)
        return 2;
    return (i + 1 == j || j + 1 == i) ? -1 : 0;
}

/// zeta_{i,i'}(z) = 1 + c_{ii'}/(2z) = (z + c_{ii'}/2) / z.
struct ZetaFactor {
    int cartan = 0;

    bool is_trivial() const noexcept { return cartan == 0; }

    /// The constant c/2 in the numerator z + c/2.
    template <class Field>
    auto shift(const Field& field) const
    {
        return field(cartan, 2);
    }

    std::string to_string() const
    {
        switch (cartan) {
        case 2:
            return "(z+1)/z";
        case -1:
            return "(z-1/2)/z";
        default:
            return "1";
        }
    }
};

inline ZetaFactor zeta(unsigned i, unsigned i2) { return ZetaFactor{cartan_entry(i, i2)}; }

/// An element of the shuffle algebra of rank n in a single grading k: the
/// rational function f / D_k, where D_k = prod_i prod_{r,r'} (x[i,r] - x[i+1,r'])
/// is implicit and f is symmetric in the variables of each color.
template <Coefficient K>
class ShuffleElement {
public:
    using Field = field_of<K>;

    ShuffleElement(Grading k, Polynomial<K> numerator, Field field)
        : k_(std::move(k)), f_(std::move(numerator)), field_(std::move(field))
    {
        for (Variable v : f_.variables()) {
            if (v.kind() != Variable::Kind::X || v.color() > k_.colors() || v.index() > k_.at(v.color()))
                throw invalid_input(v.to_string() + " is not a variable of grading " + k_.to_string());
        }
        if (!is_symmetric(f_, k_.counts()))
            throw invalid_input("numerator is not symmetric within colors: " + shufgebra::to_string(f_));
        for (const auto& t : f_.terms())
            check_field(t.coeff);
    }

    static ShuffleElement zero(const Grading& k, const Field& field) { return ShuffleElement(k, {}, field); }
    static ShuffleElement unit(unsigned n, const Field& field)
    {
        return ShuffleElement(Grading::zero(n), Polynomial<K>(field(1)), field);
    }

    unsigned rank() const noexcept { return k_.rank(); }
    const Grading& grading() const noexcept { return k_; }
    const Polynomial<K>& numerator() const noexcept { return f_; }
    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return f_.is_zero(); }

    friend ShuffleElement operator+(const ShuffleElement& a, const ShuffleElement& b)
    {
        a.check_compatible(b, "sum");
        return ShuffleElement(a.k_, a.f_ + b.f_, a.field_, trusted{});
    }
    friend ShuffleElement operator-(const ShuffleElement& a, const ShuffleElement& b)
    {
        a.check_compatible(b, "difference");
        return ShuffleElement(a.k_, a.f_ - b.f_, a.field_, trusted{});
    }
    friend ShuffleElement operator*(const K& c, const ShuffleElement& a)
    {
        return ShuffleElement(a.k_, a.f_ * c, a.field_, trusted{});
    }
    friend ShuffleElement operator-(const ShuffleElement& a) { return ShuffleElement(a.k_, -a.f_, a.field_, trusted{}); }

    friend bool operator==(const ShuffleElement& a, const ShuffleElement& b)
    {
        return a.field_ == b.field_ && a.k_ == b.k_ && a.f_ == b.f_;
    }

    void check_same_field(const ShuffleElement& o) const
    {
        if (!(field_ == o.field_))
            throw field_mismatch(field_.tag() + " vs " + o.field_.tag());
    }

private:
    struct trusted {};
    ShuffleElement(Grading k, Polynomial<K> f, Field field, trusted)
        : k_(std::move(k)), f_(std::move(f)), field_(std::move(field))
    {
    }

    void check_compatible(const ShuffleElement& o, const char* what) const
    {
        check_same_field(o);
        if (!(k_ == o.k_))
            throw invalid_input(std::string(what) + " of elements in different gradings " + k_.to_string() + " and "
                                + o.k_.to_string());
    }

    void check_field(const K& c) const
    {
        if constexpr (std::is_same_v<K, ModP>) {
            if (c.prime() != field_.p)
                throw field_mismatch("coefficient in F_" + std::to_string(c.prime()) + " for element over "
                                     + field_.tag());
        }
    }

    template <Coefficient L>
    friend ShuffleElement<L> make_trusted(Grading, Polynomial<L>, field_of<L>);

    Grading k_;
    Polynomial<K> f_;
    Field field_;
};

/// Build an element without re-checking symmetry; for results that are
/// symmetric by construction.
template <Coefficient K>
ShuffleElement<K> make_trusted(Grading k, Polynomial<K> f, field_of<K> field)
{
    return ShuffleElement<K>(std::move(k), std::move(f), std::move(field), typename ShuffleElement<K>::trusted{});
}

/// All (k, l)-shuffles. Entry perm[i-1][slot-1] is the variable index that
/// slot takes: slots 1..k_i belong to the first factor, k_i+1..k_i+l_i to
/// the second, and each block keeps its relative order.
inline std::vector<ColorPermutation> enumerate_shuffles(const Grading& k, const Grading& l)
{
    if (k.colors() != l.colors())
        throw invalid_input("shuffles of gradings of different rank");
    std::vector<ColorPermutation> out{ColorPermutation{}};
    for (std::size_t c = 0; c < k.colors(); ++c) {
        const unsigned a = k.counts()[c], b = l.counts()[c], m = a + b;
        // Choose which of the m positions the first block occupies.
        std::vector<bool> choose(m, false);
        std::fill(choose.begin(), choose.begin() + a, true);
        std::vector<std::vector<unsigned>> per_color;
        do {
            std::vector<unsigned> slots;
            slots.reserve(m);
            for (unsigned pos = 0; pos < m; ++pos)
                if (choose[pos])
                    slots.push_back(pos + 1);
            for (unsigned pos = 0; pos < m; ++pos)
                if (!choose[pos])
                    slots.push_back(pos + 1);
            per_color.push_back(std::move(slots));
        } while (std::prev_permutation(choose.begin(), choose.end()));
        std::vector<ColorPermutation> next;
        next.reserve(out.size() * per_color.size());
        for (const auto& partial : out)
            for (const auto& slots : per_color) {
                auto ext = partial;
                ext.push_back(slots);
                next.push_back(std::move(ext));
            }
        out = std::move(next);
    }
    return out;
}

namespace detail {

/// Worker count for the per-shuffle loop: SHUFGEBRA_THREADS if set,
/// otherwise the hardware concurrency.
inline unsigned shuffle_threads()
{
    if (const char* env = std::getenv("SHUFGEBRA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// Parity of a shuffle as a permutation: pairs (first block, second block)
// whose positions are inverted.
inline bool shuffle_is_odd(const ColorPermutation& sigma, const Grading& k)
{
    unsigned inv = 0;
    for (std::size_t c = 0; c < sigma.size(); ++c) {
        const auto& s = sigma[c];
        const unsigned a = k.counts()[c];
        for (unsigned x = 0; x < a; ++x)
            for (unsigned y = a; y < s.size(); ++y)
                inv += s[x] > s[y];
    }
    return inv % 2U;
}

template <Coefficient K>
Polynomial<K> linear_form(Variable a, Variable b, const K& shift, const K& one)
{
    Polynomial<K> p = Polynomial<K>::var(a, one) - Polynomial<K>::var(b, one);
    return p + Polynomial<K>(shift);
}

/// prod over colors of prod_{lo <= r < r' <= hi} (x[c,r] - x[c,r']).
template <Coefficient K>
Polynomial<K> vandermonde(std::size_t color, unsigned lo, unsigned hi, const K& one)
{
    Polynomial<K> acc(one);
    for (unsigned r = lo; r <= hi; ++r)
        for (unsigned r2 = r + 1; r2 <= hi; ++r2)
            acc *= linear_form(Variable::x(static_cast<unsigned>(color), r), Variable::x(static_cast<unsigned>(color), r2),
                               K{}, one);
    return acc;
}

/// sum_sigma sign(sigma) * sigma(q), accumulated per contiguous chunk of
/// shuffles and merged in chunk order.
template <Coefficient K>
Polynomial<K> signed_orbit_sum(const Polynomial<K>& q, const std::vector<ColorPermutation>& shuffles,
                               const Grading& k)
{
    using Acc = std::unordered_map<Monomial, K, MonomialHash>;
    auto run = [&](std::size_t begin, std::size_t end, Acc& acc) {
        for (std::size_t s = begin; s < end; ++s) {
            const auto& sigma = shuffles[s];
            const bool odd = shuffle_is_odd(sigma, k);
            auto rename = [&](Variable v) { return Variable::x(v.color(), sigma[v.color() - 1][v.index() - 1]); };
            for (const auto& t : q.terms()) {
                Monomial m = t.mono.renamed(rename);
                K c = odd ? -t.coeff : t.coeff;
                auto [it, inserted] = acc.try_emplace(m, c);
                if (!inserted)
                    it->second += c;
            }
        }
    };
    const std::size_t total = shuffles.size();
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(shuffle_threads(), std::max<std::size_t>(1, total / 16)));
    std::vector<Acc> partial(workers);
    if (workers <= 1) {
        run(0, total, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t b = std::min(total, w * chunk), e = std::min(total, b + chunk);
            pool.emplace_back([&, b, e, w] { run(b, e, partial[w]); });
        }
    }
    std::vector<typename Polynomial<K>::Term> terms;
    for (auto& acc : partial)
        for (auto& [m, c] : acc)
            terms.push_back({m, std::move(c)});
    return Polynomial<K>::from_terms(std::move(terms));
}

} // namespace detail

namespace detail {

/// The polynomial part of the identity-shuffle term of F * G:
/// f(first block) g(second block) times (a - b + c_{ii'}/2) over all cross
/// pairs of interacting colors, plus the number of pairs whose orientation
/// is reversed against the canonical denominator.
template <Coefficient K>
std::pair<Polynomial<K>, unsigned> shuffle_integrand(const ShuffleElement<K>& F, const ShuffleElement<K>& G)
{
    const auto& field = F.field();
    const Grading& k = F.grading();
    const Grading& l = G.grading();
    const K one = field(1);
    const K half_down = field(-1, 2);

    Polynomial<K> q = F.numerator();
    q *= G.numerator().renamed([&](Variable v) { return Variable::x(v.color(), v.index() + k.at(v.color())); });
    unsigned sign_flips = 0;
    for (unsigned c = 1; c <= k.colors(); ++c)
        for (unsigned c2 = 1; c2 <= k.colors(); ++c2) {
            const int cartan = cartan_entry(c, c2);
            if (cartan == 0)
                continue;
            if (c2 + 1 == c)
                sign_flips += k.at(c) * l.at(c2);
            const K& shift = cartan == 2 ? one : half_down;
            for (unsigned a = 1; a <= k.at(c); ++a)
                for (unsigned b = 1; b <= l.at(c2); ++b)
                    q *= linear_form(Variable::x(c, a), Variable::x(c2, k.at(c2) + b), shift, one);
        }
    return {std::move(q), sign_flips};
}

/// Divided difference (f - s f) / (x[c,i] - x[c,i+1]), s swapping the two variables.
template <Coefficient K>
Polynomial<K> divided_difference(const Polynomial<K>& f, unsigned color, unsigned i, const K& one)
{
    const Variable a = Variable::x(color, i), b = Variable::x(color, i + 1);
    auto swapped = f.renamed([&](Variable v) { return v == a ? b : v == b ? a : v; });
    auto diff = f - swapped;
    if (diff.is_zero())
        return diff;
    return exact_divide(diff, linear_form(a, b, K{}, one));
}

template <Coefficient K>
void check_product_operands(const ShuffleElement<K>& F, const ShuffleElement<K>& G)
{
    if (F.rank() != G.rank())
        throw invalid_input("shuffle product of elements of rank " + std::to_string(F.rank()) + " and "
                            + std::to_string(G.rank()));
    F.check_same_field(G);
}

} // namespace detail

/// The shuffle product F * G.
///
/// With P the identity-shuffle integrand (symmetric in each block of each
/// color), the sum over shuffles of sigma(P / prod (a - b)) over same-color
/// cross pairs equals the divided-difference operator of the minimal coset
/// representative moving the second block in front of the first. It is
/// applied as k_c * l_c simple divided differences per color.
template <Coefficient K>
ShuffleElement<K> shuffle_mul(const ShuffleElement<K>& F, const ShuffleElement<K>& G)
{
    detail::check_product_operands(F, G);
    const Grading& k = F.grading();
    const Grading total = k + G.grading();
    if (F.is_zero() || G.is_zero())
        return make_trusted<K>(total, {}, F.field());
    const K one = F.field()(1);
    auto [acc, sign_flips] = detail::shuffle_integrand(F, G);
    for (unsigned c = 1; c <= k.colors() && !acc.is_zero(); ++c) {
        const unsigned a = k.at(c), b = G.grading().at(c);
        for (unsigned j = 1; j <= b; ++j)
            for (unsigned i = a + j - 1; i >= j && i >= 1; --i)
                acc = detail::divided_difference(acc, c, i, one);
    }
    if (sign_flips % 2U)
        acc = -acc;
    return make_trusted<K>(total, std::move(acc), F.field());
}

/// The shuffle product computed literally: every shuffle term is sigma
/// applied to P / prod (a - b). Multiplying through by the full within-color
/// Vandermonde V gives sum_sigma sign(sigma) sigma(P V_F V_G) / V, where V_F,
/// V_G are the Vandermondes of the two blocks; the alternating sum is
/// divided by V one linear factor at a time. Much slower than shuffle_mul
/// and kept as an independent route.
template <Coefficient K>
ShuffleElement<K> shuffle_mul_by_clearing(const ShuffleElement<K>& F, const ShuffleElement<K>& G)
{
    detail::check_product_operands(F, G);
    const Grading& k = F.grading();
    const Grading& l = G.grading();
    const Grading total = k + l;
    if (F.is_zero() || G.is_zero())
        return make_trusted<K>(total, {}, F.field());
    const K one = F.field()(1);
    auto [q, sign_flips] = detail::shuffle_integrand(F, G);
    for (unsigned c = 1; c <= k.colors(); ++c) {
        q *= detail::vandermonde(c, 1, k.at(c), one);
        q *= detail::vandermonde(c, k.at(c) + 1, k.at(c) + l.at(c), one);
    }
    Polynomial<K> sum = detail::signed_orbit_sum(q, enumerate_shuffles(k, l), k);
    for (unsigned c = 1; c <= k.colors(); ++c)
        for (unsigned r = 1; r <= total.at(c); ++r)
            for (unsigned r2 = r + 1; r2 <= total.at(c); ++r2)
                sum = exact_divide(sum, detail::linear_form(Variable::x(c, r), Variable::x(c, r2), K{}, one));
    if (sign_flips % 2U)
        sum = -sum;
    return make_trusted<K>(total, std::move(sum), F.field());
}

template <Coefficient K>
ShuffleElement<K> operator*(const ShuffleElement<K>& F, const ShuffleElement<K>& G)
{
    return shuffle_mul(F, G);
}

/// F * G - G * F.
template <Coefficient K>
ShuffleElement<K> bracket(const ShuffleElement<K>& F, const ShuffleElement<K>& G)
{
    return shuffle_mul(F, G) - shuffle_mul(G, F);
}

/// F^{*m}; the unit for m = 0.
template <Coefficient K>
ShuffleElement<K> shuffle_power(const ShuffleElement<K>& F, unsigned m)
{
    ShuffleElement<K> acc = ShuffleElement<K>::unit(F.rank(), F.field());
    for (unsigned s = 0; s < m; ++s)
        acc = shuffle_mul(acc, F);
    return acc;
}

/// Image of the generator e_{i,r}: x[i,1]^r in grading 1_i.
template <class Field>
ShuffleElement<typename Field::value_type> psi_generator(unsigned n, unsigned color, unsigned r, const Field& field)
{
    using K = typename Field::value_type;
    return make_trusted<K>(Grading::unit(color, n), Polynomial<K>::term(Monomial::of(Variable::x(color, 1), r), field(1)),
                           field);
}

/// Closed-form image of the root vector e_beta(r): numerator
/// (-1)^{j-i} x[i,1]^r over the canonical denominator of the grading of beta.
template <class Field>
ShuffleElement<typename Field::value_type> psi_root_vector(unsigned n, const Root& beta, unsigned r, const Field& field)
{
    using K = typename Field::value_type;
    const long sign = (beta.j - beta.i) % 2U ? -1 : 1;
    return make_trusted<K>(Grading::of_root(beta, n),
                           Polynomial<K>::term(Monomial::of(Variable::x(beta.i, 1), r), field(sign)), field);
}

/// e_beta(r) built as the iterated bracket [...[[e_{i,r}, e_{i+1,0}], e_{i+2,0}], ..., e_{j,0}].
template <class Field>
ShuffleElement<typename Field::value_type> bracket_root_vector(unsigned n, const Root& beta, unsigned r,
                                                               const Field& field)
{
    check_root(beta, n);
    auto acc = psi_generator(n, beta.i, r, field);
    for (unsigned c = beta.i + 1; c <= beta.j; ++c)
        acc = bracket(acc, psi_generator(n, c, 0, field));
    return acc;
}

/// Image of the ordered PBW monomial E_h.
template <class Field>
ShuffleElement<typename Field::value_type> psi_pbw_monomial(const PBWExponent& h, const Field& field)
{
    using K = typename Field::value_type;
    ShuffleElement<K> acc = ShuffleElement<K>::unit(h.rank(), field);
    for (const auto& [idx, mult] : h.entries()) {
        const auto factor = psi_root_vector(h.rank(), idx.beta, idx.r, field);
        for (unsigned m = 0; m < mult; ++m)
            acc = shuffle_mul(acc, factor);
    }
    return acc;
}

/// Image of the divided power e_{i,r}^{(t)}: (x[i,1] ... x[i,t])^r in
/// grading t 1_i. This closed form is the definition in every characteristic.
template <class Field>
ShuffleElement<typename Field::value_type> divided_power_image(unsigned n, unsigned color, unsigned r, unsigned t,
                                                               const Field& field)
{
    using K = typename Field::value_type;
    Monomial m;
    for (unsigned s = 1; s <= t; ++s)
        m = m * Monomial::of(Variable::x(color, s), r);
    return make_trusted<K>(Grading::unit(color, n, t), Polynomial<K>::term(m, field(1)), field);
}

/// The first wheel locus on which the numerator does not vanish, as
/// "(color, eps): residue", or nullopt if all wheel conditions hold.
///
/// For each color i and neighbour i+eps with k_i >= 2 and k_{i+eps} >= 1,
/// substitutes x[i,1] = t, x[i+eps,1] = t - 1/2, x[i,2] = t - 1. By symmetry
/// one representative per (i, eps) suffices.
template <Coefficient K>
std::optional<std::string> wheel_violation(const ShuffleElement<K>& F)
{
    const auto& k = F.grading();
    const auto& field = F.field();
    const K one = field(1);
    const auto t = Polynomial<K>::var(Variable::t(), one);
    for (unsigned c = 1; c <= k.colors(); ++c) {
        if (k.at(c) < 2)
            continue;
        for (int eps : {-1, 1}) {
            const int nb = static_cast<int>(c) + eps;
            if (nb < 1 || nb > static_cast<int>(k.colors()) || k.at(static_cast<unsigned>(nb)) < 1)
                continue;
            Substitution<K> sigma;
            sigma.emplace(Variable::x(c, 1), t);
            sigma.emplace(Variable::x(static_cast<unsigned>(nb), 1), t + Polynomial<K>(field(-1, 2)));
            sigma.emplace(Variable::x(c, 2), t + Polynomial<K>(field(-1)));
            auto rest = substitute(F.numerator(), sigma);
            if (!rest.is_zero())
                return "(" + std::to_string(c) + "," + (eps > 0 ? "+1" : "-1") + "): " + to_string(rest);
        }
    }
    return std::nullopt;
}

template <Coefficient K>
bool check_wheel(const ShuffleElement<K>& F)
{
    return !wheel_violation(F).has_value();
}

/// Checks the quadratic relation and both Serre relations on generator
/// images for every admissible pair of colors and all indices <= r_max.
template <class Field>
SuiteReport verify_relations(unsigned n, const Field& field, unsigned r_max)
{
    using K = typename Field::value_type;
    check_rank(n);
    if (r_max < 1)
        throw invalid_input("r_max must be at least 1");
    SuiteReport rep;
    rep.suite = "relations";
    rep.config = "n=" + std::to_string(n) + " field=" + field.tag() + " rmax=" + std::to_string(r_max);
    auto e = [&](unsigned i, unsigned r) { return psi_generator(n, i, r, field); };
    auto record = [&](const char* name, const std::string& params, const ShuffleElement<K>& residual) {
        rep.check(residual.is_zero(), name, params, residual.is_zero() ? "" : to_string(residual.numerator()));
    };

    for (unsigned i = 1; i < n; ++i)
        for (unsigned j = 1; j < n; ++j)
            for (unsigned r = 0; r <= r_max; ++r)
                for (unsigned s = 0; s <= r_max; ++s) {
                    const std::string params = "i=" + std::to_string(i) + " j=" + std::to_string(j)
                                               + " r=" + std::to_string(r) + " s=" + std::to_string(s);
                    auto lhs = bracket(e(i, r + 1), e(j, s)) - bracket(e(i, r), e(j, s + 1));
                    auto sym = shuffle_mul(e(i, r), e(j, s)) + shuffle_mul(e(j, s), e(i, r));
                    record("quadratic", params, lhs - field(cartan_entry(i, j), 2) * sym);
                    if (cartan_entry(i, j) == 0)
                        record("serre-commute", params, bracket(e(i, r), e(j, s)));
                }

    for (unsigned i = 1; i < n; ++i)
        for (unsigned j = 1; j < n; ++j) {
            if (cartan_entry(i, j) != -1)
                continue;
            for (unsigned r1 = 0; r1 <= r_max; ++r1)
                for (unsigned r2 = 0; r2 <= r_max; ++r2)
                    for (unsigned s = 0; s <= r_max; ++s) {
                        const std::string params = "i=" + std::to_string(i) + " j=" + std::to_string(j)
                                                   + " r1=" + std::to_string(r1) + " r2=" + std::to_string(r2)
                                                   + " s=" + std::to_string(s);
                        auto lhs = bracket(e(i, r1), bracket(e(i, r2), e(j, s)))
                                   + bracket(e(i, r2), bracket(e(i, r1), e(j, s)));
                        record("serre-cubic", params, lhs);
                    }
        }
    return rep;
}

} // namespace shufgebra

#endif // SHUFGEBRA_SHUFFLE_HPP
