#ifndef SHUFGEBRA_SUITES_HPP
#define SHUFGEBRA_SUITES_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "basis.hpp"
#include "rank1.hpp"
#include "report.hpp"
#include "shuffle.hpp"
#include "specialization.hpp"

namespace shufgebra {

/// Scale and randomness of a verification run.
struct SuiteConfig {
    unsigned n = 2;
    std::optional<unsigned> p; // prime field F_p; nullopt means Q
    unsigned degree = 3;
    unsigned r_max = 2;
    std::uint64_t seed = 1;
    std::optional<unsigned> k; // number of variables for the rank-one suites
    unsigned samples = 0;      // 0 picks the suite default

    std::string describe() const
    {
        std::string s = "n=" + std::to_string(n) + " field=" + (p ? "fp:" + std::to_string(*p) : std::string("q"))
                        + " degree=" + std::to_string(degree) + " rmax=" + std::to_string(r_max)
                        + " seed=" + std::to_string(seed);
        if (k)
            s += " k=" + std::to_string(*k);
        if (samples)
            s += " samples=" + std::to_string(samples);
        return s;
    }
};

namespace detail {

// Deterministic across platforms: only the raw engine output is used.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
    unsigned below(unsigned bound) { return static_cast<unsigned>(engine_() % bound); }

private:
    std::mt19937_64 engine_;
};

template <class Fn>
void timed(SuiteReport& rep, Fn&& fn)
{
    const auto start = std::chrono::steady_clock::now();
    const auto before = rep.records.size();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (rep.records.size() > before)
        rep.records.back().elapsed_ms = ms;
}

inline SuiteReport make_report(const char* suite, const SuiteConfig& cfg)
{
    SuiteReport rep;
    rep.suite = suite;
    rep.config = cfg.describe();
    return rep;
}

inline std::vector<Grading> gradings_up_to(unsigned n, unsigned cap)
{
    std::vector<Grading> out;
    std::vector<unsigned> cur(n - 1, 0);
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == cur.size()) {
            Grading g(cur);
            if (!g.is_zero())
                out.push_back(g);
            return;
        }
        for (unsigned v = 0; v <= cap; ++v) {
            cur[c] = v;
            self(self, c + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace detail

/// Defining relations on generator images.
template <class Field>
SuiteReport suite_relations(const SuiteConfig& cfg, const Field& field)
{
    auto rep = verify_relations(cfg.n, field, cfg.r_max);
    rep.config = cfg.describe();
    return rep;
}

/// x[i,1]^r to the shuffle power k equals k! (x[i,1] ... x[i,k])^r, k <= 5, r <= r_max.
template <class Field>
SuiteReport suite_ktimes(const SuiteConfig& cfg, const Field& field)
{
    using K = typename Field::value_type;
    auto rep = detail::make_report("ktimes", cfg);
    for (unsigned r = 0; r <= cfg.r_max; ++r) {
        auto acc = ShuffleElement<K>::unit(cfg.n, field);
        long factorial = 1;
        for (unsigned k = 1; k <= 5; ++k) {
            detail::timed(rep, [&] {
                acc = shuffle_mul(acc, psi_generator(cfg.n, 1, r, field));
                factorial *= k;
                auto expected = field(factorial) * divided_power_image(cfg.n, 1, r, k, field);
                auto diff = acc - expected;
                rep.check(diff.is_zero(), "power_equals_factorial_times_product",
                          "k=" + std::to_string(k) + " r=" + std::to_string(r), to_string(diff.numerator()));
            });
        }
    }
    return rep;
}

/// Iterated brackets of generators against the closed-form root vectors.
template <class Field>
SuiteReport suite_rootvectors(const SuiteConfig& cfg, const Field& field)
{
    auto rep = detail::make_report("rootvectors", cfg);
    for (const Root& beta : positive_roots(cfg.n))
        for (unsigned r = 0; r <= cfg.r_max; ++r)
            detail::timed(rep, [&] {
                auto diff = bracket_root_vector(cfg.n, beta, r, field) - psi_root_vector(cfg.n, beta, r, field);
                rep.check(diff.is_zero(), "bracket_matches_closed_form",
                          "beta=" + beta.to_string() + " r=" + std::to_string(r), to_string(diff.numerator()));
            });
    return rep;
}

/// P_lambda - m_lambda is an integer combination of m_mu with |mu| < |lambda|,
/// for lengths 1..4 (or k) and |lambda| <= degree; and the expansion in the
/// P basis of P_lambda over the configured field is {lambda: 1}.
template <class Field>
SuiteReport suite_hl(const SuiteConfig& cfg, const Field& field)
{
    auto rep = detail::make_report("hl", cfg);
    const RationalField q;
    const unsigned lo = cfg.k.value_or(1), hi = cfg.k.value_or(4);
    for (unsigned len = lo; len <= hi; ++len)
        for (const auto& lambda : partitions_up_to(len, cfg.degree))
            detail::timed(rep, [&] {
                auto plam = hl_p_rational(lambda);
                auto diff = expand_m(plam - m_lambda(lambda, q), len);
                std::string bad;
                for (const auto& [mu, c] : diff)
                    if (mu.size() >= lambda.size() || !c.is_integer())
                        bad = mu.to_string() + ":" + c.to_string();
                auto back = expand_hl(hl_p(lambda, field), len, field);
                if (bad.empty() && !(back.size() == 1 && back.begin()->first == lambda && back.begin()->second == field(1)))
                    bad = "expand_hl(P" + lambda.to_string() + ") has " + std::to_string(back.size()) + " terms";
                rep.check(bad.empty(), "unitriangular_integral", "lambda=" + lambda.to_string(), bad);
            });
    return rep;
}

namespace detail {

template <class Field>
std::vector<PBWExponent> specialization_range(const SuiteConfig& cfg, const Field&)
{
    std::optional<unsigned> p;
    if constexpr (std::is_same_v<Field, PrimeField>)
        p = cfg.p;
    std::vector<PBWExponent> out;
    for (const auto& k : gradings_up_to(cfg.n, 2)) {
        if (k.total() < 2)
            continue;
        auto hs = enumerate_pbw(k, static_cast<int>(cfg.degree), p);
        out.insert(out.end(), hs.begin(), hs.end());
    }
    return out;
}

} // namespace detail

/// phi_{deg h}(image of E_h) against G G P~, for h with gradings bounded by 2
/// per color and numerator degree <= degree (p-restricted over F_p).
template <class Field>
SuiteReport suite_specialize_factor(const SuiteConfig& cfg, const Field& field)
{
    auto rep = detail::make_report("specialize-factor", cfg);
    for (const auto& h : detail::specialization_range(cfg, field))
        detail::timed(rep, [&] { rep.append(verify_factorization(h, field)); });
    return rep;
}

/// phi_{d'}(image of E_h) = 0 for d' < deg h, same range as specialize-factor.
template <class Field>
SuiteReport suite_specialize_vanish(const SuiteConfig& cfg, const Field& field)
{
    auto rep = detail::make_report("specialize-vanish", cfg);
    for (const auto& h : detail::specialization_range(cfg, field)) {
        auto sub = verify_vanishing(h, field);
        if (sub.records.empty())
            rep.records.push_back({"phi_lower_vanishes", "h=" + h.to_string(), Status::Skip, "no smaller d'", 0});
        rep.append(sub);
    }
    return rep;
}

namespace detail {

// A product of generator images in a seeded random order with every color
// count at most cap, and at least one factor.
template <class Field>
ShuffleElement<typename Field::value_type> random_generator_product(unsigned n, unsigned cap, unsigned r_max,
                                                                    SeededRng& rng, const Field& field,
                                                                    std::string* label)
{
    using K = typename Field::value_type;
    std::vector<unsigned> counts(n - 1);
    unsigned total = 0;
    for (auto& c : counts) {
        c = rng.below(cap + 1);
        total += c;
    }
    if (total == 0)
        counts[rng.below(n - 1)] = 1;
    std::vector<unsigned> colors;
    for (unsigned c = 0; c < counts.size(); ++c)
        colors.insert(colors.end(), counts[c], c + 1);
    for (std::size_t a = colors.size(); a > 1; --a)
        std::swap(colors[a - 1], colors[rng.below(static_cast<unsigned>(a))]);
    auto acc = ShuffleElement<K>::unit(n, field);
    std::string text;
    for (unsigned c : colors) {
        const unsigned r = rng.below(r_max + 1);
        acc = shuffle_mul(acc, psi_generator(n, c, r, field));
        text += "e(" + std::to_string(c) + "," + std::to_string(r) + ")";
    }
    if (label)
        *label = text;
    return acc;
}

} // namespace detail

/// Seeded products of generator images satisfy the wheel conditions, and the
/// product is associative on seeded triples.
template <class Field>
SuiteReport suite_wheel_closure(const SuiteConfig& cfg, const Field& field)
{
    auto rep = detail::make_report("wheel-closure", cfg);
    detail::SeededRng rng(cfg.seed);
    const unsigned products = cfg.samples ? cfg.samples : 200;
    const unsigned triples = cfg.samples ? cfg.samples : 50;
    for (unsigned s = 0; s < products; ++s)
        detail::timed(rep, [&] {
            std::string label;
            auto F = detail::random_generator_product(cfg.n, 3, cfg.r_max, rng, field, &label);
            auto bad = wheel_violation(F);
            rep.check(!bad, "wheel_condition", label + " grading=" + F.grading().to_string(), bad.value_or(""));
        });
    for (unsigned s = 0; s < triples; ++s)
        detail::timed(rep, [&] {
            std::string la, lb, lc;
            auto A = detail::random_generator_product(cfg.n, 1, cfg.r_max, rng, field, &la);
            auto B = detail::random_generator_product(cfg.n, 1, cfg.r_max, rng, field, &lb);
            auto C = detail::random_generator_product(cfg.n, 1, cfg.r_max, rng, field, &lc);
            auto diff = shuffle_mul(shuffle_mul(A, B), C) - shuffle_mul(A, shuffle_mul(B, C));
            rep.check(diff.is_zero(), "associative", la + " | " + lb + " | " + lc, to_string(diff.numerator()));
        });
    return rep;
}

/// Over F_p: p-th shuffle powers of generator and root vector images vanish,
/// and images of E_h vanish whenever some h(beta, r) >= p.
inline SuiteReport suite_pcenter(const SuiteConfig& cfg, const PrimeField& field)
{
    auto rep = detail::make_report("pcenter", cfg);
    const unsigned p = field.p;
    for (unsigned c = 1; c < cfg.n; ++c)
        for (unsigned r = 0; r <= cfg.r_max; ++r)
            detail::timed(rep, [&] {
                auto pw = shuffle_power(psi_generator(cfg.n, c, r, field), p);
                rep.check(pw.is_zero(), "generator_power_p_vanishes",
                          "i=" + std::to_string(c) + " r=" + std::to_string(r), to_string(pw.numerator()));
            });
    const auto roots = positive_roots(cfg.n);
    for (const Root& beta : roots)
        for (unsigned r = 0; r <= cfg.r_max; ++r) {
            detail::timed(rep, [&] {
                auto pw = shuffle_power(psi_root_vector(cfg.n, beta, r, field), p);
                rep.check(pw.is_zero(), "root_vector_power_p_vanishes",
                          "beta=" + beta.to_string() + " r=" + std::to_string(r), to_string(pw.numerator()));
            });
            // E_h with h(beta, r) = p, alone and next to one other factor.
            std::vector<PBWExponent> hs{PBWExponent(cfg.n, {{{beta, r}, p}})};
            for (const Root& other : roots)
                for (unsigned r2 = 0; r2 <= 1; ++r2)
                    if (!(other == beta && r2 == r))
                        hs.push_back(PBWExponent(cfg.n, {{{beta, r}, p}, {{other, r2}, 1}}));
            for (const auto& h : hs)
                detail::timed(rep, [&] {
                    auto img = psi_pbw_monomial(h, field);
                    rep.check(img.is_zero(), "non_restricted_monomial_vanishes", "h=" + h.to_string(),
                              to_string(img.numerator()));
                });
        }
    return rep;
}

/// Rank one over F_p: per-degree dimensions of the wheel-p subspace against
/// p-restricted partition counts, for k in {p, p+1} (or the configured k)
/// and degrees up to `degree`; expansions of sampled images and monomial
/// basis elements; and the rho/tau mechanics on sampled elements of J.
inline SuiteReport suite_rank1_image(const SuiteConfig& cfg, const PrimeField& field)
{
    auto rep = detail::make_report("rank1-image", cfg);
    const unsigned p = field.p;
    std::vector<unsigned> ks = cfg.k ? std::vector<unsigned>{*cfg.k} : std::vector<unsigned>{p, p + 1};
    detail::SeededRng rng(cfg.seed);
    const unsigned samples = cfg.samples ? cfg.samples : 12;
    for (unsigned k : ks) {
        std::size_t prev_dim = 0;
        for (unsigned D = 0; D <= cfg.degree; ++D)
            detail::timed(rep, [&] {
                auto dc = dim_check(k, D, field);
                std::size_t exact = 0;
                for (const auto& lambda : partitions_of(k, D))
                    exact += lambda.is_p_restricted(p);
                const std::size_t graded = dc.dimension - prev_dim;
                prev_dim = dc.dimension;
                rep.check(graded == exact && dc.dimension == dc.restricted, "graded_dimension_matches",
                          "k=" + std::to_string(k) + " D=" + std::to_string(D) + " dim=" + std::to_string(graded)
                              + " count=" + std::to_string(exact),
                          "cumulative " + std::to_string(dc.dimension) + " vs " + std::to_string(dc.restricted));
            });
        for (unsigned s = 0; s < samples; ++s)
            detail::timed(rep, [&] {
                auto acc = ShuffleElement<ModP>::unit(2, field);
                std::string label;
                for (unsigned f = 0; f < k; ++f) {
                    const unsigned r = rng.below(cfg.r_max + 2);
                    acc = shuffle_mul(acc, psi_generator(2, 1, r, field));
                    label += "x^" + std::to_string(r) + (f + 1 < k ? "*" : "");
                }
                auto ex = express_p_restricted(acc.numerator(), k, field);
                const bool in_j = is_in_J(acc.numerator(), k, field);
                rep.check(in_j && ex.in_image(), "image_is_restricted", "k=" + std::to_string(k) + " " + label,
                          ex.witness ? "witness " + ex.witness->to_string() : (in_j ? "" : "not in J"));
                if (in_j && k + 1 > p) {
                    // rho, tau on an element of J_{k} viewed with k = (k-1) + 1 variables
                    auto r1 = rho(acc.numerator(), k);
                    auto t1 = tau(acc.numerator(), k, field);
                    const bool ok = is_in_J(r1, k - 1, field) && t1.is_zero();
                    rep.check(ok, "rho_tau_on_J", "k=" + std::to_string(k) + " " + label,
                              "rho=" + to_string(r1) + " tau=" + to_string(t1));
                }
            });
        for (const auto& lambda : partitions_up_to(k, std::min(cfg.degree, 4U)))
            detail::timed(rep, [&] {
                auto m = m_lambda(lambda, field);
                const bool in_j = is_in_J(m, k, field);
                const bool restricted = express_p_restricted(m, k, field).in_image();
                rep.check(in_j == restricted, "J_iff_restricted_support",
                          "k=" + std::to_string(k) + " m" + lambda.to_string(),
                          std::string("in J: ") + (in_j ? "yes" : "no") + ", restricted: " + (restricted ? "yes" : "no"));
            });
    }
    return rep;
}

/// Over Q: numerators of products of up to three divided-power images
/// (t <= 3, r <= 2), and their specializations, have coefficients in Z[1/2].
/// All single factors and pairs are checked. Triples are seeded samples
/// whose product grading (k1, k2, ...) has k_c <= 8 and k_c * k_{c+1} <= 9
/// for every c, plus fixed larger cases: the 9-variable cube of
/// e(1,r)^(3) with r = min(r_max, 2), and for n = 3, r_max >= 2 gradings (4,3)
/// and (6,2). Triples such as (5,3), (6,3) or nine variables of one color
/// with mixed r have integrands or specializations of millions of terms and
/// are not attempted.
inline SuiteReport suite_integrality(const SuiteConfig& cfg, const RationalField& field)
{
    auto rep = detail::make_report("integrality", cfg);
    struct Factor {
        unsigned color, r, t;
        std::string label() const
        {
            return "e(" + std::to_string(color) + "," + std::to_string(r) + ")^(" + std::to_string(t) + ")";
        }
    };
    std::vector<Factor> factors;
    for (unsigned c = 1; c < cfg.n; ++c)
        for (unsigned r = 0; r <= std::min(cfg.r_max, 2U); ++r)
            for (unsigned t = 1; t <= 3; ++t)
                factors.push_back({c, r, t});
    auto image = [&](const Factor& f) { return divided_power_image(cfg.n, f.color, f.r, f.t, field); };
    auto check = [&](const std::vector<Factor>& fs) {
        detail::timed(rep, [&] {
            auto acc = image(fs[0]);
            std::string label = fs[0].label();
            for (std::size_t a = 1; a < fs.size(); ++a) {
                acc = shuffle_mul(acc, image(fs[a]));
                label += "*" + fs[a].label();
            }
            std::string bad;
            if (!coeffs_in_half_integers(acc.numerator()))
                bad = "numerator " + to_string(acc.numerator());
            for (const auto& d : enumerate_kp(acc.grading())) {
                if (!bad.empty())
                    break;
                auto sp = phi(d, acc);
                if (!coeffs_in_half_integers(sp))
                    bad = "phi_" + d.to_string() + " = " + to_string(sp);
            }
            rep.check(bad.empty(), "half_integral", label, bad);
        });
    };
    for (const auto& a : factors)
        check({a});
    for (const auto& a : factors)
        for (const auto& b : factors)
            check({a, b});
    auto small = [&](const std::vector<Factor>& fs) {
        std::vector<unsigned> k(cfg.n, 0);
        for (const auto& f : fs)
            k[f.color] += f.t;
        for (unsigned c = 1; c < cfg.n; ++c)
            if (k[c] > 8 || (c + 1 < cfg.n && k[c] * k[c + 1] > 9))
                return false;
        return true;
    };
    detail::SeededRng rng(cfg.seed);
    const unsigned triples = cfg.samples ? cfg.samples : 40;
    const auto nf = static_cast<unsigned>(factors.size());
    for (unsigned s = 0; s < triples;) {
        std::vector<Factor> fs{factors[rng.below(nf)], factors[rng.below(nf)], factors[rng.below(nf)]};
        if (!small(fs))
            continue;
        check(fs);
        ++s;
    }
    const unsigned cube_r = std::min(cfg.r_max, 2U);
    check({{1, cube_r, 3}, {1, cube_r, 3}, {1, cube_r, 3}});
    if (cfg.n == 3 && cfg.r_max >= 2) {
        check({{1, 2, 3}, {2, 2, 3}, {1, 2, 1}});
        check({{1, 2, 3}, {1, 2, 3}, {2, 2, 2}});
    }
    return rep;
}

/// Rank one over F_p: cumulative dimension of the wheel-p subspace of degree
/// <= D' against the p-restricted partition count, for every D' <= degree.
inline SuiteReport suite_dims(const SuiteConfig& cfg, const PrimeField& field)
{
    auto rep = detail::make_report("dims", cfg);
    const unsigned k = cfg.k.value_or(field.p);
    for (unsigned D = 0; D <= cfg.degree; ++D)
        detail::timed(rep, [&] {
            auto dc = dim_check(k, D, field);
            rep.check(dc.dimension == dc.restricted, "dimension_equals_restricted_count",
                      "k=" + std::to_string(k) + " D=" + std::to_string(D) + " dim=" + std::to_string(dc.dimension)
                          + " count=" + std::to_string(dc.restricted),
                      "");
        });
    return rep;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"relations",         "ktimes",        "rootvectors", "hl",
                                                "specialize-factor", "specialize-vanish", "wheel-closure",
                                                "pcenter",           "rank1-image",   "integrality", "dims"};
    return names;
}

/// Run a suite by name. Throws invalid_input for unknown names and for
/// suites that need a prime field (pcenter, rank1-image, dims) or Q
/// (integrality) when run over the other.
inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg)
{
    check_rank(cfg.n);
    const bool prime = cfg.p.has_value();
    auto need_prime = [&] {
        if (!prime)
            throw invalid_input("suite " + name + " needs --field fp");
        return PrimeField(*cfg.p);
    };
    auto dispatch = [&](auto&& fn) {
        if (prime)
            return fn(PrimeField(*cfg.p));
        return fn(RationalField{});
    };
    if (name == "relations")
        return dispatch([&](const auto& f) { return suite_relations(cfg, f); });
    if (name == "ktimes")
        return dispatch([&](const auto& f) { return suite_ktimes(cfg, f); });
    if (name == "rootvectors")
        return dispatch([&](const auto& f) { return suite_rootvectors(cfg, f); });
    if (name == "hl")
        return dispatch([&](const auto& f) { return suite_hl(cfg, f); });
    if (name == "specialize-factor")
        return dispatch([&](const auto& f) { return suite_specialize_factor(cfg, f); });
    if (name == "specialize-vanish")
        return dispatch([&](const auto& f) { return suite_specialize_vanish(cfg, f); });
    if (name == "wheel-closure")
        return dispatch([&](const auto& f) { return suite_wheel_closure(cfg, f); });
    if (name == "pcenter")
        return suite_pcenter(cfg, need_prime());
    if (name == "rank1-image") {
        if (cfg.n != 2)
            throw invalid_input("suite rank1-image needs --n 2");
        return suite_rank1_image(cfg, need_prime());
    }
    if (name == "dims") {
        if (cfg.n != 2)
            throw invalid_input("suite dims needs --n 2");
        return suite_dims(cfg, need_prime());
    }
    if (name == "integrality") {
        if (prime)
            throw invalid_input("suite integrality runs over Q; drop --field fp");
        return suite_integrality(cfg, RationalField{});
    }
    throw invalid_input("unknown suite '" + name + "'");
}

} // namespace shufgebra

#endif // SHUFGEBRA_SUITES_HPP
