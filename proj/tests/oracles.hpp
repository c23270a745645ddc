// Test-side oracles that do not go through the library's product or
// substitution code.
#ifndef SHUFGEBRA_TEST_ORACLES_HPP
#define SHUFGEBRA_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <shufgebra.hpp>

namespace oracle {

using namespace shufgebra;

using Point = std::map<Variable, Rational>;

inline Rational evaluate(const Polynomial<Rational>& f, const Point& at)
{
    Rational acc(0);
    for (const auto& t : f.terms()) {
        Rational v = t.coeff;
        for (std::size_t k = 0; k < t.mono.size(); ++k) {
            const auto e = t.mono[k];
            const Rational& x = at.at(e.var);
            for (unsigned s = 0; s < e.exp; ++s)
                v = v * x;
        }
        acc = acc + v;
    }
    return acc;
}

inline Rational canonical_denominator(const std::vector<unsigned>& k, const Point& at)
{
    Rational d(1);
    for (std::size_t c = 0; c + 1 < k.size(); ++c)
        for (unsigned r = 1; r <= k[c]; ++r)
            for (unsigned s = 1; s <= k[c + 1]; ++s)
                d = d * (at.at(Variable::x(c + 1, r)) - at.at(Variable::x(c + 2, s)));
    return d;
}

inline Rational zeta(unsigned c, unsigned c2, const Rational& z)
{
    const int cartan = c == c2 ? 2 : (c + 1 == c2 || c2 + 1 == c) ? -1 : 0;
    return Rational(1) + Rational(cartan, 2) / z;
}

// Value of F * G at a point, straight from the symmetrization over
// (k, l)-shuffles: choose which positions of each color carry F's variables.
inline Rational shuffle_value(const ShuffleElement<Rational>& F, const ShuffleElement<Rational>& G, const Point& at)
{
    const auto k = F.grading().counts(), l = G.grading().counts();
    const std::size_t colors = k.size();
    std::vector<std::vector<unsigned>> masks(colors);
    for (std::size_t c = 0; c < colors; ++c) {
        std::vector<unsigned> m(k[c] + l[c], 0);
        std::fill(m.begin(), m.begin() + k[c], 1U);
        masks[c] = m;
    }
    Rational total(0);
    // Iterate over the product of per-color subset choices.
    auto rec = [&](auto&& self, std::size_t c, std::vector<std::vector<unsigned>>& chosen) -> void {
        if (c == colors) {
            Point fa, ga;
            std::vector<std::pair<unsigned, Variable>> fv, gv;
            for (std::size_t i = 0; i < colors; ++i) {
                unsigned fr = 0, gr = 0;
                for (std::size_t pos = 0; pos < chosen[i].size(); ++pos) {
                    const Variable src = Variable::x(static_cast<unsigned>(i + 1), static_cast<unsigned>(pos + 1));
                    if (chosen[i][pos]) {
                        fa[Variable::x(static_cast<unsigned>(i + 1), ++fr)] = at.at(src);
                        fv.emplace_back(static_cast<unsigned>(i + 1), src);
                    } else {
                        ga[Variable::x(static_cast<unsigned>(i + 1), ++gr)] = at.at(src);
                        gv.emplace_back(static_cast<unsigned>(i + 1), src);
                    }
                }
            }
            Rational term = evaluate(F.numerator(), fa) / canonical_denominator(k, fa)
                            * evaluate(G.numerator(), ga) / canonical_denominator(l, ga);
            for (const auto& [c1, a] : fv)
                for (const auto& [c2, b] : gv)
                    term = term * zeta(c1, c2, at.at(a) - at.at(b));
            total = total + term;
            return;
        }
        auto m = masks[c];
        std::sort(m.begin(), m.end());
        do {
            chosen[c] = m;
            self(self, c + 1, chosen);
        } while (std::next_permutation(m.begin(), m.end()));
    };
    std::vector<std::vector<unsigned>> chosen(colors);
    rec(rec, 0, chosen);
    return total;
}

// A point with pairwise distinct, unrelated rational coordinates.
inline Point random_point(const std::vector<unsigned>& k, std::mt19937_64& rng)
{
    Point at;
    for (std::size_t c = 0; c < k.size(); ++c)
        for (unsigned r = 1; r <= k[c]; ++r)
            at[Variable::x(static_cast<unsigned>(c + 1), r)] =
                Rational(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 3);
    return at;
}

} // namespace oracle

#endif // SHUFGEBRA_TEST_ORACLES_HPP
