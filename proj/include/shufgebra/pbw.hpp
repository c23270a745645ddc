#ifndef SHUFGEBRA_PBW_HPP
#define SHUFGEBRA_PBW_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "roots.hpp"

namespace shufgebra {

/// A finitely supported function h: (roots) x N -> N, the exponent of an
/// ordered PBW monomial. Iteration runs in PBW order.
class PBWExponent {
public:
    using Map = std::map<PbwIndex, unsigned>;

    PBWExponent() = default;
    explicit PBWExponent(unsigned n) : n_(n) { check_rank(n); }
    PBWExponent(unsigned n, std::initializer_list<std::pair<const PbwIndex, unsigned>> entries) : PBWExponent(n)
    {
        for (const auto& [idx, mult] : entries)
            add(idx, mult);
    }

    unsigned rank() const noexcept { return n_; }
    const Map& entries() const noexcept { return h_; }
    bool empty() const noexcept { return h_.empty(); }

    void add(const PbwIndex& idx, unsigned mult = 1)
    {
        check_root(idx.beta, n_);
        if (mult)
            h_[idx] += mult;
    }

    unsigned operator[](const PbwIndex& idx) const
    {
        auto it = h_.find(idx);
        return it == h_.end() ? 0 : it->second;
    }

    /// d_beta = sum_r h(beta, r).
    KostantPartition deg() const
    {
        KostantPartition d(n_);
        for (const auto& [idx, mult] : h_)
            d.set(idx.beta, d[idx.beta] + mult);
        return d;
    }

    Grading gr() const { return deg().grading(); }

    bool is_p_restricted(unsigned p) const
    {
        for (const auto& [idx, mult] : h_)
            if (mult >= p)
                return false;
        return true;
    }

    /// The values r with multiplicity h(beta, r), in decreasing order.
    Partition lambda(const Root& beta) const
    {
        std::vector<unsigned> parts;
        for (const auto& [idx, mult] : h_)
            if (idx.beta == beta)
                parts.insert(parts.end(), mult, idx.r);
        return Partition(std::move(parts));
    }

    /// Total degree of the numerator of the image of E_h over the canonical
    /// denominator of gr(h).
    int numerator_degree() const
    {
        int deg = static_cast<int>(gr().denominator_degree());
        for (const auto& [idx, mult] : h_)
            deg += static_cast<int>(mult) * (static_cast<int>(idx.r) - static_cast<int>(idx.beta.j - idx.beta.i));
        return deg;
    }

    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (const auto& [idx, mult] : h_) {
            s += (first ? "" : ", ") + idx.to_string() + ":" + std::to_string(mult);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const PBWExponent&, const PBWExponent&) = default;

private:
    unsigned n_ = 2;
    Map h_;
};

inline std::pair<KostantPartition, Grading> deg_gr(const PBWExponent& h) { return {h.deg(), h.gr()}; }

inline bool is_p_restricted(const PBWExponent& h, unsigned p) { return h.is_p_restricted(p); }

/// All h with gr(h) = k whose image has numerator degree at most max_degree,
/// restricted to p-restricted h when p is given. Ordered by Kostant partition
/// and then by the per-root partitions.
inline std::vector<PBWExponent> enumerate_pbw(const Grading& k, int max_degree, std::optional<unsigned> p = {})
{
    const unsigned n = k.rank();
    const auto roots = positive_roots(n);
    std::vector<PBWExponent> out;
    for (const auto& d : enumerate_kp(k)) {
        // Numerator degree = sum of r + denominator_degree - sum_beta d_beta (j - i).
        int budget = max_degree - static_cast<int>(k.denominator_degree());
        for (const auto& b : roots)
            budget += static_cast<int>(d[b] * (b.j - b.i));
        if (budget < 0)
            continue;
        PBWExponent cur(n);
        auto rec = [&](auto&& self, std::size_t ri, int left) -> void {
            if (ri == roots.size()) {
                out.push_back(cur);
                return;
            }
            const Root& b = roots[ri];
            const PBWExponent saved = cur;
            for (const auto& lam : partitions_up_to(d[b], static_cast<unsigned>(left))) {
                if (p && !lam.is_p_restricted(*p))
                    continue;
                for (unsigned r : lam.parts())
                    cur.add({b, r});
                self(self, ri + 1, left - static_cast<int>(lam.size()));
                cur = saved;
            }
        };
        rec(rec, 0, budget);
    }
    return out;
}

} // namespace shufgebra

#endif // SHUFGEBRA_PBW_HPP
