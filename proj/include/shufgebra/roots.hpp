#ifndef SHUFGEBRA_ROOTS_HPP
#define SHUFGEBRA_ROOTS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace shufgebra {

/// The positive root [i,j] = alpha_i + ... + alpha_j of sl_n.
///
/// The defaulted ordering is the root order used throughout: [i,j] < [i',j']
/// iff i < i', or i = i' and j < j'.
struct Root {
    unsigned i = 1;
    unsigned j = 1;

    bool contains(unsigned color) const noexcept { return i <= color && color <= j; }
    unsigned height() const noexcept { return j - i + 1; }
    std::string to_string() const { return "[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

    friend auto operator<=>(const Root&, const Root&) = default;
};

inline void check_rank(unsigned n)
{
    if (n < 2)
        throw invalid_input("rank n must be at least 2, got " + std::to_string(n));
}

inline void check_root(const Root& b, unsigned n)
{
    if (b.i < 1 || b.j < b.i || b.j > n - 1)
        throw invalid_input("root " + b.to_string() + " is not a positive root of sl_" + std::to_string(n));
}

/// All positive roots of sl_n in increasing root order.
inline std::vector<Root> positive_roots(unsigned n)
{
    check_rank(n);
    std::vector<Root> out;
    for (unsigned i = 1; i < n; ++i)
        for (unsigned j = i; j < n; ++j)
            out.push_back({i, j});
    return out;
}

/// Position of a root in positive_roots(n).
inline std::size_t root_index(const Root& b, unsigned n)
{
    check_root(b, n);
    std::size_t idx = 0;
    for (unsigned i = 1; i < b.i; ++i)
        idx += n - i;
    return idx + (b.j - b.i);
}

/// A grading vector k in N^{n-1}; k[c-1] counts variables of color c.
class Grading {
public:
    Grading() = default;
    explicit Grading(std::vector<unsigned> k) : k_(std::move(k)) {}

    static Grading zero(unsigned n) { return Grading(std::vector<unsigned>(n - 1, 0)); }
    static Grading of_root(const Root& b, unsigned n)
    {
        check_root(b, n);
        Grading g = zero(n);
        for (unsigned c = b.i; c <= b.j; ++c)
            g.k_[c - 1] = 1;
        return g;
    }
    static Grading unit(unsigned color, unsigned n, unsigned times = 1)
    {
        if (color < 1 || color >= n)
            throw invalid_input("color " + std::to_string(color) + " out of range for sl_" + std::to_string(n));
        Grading g = zero(n);
        g.k_[color - 1] = times;
        return g;
    }

    unsigned rank() const noexcept { return static_cast<unsigned>(k_.size()) + 1; }
    std::size_t colors() const noexcept { return k_.size(); }
    /// Number of variables of the given color (1-based).
    unsigned at(unsigned color) const { return k_.at(color - 1); }
    const std::vector<unsigned>& counts() const noexcept { return k_; }
    unsigned total() const { return std::accumulate(k_.begin(), k_.end(), 0U); }
    bool is_zero() const { return total() == 0; }

    /// Degree of the canonical pole denominator: sum_i k_i k_{i+1}.
    unsigned denominator_degree() const
    {
        unsigned d = 0;
        for (std::size_t c = 0; c + 1 < k_.size(); ++c)
            d += k_[c] * k_[c + 1];
        return d;
    }

    friend Grading operator+(const Grading& a, const Grading& b)
    {
        if (a.k_.size() != b.k_.size())
            throw invalid_input("gradings of different rank");
        Grading g = a;
        for (std::size_t c = 0; c < g.k_.size(); ++c)
            g.k_[c] += b.k_[c];
        return g;
    }
    Grading& operator+=(const Grading& o) { return *this = *this + o; }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t c = 0; c < k_.size(); ++c)
            s += (c ? "," : "") + std::to_string(k_[c]);
        return s + ")";
    }

    friend bool operator==(const Grading&, const Grading&) = default;

private:
    std::vector<unsigned> k_;
};

/// An index (beta, r) of a PBW root vector. The ordering is the PBW order:
/// roots ascending, and for equal roots r DESCENDING.
struct PbwIndex {
    Root beta;
    unsigned r = 0;

    friend std::strong_ordering operator<=>(const PbwIndex& a, const PbwIndex& b)
    {
        if (auto c = a.beta <=> b.beta; c != 0)
            return c;
        return b.r <=> a.r;
    }
    friend bool operator==(const PbwIndex&, const PbwIndex&) = default;

    std::string to_string() const { return "(" + beta.to_string() + "," + std::to_string(r) + ")"; }
};

inline std::strong_ordering pbw_index_cmp(const PbwIndex& a, const PbwIndex& b) { return a <=> b; }

/// A Kostant partition: multiplicities d_beta for every positive root of
/// sl_n, stored densely in root order.
class KostantPartition {
public:
    KostantPartition() = default;
    explicit KostantPartition(unsigned n) : n_(n), mult_(positive_roots(n).size(), 0) {}

    unsigned rank() const noexcept { return n_; }
    unsigned operator[](const Root& b) const { return mult_.at(root_index(b, n_)); }
    void set(const Root& b, unsigned d) { mult_.at(root_index(b, n_)) = d; }
    const std::vector<unsigned>& multiplicities() const noexcept { return mult_; }

    /// Total number of parts, sum_beta d_beta.
    unsigned parts() const { return std::accumulate(mult_.begin(), mult_.end(), 0U); }

    Grading grading() const
    {
        Grading g = Grading::zero(n_);
        auto roots = positive_roots(n_);
        for (std::size_t r = 0; r < roots.size(); ++r)
            for (unsigned c = 0; c < mult_[r]; ++c)
                g += Grading::of_root(roots[r], n_);
        return g;
    }

    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        auto roots = positive_roots(n_);
        for (std::size_t r = 0; r < roots.size(); ++r) {
            if (!mult_[r])
                continue;
            s += (first ? "" : ", ") + roots[r].to_string() + ":" + std::to_string(mult_[r]);
            first = false;
        }
        return s + "}";
    }

    /// Lexicographic in root order: the first root where the multiplicities
    /// differ decides, smaller multiplicity first.
    friend std::strong_ordering operator<=>(const KostantPartition& a, const KostantPartition& b)
    {
        if (a.n_ != b.n_)
            throw invalid_input("comparing Kostant partitions of different rank");
        return a.mult_ <=> b.mult_;
    }
    friend bool operator==(const KostantPartition&, const KostantPartition&) = default;

private:
    unsigned n_ = 2;
    std::vector<unsigned> mult_;
};

/// All Kostant partitions of k, ascending.
inline std::vector<KostantPartition> enumerate_kp(const Grading& k)
{
    const unsigned n = k.rank();
    const auto roots = positive_roots(n);
    std::vector<KostantPartition> out;
    KostantPartition cur(n);
    std::vector<unsigned> left = k.counts();
    auto rec = [&](auto&& self, std::size_t r) -> void {
        if (r == roots.size()) {
            if (std::all_of(left.begin(), left.end(), [](unsigned x) { return x == 0; }))
                out.push_back(cur);
            return;
        }
        const Root& b = roots[r];
        unsigned cap = ~0U;
        for (unsigned c = b.i; c <= b.j; ++c)
            cap = std::min(cap, left[c - 1]);
        for (unsigned d = 0; d <= cap; ++d) {
            cur.set(b, d);
            for (unsigned c = b.i; c <= b.j; ++c)
                left[c - 1] -= d;
            self(self, r + 1);
            for (unsigned c = b.i; c <= b.j; ++c)
                left[c - 1] += d;
        }
        cur.set(b, 0);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// One variable group member of a split: x^{(beta,s)}_ell is the variable
/// x[ell, index].
struct SplitEntry {
    Root beta;
    unsigned s;
    unsigned ell;
    unsigned index;
};

/// Deterministic variable splitting for a Kostant partition: roots
/// ascending, then s ascending, then ell ascending, each taking the next
/// unused index of color ell.
inline std::vector<SplitEntry> canonical_split(const KostantPartition& d)
{
    std::vector<SplitEntry> out;
    std::vector<unsigned> next(d.rank(), 1);
    for (const Root& b : positive_roots(d.rank()))
        for (unsigned s = 1; s <= d[b]; ++s)
            for (unsigned ell = b.i; ell <= b.j; ++ell)
                out.push_back({b, s, ell, next[ell - 1]++});
    return out;
}

} // namespace shufgebra

#endif // SHUFGEBRA_ROOTS_HPP
