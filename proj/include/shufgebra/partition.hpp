#ifndef SHUFGEBRA_PARTITION_HPP
#define SHUFGEBRA_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace shufgebra {

/// A partition lambda_1 >= ... >= lambda_k >= 0 of explicit length k. Zero
/// parts are significant: (1,0) and (1) are different partitions.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts))
    {
        if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
            throw invalid_input("partition parts must be weakly decreasing: " + to_string());
    }

    std::size_t length() const noexcept { return parts_.size(); }
    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned operator[](std::size_t s) const { return parts_.at(s); }
    unsigned size() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

    /// m_i: how many parts equal i (i = 0 counts the zero parts).
    unsigned multiplicity(unsigned i) const
    {
        return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), i));
    }

    /// Value -> multiplicity for every value that occurs, zero included.
    std::map<unsigned, unsigned> multiplicities() const
    {
        std::map<unsigned, unsigned> m;
        for (unsigned x : parts_)
            ++m[x];
        return m;
    }

    /// prod_{i >= 0} m_i!, the order of the stabilizer of lambda in S_k.
    mpz_class mul() const
    {
        mpz_class acc = 1;
        for (auto [value, count] : multiplicities()) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), count);
            acc *= f;
        }
        return acc;
    }

    /// Every multiplicity, including m_0, is below p.
    bool is_p_restricted(unsigned p) const
    {
        for (auto [value, count] : multiplicities())
            if (count >= p)
                return false;
        return true;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t k = 0; k < parts_.size(); ++k)
            s += (k ? "," : "") + std::to_string(parts_[k]);
        return s + ")";
    }

    /// Size first, then lexicographic on the parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
};

inline bool is_p_restricted(const Partition& lambda, unsigned p) { return lambda.is_p_restricted(p); }

/// All partitions of the given length and exact size, ascending.
inline std::vector<Partition> partitions_of(std::size_t length, unsigned size)
{
    std::vector<Partition> out;
    std::vector<unsigned> cur(length);
    auto rec = [&](auto&& self, std::size_t pos, unsigned left, unsigned cap) -> void {
        if (pos == length) {
            if (left == 0)
                out.emplace_back(cur);
            return;
        }
        const auto slots = static_cast<unsigned>(length - pos);
        for (unsigned x = std::min(cap, left);; --x) {
            if (static_cast<unsigned long>(x) * slots < left)
                break;
            cur[pos] = x;
            self(self, pos + 1, left - x, x);
            if (x == 0)
                break;
        }
    };
    rec(rec, 0, size, size);
    std::sort(out.begin(), out.end());
    return out;
}

/// All partitions of the given length with size at most max_size, ascending.
inline std::vector<Partition> partitions_up_to(std::size_t length, unsigned max_size)
{
    std::vector<Partition> out;
    for (unsigned s = 0; s <= max_size; ++s) {
        auto part = partitions_of(length, s);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace shufgebra

#endif // SHUFGEBRA_PARTITION_HPP
