#ifndef SHUFGEBRA_MONOMIAL_HPP
#define SHUFGEBRA_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "errors.hpp"

namespace shufgebra {

/// A polynomial variable: a colored variable x[i,r], a specialization
/// variable w[i,j,s] attached to the root [i,j], or the probe variable t.
///
/// Variables are packed into 16 bits so that comparing ids gives the global
/// variable order: all x before all w before t; x by (color, index); w by
/// (root, index) with roots ordered by (i, j).
class Variable {
public:
    enum class Kind : std::uint8_t { X = 0, W = 1, T = 2 };

    static constexpr unsigned max_color = 31;
    static constexpr unsigned max_x_index = 511;
    static constexpr unsigned max_root_end = 15;
    static constexpr unsigned max_w_index = 63;

    constexpr Variable() = default;

    static Variable x(unsigned color, unsigned index)
    {
        if (color < 1 || color > max_color || index < 1 || index > max_x_index)
            throw invalid_input("x[" + std::to_string(color) + "," + std::to_string(index) + "] out of range");
        return Variable(static_cast<std::uint16_t>((color << 9U) | index));
    }

    static Variable w(unsigned i, unsigned j, unsigned index)
    {
        if (i < 1 || j < i || j > max_root_end || index < 1 || index > max_w_index)
            throw invalid_input("w[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(index)
                                + "] out of range");
        return Variable(static_cast<std::uint16_t>((1U << 14U) | (i << 10U) | (j << 6U) | index));
    }

    static constexpr Variable t() { return Variable(static_cast<std::uint16_t>(2U << 14U)); }

    static constexpr Variable from_id(std::uint16_t id) { return Variable(id); }

    constexpr std::uint16_t id() const noexcept { return id_; }
    constexpr Kind kind() const noexcept { return static_cast<Kind>(id_ >> 14U); }

    // x[color, index]
    constexpr unsigned color() const noexcept { return (id_ >> 9U) & 0x1FU; }
    constexpr unsigned index() const noexcept
    {
        return kind() == Kind::X ? (id_ & 0x1FFU) : (id_ & 0x3FU);
    }
    // w[root_i, root_j, index]
    constexpr unsigned root_i() const noexcept { return (id_ >> 10U) & 0xFU; }
    constexpr unsigned root_j() const noexcept { return (id_ >> 6U) & 0xFU; }

    std::string to_string() const
    {
        switch (kind()) {
        case Kind::X:
            return "x[" + std::to_string(color()) + "," + std::to_string(index()) + "]";
        case Kind::W:
            return "w[" + std::to_string(root_i()) + "," + std::to_string(root_j()) + "," + std::to_string(index())
                   + "]";
        default:
            return "t";
        }
    }

    friend constexpr auto operator<=>(Variable, Variable) = default;

private:
    constexpr explicit Variable(std::uint16_t id) : id_(id) {}
    std::uint16_t id_ = 0;
};

/// Sparse exponent vector with inline storage. Entries are kept sorted by
/// variable id; zero exponents are never stored.
class Monomial {
public:
    static constexpr std::size_t capacity = 16;

    struct Entry {
        Variable var;
        unsigned exp;
    };

    Monomial() = default;

    static Monomial of(Variable v, unsigned e = 1)
    {
        Monomial m;
        if (e)
            m.push(v.id(), e);
        return m;
    }

    std::size_t size() const noexcept { return size_; }
    bool is_one() const noexcept { return size_ == 0; }
    unsigned degree() const noexcept { return degree_; }

    Entry operator[](std::size_t k) const noexcept
    {
        return {Variable::from_id(static_cast<std::uint16_t>(packed_[k] >> 16U)), packed_[k] & 0xFFFFU};
    }

    unsigned exponent(Variable v) const noexcept
    {
        for (std::size_t k = 0; k < size_; ++k) {
            auto id = packed_[k] >> 16U;
            if (id == v.id())
                return packed_[k] & 0xFFFFU;
            if (id > v.id())
                break;
        }
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < a.size_ || j < b.size_) {
            std::uint32_t ia = i < a.size_ ? a.packed_[i] >> 16U : 0x10000U;
            std::uint32_t ib = j < b.size_ ? b.packed_[j] >> 16U : 0x10000U;
            if (ia < ib) {
                r.push(ia, a.packed_[i++] & 0xFFFFU);
            } else if (ib < ia) {
                r.push(ib, b.packed_[j++] & 0xFFFFU);
            } else {
                r.push(ia, (a.packed_[i++] & 0xFFFFU) + (b.packed_[j++] & 0xFFFFU));
            }
        }
        return r;
    }

    bool divides(const Monomial& b) const noexcept
    {
        std::size_t j = 0;
        for (std::size_t i = 0; i < size_; ++i) {
            auto id = packed_[i] >> 16U;
            while (j < b.size_ && (b.packed_[j] >> 16U) < id)
                ++j;
            if (j == b.size_ || (b.packed_[j] >> 16U) != id || (b.packed_[j] & 0xFFFFU) < (packed_[i] & 0xFFFFU))
                return false;
        }
        return true;
    }

    /// b / *this, assuming divides(b).
    Monomial quotient_of(const Monomial& b) const
    {
        Monomial r;
        std::size_t i = 0;
        for (std::size_t j = 0; j < b.size_; ++j) {
            auto id = b.packed_[j] >> 16U;
            unsigned e = b.packed_[j] & 0xFFFFU;
            if (i < size_ && (packed_[i] >> 16U) == id)
                e -= packed_[i++] & 0xFFFFU;
            if (e)
                r.push(id, e);
        }
        return r;
    }

    /// Monomial without variable v, and the exponent v had.
    std::pair<Monomial, unsigned> split(Variable v) const
    {
        Monomial r;
        unsigned e = 0;
        for (std::size_t k = 0; k < size_; ++k) {
            if ((packed_[k] >> 16U) == v.id())
                e = packed_[k] & 0xFFFFU;
            else
                r.push(packed_[k] >> 16U, packed_[k] & 0xFFFFU);
        }
        return {r, e};
    }

    /// Apply a variable renaming. The renaming must be injective on the
    /// variables of this monomial.
    template <class Rename>
    Monomial renamed(Rename&& rename) const
    {
        Monomial r;
        r.size_ = size_;
        r.degree_ = degree_;
        for (std::size_t k = 0; k < size_; ++k) {
            Variable v = rename(Variable::from_id(static_cast<std::uint16_t>(packed_[k] >> 16U)));
            r.packed_[k] = (std::uint32_t{v.id()} << 16U) | (packed_[k] & 0xFFFFU);
        }
        std::sort(r.packed_.begin(), r.packed_.begin() + static_cast<std::ptrdiff_t>(r.size_));
        for (std::size_t k = 1; k < r.size_; ++k)
            if ((r.packed_[k] >> 16U) == (r.packed_[k - 1] >> 16U))
                throw invalid_input("variable renaming is not injective");
        return r;
    }

    /// Graded lexicographic order: total degree first, then the monomial with
    /// the larger exponent on the earliest variable wins.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept
    {
        if (a.degree_ != b.degree_)
            return a.degree_ <=> b.degree_;
        std::size_t n = std::min(a.size_, b.size_);
        for (std::size_t k = 0; k < n; ++k) {
            auto va = a.packed_[k] >> 16U, vb = b.packed_[k] >> 16U;
            if (va != vb)
                return va < vb ? std::strong_ordering::greater : std::strong_ordering::less;
            auto ea = a.packed_[k] & 0xFFFFU, eb = b.packed_[k] & 0xFFFFU;
            if (ea != eb)
                return ea <=> eb;
        }
        return a.size_ <=> b.size_;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept
    {
        return a.size_ == b.size_ && std::equal(a.packed_.begin(), a.packed_.begin() + a.size_, b.packed_.begin());
    }

    std::size_t hash() const noexcept
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::size_t k = 0; k < size_; ++k) {
            h ^= packed_[k];
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29U));
    }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t k = 0; k < size_; ++k) {
            if (k)
                s += '*';
            auto e = (*this)[k];
            s += e.var.to_string();
            if (e.exp != 1)
                s += "^" + std::to_string(e.exp);
        }
        return s.empty() ? "1" : s;
    }

private:
    void push(std::uint32_t id, unsigned e)
    {
        if (size_ == capacity)
            throw invalid_input("monomial has more than 16 distinct variables");
        if (e > 0xFFFFU)
            throw invalid_input("exponent overflow");
        packed_[size_++] = (id << 16U) | e;
        degree_ += e;
    }

    std::array<std::uint32_t, capacity> packed_{};
    std::uint8_t size_ = 0;
    unsigned degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

} // namespace shufgebra

#endif // SHUFGEBRA_MONOMIAL_HPP
