#ifndef SHUFGEBRA_LINEAR_ALGEBRA_HPP
#define SHUFGEBRA_LINEAR_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace shufgebra {

/// Dense matrix over an exact field.
template <Coefficient K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref()
    {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && is_zero((*this)(sel, col)))
                ++sel;
            if (sel == rows_)
                continue;
            swap_rows(sel, row);
            const K pivot = (*this)(row, col);
            const K inv = (pivot / pivot) / pivot;
            for (std::size_t c = col; c < cols_; ++c)
                (*this)(row, c) *= inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || is_zero((*this)(r, col)))
                    continue;
                K factor = (*this)(r, col);
                for (std::size_t c = col; c < cols_; ++c)
                    if (!is_zero((*this)(row, c)))
                        (*this)(r, c) -= factor * (*this)(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const
    {
        Matrix copy = *this;
        return copy.rref().size();
    }

    /// Basis of the right null space {v : M v = 0}.
    std::vector<std::vector<K>> nullspace(const K& one) const
    {
        Matrix copy = *this;
        auto pivots = copy.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots)
            is_pivot[p] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free])
                continue;
            std::vector<K> v(cols_);
            v[free] = one;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -copy(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> data_;
};

/// Coefficient matrix of a list of polynomials: one column per polynomial,
/// one row per monomial occurring in any of them. Row order follows the
/// monomial order.
template <Coefficient K>
Matrix<K> coefficient_matrix(const std::vector<Polynomial<K>>& vectors, std::vector<Monomial>* support = nullptr)
{
    std::map<Monomial, std::size_t, std::greater<>> index;
    for (const auto& v : vectors)
        for (const auto& t : v.terms())
            index.emplace(t.mono, 0);
    std::size_t r = 0;
    for (auto& [m, i] : index)
        i = r++;
    Matrix<K> m(index.size(), vectors.size());
    for (std::size_t c = 0; c < vectors.size(); ++c)
        for (const auto& t : vectors[c].terms())
            m(index.at(t.mono), c) = t.coeff;
    if (support) {
        support->clear();
        for (const auto& [mono, i] : index)
            support->push_back(mono);
    }
    return m;
}

template <Coefficient K>
std::size_t rank(const std::vector<Polynomial<K>>& vectors)
{
    return coefficient_matrix(vectors).rank();
}

/// Coefficients c with sum c_i v_i = target, or nullopt if target is not in
/// the span. With dependent vectors the free coefficients are set to zero.
template <Coefficient K>
std::optional<std::vector<K>> linear_solve(const std::vector<Polynomial<K>>& vectors, const Polynomial<K>& target)
{
    if (vectors.empty())
        return target.is_zero() ? std::optional<std::vector<K>>(std::vector<K>{}) : std::nullopt;
    auto all = vectors;
    all.push_back(target);
    Matrix<K> m = coefficient_matrix(all);
    auto pivots = m.rref();
    const std::size_t n = vectors.size();
    if (!pivots.empty() && pivots.back() == n)
        return std::nullopt;
    std::vector<K> coeffs(n);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        coeffs[pivots[r]] = m(r, n);
    return coeffs;
}

} // namespace shufgebra

#endif // SHUFGEBRA_LINEAR_ALGEBRA_HPP
