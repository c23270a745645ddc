#ifndef SHUFGEBRA_SCALAR_HPP
#define SHUFGEBRA_SCALAR_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace shufgebra {

struct RationalField;
struct PrimeField;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    using field_type = RationalField;

    Rational() = default;
    Rational(long value) : v_(value) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : v_(num, den)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& value() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_integer() const noexcept { return v_.get_den() == 1; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

/// Residue modulo an odd prime p < 2^31. A default-constructed value is the
/// zero of an unspecified prime field and adopts the prime of whatever it is
/// combined with.
class ModP {
public:
    using field_type = PrimeField;

    ModP() = default;
    ModP(long value, std::uint32_t p) : p_(p)
    {
        long r = value % static_cast<long>(p);
        v_ = static_cast<std::uint32_t>(r < 0 ? r + static_cast<long>(p) : r);
    }

    std::uint32_t residue() const noexcept { return v_; }
    std::uint32_t prime() const noexcept { return p_; }

    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    ModP inverse() const
    {
        if (v_ == 0)
            throw std::domain_error("inverse of zero in prime field");
        return pow(p_ - 2);
    }

    ModP pow(std::uint64_t e) const
    {
        std::uint64_t base = v_, acc = 1;
        while (e) {
            if (e & 1U)
                acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1U;
        }
        return from_raw(static_cast<std::uint32_t>(acc), p_);
    }

    ModP& operator+=(const ModP& o)
    {
        p_ = common(o);
        std::uint64_t s = std::uint64_t{v_} + o.v_;
        v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
        return *this;
    }
    ModP& operator-=(const ModP& o)
    {
        p_ = common(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - o.v_);
        return *this;
    }
    ModP& operator*=(const ModP& o)
    {
        p_ = common(o);
        v_ = p_ ? static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_) : 0;
        return *this;
    }
    ModP& operator/=(const ModP& o)
    {
        p_ = common(o);
        return *this *= o.inverse();
    }

    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
    friend ModP operator-(const ModP& a) { return neg(a); }

    friend bool operator==(const ModP& a, const ModP& b)
    {
        if (a.p_ && b.p_ && a.p_ != b.p_)
            throw field_mismatch("F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
        return a.v_ == b.v_;
    }

    std::string to_string() const { return std::to_string(v_); }

private:
    static ModP from_raw(std::uint32_t v, std::uint32_t p)
    {
        ModP r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    static ModP neg(const ModP& a) { return from_raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }

    std::uint32_t common(const ModP& o) const
    {
        if (p_ == 0)
            return o.p_;
        if (o.p_ != 0 && o.p_ != p_)
            throw field_mismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
        return p_;
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

inline bool is_zero(const Rational& x) noexcept { return x.is_zero(); }
inline bool is_zero(const ModP& x) noexcept { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.to_string(); }
inline std::string to_string(const ModP& x) { return x.to_string(); }

inline bool is_odd_prime(std::uint64_t p) noexcept
{
    if (p < 3 || p % 2 == 0)
        return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

/// The field of rational numbers.
struct RationalField {
    using value_type = Rational;

    Rational operator()(long num, long den = 1) const { return Rational(num, den); }
    Rational from_rational(const Rational& q) const { return q; }
    Rational from_rational(const mpq_class& q) const { return Rational(q); }
    std::string tag() const { return "q"; }
    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// The prime field F_p for an odd prime p < 2^31.
struct PrimeField {
    using value_type = ModP;

    std::uint32_t p = 3;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(static_cast<std::uint32_t>(prime))
    {
        if (prime > std::numeric_limits<std::int32_t>::max() || !is_odd_prime(prime))
            throw invalid_input("prime field needs an odd prime p < 2^31, got " + std::to_string(prime));
    }

    ModP operator()(long num, long den = 1) const
    {
        ModP d(den, p);
        if (d.is_zero())
            throw std::domain_error("denominator " + std::to_string(den) + " vanishes mod " + std::to_string(p));
        return ModP(num, p) / d;
    }

    ModP from_rational(const mpq_class& q) const
    {
        mpz_class num = q.get_num() % p, den = q.get_den() % p;
        if (num < 0)
            num += p;
        if (den == 0)
            throw std::domain_error("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
        return ModP(num.get_si(), p) / ModP(den.get_si(), p);
    }
    ModP from_rational(const Rational& q) const { return from_rational(q.value()); }

    std::string tag() const { return "fp:" + std::to_string(p); }
    friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

template <class K>
using field_of = typename K::field_type;

template <class K>
concept Coefficient = requires(K a, K b) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { to_string(a) } -> std::convertible_to<std::string>;
    typename K::field_type;
};

} // namespace shufgebra

#endif // SHUFGEBRA_SCALAR_HPP
