#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "hocolim/error.hpp"

namespace hocolim {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Coefficient rings. Each ring is a small value object (PrimeField carries its
// modulus) that performs arithmetic on its value_type. All of them are
// Euclidean, which is all the Smith normal form needs: over a field the
// division never leaves a remainder and every nonzero element is a unit.

template <class R>
concept Ring = std::equality_comparable<R> && requires(const R& r, const typename R::value_type& a) {
    typename R::value_type;
    { R::is_field } -> std::convertible_to<bool>;
    { r.zero() } -> std::same_as<typename R::value_type>;
    { r.one() } -> std::same_as<typename R::value_type>;
    { r.from_integer(Integer{}) } -> std::same_as<typename R::value_type>;
    { r.add(a, a) } -> std::same_as<typename R::value_type>;
    { r.sub(a, a) } -> std::same_as<typename R::value_type>;
    { r.mul(a, a) } -> std::same_as<typename R::value_type>;
    { r.neg(a) } -> std::same_as<typename R::value_type>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.smaller_norm(a, a) } -> std::convertible_to<bool>;
    { r.divmod(a, a) } -> std::same_as<std::pair<typename R::value_type, typename R::value_type>>;
    { r.normalizer(a) } -> std::same_as<typename R::value_type>;
    { r.unit_inverse(a) } -> std::same_as<typename R::value_type>;
    { r.is_unit(a) } -> std::convertible_to<bool>;
    { r.to_string(a) } -> std::same_as<std::string>;
    { r.name() } -> std::same_as<std::string>;
};

struct Integers {
    using value_type = Integer;
    static constexpr bool is_field = false;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_integer(const Integer& a) const { return a; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    bool smaller_norm(const value_type& a, const value_type& b) const { return abs(a) < abs(b); }

    // Truncating division, so |r| < |b| and sign(r) = sign(a).
    std::pair<value_type, value_type> divmod(const value_type& a, const value_type& b) const {
        value_type q = a / b;
        value_type r = a - q * b;
        return {std::move(q), std::move(r)};
    }

    value_type normalizer(const value_type& a) const { return a.sign() < 0 ? -1 : 1; }
    value_type unit_inverse(const value_type& u) const { return u; }
    bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
    std::string to_string(const value_type& a) const { return a.str(); }
    std::string name() const { return "Z"; }

    friend bool operator==(const Integers&, const Integers&) = default;
};

struct Rationals {
    using value_type = Rational;
    static constexpr bool is_field = true;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_integer(const Integer& a) const { return value_type(a); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    bool is_zero(const value_type& a) const { return a.is_zero(); }
    bool smaller_norm(const value_type& a, const value_type& b) const { return a.is_zero() && !b.is_zero(); }

    std::pair<value_type, value_type> divmod(const value_type& a, const value_type& b) const {
        return {a / b, 0};
    }

    value_type normalizer(const value_type& a) const { return a.is_zero() ? value_type(1) : value_type(1) / a; }
    value_type unit_inverse(const value_type& u) const { return value_type(1) / u; }
    bool is_unit(const value_type& a) const { return !a.is_zero(); }
    std::string to_string(const value_type& a) const { return a.str(); }
    std::string name() const { return "Q"; }

    friend bool operator==(const Rationals&, const Rationals&) = default;
};

/// Residues modulo a prime p < 2^31, stored canonically in [0, p).
class PrimeField {
public:
    using value_type = std::uint64_t;
    static constexpr bool is_field = true;

    PrimeField() = default;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p))
            fail(ErrorKind::Shape, "prime field modulus " + std::to_string(p) + " is not a prime below 2^31");
    }

    std::uint64_t characteristic() const { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_integer(const Integer& a) const {
        Integer r = a % p_;
        if (r.sign() < 0) r += p_;
        return static_cast<value_type>(r);
    }
    value_type add(value_type a, value_type b) const { return (a + b) % p_; }
    value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    bool is_zero(value_type a) const { return a == 0; }
    bool smaller_norm(value_type a, value_type b) const { return a == 0 && b != 0; }

    std::pair<value_type, value_type> divmod(value_type a, value_type b) const {
        return {mul(a, unit_inverse(b)), 0};
    }

    value_type normalizer(value_type a) const { return a == 0 ? 1 : unit_inverse(a); }

    // Fermat: a^(p-2).
    value_type unit_inverse(value_type a) const {
        value_type result = 1, base = a;
        for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }
    bool is_unit(value_type a) const { return a != 0; }
    std::string to_string(value_type a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p_); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    static bool is_prime(std::uint64_t n) {
        if (n < 4) return n >= 2;
        if (n % 2 == 0) return false;
        for (std::uint64_t d = 3; d <= n / d; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t p_ = 2;
};

static_assert(Ring<Integers>);
static_assert(Ring<Rationals>);
static_assert(Ring<PrimeField>);

} // namespace hocolim
