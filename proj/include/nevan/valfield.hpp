#pragma once

// Exact coefficient fields with a non-Archimedean absolute value.
//
// Two concrete models are provided:
//   padic  - the rationals with the p-adic absolute value (characteristic 0)
//   tadic  - F_p(t) with the t-adic absolute value (characteristic p)
//
// Absolute values are only ever exposed through `logabs`, normalized so the
// uniformizer (p, resp. t) has log -1. Every value is an exact rational.

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "nevan/errors.hpp"

namespace nevan {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Extended rational: a finite value or -infinity (the log of |0|).
class LogValue {
public:
    LogValue() = default;  // -infinity
    LogValue(Rational v) : value_(std::move(v)) {}
    static LogValue neg_inf() { return LogValue(); }

    bool is_neg_inf() const noexcept { return !value_.has_value(); }
    /// Throws InputError on -infinity.
    const Rational& value() const;

    friend LogValue operator+(const LogValue& a, const LogValue& b);
    friend LogValue operator-(const LogValue& a, const LogValue& b);  // b must be finite
    friend bool operator==(const LogValue& a, const LogValue& b);
    friend bool operator<(const LogValue& a, const LogValue& b);
    friend bool operator<=(const LogValue& a, const LogValue& b) { return !(b < a); }
    friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
    friend bool operator>=(const LogValue& a, const LogValue& b) { return !(a < b); }

    std::string str() const;

private:
    std::optional<Rational> value_;
};

LogValue max(const LogValue& a, const LogValue& b);

// ---------------------------------------------------------------------------
// Dense univariate polynomials over F_p, coefficient i is the t^i coefficient.

class FpPoly {
public:
    FpPoly() = default;
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
    static FpPoly constant(std::uint32_t p, std::int64_t c);
    static FpPoly monomial(std::uint32_t p, std::size_t deg, std::uint32_t c = 1);

    std::uint32_t prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
    std::uint32_t lead() const { return c_.back(); }
    /// Order of vanishing at t = 0.
    long valuation() const;

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator-() const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scaled(std::uint32_t c) const;
    /// Quotient and remainder; throws DivisionByZero.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& o) const;
    FpPoly monic() const;
    bool operator==(const FpPoly& o) const = default;

    /// Returns g with g(t^q) == *this, if every exponent is divisible by q.
    std::optional<FpPoly> deflate(std::uint64_t q) const;

    friend FpPoly gcd(FpPoly a, FpPoly b);

private:
    void trim();
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> c_;
};

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);

/// Reduced element num/den of F_p(t): gcd(num, den) = 1, den monic.
class TadicElem {
public:
    TadicElem() = default;
    /// Reduces; throws DivisionByZero for den = 0.
    TadicElem(FpPoly num, FpPoly den);
    /// No reduction; for deserializing and for exercising validation paths.
    static TadicElem raw(FpPoly num, FpPoly den);

    const FpPoly& num() const noexcept { return num_; }
    const FpPoly& den() const noexcept { return den_; }
    std::uint32_t prime() const noexcept { return num_.prime(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_reduced() const;

    bool operator==(const TadicElem& o) const = default;

private:
    FpPoly num_;
    FpPoly den_;
};

// ---------------------------------------------------------------------------

/// An element of one of the two coefficient fields.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(Rational q) : v_(std::move(q)) { std::get<Rational>(v_).canonicalize(); }
    Scalar(TadicElem e) : v_(std::move(e)) {}

    bool is_rational() const noexcept { return v_.index() == 0; }
    bool is_tadic() const noexcept { return v_.index() == 1; }
    const Rational& rational() const;
    const TadicElem& tadic() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inv() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::variant<Rational, TadicElem> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class FieldKind { padic, tadic };

/// Configuration of the coefficient field: Q with |.|_p, or F_p(t) with |.|_t.
class Field {
public:
    /// Throws InputError if p is not prime.
    Field(FieldKind kind, std::uint32_t p);
    static Field padic(std::uint32_t p) { return Field(FieldKind::padic, p); }
    static Field tadic(std::uint32_t p) { return Field(FieldKind::tadic, p); }

    FieldKind kind() const noexcept { return kind_; }
    std::uint32_t prime() const noexcept { return p_; }
    /// 0 for padic, p for tadic.
    std::uint32_t characteristic() const noexcept { return kind_ == FieldKind::padic ? 0 : p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;
    Scalar from_integer(const Integer& n) const;
    Scalar from_rational(const Rational& q) const;
    /// The transcendental t; tadic only.
    Scalar t() const;

    /// Is x a canonical element of this field.
    bool contains(const Scalar& x) const;
    /// Throws InputError unless contains(x).
    void require(const Scalar& x) const;

    /// Normalized log|x|: -(valuation of x); -infinity for 0.
    LogValue logabs(const Scalar& x) const;

    /// q-th root of x when x is a q-th power (q a power of p, tadic only).
    std::optional<Scalar> pth_power_root(const Scalar& x, std::uint64_t q) const;

    /// Random element drawn from a pool whose size grows with `spread`.
    Scalar random_element(std::mt19937_64& rng, int spread) const;

    std::string str() const;
    bool operator==(const Field& o) const = default;

private:
    FieldKind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// p-adic valuation of a nonzero rational.
long padic_valuation(const Rational& q, std::uint32_t p);

}  // namespace nevan
