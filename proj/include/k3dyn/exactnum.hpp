#pragma once

// Exact arithmetic over Q and real quadratic fields Q(sqrt(d)).
//
// QuadExt stores p + q*sqrt(d) with big-rational p, q and a small squarefree
// d > 1.  Elements with q = 0 normalize to a purely rational representation
// (d = 0) so that zeros and rationals compare equal across fields.  All
// comparisons and signs are decided exactly; no floating point is involved
// except in the explicit to_double() embedding.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "k3dyn/errors.hpp"

namespace k3dyn {

// GMP-backed integers: orbit coordinates reach hundreds of kilobits, where
// subquadratic multiplication and gcd are essential.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

// "p/q" or "p"; throws ParseError on malformed input.
BigRational parse_rational(const std::string& text);
std::string rational_to_string(const BigRational& r);

bool is_squarefree(std::int64_t d);

class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long n) : rat_(n) {}  // NOLINT: implicit on purpose
    QuadExt(BigRational r) : rat_(std::move(r)) {}
    QuadExt(BigRational p, BigRational q, std::int64_t d);

    // sqrt(d) itself.
    static QuadExt sqrt_of(std::int64_t d) { return QuadExt(0, 1, d); }

    const BigRational& rat() const { return rat_; }
    const BigRational& rad() const { return rad_; }
    std::int64_t disc() const { return disc_; }
    bool is_rational() const { return disc_ == 0; }
    bool is_zero() const { return rat_ == 0 && rad_ == 0; }

    QuadExt operator-() const;
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    bool operator==(const QuadExt& o) const;
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    QuadExt conjugate() const;             // p - q*sqrt(d)
    BigRational norm() const;              // p^2 - q^2 d
    QuadExt inverse() const;
    QuadExt pow(long n) const;             // negative n via inverse

    // Exact sign under the embedding sqrt(d) > 0: -1, 0 or +1.
    int sign() const;

    // Correctly rounded fixed-point decimal with `digits` places after the
    // point (digits >= 1).
    std::string to_decimal(unsigned digits) const;

    double to_double() const;

    // Exact display form, e.g. "7+4√3", "-1/2", "(-3+√5)/2" style is not
    // attempted: components print as p+q√d with rational p, q.
    std::string str() const;

private:
    BigRational rat_;      // p
    BigRational rad_;      // q
    std::int64_t disc_ = 0;  // d; 0 marks purely rational

    void normalize();
    // Shared field of two operands, or IncompatibleField.
    static std::int64_t common_disc(const QuadExt& a, const QuadExt& b);
};

inline int qe_sign(const QuadExt& x) { return x.sign(); }

// Exact square roots inside the field, when they exist.
std::optional<BigRational> rational_sqrt(const BigRational& x);
// Root >= 0 when one exists in Q(√field_disc); field_disc resolves the
// ambient field for purely rational inputs.
std::optional<QuadExt> quad_sqrt(const QuadExt& x, std::int64_t field_disc = 0);

// floor((a + b*sqrt(d)) / c) for integers a, b, c with c > 0, exact.
BigInt floor_quad(const BigInt& a, const BigInt& b, const BigInt& c, std::int64_t d);

}  // namespace k3dyn
