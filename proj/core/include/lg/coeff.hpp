#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lg {

/// Which exact scalar ring a polynomial's coefficients live in.  The kind is
/// fixed per polynomial instance; mixing kinds in ring operations is a usage
/// error and throws.
enum class CoeffKind : std::uint8_t { Integer, Gaussian, Rational };

std::string to_string(CoeffKind k);

/// One exact coefficient: an integer, a Gaussian integer a+bi, or a rational.
/// All arithmetic is exact; there is no floating point anywhere in the ring.
class Coeff {
 public:
  Coeff() : kind_(CoeffKind::Integer) {}

  static Coeff integer(long v) { return integer(mpz_class(v)); }
  static Coeff integer(mpz_class v);
  static Coeff gaussian(mpz_class re, mpz_class im);
  static Coeff rational(mpq_class v);
  static Coeff rational(long num, long den);

  CoeffKind kind() const { return kind_; }
  bool is_zero() const;
  bool is_one() const;

  // Accessors; only valid for the matching kind.
  const mpz_class& int_value() const;
  const mpz_class& re() const;
  const mpz_class& im() const;
  const mpq_class& rat_value() const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;

  /// Exact division; throws std::domain_error when the quotient does not lie
  /// in the same ring (nonzero remainder).
  Coeff div_exact(const Coeff& o) const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// "3", "-3", "3/4", "(2+3i)", "(-i)", ...
  std::string str() const;

 private:
  void check_same_kind(const Coeff& o) const;

  CoeffKind kind_;
  mpz_class re_, im_;  // Integer (re_ only) and Gaussian
  mpq_class rat_;      // Rational
};

}  // namespace lg
