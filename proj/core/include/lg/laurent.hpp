#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "lg/coeff.hpp"

namespace lg {

/// Exponent pair in grid units: the natural exponent of q is eq/D and of p is
/// ep/D where D is the polynomial's denom_scale.  Ordered lexicographically,
/// (eq, ep) ascending; this total order is the canonical term order used for
/// serialization.
struct ExpPair {
  std::int64_t eq = 0;
  std::int64_t ep = 0;
  auto operator<=>(const ExpPair&) const = default;
};

/// Exact evaluation point: r = q^{1/2} and s = p^{1/2} as nonzero rationals,
/// with an optional w = q^{u/2} for the trigonometric R matrix.
struct RationalPoint {
  mpq_class r;
  mpq_class s;
  std::optional<mpq_class> w;
};

enum class PolyFormat { Plain, Json, Csv };

/// Two-variable Laurent polynomial over an exact coefficient ring, with a
/// fractional exponent grid (1/D)*Z fixed per instance.  Zero coefficients are
/// never stored, so structural equality on the term map is semantic equality
/// (after rescaling to a common grid).
class LaurentPoly {
 public:
  /// The zero polynomial.  A zero polynomial is kind- and grid-agnostic in
  /// ring operations: it adopts the other operand's kind and scale.
  explicit LaurentPoly(int denom_scale = 1, CoeffKind kind = CoeffKind::Integer);

  static LaurentPoly zero(int denom_scale = 1, CoeffKind kind = CoeffKind::Integer) {
    return LaurentPoly(denom_scale, kind);
  }
  /// Single term with exponents given in grid units of 1/denom_scale.
  static LaurentPoly monomial(Coeff c, std::int64_t eq_grid, std::int64_t ep_grid,
                              int denom_scale);
  /// Single term with integer natural-unit exponents.
  static LaurentPoly term(Coeff c, std::int64_t eq, std::int64_t ep, int denom_scale = 1);
  static LaurentPoly constant(Coeff c, int denom_scale = 1);

  int denom_scale() const { return denom_scale_; }
  CoeffKind kind() const { return kind_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpPair, Coeff>& terms() const { return terms_; }

  /// Adds one term (grid units), merging and dropping a zero result.
  void add_term(ExpPair e, const Coeff& c);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Rescales to a (coarser-grid) multiple of the current denom_scale.
  LaurentPoly rescaled(int new_scale) const;

  /// q -> q^{-1}, p -> p^{-1}: negate every exponent pair.
  LaurentPoly involute_q() const;
  /// p -> q^{-1} p^{-1}: (eq, ep) -> (eq - ep, -ep).
  LaurentPoly involute_alpha() const;

  bool is_palindromic() const;
  /// True iff every natural-unit exponent of q and p is an even integer.
  bool has_even_exponents() const;

  /// Exact substitution q = r^2, p = s^2 (so q^{1/2} = r, p^{1/2} = s).
  /// Requires Integer or Rational coefficients and exponents representable as
  /// integer powers of r and s on this grid.
  mpq_class eval_rational(const RationalPoint& pt) const;

  /// Exact division, asserting a zero remainder; the divisor must be a
  /// monomial or a polynomial in a single variable (all eq zero or all ep
  /// zero), which covers every division the toolkit performs.
  LaurentPoly div_exact(const LaurentPoly& divisor) const;

  /// Canonical deterministic text form.  Variable names default to q/p; a
  /// single-variable polynomial (all ep zero) prints only var_q.
  std::string serialize(PolyFormat format, const std::string& var_q = "q",
                        const std::string& var_p = "p") const;
  std::string str() const { return serialize(PolyFormat::Plain); }

  /// Inverse of serialize for the Plain and Json formats.
  static LaurentPoly parse(const std::string& text, PolyFormat format,
                           const std::string& var_q = "q", const std::string& var_p = "p");

 private:
  void merge_scaled(const LaurentPoly& o, bool negate);
  static int common_scale(int a, int b);

  int denom_scale_;
  CoeffKind kind_;
  std::map<ExpPair, Coeff> terms_;
};

}  // namespace lg
