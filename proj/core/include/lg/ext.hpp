#pragma once

#include "lg/laurent.hpp"

namespace lg {

/// Element base + ycoef * Y of the quadratic extension of the Laurent ring by
/// Y, where Y^2 = p^{-2} - q^2 + p^2 q^2 - 1.  The braid generator's entries
/// live here; every closed invariant lands back in the Y-free subring.
class ExtScalar {
 public:
  ExtScalar() = default;
  explicit ExtScalar(LaurentPoly base) : base_(std::move(base)) {}
  ExtScalar(LaurentPoly base, LaurentPoly ycoef)
      : base_(std::move(base)), ycoef_(std::move(ycoef)) {}

  static ExtScalar y(int denom_scale = 2, CoeffKind kind = CoeffKind::Integer);
  /// The defining polynomial p^{-2} - q^2 + p^2 q^2 - 1.
  static LaurentPoly y_squared(int denom_scale = 2, CoeffKind kind = CoeffKind::Integer);

  const LaurentPoly& base() const { return base_; }
  const LaurentPoly& ycoef() const { return ycoef_; }
  bool is_zero() const { return base_.is_zero() && ycoef_.is_zero(); }
  bool y_free() const { return ycoef_.is_zero(); }

  ExtScalar operator-() const { return {-base_, -ycoef_}; }
  ExtScalar operator+(const ExtScalar& o) const { return {base_ + o.base_, ycoef_ + o.ycoef_}; }
  ExtScalar operator-(const ExtScalar& o) const { return {base_ - o.base_, ycoef_ - o.ycoef_}; }
  ExtScalar operator*(const ExtScalar& o) const;
  ExtScalar& operator+=(const ExtScalar& o);
  ExtScalar& operator-=(const ExtScalar& o);
  ExtScalar& operator*=(const ExtScalar& o);

  bool operator==(const ExtScalar& o) const {
    return base_ == o.base_ && ycoef_ == o.ycoef_;
  }
  bool operator!=(const ExtScalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  LaurentPoly base_;
  LaurentPoly ycoef_;
};

}  // namespace lg
