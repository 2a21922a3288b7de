#include "lg/ext.hpp"

namespace lg {

LaurentPoly ExtScalar::y_squared(int denom_scale, CoeffKind kind) {
  LaurentPoly y2(denom_scale, kind);
  const Coeff one = kind == CoeffKind::Integer ? Coeff::integer(1)
                    : kind == CoeffKind::Rational
                        ? Coeff::rational(mpq_class(1))
                        : Coeff::gaussian(1, 0);
  y2 += LaurentPoly::term(one, 0, -2, denom_scale);   // p^-2
  y2 -= LaurentPoly::term(one, 2, 0, denom_scale);    // -q^2
  y2 += LaurentPoly::term(one, 2, 2, denom_scale);    // +p^2 q^2
  y2 -= LaurentPoly::constant(one, denom_scale);      // -1
  return y2;
}

ExtScalar ExtScalar::y(int denom_scale, CoeffKind kind) {
  const Coeff one = kind == CoeffKind::Integer ? Coeff::integer(1)
                    : kind == CoeffKind::Rational
                        ? Coeff::rational(mpq_class(1))
                        : Coeff::gaussian(1, 0);
  return {LaurentPoly(denom_scale, kind), LaurentPoly::constant(one, denom_scale)};
}

ExtScalar ExtScalar::operator*(const ExtScalar& o) const {
  // (u1 + v1 Y)(u2 + v2 Y) = u1 u2 + v1 v2 Y^2 + (u1 v2 + u2 v1) Y.
  LaurentPoly base = base_ * o.base_;
  if (!ycoef_.is_zero() && !o.ycoef_.is_zero()) {
    LaurentPoly cross = ycoef_ * o.ycoef_;
    base += cross * y_squared(cross.denom_scale(), cross.kind());
  }
  LaurentPoly yc = base_ * o.ycoef_ + o.base_ * ycoef_;
  return {std::move(base), std::move(yc)};
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
  base_ += o.base_;
  ycoef_ += o.ycoef_;
  return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) {
  base_ -= o.base_;
  ycoef_ -= o.ycoef_;
  return *this;
}

ExtScalar& ExtScalar::operator*=(const ExtScalar& o) {
  *this = *this * o;
  return *this;
}

std::string ExtScalar::str() const {
  if (ycoef_.is_zero()) return base_.str();
  std::string s;
  if (!base_.is_zero()) s += base_.str() + " + ";
  s += "(" + ycoef_.str() + ") Y";
  return s;
}

}  // namespace lg
