#pragma once

#include <memory>
#include <random>
#include <string>

#include "lg/ext.hpp"
#include "lg/laurent.hpp"

namespace lg {

/// A validated exact sample point q = r^2, p = s^2 with the q-bracket values
/// [alpha]_q, [alpha+1]_q, [2alpha+1]_q precomputed.  Admissibility excludes
/// q = 1, p = +-1 and [2alpha+1]_q = 0 so that every normalization
/// denominator in the projector construction is nonzero.
class SamplePoint {
 public:
  static bool admissible(const RationalPoint& pt);
  /// Throws std::invalid_argument on an inadmissible point.
  static std::shared_ptr<const SamplePoint> make(const RationalPoint& pt);
  /// Draws an admissible point with numerators and denominators <= 50,
  /// retrying on inadmissibility; with_w additionally draws the spectral
  /// component w.
  static std::shared_ptr<const SamplePoint> random(std::mt19937_64& rng, bool with_w = false);

  const RationalPoint& point() const { return pt_; }
  const mpq_class& r() const { return pt_.r; }
  const mpq_class& s() const { return pt_.s; }
  bool has_w() const { return pt_.w.has_value(); }
  const mpq_class& w() const;

  const mpq_class& q() const { return q_; }
  const mpq_class& p() const { return p_; }
  const mpq_class& bracket_alpha() const { return qa_; }       // [alpha]_q
  const mpq_class& bracket_alpha1() const { return qa1_; }     // [alpha+1]_q
  const mpq_class& bracket_2alpha1() const { return q2a1_; }   // [2alpha+1]_q

  /// (q^x - q^{-x})/(q - q^{-1}) for q^x supplied as an exact rational.
  mpq_class q_bracket_of(const mpq_class& q_to_x) const;

 private:
  explicit SamplePoint(RationalPoint pt);
  RationalPoint pt_;
  mpq_class q_, p_, qa_, qa1_, q2a1_;
};

/// Element c1 + ca*s_a + cb*s_b + cab*s_a*s_b of the rank-4 free module over
/// the rationals generated by the square-root brackets s_a = [alpha]_q^{1/2}
/// and s_b = [alpha+1]_q^{1/2} at a fixed sample point.  Products close in the
/// module via s_a^2 = [alpha]_q and s_b^2 = [alpha+1]_q.
class SampledExt {
 public:
  SampledExt() : c1_(0), ca_(0), cb_(0), cab_(0) {}
  explicit SampledExt(mpq_class c1) : c1_(std::move(c1)), ca_(0), cb_(0), cab_(0) {}
  SampledExt(mpq_class c1, mpq_class ca, mpq_class cb, mpq_class cab,
             std::shared_ptr<const SamplePoint> pt);

  static SampledExt s_a(std::shared_ptr<const SamplePoint> pt);
  static SampledExt s_b(std::shared_ptr<const SamplePoint> pt);
  static SampledExt s_ab(std::shared_ptr<const SamplePoint> pt);

  const mpq_class& c1() const { return c1_; }
  const mpq_class& ca() const { return ca_; }
  const mpq_class& cb() const { return cb_; }
  const mpq_class& cab() const { return cab_; }
  bool is_zero() const { return c1_ == 0 && ca_ == 0 && cb_ == 0 && cab_ == 0; }
  bool is_rational() const { return ca_ == 0 && cb_ == 0 && cab_ == 0; }

  SampledExt operator-() const;
  SampledExt operator+(const SampledExt& o) const;
  SampledExt operator-(const SampledExt& o) const;
  SampledExt operator*(const SampledExt& o) const;
  SampledExt& operator+=(const SampledExt& o);
  SampledExt& operator-=(const SampledExt& o);
  SampledExt scaled(const mpq_class& c) const;
  /// Division by a plain rational (used for the projector normalizations).
  SampledExt divided_by(const mpq_class& c) const;

  bool operator==(const SampledExt& o) const {
    return c1_ == o.c1_ && ca_ == o.ca_ && cb_ == o.cb_ && cab_ == o.cab_;
  }
  bool operator!=(const SampledExt& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const SamplePoint* ctx() const;
  static const SamplePoint* merge_ctx(const SampledExt& a, const SampledExt& b);

  mpq_class c1_, ca_, cb_, cab_;
  std::shared_ptr<const SamplePoint> pt_;  // null for pure rationals
};

/// Evaluates a Y-extension scalar at a point: Y = (q^{1/2} - q^{-1/2})
/// [alpha]_q^{1/2} [alpha+1]_q^{1/2} = (r - r^{-1}) s_a s_b.
SampledExt eval_ext(const ExtScalar& x, const std::shared_ptr<const SamplePoint>& pt);

}  // namespace lg
