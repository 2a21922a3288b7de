#include "lg/sampled.hpp"

#include <stdexcept>

namespace lg {

SamplePoint::SamplePoint(RationalPoint pt) : pt_(std::move(pt)) {
  q_ = pt_.r * pt_.r;
  p_ = pt_.s * pt_.s;
  qa_ = q_bracket_of(p_);          // q^alpha = p
  qa1_ = q_bracket_of(q_ * p_);    // q^{alpha+1}
  q2a1_ = q_bracket_of(q_ * p_ * p_);
}

mpq_class SamplePoint::q_bracket_of(const mpq_class& q_to_x) const {
  mpq_class num = q_to_x - mpq_class(1) / q_to_x;
  mpq_class den = q_ - mpq_class(1) / q_;
  return num / den;
}

bool SamplePoint::admissible(const RationalPoint& pt) {
  if (pt.r == 0 || pt.s == 0) return false;
  const mpq_class q = pt.r * pt.r, p = pt.s * pt.s;
  if (q == 1) return false;        // r = +-1
  if (p == 1 || p == -1) return false;
  // [2alpha+1]_q = 0 iff (r s^2)^4 = 1.
  const mpq_class t = pt.r * pt.s * pt.s;
  if (t * t == 1) return false;
  if (pt.w.has_value()) {
    const mpq_class& w = *pt.w;
    if (w == 0) return false;
    // Denominators of checkR(u): 1 - q^{u+2a} and q^u - q^{2a+2}.
    const mpq_class ws2 = w * pt.s * pt.s;
    if (ws2 * ws2 == 1) return false;
    const mpq_class d = w - q * p;  // w = q^{u/2} vs q^{alpha+1} = r^2 s^2
    const mpq_class e = w + q * p;
    if (d == 0 || e == 0) return false;
  }
  return true;
}

std::shared_ptr<const SamplePoint> SamplePoint::make(const RationalPoint& pt) {
  if (!admissible(pt))
    throw std::invalid_argument("SamplePoint: inadmissible sample point");
  return std::shared_ptr<const SamplePoint>(new SamplePoint(pt));
}

std::shared_ptr<const SamplePoint> SamplePoint::random(std::mt19937_64& rng, bool with_w) {
  std::uniform_int_distribution<long> d(1, 50);
  for (int tries = 0; tries < 10000; ++tries) {
    RationalPoint pt;
    pt.r = mpq_class(d(rng), d(rng));
    pt.r.canonicalize();
    pt.s = mpq_class(d(rng), d(rng));
    pt.s.canonicalize();
    if (with_w) {
      mpq_class w(d(rng), d(rng));
      w.canonicalize();
      if (w == 1) continue;  // u = 0 degenerates the entry count
      pt.w = w;
    }
    if (admissible(pt)) return make(pt);
  }
  throw std::runtime_error("SamplePoint: failed to draw an admissible point");
}

const mpq_class& SamplePoint::w() const {
  if (!pt_.w) throw std::logic_error("SamplePoint: no spectral component w");
  return *pt_.w;
}

SampledExt::SampledExt(mpq_class c1, mpq_class ca, mpq_class cb, mpq_class cab,
                       std::shared_ptr<const SamplePoint> pt)
    : c1_(std::move(c1)), ca_(std::move(ca)), cb_(std::move(cb)), cab_(std::move(cab)),
      pt_(std::move(pt)) {
  if (!pt_ && !is_rational())
    throw std::invalid_argument("SampledExt: radical components need a sample point");
}

SampledExt SampledExt::s_a(std::shared_ptr<const SamplePoint> pt) {
  return {0, 1, 0, 0, std::move(pt)};
}
SampledExt SampledExt::s_b(std::shared_ptr<const SamplePoint> pt) {
  return {0, 0, 1, 0, std::move(pt)};
}
SampledExt SampledExt::s_ab(std::shared_ptr<const SamplePoint> pt) {
  return {0, 0, 0, 1, std::move(pt)};
}

const SamplePoint* SampledExt::ctx() const { return pt_.get(); }

const SamplePoint* SampledExt::merge_ctx(const SampledExt& a, const SampledExt& b) {
  if (a.pt_ && b.pt_ && a.pt_.get() != b.pt_.get())
    throw std::invalid_argument("SampledExt: mixing sample points");
  return a.pt_ ? a.pt_.get() : b.pt_.get();
}

SampledExt SampledExt::operator-() const {
  SampledExt r(*this);
  r.c1_ = -r.c1_;
  r.ca_ = -r.ca_;
  r.cb_ = -r.cb_;
  r.cab_ = -r.cab_;
  return r;
}

SampledExt& SampledExt::operator+=(const SampledExt& o) {
  merge_ctx(*this, o);
  if (!pt_) pt_ = o.pt_;
  c1_ += o.c1_;
  ca_ += o.ca_;
  cb_ += o.cb_;
  cab_ += o.cab_;
  return *this;
}

SampledExt& SampledExt::operator-=(const SampledExt& o) {
  merge_ctx(*this, o);
  if (!pt_) pt_ = o.pt_;
  c1_ -= o.c1_;
  ca_ -= o.ca_;
  cb_ -= o.cb_;
  cab_ -= o.cab_;
  return *this;
}

SampledExt SampledExt::operator+(const SampledExt& o) const {
  SampledExt r(*this);
  r += o;
  return r;
}

SampledExt SampledExt::operator-(const SampledExt& o) const {
  SampledExt r(*this);
  r -= o;
  return r;
}

SampledExt SampledExt::operator*(const SampledExt& o) const {
  const SamplePoint* ctx = merge_ctx(*this, o);
  SampledExt r;
  r.pt_ = pt_ ? pt_ : o.pt_;
  if (is_rational() && o.is_rational()) {
    r.c1_ = c1_ * o.c1_;
    return r;
  }
  const mpq_class& A = ctx->bracket_alpha();
  const mpq_class& B = ctx->bracket_alpha1();
  // (c1 + ca sa + cb sb + cab sa sb)(d1 + da sa + db sb + dab sa sb)
  r.c1_ = c1_ * o.c1_ + ca_ * o.ca_ * A + cb_ * o.cb_ * B + cab_ * o.cab_ * A * B;
  r.ca_ = c1_ * o.ca_ + ca_ * o.c1_ + cb_ * o.cab_ * B + cab_ * o.cb_ * B;
  r.cb_ = c1_ * o.cb_ + cb_ * o.c1_ + ca_ * o.cab_ * A + cab_ * o.ca_ * A;
  r.cab_ = c1_ * o.cab_ + cab_ * o.c1_ + ca_ * o.cb_ + cb_ * o.ca_;
  return r;
}

SampledExt SampledExt::scaled(const mpq_class& c) const {
  SampledExt r(*this);
  r.c1_ *= c;
  r.ca_ *= c;
  r.cb_ *= c;
  r.cab_ *= c;
  return r;
}

SampledExt SampledExt::divided_by(const mpq_class& c) const {
  if (c == 0) throw std::domain_error("SampledExt: division by zero");
  SampledExt r(*this);
  r.c1_ /= c;
  r.ca_ /= c;
  r.cb_ /= c;
  r.cab_ /= c;
  return r;
}

std::string SampledExt::str() const {
  return c1_.get_str() + " + " + ca_.get_str() + "*sa + " + cb_.get_str() + "*sb + " +
         cab_.get_str() + "*sab";
}

SampledExt eval_ext(const ExtScalar& x, const std::shared_ptr<const SamplePoint>& pt) {
  const RationalPoint& rp = pt->point();
  mpq_class base = x.base().is_zero() ? mpq_class(0) : x.base().eval_rational(rp);
  mpq_class yc = x.ycoef().is_zero() ? mpq_class(0) : x.ycoef().eval_rational(rp);
  // Y = [q (p - p^-1)(p q - p^-1 q^-1)]^{1/2} = q^{1/2} (q - q^-1) s_a s_b;
  // squaring recovers Y^2 = p^-2 - q^2 + p^2 q^2 - 1 via s_a^2 s_b^2 =
  // [alpha]_q [alpha+1]_q.
  const mpq_class r2 = rp.r * rp.r;
  mpq_class rfac = rp.r * (r2 - mpq_class(1) / r2);
  return {std::move(base), 0, 0, yc * rfac, pt};
}

}  // namespace lg
