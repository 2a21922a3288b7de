#include "lg/projectors.hpp"

#include "lg/grading.hpp"
#include "lg/rmatrix.hpp"

namespace lg {

KetVector16 basis_unnormalized(int k, int j, std::shared_ptr<const SamplePoint> pt) {
  if ((k != 1 && k != 3) || j < 1 || j > 4)
    throw std::invalid_argument("basis_unnormalized: invalid (k, j)");
  KetVector16 v;
  v.pt = pt;
  const mpq_class& r = pt->r();
  const mpq_class& s = pt->s();
  const mpq_class s2 = s * s, r2 = r * r;
  auto rat = [&](mpq_class c) { return SampledExt(std::move(c), 0, 0, 0, pt); };
  auto sa = [&](mpq_class c) { return SampledExt(0, std::move(c), 0, 0, pt); };
  auto sb = [&](mpq_class c) { return SampledExt(0, 0, std::move(c), 0, pt); };

  if (k == 1) {
    switch (j) {
      case 1:
        v.at(1, 1) = rat(1);
        break;
      case 2:  // q^{a/2} |1 2> + q^{-a/2} |2 1>
        v.at(1, 2) = rat(s);
        v.at(2, 1) = rat(1 / s);
        break;
      case 3:
        v.at(1, 3) = rat(s);
        v.at(3, 1) = rat(1 / s);
        break;
      case 4:  // [a+1]^{1/2}(q^a |14> + q^{-a} |41>) - [a]^{1/2}(q^{1/2} |32> - q^{-1/2} |23>)
        v.at(1, 4) = sb(s2);
        v.at(4, 1) = sb(1 / s2);
        v.at(3, 2) = sa(-r);
        v.at(2, 3) = sa(1 / r);
        break;
    }
  } else {
    switch (j) {
      case 1:  // [a]^{1/2}(q^{a+1} |41> + q^{-a-1} |14>) + [a+1]^{1/2}(q^{1/2} |32> - q^{-1/2} |23>)
        v.at(4, 1) = sa(r2 * s2);
        v.at(1, 4) = sa(1 / (r2 * s2));
        v.at(3, 2) = sb(r);
        v.at(2, 3) = sb(-1 / r);
        break;
      case 2:  // q^{(a+1)/2} |42> + q^{-(a+1)/2} |24>
        v.at(4, 2) = rat(r * s);
        v.at(2, 4) = rat(1 / (r * s));
        break;
      case 3:
        v.at(4, 3) = rat(r * s);
        v.at(3, 4) = rat(1 / (r * s));
        break;
      case 4:
        v.at(4, 4) = rat(1);
        break;
    }
  }
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      if (!v.at(a, b).is_zero()) v.parity = (parity(a) + parity(b)) % 2;
  return v;
}

SampledExt norm_squared(const KetVector16& v) {
  SampledExt acc;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const SampledExt& c = v.at(i, j);
      if (c.is_zero()) continue;
      // The dual coefficient's (-1)^{[i][j]} and the pairing's (-1)^{[j][i]}
      // cancel; the norm is the plain sum of squared coefficients.
      acc += c * c;
    }
  return acc;
}

Rank4Tensor<SampledExt> projector(int k, const std::shared_ptr<const SamplePoint>& pt) {
  if (k != 1 && k != 3) throw std::invalid_argument("projector: k must be 1 or 3");
  auto t = make_rank4<SampledExt>(4);
  for (int j = 1; j <= 4; ++j) {
    const KetVector16 v = basis_unnormalized(k, j, pt);
    const SampledExt n = norm_squared(v);
    if (!n.is_rational() || n.c1() == 0)
      throw std::domain_error("projector: vanishing or irrational norm at this point");
    for (int i = 1; i <= 4; ++i)
      for (int kk = 1; kk <= 4; ++kk) {
        const SampledExt& ket = v.at(i, kk);
        if (ket.is_zero()) continue;
        for (int jj = 1; jj <= 4; ++jj)
          for (int l = 1; l <= 4; ++l) {
            const SampledExt& bra_raw = v.at(jj, l);
            if (bra_raw.is_zero()) continue;
            // <psi| coefficient carries (-1)^{[jj][l]}; the outer product
            // (|i kk><jj l|) carries (-1)^{[kk][jj]}.
            int sign = (parity(jj) * parity(l) + parity(kk) * parity(jj)) % 2;
            SampledExt term = (ket * bra_raw).divided_by(n.c1());
            if (sign) term = -term;
            t.accumulate(TensorND<SampledExt>::pack4(i, jj, kk, l), term);
          }
      }
  }
  return t;
}

Rank4Tensor<SampledExt> identity_sampled() {
  auto t = make_rank4<SampledExt>(4);
  for (int i = 1; i <= 4; ++i)
    for (int k = 1; k <= 4; ++k) t.set4(i, i, k, k, SampledExt(mpq_class(1)));
  return t;
}

namespace {

Rank4Tensor<SampledExt> projector_sum(const std::shared_ptr<const SamplePoint>& pt,
                                      const mpq_class& c1, const mpq_class& c2,
                                      const mpq_class& c3) {
  const auto p1 = projector(1, pt);
  const auto p3 = projector(3, pt);
  Rank4Tensor<SampledExt> p2 = identity_sampled() - p1 - p3;
  return p1.scaled(SampledExt(c1)) + p2.scaled(SampledExt(c2)) + p3.scaled(SampledExt(c3));
}

}  // namespace

Rank4Tensor<SampledExt> sigma_constructed(const std::shared_ptr<const SamplePoint>& pt) {
  const mpq_class& s = pt->s();
  const mpq_class& r = pt->r();
  const mpq_class s4 = s * s * s * s, r4 = r * r * r * r;
  return projector_sum(pt, mpq_class(1) / s4, mpq_class(-1), r4 * s4);
}

Rank4Tensor<SampledExt> trig_R(const std::shared_ptr<const SamplePoint>& pt) {
  const mpq_class& w = pt->w();
  const mpq_class& s = pt->s();
  const mpq_class& r = pt->r();
  const mpq_class qu = w * w;                   // q^u
  const mpq_class q2a = s * s * s * s;          // q^{2 alpha}
  const mpq_class q2a2 = r * r * r * r * q2a;   // q^{2 alpha + 2}
  const mpq_class c1 = -(qu - q2a) / (1 - qu * q2a);
  const mpq_class c3 = -(1 - qu * q2a2) / (qu - q2a2);
  return projector_sum(pt, c1, mpq_class(-1), c3);
}

}  // namespace lg
