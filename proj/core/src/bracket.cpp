#include "lg/bracket.hpp"

#include <map>
#include <mutex>

namespace lg {

namespace {

// c i^ipow A^e  (Gaussian-integer coefficients, exponent grid 1 in A).
LaurentPoly amono(long re, long im, int e) {
  return LaurentPoly::term(Coeff::gaussian(re, im), e, 0, 1);
}

Rank2Tensor<LaurentPoly> bracket_cap() {
  Rank2Tensor<LaurentPoly> m(2);
  m.at(1, 1) = LaurentPoly();
  m.at(2, 2) = LaurentPoly();
  m.at(1, 2) = amono(0, 1, 1);    // i A
  m.at(2, 1) = amono(0, -1, -1);  // -i A^{-1}
  return m;
}

Rank4Tensor<LaurentPoly> bracket_r() {
  const Rank2Tensor<LaurentPoly> cap = bracket_cap();
  auto t = make_rank4<LaurentPoly>(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
          LaurentPoly v = amono(1, 0, -1) * cap.at(i, k) * cap.at(j, l);
          if (i == j && k == l) v += amono(1, 0, 1);
          t.set4(i, j, k, l, std::move(v));
        }
  return t;
}

// Inverse of a small matrix over the Gaussian Laurent ring by adjugate and
// exact division by the determinant.
LaurentPoly det_rec(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  LaurentPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    LaurentPoly term = m[0][c] * det_rec(sub);
    if (c % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

std::vector<std::vector<LaurentPoly>> invert_matrix(
    const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  const LaurentPoly det = det_rec(m);
  if (det.is_zero()) throw std::domain_error("bracket: singular crossing matrix");
  std::vector<std::vector<LaurentPoly>> inv(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<LaurentPoly>> sub;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<LaurentPoly> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      LaurentPoly cof = det_rec(sub);
      if ((i + j) % 2) cof = -cof;
      inv[i][j] = cof.div_exact(det);
    }
  return inv;
}

Rank4Tensor<LaurentPoly> bracket_s() {
  const Rank4Tensor<LaurentPoly> r = bracket_r();
  // Flatten to 4x4 with rows 2(i-1)+k and columns 2(j-1)+l, invert, unflatten.
  std::vector<std::vector<LaurentPoly>> m(4, std::vector<LaurentPoly>(4));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          m[static_cast<std::size_t>(2 * (i - 1) + k - 1)]
           [static_cast<std::size_t>(2 * (j - 1) + l - 1)] = r.at4(i, j, k, l);
  const auto inv = invert_matrix(m);
  auto s = make_rank4<LaurentPoly>(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          s.set4(i, j, k, l,
                 inv[static_cast<std::size_t>(2 * (i - 1) + k - 1)]
                    [static_cast<std::size_t>(2 * (j - 1) + l - 1)]);
  return s;
}

}  // namespace

const CrossingKit<LaurentPoly>& bracket_kit() {
  static const CrossingKit<LaurentPoly> kit = [] {
    const Rank2Tensor<LaurentPoly> cap = bracket_cap();
    CapSet<LaurentPoly> caps{cap, cap, cap, cap};
    return CrossingKit<LaurentPoly>(bracket_r(), bracket_s(), std::move(caps));
  }();
  return kit;
}

LaurentPoly bracket_value(const LinkEntry& link) {
  static std::mutex mu;
  static std::map<std::string, LaurentPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(link.name);
    if (it != cache.end()) return it->second;
  }
  const auto& kit = bracket_kit();
  const LaurentPoly one = LaurentPoly::constant(Coeff::gaussian(1, 0), 1);
  const Rank2Tensor<LaurentPoly> t =
      link.is_pretzel ? pretzel_tensor(kit, link.pp, link.qq, link.rr)
                      : abstract_tensor(kit, link.id, one);
  const Rank2Tensor<LaurentPoly>& om = kit.caps().om;
  const Rank2Tensor<LaurentPoly>& up = kit.caps().up;
  LaurentPoly acc;
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y)
      for (int z = 1; z <= 2; ++z) acc += t.at(y, x) * om.at(z, y) * up.at(z, x);
  std::lock_guard lock(mu);
  return cache.emplace(link.name, std::move(acc)).first->second;
}

LaurentPoly jones(const LinkEntry& link) {
  const LaurentPoly bu = bracket_value(*find_link("unknot"));
  const LaurentPoly b = bracket_value(link);
  LaurentPoly q = b.div_exact(bu);
  // (-A)^{-3w} = (-1)^w A^{-3w}.
  const long sign = (link.writhe % 2) ? -1 : 1;
  q *= LaurentPoly::term(Coeff::gaussian(sign, 0), -3 * link.writhe, 0, 1);
  // A = t^{-1/4}: an A-exponent a becomes the t-exponent -a/4, i.e. grid
  // unit -a at denom_scale 4.  Imaginary parts must have cancelled.
  LaurentPoly out(4, CoeffKind::Integer);
  for (const auto& [e, c] : q.terms()) {
    if (c.im() != 0)
      throw DiagnosticError(link.name + ": residual imaginary part in Jones polynomial");
    out.add_term({-e.eq, 0}, Coeff::integer(c.re()));
  }
  return out;
}

}  // namespace lg
