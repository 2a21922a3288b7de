#include "lg/verify.hpp"

#include <random>

#include "json.hpp"

namespace lg {

namespace {

constexpr int kScale = 2;

ExtScalar emono(long c, int eq, int ep) {
  return ExtScalar(LaurentPoly::term(Coeff::integer(c), eq, ep, kScale));
}

}  // namespace

std::string report_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["points"] = r.points;
    j["pass"] = r.pass;
    j["residual_nonzero_entries"] = r.residual_nonzero_entries;
    arr.push_back(std::move(j));
  }
  return arr.dump();
}

long yang_baxter_residual_count(const Rank4Tensor<ExtScalar>& x) {
  return static_cast<long>(braid_ybe_residual(x, x, x).nonzero_count());
}

bool verify_yang_baxter(const Rank4Tensor<ExtScalar>& x) {
  return yang_baxter_residual_count(x) == 0;
}

bool verify_skein(const Rank4Tensor<ExtScalar>& s) {
  const Rank4Tensor<ExtScalar> s2 = compose(s, s);
  const Rank4Tensor<ExtScalar> s3 = compose(s2, s);
  const Rank4Tensor<ExtScalar> id = identity_rank4(4, emono(1, 0, 0));
  // q^{-2a-1} = p^-2 q^-1 and q^{2a+1} = p^2 q.
  const ExtScalar c3 = emono(1, -1, 0);
  const ExtScalar c2 = emono(1, -1, 0) - emono(1, -1, -2) - emono(1, 1, 2);
  const ExtScalar c1 = emono(1, 1, 0) - emono(1, -1, -2) - emono(1, 1, 2);
  const ExtScalar c0 = emono(1, 1, 0);
  const Rank4Tensor<ExtScalar> residual =
      s3.scaled(c3) + s2.scaled(c2) + s.scaled(c1) + id.scaled(c0);
  return residual.nonzero_count() == 0;
}

bool verify_skein_factored(const Rank4Tensor<ExtScalar>& s) {
  const Rank4Tensor<ExtScalar> id = identity_rank4(4, emono(1, 0, 0));
  // Eigenvalues q^{-2a} = p^-2, -1, q^{2a+2} = p^2 q^2.
  const Rank4Tensor<ExtScalar> f1 = s - id.scaled(emono(1, 0, -2));
  const Rank4Tensor<ExtScalar> f2 = s + id;
  const Rank4Tensor<ExtScalar> f3 = s - id.scaled(emono(1, 2, 2));
  return compose(compose(f1, f2), f3).nonzero_count() == 0;
}

bool verify_cap_loop() {
  const auto& caps = explicit_caps_cups();
  const auto& sig = explicit_sigma_ungraded();
  const auto& sig_inv = explicit_sigma_inverse();
  const ExtScalar one = emono(1, 0, 0);

  // Right-hand kink: sum_{ab} X[y,x,a,b] (Mho^-)^{b a} = delta^y_x (with
  // Omega^+ = I folded in), for both crossing signs; and the mirrored
  // left-hand kink, which closes with the sign-swapped cap Omega^-:
  // sum_{ab} X[a,b,y,x] (Omega^-)_{a b} = delta^y_x.
  for (int y = 1; y <= 4; ++y)
    for (int x = 1; x <= 4; ++x) {
      ExtScalar right_pos, right_neg, left_pos, left_neg;
      for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
          if (const ExtScalar* v = sig.find4(y, x, a, b)) right_pos += *v * caps.um.at(b, a);
          if (const ExtScalar* v = sig_inv.find4(y, x, a, b)) right_neg += *v * caps.um.at(b, a);
          if (const ExtScalar* v = sig.find4(a, b, y, x)) left_pos += *v * caps.om.at(a, b);
          if (const ExtScalar* v = sig_inv.find4(a, b, y, x)) left_neg += *v * caps.om.at(a, b);
        }
      const ExtScalar expect = (y == x) ? one : ExtScalar{};
      if (right_pos != expect || right_neg != expect) return false;
      if (left_pos != expect || left_neg != expect) return false;
    }

  // Omega^± Mho^± = delta (first Reidemeister move).
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      ExtScalar am, ap;
      for (int k = 1; k <= 4; ++k) {
        am += caps.om.at(i, k) * caps.um.at(k, j);
        ap += caps.op.at(i, k) * caps.up.at(k, j);
      }
      const ExtScalar expect = (i == j) ? one : ExtScalar{};
      if (am != expect || ap != expect) return false;
    }

  // Mho^- against the parity-signed representation matrix of q^{-2 h_rho}.
  const Rank2Tensor<ExtScalar> hrho = q_minus_2hrho_matrix();
  for (int b = 1; b <= 4; ++b)
    for (int a = 1; a <= 4; ++a) {
      ExtScalar expect = hrho.at(b, a);
      if (parity(b)) expect = -expect;
      if (caps.um.at(b, a) != expect) return false;
    }
  return true;
}

namespace {

// Embeddings of a rank-4 operator into slots (1,2) and (2,3) of the triple
// space; rank-6 axes are (upper1, lower1, upper2, lower2, upper3, lower3).
TensorND<SampledExt> embed12(const Rank4Tensor<SampledExt>& t) {
  TensorND<SampledExt> r(4, 6);
  for (const auto& [key, v] : t.entries())
    for (int m = 1; m <= 4; ++m) {
      TensorKey k = 0;
      k = key_set(k, 0, key_get(key, 0));
      k = key_set(k, 1, key_get(key, 1));
      k = key_set(k, 2, key_get(key, 2));
      k = key_set(k, 3, key_get(key, 3));
      k = key_set(k, 4, m);
      k = key_set(k, 5, m);
      r.set(k, v);
    }
  return r;
}

TensorND<SampledExt> embed23(const Rank4Tensor<SampledExt>& t) {
  TensorND<SampledExt> r(4, 6);
  for (const auto& [key, v] : t.entries())
    for (int m = 1; m <= 4; ++m) {
      TensorKey k = 0;
      k = key_set(k, 0, m);
      k = key_set(k, 1, m);
      k = key_set(k, 2, key_get(key, 0));
      k = key_set(k, 3, key_get(key, 1));
      k = key_set(k, 4, key_get(key, 2));
      k = key_set(k, 5, key_get(key, 3));
      r.set(k, v);
    }
  return r;
}

// Graded composition on the triple space:
//   (e^a_i x e^b_j x e^c_k)(e^i_d x e^j_e x e^k_f)
//     = (-1)^{([b]+[j])([i]+[d]) + ([c]+[k])([i]+[d]+[j]+[e])} e^a_d x e^b_e x e^c_f.
TensorND<SampledExt> compose_graded6(const TensorND<SampledExt>& m, const TensorND<SampledExt>& n) {
  TensorND<SampledExt> r(4, 6);
  std::map<std::array<int, 3>, std::vector<std::pair<TensorKey, const SampledExt*>>> by_upper;
  for (const auto& [key, v] : n.entries())
    by_upper[{key_get(key, 0), key_get(key, 2), key_get(key, 4)}].emplace_back(key, &v);
  for (const auto& [km, vm] : m.entries()) {
    const int i = key_get(km, 1), j = key_get(km, 3), k = key_get(km, 5);
    const int b = key_get(km, 2), c = key_get(km, 4);
    auto it = by_upper.find({i, j, k});
    if (it == by_upper.end()) continue;
    for (const auto& [kn, vn] : it->second) {
      const int d = key_get(kn, 1), e = key_get(kn, 3), f = key_get(kn, 5);
      const int sign = ((parity(b) + parity(j)) * (parity(i) + parity(d)) +
                        (parity(c) + parity(k)) *
                            (parity(i) + parity(d) + parity(j) + parity(e))) %
                       2;
      SampledExt prod = vm * *vn;
      if (sign) prod = -prod;
      TensorKey kk = 0;
      kk = key_set(kk, 0, key_get(km, 0));
      kk = key_set(kk, 1, d);
      kk = key_set(kk, 2, b);
      kk = key_set(kk, 3, e);
      kk = key_set(kk, 4, c);
      kk = key_set(kk, 5, f);
      r.accumulate(kk, prod);
    }
  }
  return r;
}

}  // namespace

TensorND<SampledExt> graded_braid_residual(const Rank4Tensor<SampledExt>& sigma) {
  const TensorND<SampledExt> a = embed12(sigma);
  const TensorND<SampledExt> b = embed23(sigma);
  const TensorND<SampledExt> lhs = compose_graded6(compose_graded6(a, b), a);
  const TensorND<SampledExt> rhs = compose_graded6(compose_graded6(b, a), b);
  return lhs - rhs;
}

CheckReport check_ybe() {
  CheckReport r{"ybe", 0, false, 0};
  r.residual_nonzero_entries = yang_baxter_residual_count(explicit_sigma_ungraded()) +
                               yang_baxter_residual_count(explicit_sigma_inverse());
  r.pass = r.residual_nonzero_entries == 0;
  return r;
}

CheckReport check_skein() {
  CheckReport r{"skein", 0, false, 0};
  r.pass = verify_skein(explicit_sigma_ungraded()) &&
           verify_skein_factored(explicit_sigma_ungraded());
  if (!r.pass) r.residual_nonzero_entries = 1;
  return r;
}

CheckReport check_inverse() {
  CheckReport r{"inverse", 0, false, 0};
  const auto& s = explicit_sigma_ungraded();
  const auto& si = explicit_sigma_inverse();
  const auto id = identity_rank4(4, emono(1, 0, 0));
  const auto left = compose(s, si) - id;
  const auto right = compose(si, s) - id;
  r.residual_nonzero_entries =
      static_cast<long>(left.nonzero_count() + right.nonzero_count());
  r.pass = r.residual_nonzero_entries == 0;
  return r;
}

CheckReport check_caps() {
  CheckReport r{"caps", 0, false, 0};
  r.pass = verify_cap_loop();
  return r;
}

CheckReport check_projectors(int points, std::uint64_t seed) {
  CheckReport rep{"projectors", points, true, 0};
  std::mt19937_64 rng(seed);
  for (int n = 0; n < points; ++n) {
    auto pt = SamplePoint::random(rng);
    const auto p1 = projector(1, pt);
    const auto p3 = projector(3, pt);
    const auto p2 = identity_sampled() - p1 - p3;
    long bad = 0;
    bad += static_cast<long>((compose_graded(p1, p1) - p1).nonzero_count());
    bad += static_cast<long>((compose_graded(p3, p3) - p3).nonzero_count());
    bad += static_cast<long>((compose_graded(p2, p2) - p2).nonzero_count());
    bad += static_cast<long>(compose_graded(p1, p3).nonzero_count());
    bad += static_cast<long>(compose_graded(p3, p1).nonzero_count());
    bad += static_cast<long>(compose_graded(p1, p2).nonzero_count());
    bad += static_cast<long>(compose_graded(p2, p3).nonzero_count());
    rep.residual_nonzero_entries += bad;
  }
  rep.pass = rep.residual_nonzero_entries == 0;
  return rep;
}

CheckReport check_sigma_match(int points, std::uint64_t seed) {
  CheckReport rep{"sigma-match", points, true, 0};
  std::mt19937_64 rng(seed);
  for (int n = 0; n < points; ++n) {
    auto pt = SamplePoint::random(rng);
    const auto constructed = sigma_constructed(pt);
    Rank4Tensor<SampledExt> expected = make_rank4<SampledExt>(4);
    for (const auto& [key, v] : explicit_sigma().entries()) expected.set(key, eval_ext(v, pt));
    rep.residual_nonzero_entries += static_cast<long>((constructed - expected).nonzero_count());
  }
  rep.pass = rep.residual_nonzero_entries == 0;
  return rep;
}

CheckReport check_limit() {
  CheckReport rep{"limit", 0, true, 0};
  // At r = s = 1 (q = p = 1) we have Y = 0 and sigma collapses to the graded
  // permutation P.
  const RationalPoint one{mpq_class(1), mpq_class(1), std::nullopt};
  const auto& sigma = explicit_sigma();
  const auto& perm = graded_permutation();
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          mpq_class sv(0), pv(0);
          if (const ExtScalar* v = sigma.find4(i, j, k, l)) sv = v->base().eval_rational(one);
          if (const ExtScalar* v = perm.find4(i, j, k, l)) pv = v->base().eval_rational(one);
          if (sv != pv) ++rep.residual_nonzero_entries;
        }
  rep.pass = rep.residual_nonzero_entries == 0;
  return rep;
}

namespace {

bool w_admissible(const SamplePoint& pt, const mpq_class& w) {
  if (w == 0 || w == 1) return false;
  const mpq_class ws2 = w * pt.s() * pt.s();
  if (ws2 * ws2 == 1) return false;
  const mpq_class r2s2 = pt.r() * pt.r() * pt.s() * pt.s();
  return w != r2s2 && w != -r2s2;
}

}  // namespace

CheckReport check_trig(int points, std::uint64_t seed) {
  CheckReport rep{"trig", points, true, 0};
  std::mt19937_64 rng(seed);
  for (int n = 0; n < points; ++n) {
    auto pt = SamplePoint::random(rng, /*with_w=*/true);
    const auto ru = trig_R(pt);
    if (ru.nonzero_count() != 36) {
      ++rep.residual_nonzero_entries;
      continue;
    }
    const mpq_class& w = pt->w();
    const mpq_class p = pt->p(), q = pt->q();
    const mpq_class a_minus = pt->q_bracket_of(p / w);        // [alpha - u/2]
    const mpq_class a_plus = pt->q_bracket_of(p * w);         // [alpha + u/2]
    const mpq_class a1_plus = pt->q_bracket_of(q * p * w);    // [alpha + 1 + u/2]
    const mpq_class a1_minus = pt->q_bracket_of(q * p / w);   // [alpha + 1 - u/2]
    const mpq_class u_half = pt->q_bracket_of(w);             // [u/2]
    const mpq_class one_mu = pt->q_bracket_of(q / w);         // [1 - u/2]
    const mpq_class qa = pt->bracket_alpha(), qa1 = pt->bracket_alpha1();

    struct Spot {
      int i, j, k, l;
      mpq_class want;
    };
    const Spot spots[8] = {
        {2, 2, 2, 2, mpq_class(-1)},                                  // e^{22}_{22}
        {3, 3, 3, 3, mpq_class(-1)},                                  // e^{33}_{33}
        {1, 1, 1, 1, -a_minus / a_plus},                              // e^{11}_{11}
        {4, 4, 4, 4, -a1_plus / a1_minus},                            // e^{44}_{44}
        {2, 2, 1, 1, -qa * w / a_plus},                               // e^{21}_{21}
        {1, 1, 2, 2, -qa / w / a_plus},                               // e^{12}_{12}
        {4, 4, 1, 1, -qa * qa1 * w * w / (a_plus * a1_minus)},        // e^{41}_{41}
        {1, 4, 4, 1, u_half * one_mu / (a_plus * a1_minus)},          // e^{14}_{41}
    };
    for (const Spot& s : spots) {
      const SampledExt got = ru.at4(s.i, s.j, s.k, s.l);
      if (got != SampledExt(s.want, 0, 0, 0, pt)) ++rep.residual_nonzero_entries;
    }
  }
  rep.pass = rep.residual_nonzero_entries == 0;
  return rep;
}

CheckReport check_spectral(int points, std::uint64_t seed) {
  CheckReport rep{"spectral", points, true, 0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(1, 50);
  for (int n = 0; n < points; ++n) {
    std::shared_ptr<const SamplePoint> pt;
    mpq_class wu, wv;
    for (;;) {
      pt = SamplePoint::random(rng);
      wu = mpq_class(d(rng), d(rng));
      wu.canonicalize();
      wv = mpq_class(d(rng), d(rng));
      wv.canonicalize();
      if (w_admissible(*pt, wu) && w_admissible(*pt, wv) && w_admissible(*pt, wu * wv)) break;
    }
    // The three spectral tensors share the radical context of the base
    // point (s_a, s_b depend on r and s only), so their entries are
    // re-pointed onto one SamplePoint before mixing in the residual.
    auto at_w = [&](const mpq_class& w) {
      RationalPoint rp = pt->point();
      rp.w = w;
      const auto t = ungrade(trig_R(SamplePoint::make(rp)));
      TensorND<SampledExt> r(t.dim(), t.rank());
      for (const auto& [k, v] : t.entries())
        r.set(k, SampledExt(v.c1(), v.ca(), v.cb(), v.cab(), pt));
      return r;
    };
    const auto ru = at_w(wu), rv = at_w(wv), ruv = at_w(wu * wv);
    const auto residual = braid_ybe_residual(ru, ruv, rv);
    rep.residual_nonzero_entries += static_cast<long>(residual.nonzero_count());
  }
  rep.pass = rep.residual_nonzero_entries == 0;
  return rep;
}

std::vector<CheckReport> run_suites(const std::vector<std::string>& names, int points,
                                    std::uint64_t seed) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") {
      expanded.insert(expanded.end(),
                      {"ybe", "skein", "inverse", "caps", "projectors", "sigma-match", "limit",
                       "trig", "spectral"});
    } else {
      expanded.push_back(n);
    }
  }
  std::vector<CheckReport> out;
  for (const auto& n : expanded) {
    if (n == "ybe") out.push_back(check_ybe());
    else if (n == "skein") out.push_back(check_skein());
    else if (n == "inverse") out.push_back(check_inverse());
    else if (n == "caps") out.push_back(check_caps());
    else if (n == "projectors") out.push_back(check_projectors(points, seed));
    else if (n == "sigma-match") out.push_back(check_sigma_match(points, seed));
    else if (n == "limit") out.push_back(check_limit());
    else if (n == "trig") out.push_back(check_trig(points, seed));
    else if (n == "spectral") out.push_back(check_spectral(points, seed));
    else throw std::invalid_argument("unknown verification suite '" + n + "'");
  }
  return out;
}

}  // namespace lg
