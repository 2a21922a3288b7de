#include "lg/linkcat.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "json.hpp"
#include "lg/rmatrix.hpp"

namespace lg {

namespace {

LinkEntry entry(std::string name, std::string alias, LinkId id, int components, int writhe,
                bool amphichiral, std::optional<bool> invertible) {
  LinkEntry e;
  e.name = std::move(name);
  e.alias = std::move(alias);
  e.id = id;
  e.components = components;
  e.writhe = writhe;
  e.amphichiral = amphichiral;
  e.invertible = invertible;
  return e;
}

}  // namespace

const std::vector<LinkEntry>& catalog() {
  static const std::vector<LinkEntry> links = {
      entry("0_1", "unknot", LinkId::Unknot, 1, 0, true, true),
      entry("2^2_1", "hopf", LinkId::Hopf, 2, 2, false, true),
      entry("3_1", "trefoil", LinkId::Trefoil, 1, 3, false, true),
      entry("4_1", "figure-eight", LinkId::FigureEight, 1, 0, true, true),
      entry("5_1", "cinquefoil", LinkId::Cinquefoil, 1, 5, false, true),
      entry("5_2", "", LinkId::FiveTwo, 1, 5, false, true),
      entry("5^2_1", "whitehead", LinkId::Whitehead, 2, 2, false, true),
      entry("6_1", "", LinkId::SixOne, 1, -2, false, true),
      entry("6_2", "", LinkId::SixTwo, 1, 2, false, true),
      entry("6_3", "", LinkId::SixThree, 1, 0, true, true),
      entry("7_1", "septfoil", LinkId::Septfoil, 1, 7, false, true),
      entry("7_2", "", LinkId::SevenTwo, 1, 7, false, true),
      entry("8_17", "", LinkId::EightSeventeen, 1, 0, true, false),
      entry("9_42", "", LinkId::NineFortyTwo, 1, -1, false, true),
      entry("10_48", "", LinkId::TenFortyEight, 1, 0, false, true),
      entry("kt", "kinoshita-terasaka", LinkId::KT, 1, -2, false, std::nullopt),
      entry("kti", "conway", LinkId::KTI, 1, -2, false, std::nullopt),
  };
  return links;
}

LinkEntry pretzel(int p, int q, int r) {
  if (!(p % 2 && q % 2 && r % 2) || !(3 <= p && p < q && q < r))
    throw std::invalid_argument("pretzel: need odd 3 <= p < q < r");
  LinkEntry e;
  e.name = "pretzel(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
  e.is_pretzel = true;
  e.pp = p;
  e.qq = q;
  e.rr = r;
  e.components = 1;
  e.writhe = p + q + r;
  e.amphichiral = false;
  e.invertible = false;
  return e;
}

std::optional<LinkEntry> find_link(std::string_view selector) {
  std::string s(selector);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s.rfind("pretzel:", 0) == 0 || s.rfind("pretzel(", 0) == 0) {
    std::string args = s.substr(8);
    if (!args.empty() && args.back() == ')') args.pop_back();
    int v[3] = {0, 0, 0};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      std::size_t comma = args.find(',', pos);
      std::string part = args.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
      try {
        v[i] = std::stoi(part);
      } catch (...) {
        return std::nullopt;
      }
      if (comma == std::string::npos && i < 2) return std::nullopt;
      pos = comma + 1;
    }
    try {
      return pretzel(v[0], v[1], v[2]);
    } catch (...) {
      return std::nullopt;
    }
  }
  for (const auto& e : catalog())
    if (e.name == s || (!e.alias.empty() && e.alias == s)) return e;
  return std::nullopt;
}

std::pair<LinkEntry, LinkEntry> kt_pair() {
  auto kt = find_link("kt"), kti = find_link("kti");
  return {*kt, *kti};
}

Rank2Tensor<ExtScalar> abstract_tensor(const LinkEntry& link) {
  const ExtScalar one(LaurentPoly::constant(Coeff::integer(1), 2));
  if (link.is_pretzel) return pretzel_tensor(lg_kit(), link.pp, link.qq, link.rr);
  return abstract_tensor(lg_kit(), link.id, one);
}

namespace {

InvariantResult evaluate_links_gould(const LinkEntry& link) {
  const Rank2Tensor<ExtScalar> t = abstract_tensor(link);
  InvariantResult res;
  res.link = link.name;

  res.scalar_identity_ok = true;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) {
        if (t.at(i, i) != t.at(1, 1)) res.scalar_identity_ok = false;
      } else if (!t.at(i, j).is_zero()) {
        res.scalar_identity_ok = false;
      }
    }
  const ExtScalar& v = t.at(1, 1);
  res.y_free_ok = v.y_free();
  res.polynomial = v.base();
  res.even_exponent_ok = res.polynomial.has_even_exponents();
  res.integer_coeff_ok =
      res.polynomial.is_zero() || res.polynomial.kind() == CoeffKind::Integer;

  if (!res.scalar_identity_ok)
    throw DiagnosticError(link.name + ": tangle tensor is not a scalar multiple of identity");
  if (!res.y_free_ok) throw DiagnosticError(link.name + ": invariant has a residual Y part");
  if (!res.even_exponent_ok) throw DiagnosticError(link.name + ": odd exponent in invariant");
  if (!res.integer_coeff_ok)
    throw DiagnosticError(link.name + ": non-integer coefficient in invariant");
  return res;
}

}  // namespace

InvariantResult links_gould(const LinkEntry& link) {
  static std::mutex mu;
  static std::map<std::string, InvariantResult> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(link.name);
    if (it != cache.end()) return it->second;
  }
  InvariantResult res = evaluate_links_gould(link);
  std::lock_guard lock(mu);
  return cache.emplace(link.name, std::move(res)).first->second;
}

Chirality check_chirality(const LinkEntry& link) {
  return links_gould(link).polynomial.is_palindromic() ? Chirality::NotDetected
                                                       : Chirality::Detected;
}

bool check_inversion_symmetry(const LinkEntry& link) {
  if (link.components != 1)
    throw std::invalid_argument("check_inversion_symmetry: single-component knots only");
  const LaurentPoly& lg = links_gould(link).polynomial;
  return lg == lg.involute_alpha();
}

bool kt_components_identical() {
  // Rebuild the two mutated blocks exactly as in the KT recipes and compare.
  const auto& kit = lg_kit();
  using S = ExtScalar;
  using F = EinsumFactor<S>;
  const TensorND<S> op = as_tensor(kit.caps().op), um = as_tensor(kit.caps().um);
  const auto& sd = kit.xd(Crossing::Neg);
  const auto& s2 = kit.power(Crossing::Neg, 2);
  const auto& rurd = kit.xuxd(Crossing::Pos);
  const TensorND<S> tmp_a = einsum<S>(
      {F{&s2, "dwfg"}, F{&sd, "hiec"}, F{&op, "fh"}, F{&um, "gi"}}, "dwec");
  const TensorND<S> kta = einsum<S>({F{&rurd, "adbe"}, F{&tmp_a, "dwec"}}, "awbc");
  const TensorND<S> tmp_b = einsum<S>(
      {F{&s2, "adfg"}, F{&sd, "hibe"}, F{&op, "fh"}, F{&um, "gi"}}, "adbe");
  const TensorND<S> ktai = einsum<S>({F{&tmp_b, "adbe"}, F{&rurd, "dwec"}}, "awbc");
  return kta == ktai;
}

PretzelScanReport scan_pretzels(int max_n) {
  if (max_n < 7 || max_n % 2 == 0)
    throw std::invalid_argument("scan_pretzels: maxN must be odd and >= 7");
  PretzelScanReport rep;
  rep.max_n = max_n;
  const long n = max_n;
  rep.expected_count = (n - 1) * (n - 3) * (n - 5) / 48;
  for (int p = 3; p <= max_n; p += 2)
    for (int q = p + 2; q <= max_n; q += 2)
      for (int r = q + 2; r <= max_n; r += 2) {
        const LinkEntry e = pretzel(p, q, r);
        PretzelScanEntry se{p, q, r, check_inversion_symmetry(e),
                            check_chirality(e) == Chirality::Detected};
        rep.all_inversion_symmetric &= se.inversion_symmetric;
        rep.all_chirality_detected &= se.chirality_detected;
        rep.entries.push_back(se);
      }
  return rep;
}

std::string catalog_json() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : catalog()) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    if (!e.alias.empty()) j["alias"] = e.alias;
    j["components"] = e.components;
    j["writhe"] = e.writhe;
    j["amphichiral"] = e.amphichiral;
    if (e.invertible.has_value())
      j["invertible"] = *e.invertible;
    else
      j["invertible"] = nullptr;
    arr.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["links"] = std::move(arr);
  return root.dump(2);
}

}  // namespace lg
