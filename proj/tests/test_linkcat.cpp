#include "doctest.h"
#include "golden.hpp"
#include "lg/linkcat.hpp"

using namespace lg;

namespace {

LaurentPoly parse_qp(const std::string& s) { return LaurentPoly::parse(s, PolyFormat::Plain); }

}  // namespace

TEST_CASE("catalog data matches the reference writhe table and flags") {
  const auto& links = catalog();
  CHECK(links.size() == 17);
  const std::map<std::string, int> writhes = {
      {"0_1", 0},  {"2^2_1", 2}, {"3_1", 3},  {"4_1", 0},   {"5_1", 5},  {"5_2", 5},
      {"5^2_1", 2}, {"6_1", -2}, {"6_2", 2},  {"6_3", 0},   {"7_1", 7},  {"7_2", 7},
      {"8_17", 0}, {"9_42", -1}, {"10_48", 0}, {"kt", -2},  {"kti", -2},
  };
  for (const auto& e : links) {
    CHECK(writhes.at(e.name) == e.writhe);
    CHECK((e.components == 1 || e.components == 2));
  }
  CHECK(find_link("hopf")->components == 2);
  CHECK(find_link("whitehead")->components == 2);
  CHECK(find_link("8_17")->amphichiral);
  CHECK_FALSE(*find_link("8_17")->invertible);
  CHECK_FALSE(find_link("kt")->invertible.has_value());
  CHECK(find_link("TREFOIL")->name == "3_1");
  CHECK_FALSE(find_link("nosuchknot").has_value());
  CHECK(find_link("pretzel:3,5,7")->writhe == 15);
  CHECK_FALSE(find_link("pretzel:3,5,8").has_value());
}

TEST_CASE("pretzel parameter validation") {
  CHECK(pretzel(3, 5, 7).name == "pretzel(3,5,7)");
  CHECK_THROWS_AS(pretzel(3, 5, 8), std::invalid_argument);
  CHECK_THROWS_AS(pretzel(5, 3, 7), std::invalid_argument);
  CHECK_THROWS_AS(pretzel(1, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(pretzel(3, 3, 5), std::invalid_argument);
}

TEST_CASE("unknot tangle is the identity and its invariant is one") {
  const ExtScalar one(LaurentPoly::constant(Coeff::integer(1), 2));
  CHECK(abstract_tensor(*find_link("unknot")) == identity_rank2(4, one));
  const InvariantResult r = links_gould(*find_link("unknot"));
  CHECK(r.polynomial == parse_qp("1"));
}

TEST_CASE("trefoil tangle is a scalar multiple of the identity") {
  const auto t = abstract_tensor(*find_link("trefoil"));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j)
        CHECK(t.at(i, i) == t.at(1, 1));
      else
        CHECK(t.at(i, j).is_zero());
    }
  CHECK(t.at(1, 1) == ExtScalar(parse_qp(golden::lg_table().at("3_1"))));
}

TEST_CASE("golden two-variable invariants for the light links") {
  for (const std::string name : {"2^2_1", "3_1", "4_1", "5_1", "5_2", "5^2_1", "6_1"}) {
    const InvariantResult r = links_gould(*find_link(name));
    INFO(name);
    CHECK(r.polynomial == parse_qp(golden::lg_table().at(name)));
    CHECK(r.y_free_ok);
    CHECK(r.even_exponent_ok);
    CHECK(r.integer_coeff_ok);
    CHECK(r.scalar_identity_ok);
  }
}

TEST_CASE("Kinoshita-Terasaka mutants are not distinguished") {
  const auto [kt, kti] = kt_pair();
  const LaurentPoly a = links_gould(kt).polynomial;
  const LaurentPoly b = links_gould(kti).polynomial;
  CHECK(a == b);
  // Leading constant term -23.
  const auto it = a.terms().find(ExpPair{0, 0});
  REQUIRE(it != a.terms().end());
  CHECK(it->second == Coeff::integer(-23));
  CHECK(kt_components_identical());
}

TEST_CASE("chirality detection") {
  CHECK(check_chirality(*find_link("9_42")) == Chirality::Detected);
  CHECK(check_chirality(*find_link("10_48")) == Chirality::Detected);
  CHECK(check_chirality(*find_link("4_1")) == Chirality::NotDetected);
  CHECK(check_chirality(*find_link("6_3")) == Chirality::NotDetected);
  CHECK(check_chirality(*find_link("3_1")) == Chirality::Detected);
}

TEST_CASE("inversion symmetry") {
  CHECK(check_inversion_symmetry(*find_link("8_17")));
  CHECK(check_inversion_symmetry(*find_link("3_1")));
  CHECK(check_inversion_symmetry(pretzel(3, 5, 7)));
  CHECK_THROWS_AS(check_inversion_symmetry(*find_link("hopf")), std::invalid_argument);
  // Substitution oracle on the trefoil's table row: map every term through
  // (eq, ep) -> (eq - ep, -ep) by hand and compare.
  const LaurentPoly lg3 = parse_qp(golden::lg_table().at("3_1"));
  LaurentPoly image(lg3.denom_scale(), lg3.kind());
  for (const auto& [e, c] : lg3.terms()) image.add_term({e.eq - e.ep, -e.ep}, c);
  CHECK(image == lg3);
}

TEST_CASE("pretzel golden value and symmetries") {
  const LinkEntry p357 = pretzel(3, 5, 7);
  const LaurentPoly lg = links_gould(p357).polynomial;
  CHECK(lg == parse_qp(golden::lg_table().at("pretzel(3,5,7)")));
  CHECK(lg == lg.involute_alpha());
  CHECK_FALSE(lg.is_palindromic());
}

TEST_CASE("pretzel scan counts follow the closed formula") {
  const PretzelScanReport r7 = scan_pretzels(7);
  CHECK(r7.entries.size() == 1);
  CHECK(r7.expected_count == 1);
  CHECK(r7.entries[0].p == 3);
  CHECK(r7.entries[0].q == 5);
  CHECK(r7.entries[0].r == 7);
  CHECK(r7.all_inversion_symmetric);
  CHECK(r7.all_chirality_detected);

  const PretzelScanReport r9 = scan_pretzels(9);
  CHECK(r9.entries.size() == 4);
  CHECK(r9.count_matches());
  CHECK(r9.all_inversion_symmetric);
  CHECK(r9.all_chirality_detected);

  CHECK_THROWS_AS(scan_pretzels(5), std::invalid_argument);
  CHECK_THROWS_AS(scan_pretzels(8), std::invalid_argument);
}

TEST_CASE("reflection swaps the crossing tensors and conjugates q") {
  // Evaluating a recipe with sigma and sigma^{-1} exchanged computes the
  // mirror image; its invariant is the q -> q^-1, p -> p^-1 image.
  const CrossingKit<ExtScalar> mirror(explicit_sigma_inverse(), explicit_sigma_ungraded(),
                                      explicit_caps_cups());
  const ExtScalar one(LaurentPoly::constant(Coeff::integer(1), 2));
  for (const std::string name : {"3_1", "4_1", "5_2"}) {
    const LinkEntry e = *find_link(name);
    const Rank2Tensor<ExtScalar> t = abstract_tensor(mirror, e.id, one);
    const LaurentPoly mirrored = t.at(1, 1).base();
    CHECK(mirrored == links_gould(e).polynomial.involute_q());
  }
}

TEST_CASE("catalog manifest JSON carries flags and writhes") {
  const std::string j = catalog_json();
  CHECK(j.find("\"name\": \"3_1\"") != std::string::npos);
  CHECK(j.find("\"writhe\": -1") != std::string::npos);   // 9_42
  CHECK(j.find("\"invertible\": null") != std::string::npos);  // kt row
}
