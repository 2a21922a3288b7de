#include "lg/rmatrix.hpp"

namespace lg {

namespace {

constexpr int kScale = 2;  // exponent grid 1/2 for the q^{1/2}, p^{1/2} data

// Integer-coefficient monomial c q^eq p^ep in natural units.
ExtScalar mono(long c, int eq, int ep) {
  return ExtScalar(LaurentPoly::term(Coeff::integer(c), eq, ep, kScale));
}
// c q^eq p^ep * Y
ExtScalar ymono(long c, int eq, int ep) {
  return ExtScalar(LaurentPoly(kScale, CoeffKind::Integer),
                   LaurentPoly::term(Coeff::integer(c), eq, ep, kScale));
}
ExtScalar y_squared_scalar() { return ExtScalar(ExtScalar::y_squared(kScale)); }
// c q^eq p^ep - 1
ExtScalar mono_minus_one(long c, int eq, int ep) {
  LaurentPoly t = LaurentPoly::term(Coeff::integer(c), eq, ep, kScale);
  t -= LaurentPoly::constant(Coeff::integer(1), kScale);
  return ExtScalar(std::move(t));
}

Rank4Tensor<ExtScalar> build_sigma_graded() {
  auto t = make_rank4<ExtScalar>(4);
  // Diagonal-type entries, shared by the graded and ungraded forms.
  t.set4(1, 1, 1, 1, mono(1, 0, -2));             // p^-2 e^{11}_{11}
  t.set4(2, 2, 1, 1, mono_minus_one(1, 0, -2));   // (p^-2 - 1) e^{21}_{21}
  t.set4(2, 2, 2, 2, mono(-1, 0, 0));             // -e^{22}_{22}
  t.set4(3, 3, 1, 1, mono_minus_one(1, 0, -2));   // (p^-2 - 1) e^{31}_{31}
  t.set4(3, 3, 2, 2, mono_minus_one(1, 2, 0));    // (q^2 - 1) e^{32}_{32}
  t.set4(3, 3, 3, 3, mono(-1, 0, 0));             // -e^{33}_{33}
  t.set4(4, 4, 1, 1, y_squared_scalar());         // Y^2 e^{41}_{41}
  t.set4(4, 4, 2, 2, mono_minus_one(1, 2, 2));    // (p^2 q^2 - 1) e^{42}_{42}
  t.set4(4, 4, 3, 3, mono_minus_one(1, 2, 2));    // (p^2 q^2 - 1) e^{43}_{43}
  t.set4(4, 4, 4, 4, mono(1, 2, 2));              // p^2 q^2 e^{44}_{44}
  // p^-1 (e^{21}_{12} - e^{12}_{21}),  p^-1 (e^{31}_{13} - e^{13}_{31})
  t.set4(2, 1, 1, 2, mono(1, 0, -1));
  t.set4(1, 2, 2, 1, mono(-1, 0, -1));
  t.set4(3, 1, 1, 3, mono(1, 0, -1));
  t.set4(1, 3, 3, 1, mono(-1, 0, -1));
  // (e^{41}_{14} + e^{14}_{41})
  t.set4(4, 1, 1, 4, mono(1, 0, 0));
  t.set4(1, 4, 4, 1, mono(1, 0, 0));
  // -q (e^{32}_{23} + e^{23}_{32})
  t.set4(3, 2, 2, 3, mono(-1, 1, 0));
  t.set4(2, 3, 3, 2, mono(-1, 1, 0));
  // Y (e^{41}_{23} - e^{23}_{41}),  q Y (e^{32}_{41} - e^{41}_{32})
  t.set4(4, 2, 1, 3, ymono(1, 0, 0));
  t.set4(2, 4, 3, 1, ymono(-1, 0, 0));
  t.set4(3, 4, 2, 1, ymono(1, 1, 0));
  t.set4(4, 3, 1, 2, ymono(-1, 1, 0));
  // p q (e^{24}_{42} - e^{42}_{24}),  p q (e^{34}_{43} - e^{43}_{34})
  t.set4(2, 4, 4, 2, mono(1, 1, 1));
  t.set4(4, 2, 2, 4, mono(-1, 1, 1));
  t.set4(3, 4, 4, 3, mono(1, 1, 1));
  t.set4(4, 3, 3, 4, mono(-1, 1, 1));
  return t;
}

Rank4Tensor<ExtScalar> build_sigma_inverse_ungraded() {
  auto t = make_rank4<ExtScalar>(4);
  t.set4(1, 1, 1, 1, mono(1, 0, 2));              // p^2 e^{11}_{11}
  t.set4(1, 1, 2, 2, mono_minus_one(1, 0, 2));    // (p^2 - 1) e^{12}_{12}
  t.set4(1, 1, 3, 3, mono_minus_one(1, 0, 2));    // (p^2 - 1) e^{13}_{13}
  t.set4(1, 1, 4, 4, mono(1, -2, 0) * y_squared_scalar());  // q^-2 Y^2 e^{14}_{14}
  t.set4(2, 2, 2, 2, mono(-1, 0, 0));             // -e^{22}_{22}
  t.set4(2, 2, 3, 3, mono_minus_one(1, -2, 0));   // (q^-2 - 1) e^{23}_{23}
  t.set4(2, 2, 4, 4, mono_minus_one(1, -2, -2));  // (p^-2 q^-2 - 1) e^{24}_{24}
  t.set4(3, 3, 3, 3, mono(-1, 0, 0));             // -e^{33}_{33}
  t.set4(3, 3, 4, 4, mono_minus_one(1, -2, -2));  // (p^-2 q^-2 - 1) e^{34}_{34}
  t.set4(4, 4, 4, 4, mono(1, -2, -2));            // p^-2 q^-2 e^{44}_{44}
  // p (e^{21}_{12} + e^{12}_{21}),  p (e^{31}_{13} + e^{13}_{31})
  t.set4(2, 1, 1, 2, mono(1, 0, 1));
  t.set4(1, 2, 2, 1, mono(1, 0, 1));
  t.set4(3, 1, 1, 3, mono(1, 0, 1));
  t.set4(1, 3, 3, 1, mono(1, 0, 1));
  // (e^{41}_{14} + e^{14}_{41})
  t.set4(4, 1, 1, 4, mono(1, 0, 0));
  t.set4(1, 4, 4, 1, mono(1, 0, 0));
  // -q^-1 (e^{32}_{23} + e^{23}_{32})
  t.set4(3, 2, 2, 3, mono(-1, -1, 0));
  t.set4(2, 3, 3, 2, mono(-1, -1, 0));
  // -q^-1 Y (e^{14}_{32} + e^{32}_{14}),  q^-2 Y (e^{14}_{23} + e^{23}_{14})
  t.set4(1, 3, 4, 2, ymono(-1, -1, 0));
  t.set4(3, 1, 2, 4, ymono(-1, -1, 0));
  t.set4(1, 2, 4, 3, ymono(1, -2, 0));
  t.set4(2, 1, 3, 4, ymono(1, -2, 0));
  // p^-1 q^-1 (e^{42}_{24} + e^{24}_{42}),  p^-1 q^-1 (e^{43}_{34} + e^{34}_{43})
  t.set4(4, 2, 2, 4, mono(1, -1, -1));
  t.set4(2, 4, 4, 2, mono(1, -1, -1));
  t.set4(4, 3, 3, 4, mono(1, -1, -1));
  t.set4(3, 4, 4, 3, mono(1, -1, -1));
  return t;
}

CapSet<ExtScalar> build_caps() {
  const ExtScalar one = mono(1, 0, 0);
  CapSet<ExtScalar> caps{Rank2Tensor<ExtScalar>(4), identity_rank2(4, one),
                         Rank2Tensor<ExtScalar>(4), identity_rank2(4, one)};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      caps.um.at(i, j) = ExtScalar{};
      caps.om.at(i, j) = ExtScalar{};
    }
  caps.um.at(1, 1) = mono(1, 0, 2);
  caps.um.at(2, 2) = mono(-1, 0, 2);
  caps.um.at(3, 3) = mono(-1, 2, 2);
  caps.um.at(4, 4) = mono(1, 2, 2);
  caps.om.at(1, 1) = mono(1, 0, -2);
  caps.om.at(2, 2) = mono(-1, 0, -2);
  caps.om.at(3, 3) = mono(-1, -2, -2);
  caps.om.at(4, 4) = mono(1, -2, -2);
  return caps;
}

}  // namespace

const Rank4Tensor<ExtScalar>& explicit_sigma() {
  static const Rank4Tensor<ExtScalar> t = build_sigma_graded();
  return t;
}

const Rank4Tensor<ExtScalar>& explicit_sigma_ungraded() {
  static const Rank4Tensor<ExtScalar> t = ungrade(explicit_sigma());
  return t;
}

const Rank4Tensor<ExtScalar>& explicit_sigma_inverse() {
  static const Rank4Tensor<ExtScalar> t = build_sigma_inverse_ungraded();
  return t;
}

const CapSet<ExtScalar>& explicit_caps_cups() {
  static const CapSet<ExtScalar> caps = build_caps();
  return caps;
}

Rank2Tensor<ExtScalar> q_minus_2hrho_matrix() {
  Rank2Tensor<ExtScalar> m = identity_rank2(4, mono(1, 0, 0));
  m.at(1, 1) = mono(1, 0, 2);
  m.at(2, 2) = mono(1, 0, 2);
  m.at(3, 3) = mono(1, 2, 2);
  m.at(4, 4) = mono(1, 2, 2);
  return m;
}

const Rank4Tensor<ExtScalar>& graded_permutation() {
  static const Rank4Tensor<ExtScalar> t = graded_permutation_as(mono(1, 0, 0));
  return t;
}

const CrossingKit<ExtScalar>& lg_kit() {
  static const CrossingKit<ExtScalar> kit(explicit_sigma_ungraded(), explicit_sigma_inverse(),
                                          explicit_caps_cups());
  return kit;
}

}  // namespace lg
