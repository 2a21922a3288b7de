#include <random>

#include "doctest.h"
#include "lg/ext.hpp"

using namespace lg;

namespace {

LaurentPoly qp(long c, int eq, int ep) { return LaurentPoly::term(Coeff::integer(c), eq, ep, 2); }

ExtScalar random_ext(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> expd(-3, 3);
  std::uniform_int_distribution<long> coeff(-5, 5);
  LaurentPoly b(2, CoeffKind::Integer), y(2, CoeffKind::Integer);
  for (int t = 0; t < 3; ++t) {
    b += qp(coeff(rng), expd(rng), expd(rng));
    y += qp(coeff(rng), expd(rng), expd(rng));
  }
  return {b, y};
}

}  // namespace

TEST_CASE("Y squares to the defining polynomial") {
  const ExtScalar y = ExtScalar::y();
  const ExtScalar y2 = y * y;
  CHECK(y2.y_free());
  CHECK(y2.base() == qp(1, 0, -2) - qp(1, 2, 0) + qp(1, 2, 2) - qp(1, 0, 0));
}

TEST_CASE("multiplicative identity") {
  const ExtScalar one(qp(1, 0, 0));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    ExtScalar x = random_ext(rng);
    CHECK(one * x == x);
    CHECK(x * one == x);
  }
}

TEST_CASE("qY times -Y applies the Y^2 rule once") {
  const ExtScalar qy(LaurentPoly(2, CoeffKind::Integer), qp(1, 1, 0));
  const ExtScalar neg_y = -ExtScalar::y();
  const ExtScalar got = qy * neg_y;
  CHECK(got.y_free());
  CHECK(got.base() == -(qp(1, 1, 0) * ExtScalar::y_squared(2)));
}

TEST_CASE("extension ring is commutative and associative") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    ExtScalar a = random_ext(rng), b = random_ext(rng), c = random_ext(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("the Y-free subring embeds homomorphically") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> expd(-3, 3);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (int i = 0; i < 40; ++i) {
    LaurentPoly u(2, CoeffKind::Integer), v(2, CoeffKind::Integer);
    for (int t = 0; t < 3; ++t) {
      u += qp(coeff(rng), expd(rng), expd(rng));
      v += qp(coeff(rng), expd(rng), expd(rng));
    }
    const ExtScalar prod = ExtScalar(u) * ExtScalar(v);
    CHECK(prod.y_free());
    CHECK(prod.base() == u * v);
    CHECK((ExtScalar(u) + ExtScalar(v)).base() == u + v);
  }
}
