#pragma once

#include "lg/combinators.hpp"
#include "lg/rmatrix.hpp"

namespace lg {

/// Catalog links, in the reference evaluation order.
enum class LinkId {
  Unknot,
  Hopf,
  Trefoil,
  FigureEight,
  Cinquefoil,
  FiveTwo,
  Whitehead,
  SixOne,
  SixTwo,
  SixThree,
  Septfoil,
  SevenTwo,
  EightSeventeen,
  NineFortyTwo,
  TenFortyEight,
  KT,
  KTI,
};

/// Builds the closed (1,1)-tangle tensor (T_K)^y_x for a catalog link, staged
/// through named intermediates (W, SOA, STA/STB/ST, EA-ED, N, TA/TB,
/// KTA/KTB/KTC) so that a failure localizes to one diagram block.  Works for
/// any crossing kit (the dimension-4 invariant or the dimension-2 bracket
/// model).
template <class S>
Rank2Tensor<S> abstract_tensor(const CrossingKit<S>& kit, LinkId id, const S& one) {
  using F = EinsumFactor<S>;
  const CapSet<S>& caps = kit.caps();
  const TensorND<S> om = as_tensor(caps.om), op = as_tensor(caps.op);
  const TensorND<S> um = as_tensor(caps.um), up = as_tensor(caps.up);
  const Crossing R = Crossing::Pos, N = Crossing::Neg;
  auto close = [&](const TensorND<S>& t) { return as_rank2(t); };

  switch (id) {
    case LinkId::Unknot:
      return identity_rank2(kit.dim(), one);

    case LinkId::Hopf: {
      const auto& r2 = kit.power(R, 2);
      return close(einsum<S>({F{&r2, "yxab"}, F{&op, "ac"}, F{&um, "bc"}}, "yx"));
    }
    case LinkId::Trefoil: {
      const auto& r3 = kit.power(R, 3);
      return close(einsum<S>({F{&r3, "yxab"}, F{&op, "ac"}, F{&um, "bc"}}, "yx"));
    }
    case LinkId::Cinquefoil: {
      const auto& r5 = kit.power(R, 5);
      return close(einsum<S>({F{&r5, "yxab"}, F{&op, "ac"}, F{&um, "bc"}}, "yx"));
    }
    case LinkId::Septfoil: {
      const auto& r7 = kit.power(R, 7);
      return close(einsum<S>({F{&r7, "yxab"}, F{&op, "ac"}, F{&um, "bc"}}, "yx"));
    }

    case LinkId::FigureEight: {
      const auto& rlrr = kit.xlxr(R);
      const auto& susd = kit.xuxd(N);
      return close(einsum<S>(
          {F{&rlrr, "yabc"}, F{&susd, "axcd"}, F{&om, "be"}, F{&up, "de"}}, "yx"));
    }

    case LinkId::FiveTwo: {
      const auto& z3 = kit.xudu(R, 3);
      const auto& r2 = kit.power(R, 2);
      return close(einsum<S>(
          {F{&z3, "bcdx"}, F{&r2, "abyd"}, F{&om, "ea"}, F{&up, "ec"}}, "yx"));
    }
    case LinkId::SevenTwo: {
      const auto& z5 = kit.xudu(R, 5);
      const auto& r2 = kit.power(R, 2);
      return close(einsum<S>(
          {F{&z5, "bcdx"}, F{&r2, "abyd"}, F{&om, "ea"}, F{&up, "ec"}}, "yx"));
    }

    case LinkId::Whitehead: {
      const auto& rrrl = kit.xrxl(R);
      const auto& rd2 = kit.power_d(R, 2);
      const auto& s2 = kit.power(N, 2);
      const TensorND<S> w = einsum<S>(
          {F{&s2, "cjef"}, F{&rd2, "ghid"}, F{&op, "eg"}, F{&um, "fh"}}, "cjid");
      return close(einsum<S>(
          {F{&rrrl, "aiyb"}, F{&w, "cxid"}, F{&op, "ca"}, F{&up, "db"}}, "yx"));
    }

    case LinkId::SixOne: {
      const auto& z3 = kit.xudu(N, 3);
      const auto& sd = kit.xd(N);
      const auto& rrrl = kit.xrxl(R);
      const TensorND<S> soa = einsum<S>(
          {F{&sd, "bcfh"}, F{&z3, "gidx"}, F{&om, "fg"}, F{&up, "hi"}}, "bcdx");
      return close(einsum<S>(
          {F{&soa, "bcdx"}, F{&rrrl, "abyd"}, F{&op, "ea"}, F{&um, "ec"}}, "yx"));
    }

    case LinkId::SixTwo: {
      const auto& srsl = kit.xrxl(N);
      const auto& r3 = kit.power(R, 3);
      const auto& rd = kit.xd(R);
      const TensorND<S> sta = einsum<S>(
          {F{&r3, "efyg"}, F{&rd, "abcd"}, F{&om, "ce"}, F{&up, "df"}}, "abgy");
      return close(einsum<S>(
          {F{&sta, "abgy"}, F{&srsl, "bhgx"}, F{&op, "ia"}, F{&um, "ih"}}, "yx"));
    }

    case LinkId::SixThree: {
      const auto& r1 = kit.x(R);
      const auto& s1 = kit.x(N);
      const auto& r2 = kit.power(R, 2);
      const auto& s2 = kit.power(N, 2);
      const TensorND<S> sta = einsum<S>({F{&s2, "abef"}, F{&r1, "deyi"}}, "abdfiy");
      const TensorND<S> stb = einsum<S>({F{&s1, "bcgh"}, F{&r2, "fgix"}}, "bcfhix");
      const TensorND<S> st = einsum<S>({F{&sta, "abdfiy"}, F{&stb, "bcfhix"}}, "acdhxy");
      return close(einsum<S>(
          {F{&st, "acdhxy"}, F{&om, "jd"}, F{&up, "jh"}, F{&om, "ka"}, F{&up, "kc"}}, "yx"));
    }

    case LinkId::EightSeventeen: {
      const auto& r1 = kit.x(R);
      const auto& s1 = kit.x(N);
      const auto& r2 = kit.power(R, 2);
      const auto& s2 = kit.power(N, 2);
      const TensorND<S> ea = einsum<S>({F{&r2, "ybgd"}, F{&s2, "cgef"}}, "ybcdef");
      const TensorND<S> ec = einsum<S>({F{&s1, "dkfl"}, F{&r1, "bmkn"}}, "bmdnfl");
      const TensorND<S> ed = einsum<S>({F{&s1, "nolj"}, F{&r1, "mxoi"}}, "mxnilj");
      const TensorND<S> eb = einsum<S>({F{&ec, "bmdnfl"}, F{&ed, "mxnilj"}}, "bxdifj");
      const TensorND<S> es = einsum<S>({F{&ea, "ybcdef"}, F{&eb, "bxdifj"}}, "yxciej");
      return close(einsum<S>(
          {F{&es, "yxciej"}, F{&op, "cr"}, F{&um, "ir"}, F{&op, "es"}, F{&um, "js"}}, "yx"));
    }

    case LinkId::NineFortyTwo: {
      const auto& s3 = kit.power(N, 3);
      const auto& rd2 = kit.power_d(R, 2);
      const auto& rurd = kit.xuxd(R);
      const auto& sdsu = kit.xdxu(N);
      const TensorND<S> n = einsum<S>(
          {F{&rd2, "abcd"}, F{&s3, "efgh"}, F{&om, "ce"}, F{&up, "df"}}, "abgh");
      return close(einsum<S>({F{&n, "abyh"}, F{&sdsu, "bihj"}, F{&rurd, "kxim"},
                              F{&up, "mj"}, F{&op, "ka"}},
                             "yx"));
    }

    case LinkId::TenFortyEight: {
      const auto& r1 = kit.x(R);
      const auto& s2 = kit.power(N, 2);
      const auto& s3 = kit.power(N, 3);
      const auto& r4 = kit.power(R, 4);
      const TensorND<S> ta = einsum<S>({F{&s2, "abyf"}, F{&r4, "fdgh"}}, "abdghy");
      const TensorND<S> tb = einsum<S>({F{&s3, "bcde"}, F{&r1, "exhi"}}, "bcdhix");
      const TensorND<S> tt = einsum<S>({F{&ta, "abdghy"}, F{&tb, "bcdhix"}}, "acgixy");
      return close(einsum<S>(
          {F{&tt, "acgixy"}, F{&om, "ja"}, F{&up, "jc"}, F{&op, "gk"}, F{&um, "ik"}}, "yx"));
    }

    case LinkId::KT:
    case LinkId::KTI: {
      const auto& sd = kit.xd(N);
      const auto& s2 = kit.power(N, 2);
      const auto& rd2 = kit.power_d(R, 2);
      const auto& rurd = kit.xuxd(R);
      const auto& susd = kit.xuxd(N);
      const auto& slsr = kit.xlxr(N);
      const auto& r1 = kit.x(R);

      // KTA and KTA' differ only by the reflection of the three-crossing
      // block about a horizontal line; the mutation leaves KTC untouched.
      TensorND<S> kta(kit.dim(), 4);
      if (id == LinkId::KT) {
        const TensorND<S> tmp = einsum<S>(
            {F{&s2, "dwfg"}, F{&sd, "hiec"}, F{&op, "fh"}, F{&um, "gi"}}, "dwec");
        kta = einsum<S>({F{&rurd, "adbe"}, F{&tmp, "dwec"}}, "awbc");
      } else {
        const TensorND<S> tmp = einsum<S>(
            {F{&s2, "adfg"}, F{&sd, "hibe"}, F{&op, "fh"}, F{&um, "gi"}}, "adbe");
        kta = einsum<S>({F{&tmp, "adbe"}, F{&rurd, "dwec"}}, "awbc");
      }
      const TensorND<S> ktb = einsum<S>({F{&r1, "dabc"}, F{&rd2, "lmfn"}, F{&susd, "aeng"},
                                         F{&op, "bl"}, F{&um, "cm"}},
                                        "defg");
      const TensorND<S> ktc = einsum<S>(
          {F{&ktb, "defg"}, F{&slsr, "hijk"}, F{&om, "fh"}, F{&up, "gi"}}, "dejk");
      return close(einsum<S>({F{&kta, "axbc"}, F{&ktc, "dejk"}, F{&om, "bd"}, F{&up, "ce"},
                              F{&op, "aj"}, F{&up, "ky"}},
                             "yx"));
    }
  }
  throw std::logic_error("abstract_tensor: unknown link");
}

/// The (p,q,r) pretzel tangle: three twist chains sigma^p_udu sigma^q_udu
/// sigma^r_udu closed with Omega^- and Mho^+.
template <class S>
Rank2Tensor<S> pretzel_tensor(const CrossingKit<S>& kit, int p, int q, int r) {
  if (!(p % 2 && q % 2 && r % 2) || !(3 <= p && p < q && q < r))
    throw std::invalid_argument("pretzel: need odd 3 <= p < q < r");
  using F = EinsumFactor<S>;
  const TensorND<S> om = as_tensor(kit.caps().om), up = as_tensor(kit.caps().up);
  const auto& zp = kit.xudu(Crossing::Pos, p);
  const auto& zq = kit.xudu(Crossing::Pos, q);
  const auto& zr = kit.xudu(Crossing::Pos, r);
  return as_rank2(einsum<S>(
      {F{&zp, "abye"}, F{&zq, "bcef"}, F{&zr, "cdfx"}, F{&om, "ga"}, F{&up, "gd"}}, "yx"));
}

}  // namespace lg
