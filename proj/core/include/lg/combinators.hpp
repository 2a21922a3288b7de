#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "lg/tensor.hpp"

namespace lg {

/// The four cap/cup matrices: om = Omega^-, op = Omega^+, um = Mho^-,
/// up = Mho^+.
template <class S>
struct CapSet {
  Rank2Tensor<S> om, op, um, up;
};

/// X twisted a quarter turn left:
///   (X_l)^{a c}_{b d} = X^{e a}_{d h} (Omega^-)_{b e} (Mho^-)^{h c}.
template <class S>
Rank4Tensor<S> twist_left(const Rank4Tensor<S>& x, const CapSet<S>& caps) {
  const TensorND<S> om = as_tensor(caps.om), um = as_tensor(caps.um);
  return einsum<S>({{&x, "edah"}, {&om, "be"}, {&um, "hc"}}, "abcd");
}

/// X twisted a quarter turn right:
///   (X_r)^{a c}_{b d} = X^{c g}_{f b} (Mho^+)^{a f} (Omega^+)_{g d}.
/// With Omega^+ = Mho^+ = I this is the index permutation (X_r)^{a c}_{b d} =
/// X^{c d}_{a b}.
template <class S>
Rank4Tensor<S> twist_right(const Rank4Tensor<S>& x, const CapSet<S>& caps) {
  const TensorND<S> op = as_tensor(caps.op), up = as_tensor(caps.up);
  return einsum<S>({{&x, "cfgb"}, {&up, "af"}, {&op, "gd"}}, "abcd");
}

/// X turned upside down:
///   (X_d)^{a c}_{b d} = X^{e g}_{f h} (Mho^+)^{a h} (Omega^+)_{g b}
///                       (Mho^+)^{c f} (Omega^+)_{e d};
/// with identity plus-caps, (X_d)^{a c}_{b d} = X^{d b}_{c a}.
template <class S>
Rank4Tensor<S> twist_down(const Rank4Tensor<S>& x, const CapSet<S>& caps) {
  const TensorND<S> op = as_tensor(caps.op), up = as_tensor(caps.up);
  return einsum<S>({{&x, "efgh"}, {&up, "ah"}, {&op, "gb"}, {&up, "cf"}, {&op, "ed"}}, "abcd");
}

/// N copies of X stacked vertically: X^1 = X, X^N = X . X^{N-1}.
template <class S>
Rank4Tensor<S> power_n(const Rank4Tensor<S>& x, int n) {
  if (n < 1) throw std::invalid_argument("power_n: N must be >= 1");
  if (n == 1) return x;
  Rank4Tensor<S> acc = x;
  for (int i = 2; i <= n; ++i)
    acc = einsum<S>({{&x, "aecf"}, {&acc, "ebfd"}}, "abcd");
  return acc;
}

/// X to the left of its own upside-downness:
///   (X_u X_d)^{a c}_{b d} = X^{a e}_{b f} (X_d)^{g c}_{h d}
///                           (Omega^+)_{e g} (Mho^-)^{f h}.
template <class S>
Rank4Tensor<S> xu_xd(const Rank4Tensor<S>& x, const CapSet<S>& caps) {
  const Rank4Tensor<S> xd = twist_down(x, caps);
  const TensorND<S> op = as_tensor(caps.op), um = as_tensor(caps.um);
  return einsum<S>({{&x, "abef"}, {&xd, "ghcd"}, {&op, "eg"}, {&um, "fh"}}, "abcd");
}

/// X to the right of its own upside-downness.
template <class S>
Rank4Tensor<S> xd_xu(const Rank4Tensor<S>& x, const CapSet<S>& caps) {
  const Rank4Tensor<S> xd = twist_down(x, caps);
  const TensorND<S> om = as_tensor(caps.om), up = as_tensor(caps.up);
  return einsum<S>({{&xd, "abef"}, {&x, "ghcd"}, {&om, "eg"}, {&up, "fh"}}, "abcd");
}

/// X_l atop X_r, and X_r atop X_l.
template <class S>
Rank4Tensor<S> xl_xr(const Rank4Tensor<S>& x, const CapSet<S>& caps) {
  const Rank4Tensor<S> xl = twist_left(x, caps), xr = twist_right(x, caps);
  return einsum<S>({{&xl, "aecf"}, {&xr, "ebfd"}}, "abcd");
}

template <class S>
Rank4Tensor<S> xr_xl(const Rank4Tensor<S>& x, const CapSet<S>& caps) {
  const Rank4Tensor<S> xl = twist_left(x, caps), xr = twist_right(x, caps);
  return einsum<S>({{&xr, "aecf"}, {&xl, "ebfd"}}, "abcd");
}

/// The horizontal chain X, X_d, X, ..., X of odd length N used by the pretzel
/// twists: X_udu^1 = X, and each recursion step glues an X_d--X pair onto the
/// right via Omega^+ / Mho^-.
template <class S>
Rank4Tensor<S> x_udu_n(const Rank4Tensor<S>& x, int n, const CapSet<S>& caps) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("x_udu_n: N must be odd and positive");
  if (n == 1) return x;
  const Rank4Tensor<S> pair = xd_xu(x, caps);
  const TensorND<S> op = as_tensor(caps.op), um = as_tensor(caps.um);
  Rank4Tensor<S> acc = x;
  for (int i = 3; i <= n; i += 2)
    acc = einsum<S>({{&acc, "abef"}, {&pair, "ghcd"}, {&op, "eg"}, {&um, "fh"}}, "abcd");
  return acc;
}

enum class Crossing { Pos, Neg };

/// A crossing tensor pair bound to a cap set, with memoization of every
/// derived auxiliary tensor.  The cache is safe for concurrent readers;
/// insertion is build-once (the first computed value wins and stays).
template <class S>
class CrossingKit {
 public:
  CrossingKit(Rank4Tensor<S> pos, Rank4Tensor<S> neg, CapSet<S> caps)
      : pos_(std::move(pos)), neg_(std::move(neg)), caps_(std::move(caps)) {}

  int dim() const { return pos_.dim(); }
  const CapSet<S>& caps() const { return caps_; }

  const Rank4Tensor<S>& x(Crossing c) const { return c == Crossing::Pos ? pos_ : neg_; }
  const Rank4Tensor<S>& xd(Crossing c) const {
    return get({Tag::D, c, 0}, [&] { return twist_down(x(c), caps_); });
  }
  const Rank4Tensor<S>& xl(Crossing c) const {
    return get({Tag::L, c, 0}, [&] { return twist_left(x(c), caps_); });
  }
  const Rank4Tensor<S>& xr(Crossing c) const {
    return get({Tag::R, c, 0}, [&] { return twist_right(x(c), caps_); });
  }
  const Rank4Tensor<S>& power(Crossing c, int n) const {
    if (n < 1) throw std::invalid_argument("power: N must be >= 1");
    if (n == 1) return x(c);
    return get({Tag::Pow, c, n}, [&] {
      return einsum<S>({{&x(c), "aecf"}, {&power(c, n - 1), "ebfd"}}, "abcd");
    });
  }
  /// Power of the upside-down crossing (the Whitehead and 9_42 diagrams use
  /// (sigma_d)^2).
  const Rank4Tensor<S>& power_d(Crossing c, int n) const {
    if (n < 1) throw std::invalid_argument("power_d: N must be >= 1");
    if (n == 1) return xd(c);
    return get({Tag::PowD, c, n}, [&] {
      return einsum<S>({{&xd(c), "aecf"}, {&power_d(c, n - 1), "ebfd"}}, "abcd");
    });
  }
  const Rank4Tensor<S>& xlxr(Crossing c) const {
    return get({Tag::LR, c, 0}, [&] {
      return einsum<S>({{&xl(c), "aecf"}, {&xr(c), "ebfd"}}, "abcd");
    });
  }
  const Rank4Tensor<S>& xrxl(Crossing c) const {
    return get({Tag::RL, c, 0}, [&] {
      return einsum<S>({{&xr(c), "aecf"}, {&xl(c), "ebfd"}}, "abcd");
    });
  }
  const Rank4Tensor<S>& xuxd(Crossing c) const {
    return get({Tag::UD, c, 0}, [&] { return xu_xd(x(c), caps_); });
  }
  const Rank4Tensor<S>& xdxu(Crossing c) const {
    return get({Tag::DU, c, 0}, [&] { return xd_xu(x(c), caps_); });
  }
  const Rank4Tensor<S>& xudu(Crossing c, int n) const {
    if (n < 1 || n % 2 == 0)
      throw std::invalid_argument("xudu: N must be odd and positive");
    if (n == 1) return x(c);
    return get({Tag::Udu, c, n}, [&] {
      const TensorND<S> op = as_tensor(caps_.op), um = as_tensor(caps_.um);
      return einsum<S>(
          {{&xudu(c, n - 2), "abef"}, {&xdxu(c), "ghcd"}, {&op, "eg"}, {&um, "fh"}}, "abcd");
    });
  }

 private:
  enum class Tag { D, L, R, LR, RL, Pow, PowD, UD, DU, Udu };
  using Key = std::tuple<Tag, Crossing, int>;

  template <class F>
  const Rank4Tensor<S>& get(Key key, F&& build) const {
    {
      std::shared_lock lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    Rank4Tensor<S> value = build();
    std::unique_lock lock(mu_);
    auto [it, inserted] = cache_.emplace(std::move(key), std::move(value));
    (void)inserted;
    return it->second;
  }

  Rank4Tensor<S> pos_, neg_;
  CapSet<S> caps_;
  mutable std::shared_mutex mu_;
  mutable std::map<Key, Rank4Tensor<S>> cache_;
};

}  // namespace lg
