#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lg {

/// Packed index key for a sparse tensor: up to 16 axes, each index in 1..15,
/// 4 bits per axis.  Axis 0 occupies the low nibble, so the std::map ordering
/// is deterministic (reverse-lexicographic in the axis list, which is fine --
/// all we need is a fixed total order).
using TensorKey = std::uint64_t;

inline TensorKey key_set(TensorKey k, int axis, int idx) {
  return k | (static_cast<TensorKey>(idx) << (4 * axis));
}
inline int key_get(TensorKey k, int axis) { return static_cast<int>((k >> (4 * axis)) & 0xF); }

/// Dense square matrix with 1-based indices; the shape of caps, cups and
/// closed (1,1)-tangle tensors.
template <class S>
class Rank2Tensor {
 public:
  explicit Rank2Tensor(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const { return dim_; }
  S& at(int i, int j) { return e_[static_cast<std::size_t>(i - 1) * dim_ + (j - 1)]; }
  const S& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i - 1) * dim_ + (j - 1)];
  }

  bool operator==(const Rank2Tensor& o) const { return dim_ == o.dim_ && e_ == o.e_; }
  bool operator!=(const Rank2Tensor& o) const { return !(*this == o); }

 private:
  int dim_;
  std::vector<S> e_;
};

/// Sparse tensor with a fixed number of indices, each running over 1..dim.
/// Zero entries are never stored.  Rank-4 instances follow the pictograph
/// convention: entry (i, j, k, l) is the coefficient of e^{i k}_{j l}, i.e.
/// axis 0 = upper-left, 1 = lower-left, 2 = upper-right, 3 = lower-right.
template <class S>
class TensorND {
 public:
  TensorND() : dim_(0), rank_(0) {}
  TensorND(int dim, int rank) : dim_(dim), rank_(rank) {
    if (dim < 1 || dim > 15) throw std::invalid_argument("TensorND: dimension out of range");
    if (rank < 0 || rank > 16) throw std::invalid_argument("TensorND: rank out of range");
  }

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  std::size_t nonzero_count() const { return entries_.size(); }
  const std::map<TensorKey, S>& entries() const { return entries_; }

  void set(TensorKey k, S v) {
    if (v.is_zero()) return;
    entries_.insert_or_assign(k, std::move(v));
  }
  void accumulate(TensorKey k, const S& v) {
    auto it = entries_.find(k);
    if (it == entries_.end()) {
      if (!v.is_zero()) entries_.emplace(k, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  /// Entry lookup; returns nullptr for (implicit) zeros.
  const S* find(TensorKey k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? nullptr : &it->second;
  }

  // Rank-4 conveniences, 1-based.
  void set4(int i, int j, int k, int l, S v) {
    check_rank(4);
    set(pack4(i, j, k, l), std::move(v));
  }
  const S* find4(int i, int j, int k, int l) const {
    check_rank(4);
    return find(pack4(i, j, k, l));
  }
  S at4(int i, int j, int k, int l) const {
    const S* p = find4(i, j, k, l);
    return p ? *p : S{};
  }
  static TensorKey pack4(int i, int j, int k, int l) {
    return key_set(key_set(key_set(key_set(0, 0, i), 1, j), 2, k), 3, l);
  }

  TensorND operator+(const TensorND& o) const {
    require_same_shape(o);
    TensorND r(*this);
    for (const auto& [k, v] : o.entries_) r.accumulate(k, v);
    return r;
  }
  TensorND operator-(const TensorND& o) const {
    require_same_shape(o);
    TensorND r(*this);
    for (const auto& [k, v] : o.entries_) {
      S nv = -v;
      r.accumulate(k, nv);
    }
    return r;
  }
  TensorND scaled(const S& c) const {
    TensorND r(dim_, rank_);
    for (const auto& [k, v] : entries_) r.set(k, v * c);
    return r;
  }
  bool operator==(const TensorND& o) const {
    return dim_ == o.dim_ && rank_ == o.rank_ && entries_ == o.entries_;
  }
  bool operator!=(const TensorND& o) const { return !(*this == o); }

 private:
  void check_rank(int r) const {
    if (rank_ != r) throw std::logic_error("TensorND: rank mismatch");
  }
  void require_same_shape(const TensorND& o) const {
    if (dim_ != o.dim_ || rank_ != o.rank_)
      throw std::invalid_argument("TensorND: shape mismatch");
  }

  int dim_;
  int rank_;
  std::map<TensorKey, S> entries_;
};

template <class S>
using Rank4Tensor = TensorND<S>;

template <class S>
Rank4Tensor<S> make_rank4(int dim) {
  return TensorND<S>(dim, 4);
}

template <class S>
TensorND<S> as_tensor(const Rank2Tensor<S>& m) {
  TensorND<S> t(m.dim(), 2);
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j)
      if (!m.at(i, j).is_zero()) t.set(key_set(key_set(0, 0, i), 1, j), m.at(i, j));
  return t;
}

template <class S>
Rank2Tensor<S> as_rank2(const TensorND<S>& t) {
  if (t.rank() != 2) throw std::logic_error("as_rank2: rank != 2");
  Rank2Tensor<S> m(t.dim());
  for (int i = 1; i <= t.dim(); ++i)
    for (int j = 1; j <= t.dim(); ++j) m.at(i, j) = S{};
  for (const auto& [k, v] : t.entries()) m.at(key_get(k, 0), key_get(k, 1)) = v;
  return m;
}

/// One einsum operand: a tensor together with a single-character label per
/// axis.  A label occurring twice (in one factor or across two factors) is
/// summed unless it is listed among the output labels.
template <class S>
struct EinsumFactor {
  const TensorND<S>* tensor;
  std::string labels;
};

namespace detail {

template <class S>
struct Operand {
  TensorND<S> owned;
  const TensorND<S>* external = nullptr;  // used when owns == false
  bool owns = false;
  std::string labels;
  const TensorND<S>& t() const { return owns ? owned : *external; }
};

/// Sums repeated labels inside a single operand (a delta-trace).
template <class S>
void fold_self_traces(Operand<S>& op) {
  for (std::size_t a = 0; a < op.labels.size(); ++a) {
    std::size_t b = op.labels.find(op.labels[a], a + 1);
    if (b == std::string::npos) continue;
    const TensorND<S>& src = op.t();
    TensorND<S> dst(src.dim(), src.rank() - 2);
    std::string new_labels;
    for (std::size_t k = 0; k < op.labels.size(); ++k)
      if (k != a && k != b) new_labels += op.labels[k];
    for (const auto& [key, v] : src.entries()) {
      if (key_get(key, static_cast<int>(a)) != key_get(key, static_cast<int>(b))) continue;
      TensorKey nk = 0;
      int axis = 0;
      for (int k = 0; k < src.rank(); ++k) {
        if (k == static_cast<int>(a) || k == static_cast<int>(b)) continue;
        nk = key_set(nk, axis++, key_get(key, k));
      }
      dst.accumulate(nk, v);
    }
    op.owned = std::move(dst);
    op.owns = true;
    op.labels = std::move(new_labels);
    fold_self_traces(op);
    return;
  }
}

template <class S>
Operand<S> contract_pair(const Operand<S>& A, const Operand<S>& B) {
  std::vector<int> sharedA, sharedB, restA, restB;
  std::string out_labels;
  for (std::size_t a = 0; a < A.labels.size(); ++a) {
    std::size_t b = B.labels.find(A.labels[a]);
    if (b != std::string::npos) {
      sharedA.push_back(static_cast<int>(a));
      sharedB.push_back(static_cast<int>(b));
    } else {
      restA.push_back(static_cast<int>(a));
      out_labels += A.labels[a];
    }
  }
  for (std::size_t b = 0; b < B.labels.size(); ++b)
    if (A.labels.find(B.labels[b]) == std::string::npos) {
      restB.push_back(static_cast<int>(b));
      out_labels += B.labels[b];
    }

  const int out_rank = static_cast<int>(restA.size() + restB.size());
  TensorND<S> result(A.t().dim(), out_rank);

  // Hash-join on the shared index values, A side indexed.
  std::map<TensorKey, std::vector<std::pair<TensorKey, const S*>>> index;
  for (const auto& [key, v] : A.t().entries()) {
    TensorKey sk = 0, rk = 0;
    for (std::size_t t = 0; t < sharedA.size(); ++t)
      sk = key_set(sk, static_cast<int>(t), key_get(key, sharedA[t]));
    for (std::size_t t = 0; t < restA.size(); ++t)
      rk = key_set(rk, static_cast<int>(t), key_get(key, restA[t]));
    index[sk].emplace_back(rk, &v);
  }
  for (const auto& [key, v] : B.t().entries()) {
    TensorKey sk = 0;
    for (std::size_t t = 0; t < sharedB.size(); ++t)
      sk = key_set(sk, static_cast<int>(t), key_get(key, sharedB[t]));
    auto it = index.find(sk);
    if (it == index.end()) continue;
    TensorKey rkB = 0;
    for (std::size_t t = 0; t < restB.size(); ++t)
      rkB = key_set(rkB, static_cast<int>(t), key_get(key, restB[t]));
    const TensorKey shifted = rkB << (4 * restA.size());
    for (const auto& [rkA, pa] : it->second) {
      S prod = *pa * v;
      result.accumulate(rkA | shifted, prod);
    }
  }

  Operand<S> op;
  op.owned = std::move(result);
  op.owns = true;
  op.labels = std::move(out_labels);
  return op;
}

}  // namespace detail

/// Contracts a product of labeled tensors over all repeated labels, returning
/// a tensor whose axes follow `out` (which must list exactly the labels that
/// occur once).  Pairwise order is greedy: the two factors sharing the most
/// labels first, ties broken by the smallest resulting rank and then by
/// operand position.
template <class S>
TensorND<S> einsum(const std::vector<EinsumFactor<S>>& factors, const std::string& out) {
  if (factors.empty()) throw std::invalid_argument("einsum: no factors");
  const int dim = factors.front().tensor->dim();
  std::map<char, int> mult;
  for (const auto& f : factors) {
    if (!f.tensor) throw std::invalid_argument("einsum: null factor");
    if (f.tensor->dim() != dim) throw std::invalid_argument("einsum: dimension mismatch");
    if (static_cast<int>(f.labels.size()) != f.tensor->rank())
      throw std::invalid_argument("einsum: label count does not match tensor rank");
    for (char c : f.labels) ++mult[c];
  }
  for (const auto& [c, n] : mult) {
    const bool open = out.find(c) != std::string::npos;
    if (open && n != 1)
      throw std::invalid_argument(std::string("einsum: open label '") + c +
                                  "' bound more than once");
    if (!open && n != 2)
      throw std::invalid_argument(std::string("einsum: label '") + c +
                                  "' must occur exactly twice");
  }
  for (char c : out)
    if (!mult.count(c))
      throw std::invalid_argument(std::string("einsum: unknown output label '") + c + "'");

  std::vector<detail::Operand<S>> ops;
  ops.reserve(factors.size());
  for (const auto& f : factors) {
    detail::Operand<S> op;
    op.external = f.tensor;
    op.labels = f.labels;
    detail::fold_self_traces(op);
    ops.push_back(std::move(op));
  }

  while (ops.size() > 1) {
    std::size_t bi = 0, bj = 1;
    int best_shared = -1, best_rank = 1 << 20;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        int shared = 0;
        for (char c : ops[i].labels)
          if (ops[j].labels.find(c) != std::string::npos) ++shared;
        const int rank =
            static_cast<int>(ops[i].labels.size() + ops[j].labels.size()) - 2 * shared;
        if (shared > best_shared || (shared == best_shared && rank < best_rank)) {
          best_shared = shared;
          best_rank = rank;
          bi = i;
          bj = j;
        }
      }
    }
    detail::Operand<S> merged = detail::contract_pair(ops[bi], ops[bj]);
    ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(bj));
    ops[bi] = std::move(merged);
  }

  // Permute the survivor's axes into the requested output order.
  detail::Operand<S>& last = ops.front();
  if (last.labels == out) {
    if (last.owns) return std::move(last.owned);
    return *last.external;
  }
  std::vector<int> pos(out.size());
  for (std::size_t t = 0; t < out.size(); ++t) {
    std::size_t p = last.labels.find(out[t]);
    if (p == std::string::npos) throw std::logic_error("einsum: lost output label");
    pos[t] = static_cast<int>(p);
  }
  TensorND<S> result(last.t().dim(), static_cast<int>(out.size()));
  for (const auto& [key, v] : last.t().entries()) {
    TensorKey nk = 0;
    for (std::size_t t = 0; t < out.size(); ++t) nk = key_set(nk, static_cast<int>(t), key_get(key, pos[t]));
    result.set(nk, v);
  }
  return result;
}

}  // namespace lg
