#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lg/tensor.hpp"

namespace lg {

/// One factor of a contraction recipe: a tensor name plus a label for every
/// index slot, in the storage order (upper-left, lower-left, upper-right,
/// lower-right for rank 4; (row, column) for rank 2).
struct RecipeFactor {
  std::string name;
  std::string labels;
};

/// A closed (1,1)-tangle contraction network.  Every non-open label occurs
/// exactly twice across the factor sequence; the open labels are literally
/// `x` (bottom strand) and `y` (top strand), once each.
class NetworkRecipe {
 public:
  explicit NetworkRecipe(std::vector<RecipeFactor> factors);

  /// Parses the one-factor-per-line text form, e.g.
  ///     sigma2[y,x,a,b]
  ///     op[a,c]
  ///     um[b,c]
  /// Blank lines and lines starting with '#' are skipped.
  static NetworkRecipe parse(const std::string& text);

  const std::vector<RecipeFactor>& factors() const { return factors_; }
  std::string str() const;

 private:
  void validate() const;
  std::vector<RecipeFactor> factors_;
};

template <class S>
using TensorBinding = std::variant<const TensorND<S>*, const Rank2Tensor<S>*>;

/// Contracts the recipe against named tensors, returning (T)^y_x with the
/// first index of the result bound to y.  Throws on unbound names, rank or
/// dimension mismatches.
template <class S>
Rank2Tensor<S> contract(const NetworkRecipe& recipe,
                        const std::map<std::string, TensorBinding<S>>& bindings) {
  std::vector<TensorND<S>> converted;
  converted.reserve(recipe.factors().size());
  std::vector<EinsumFactor<S>> factors;
  for (const auto& f : recipe.factors()) {
    auto it = bindings.find(f.name);
    if (it == bindings.end())
      throw std::invalid_argument("contract: unbound tensor name '" + f.name + "'");
    const TensorND<S>* t;
    if (std::holds_alternative<const TensorND<S>*>(it->second)) {
      t = std::get<const TensorND<S>*>(it->second);
    } else {
      converted.push_back(as_tensor(*std::get<const Rank2Tensor<S>*>(it->second)));
      t = &converted.back();
    }
    factors.push_back({t, f.labels});
  }
  // converted may reallocate while filling; re-point factor entries.
  std::size_t ci = 0;
  for (std::size_t i = 0; i < recipe.factors().size(); ++i) {
    const auto& b = bindings.at(recipe.factors()[i].name);
    if (std::holds_alternative<const Rank2Tensor<S>*>(b)) factors[i].tensor = &converted[ci++];
  }
  return as_rank2(einsum(factors, "yx"));
}

}  // namespace lg
