#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lg/ext.hpp"
#include "lg/recipes.hpp"
#include "lg/tensor.hpp"

namespace lg {

/// Raised when a computed invariant violates one of its structural
/// diagnostics; always indicates a recipe or engine bug, never bad input.
class DiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LinkEntry {
  std::string name;   // Alexander-Briggs or symbolic, e.g. "3_1", "kt"
  std::string alias;  // friendly name, e.g. "trefoil" (may be empty)
  LinkId id = LinkId::Unknot;
  bool is_pretzel = false;
  int pp = 0, qq = 0, rr = 0;
  int components = 1;
  int writhe = 0;
  bool amphichiral = false;
  std::optional<bool> invertible;  // unset = unknown
};

/// The seventeen catalog links in the reference evaluation order.
const std::vector<LinkEntry>& catalog();

/// Looks a link up by name or alias (case-insensitive); also accepts
/// "pretzel:p,q,r".  Returns std::nullopt when unknown.
std::optional<LinkEntry> find_link(std::string_view selector);

/// Catalog entry for the (p,q,r) pretzel knot; writhe is p+q+r.
LinkEntry pretzel(int p, int q, int r);

/// The Kinoshita-Terasaka mutant pair (recipes differ only in the mutated
/// block).
std::pair<LinkEntry, LinkEntry> kt_pair();

/// True iff the mutated block tensors of the KT pair agree entrywise, which
/// is why the invariant cannot separate the mutants.
bool kt_components_identical();

/// The closed tangle tensor (T_K)^y_x over the Y-extension ring.
Rank2Tensor<ExtScalar> abstract_tensor(const LinkEntry& link);

struct InvariantResult {
  std::string link;
  LaurentPoly polynomial;
  bool scalar_identity_ok = false;  // all diagonal entries equal, off-diagonal zero
  bool y_free_ok = false;
  bool even_exponent_ok = false;
  bool integer_coeff_ok = false;
};

/// The two-variable invariant: entry (1,1) of the tangle tensor, after the
/// full diagnostic battery.  Any diagnostic failure throws DiagnosticError.
/// Results are cached by link name.
InvariantResult links_gould(const LinkEntry& link);

enum class Chirality { Detected, NotDetected };

/// Detected iff the polynomial is not palindromic.
Chirality check_chirality(const LinkEntry& link);

/// True iff LG(q, p) = LG(q, q^{-1} p^{-1}).  Rejects multi-component links
/// (the inversion discussion applies to proper knots only).
bool check_inversion_symmetry(const LinkEntry& link);

struct PretzelScanEntry {
  int p, q, r;
  bool inversion_symmetric;
  bool chirality_detected;
};

struct PretzelScanReport {
  int max_n = 0;
  long expected_count = 0;  // (N-1)(N-3)(N-5)/48
  std::vector<PretzelScanEntry> entries;
  bool all_inversion_symmetric = true;
  bool all_chirality_detected = true;
  bool count_matches() const { return expected_count == static_cast<long>(entries.size()); }
};

/// Evaluates every admissible pretzel with p < q < r <= maxN (odd, >= 7).
PretzelScanReport scan_pretzels(int max_n);

/// Catalog manifest as JSON: name, components, writhe, flags.
std::string catalog_json();

}  // namespace lg
