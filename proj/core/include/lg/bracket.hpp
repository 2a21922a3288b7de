#pragma once

#include "lg/combinators.hpp"
#include "lg/linkcat.hpp"

namespace lg {

/// The dimension-2 state model crossing kit: Gaussian-integer Laurent
/// polynomials in A, with R = A^{-1} (Omega x Mho) + A (delta x delta), the
/// negative crossing its 4x4 inverse, and all four cap matrices equal to
/// {{0, iA}, {-iA^{-1}, 0}}.
const CrossingKit<LaurentPoly>& bracket_kit();

/// Unnormalized bracket of the closed diagram: the tangle tensor traced shut
/// with a cap/cup pair (unlike the invariant, which pins one index).
LaurentPoly bracket_value(const LinkEntry& link);

/// Writhe-normalized Jones polynomial in t (exponent grid 1/4):
/// (-A)^{-3w} bracket(link)/bracket(unknot), then A = t^{-1/4}.  The Gaussian
/// imaginary parts must cancel exactly; a residue is a hard error.
LaurentPoly jones(const LinkEntry& link);

}  // namespace lg
