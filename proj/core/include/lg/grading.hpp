#pragma once

namespace lg {

/// Z_2 parity of the four basis kets of the underlying module: indices 1 and 4
/// are even, 2 and 3 are odd.
inline int parity(int ket) { return (ket == 2 || ket == 3) ? 1 : 0; }

inline int parity_sign(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace lg
