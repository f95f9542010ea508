#pragma once

// Basic scalar types for the whole library.  Every numeric routine is written
// against hc::real / hc::cplx so that an extended-precision build only has to
// swap these aliases (and the math shims below) in one place.

#include <complex>

namespace hc {

using real = double;
using cplx = std::complex<real>;

inline constexpr real pi_v = 3.14159265358979323846264338327950288;

// Imaginary unit as a value; avoids sprinkling cplx(0,1) literals around.
inline constexpr cplx iu{0.0, 1.0};

} // namespace hc
