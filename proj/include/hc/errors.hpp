#pragma once

#include <stdexcept>
#include <string>

namespace hc {

// Rejection of an evaluation point or parameter set that lies outside the
// validity domain of the requested operation (pole hit, contour pinched,
// coupling outside its interval, argument outside a representation's strip).
// The CLI maps this to exit code 2.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Failure of a numerical process that should have converged: quadrature ran
// out of subdivisions, a tail refused to decay, a ladder or recurrence
// overflowed, an integrand produced NaN/Inf.  The CLI maps this to exit 3.
class numerics_error : public std::runtime_error {
public:
  explicit numerics_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hc
