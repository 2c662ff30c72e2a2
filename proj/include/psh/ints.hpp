#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace psh {

// Exact coefficient type.  Structure constants stay tiny at desk scale, but
// iterated Hopf powers multiply them by k^r and nothing here may overflow
// silently, so all T-group coefficients are arbitrary precision.
using Int = boost::multiprecision::cpp_int;

using Complex = std::complex<double>;

// Tolerances used by the floating-point character pipeline.  Everything
// downstream of a character table is rounded through guarded_round, which
// turns numerical drift into a hard failure instead of a wrong integer.
inline constexpr double kRowOrthTol = 1e-8;
inline constexpr double kDegreeTol = 1e-8;
inline constexpr double kIntegralityTol = 1e-6;
inline constexpr double kLiftTol = 1e-8;

class IntegralityError : public std::runtime_error {
 public:
  explicit IntegralityError(const std::string& what) : std::runtime_error(what) {}
};

struct GuardStats {
  long long count = 0;
  double max_deviation = 0.0;
};

// Global accounting of every guarded rounding performed; thread safe.
GuardStats guard_stats();
void reset_guard_stats();

// Rounds x to the nearest integer, failing hard if it is farther than
// kIntegralityTol away.  `what` names the quantity for the error message.
long long guarded_round(double x, const std::string& what);

// Complex variant: imaginary part must also vanish within tolerance.
long long guarded_round(const Complex& z, const std::string& what);

std::string int_to_string(const Int& v);
Int int_from_string(const std::string& s);

}  // namespace psh
