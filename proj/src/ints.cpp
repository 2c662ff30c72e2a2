#include "psh/ints.hpp"

#include <cmath>
#include <mutex>

namespace psh {

namespace {
std::mutex g_guard_mutex;
GuardStats g_stats;
}  // namespace

GuardStats guard_stats() {
  std::lock_guard<std::mutex> lock(g_guard_mutex);
  return g_stats;
}

void reset_guard_stats() {
  std::lock_guard<std::mutex> lock(g_guard_mutex);
  g_stats = GuardStats{};
}

long long guarded_round(double x, const std::string& what) {
  const double nearest = std::round(x);
  const double dev = std::abs(x - nearest);
  {
    std::lock_guard<std::mutex> lock(g_guard_mutex);
    ++g_stats.count;
    if (dev > g_stats.max_deviation) g_stats.max_deviation = dev;
  }
  if (dev > kIntegralityTol) {
    throw IntegralityError(what + ": value " + std::to_string(x) +
                           " is not within 1e-6 of an integer");
  }
  return static_cast<long long>(nearest);
}

long long guarded_round(const Complex& z, const std::string& what) {
  const double im = std::abs(z.imag());
  {
    std::lock_guard<std::mutex> lock(g_guard_mutex);
    ++g_stats.count;
    if (im > g_stats.max_deviation) g_stats.max_deviation = im;
  }
  if (im > kIntegralityTol) {
    throw IntegralityError(what + ": imaginary part " + std::to_string(z.imag()) +
                           " exceeds 1e-6");
  }
  return guarded_round(z.real(), what);
}

std::string int_to_string(const Int& v) { return v.str(); }

Int int_from_string(const std::string& s) { return Int(s); }

}  // namespace psh
