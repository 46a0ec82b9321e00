#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bessel_certify {

/// Input outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or quadrature did not reach the requested accuracy.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, std::size_t terms_used, double error_estimate)
      : std::runtime_error(what), terms_used_(terms_used), error_estimate_(error_estimate) {}

  std::size_t terms_used() const noexcept { return terms_used_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  std::size_t terms_used_;
  double error_estimate_;
};

/// Result not representable in binary64 (overflow/underflow), or a
/// quantity too close to a singular value to be meaningful.
class range_error : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Root bracketing failed.
class search_error : public std::runtime_error {
 public:
  search_error(const std::string& what, double lo, double hi)
      : std::runtime_error(describe(what, lo, hi)), lo_(lo), hi_(hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  static std::string describe(const std::string& what, double lo, double hi) {
    std::ostringstream os;
    os.precision(17);
    os << what << " on [" << lo << ", " << hi << "]";
    return os.str();
  }
  double lo_;
  double hi_;
};

namespace detail {

inline void require(bool ok, const char* msg) {
  if (!ok) throw domain_error(msg);
}

}  // namespace detail
}  // namespace bessel_certify
