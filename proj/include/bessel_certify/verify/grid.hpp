#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bessel_certify/errors.hpp"

namespace bessel_certify::verify {

enum class Spacing { linear, log };

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  int count = 2;
  Spacing spacing = Spacing::linear;

  void validate() const {
    detail::require(std::isfinite(min) && std::isfinite(max) && min < max, "Axis: need finite min < max");
    detail::require(count >= 2, "Axis: count must be at least 2");
    if (spacing == Spacing::log) detail::require(min > 0.0, "Axis: log spacing needs min > 0");
  }

  /// Sample points, endpoints included exactly.
  std::vector<double> values() const {
    validate();
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      const double t = static_cast<double>(i) / (count - 1);
      v[i] = spacing == Spacing::linear ? min + (max - min) * t
                                        : std::exp(std::log(min) + (std::log(max) - std::log(min)) * t);
    }
    v.front() = min;
    v.back() = max;
    return v;
  }
};

struct GridSpec {
  std::vector<Axis> axes;
  std::uint64_t seed = 0;
  int samples = 1;

  void validate() const {
    for (const auto& a : axes) a.validate();
    detail::require(samples >= 1, "GridSpec: samples must be at least 1");
  }

  const Axis* find(const std::string& name) const {
    for (const auto& a : axes)
      if (a.name == name) return &a;
    return nullptr;
  }
  Axis* find(const std::string& name) {
    for (auto& a : axes)
      if (a.name == name) return &a;
    return nullptr;
  }
  const Axis& axis(const std::string& name) const {
    const Axis* a = find(name);
    if (!a) throw domain_error("GridSpec: no axis named '" + name + "'");
    return *a;
  }
};

}  // namespace bessel_certify::verify
