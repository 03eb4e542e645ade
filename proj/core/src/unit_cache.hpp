#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "th/common.hpp"

namespace th::detail {

/// Evaluates e^{2πi t/den} for integer phases t in [0, den); tabulated when
/// den is small enough, computed directly otherwise.
class UnitCache {
 public:
  explicit UnitCache(Int den) : den_(den) {
    if (den_ <= kTableLimit) {
      table_.reserve(static_cast<std::size_t>(den_));
      for (Int t = 0; t < den_; ++t) table_.push_back(eval(t));
    }
  }

  std::complex<double> at(Int t) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(t)];
    return eval(t);
  }

  std::complex<double> at_conj(Int t) const {
    return at(t == 0 ? 0 : den_ - t);
  }

  Int den() const noexcept { return den_; }

 private:
  static constexpr Int kTableLimit = 1 << 20;

  std::complex<double> eval(Int t) const {
    const double angle = 2.0 * std::numbers::pi_v<double> *
                         (static_cast<double>(t) / static_cast<double>(den_));
    return std::polar(1.0, angle);
  }

  Int den_;
  std::vector<std::complex<double>> table_;
};

}  // namespace th::detail
