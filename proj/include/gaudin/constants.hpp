#pragma once

#include <numbers>

namespace gaudin {

struct Constants {
  static constexpr double euler_gamma = std::numbers::egamma;
  static constexpr double pi = std::numbers::pi;
};

inline constexpr double kPi = Constants::pi;
inline constexpr double kEulerGamma = Constants::euler_gamma;

}  // namespace gaudin
