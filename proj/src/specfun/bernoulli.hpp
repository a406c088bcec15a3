#pragma once

#include <array>

namespace magneton::detail {

// B_2, B_4, ..., B_28.
inline constexpr std::array<long double, 14> kBernoulliEven = {
    1.0L / 6.0L,
    -1.0L / 30.0L,
    1.0L / 42.0L,
    -1.0L / 30.0L,
    5.0L / 66.0L,
    -691.0L / 2730.0L,
    7.0L / 6.0L,
    -3617.0L / 510.0L,
    43867.0L / 798.0L,
    -174611.0L / 330.0L,
    854513.0L / 138.0L,
    -236364091.0L / 2730.0L,
    8553103.0L / 6.0L,
    -23749461029.0L / 870.0L,
};

// B_{2k} / (2k)! for k = 1..14, the Euler-Maclaurin correction weights.
inline constexpr std::array<long double, 14> euler_maclaurin_weights() {
  std::array<long double, 14> w{};
  long double factorial = 1.0L;
  for (int k = 1; k <= 14; ++k) {
    factorial *= static_cast<long double>(2 * k - 1) * static_cast<long double>(2 * k);
    w[k - 1] = kBernoulliEven[k - 1] / factorial;
  }
  return w;
}

inline constexpr std::array<long double, 14> kEulerMaclaurinWeights = euler_maclaurin_weights();

}  // namespace magneton::detail
