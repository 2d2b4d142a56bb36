#ifndef ZETAREG_SRC_BERNOULLI_HPP_
#define ZETAREG_SRC_BERNOULLI_HPP_

#include <array>

namespace zetareg::detail {

// B_2, B_4, ..., B_22.
inline constexpr std::array<double, 11> kBernoulliEven = {
    1.0 / 6.0,          -1.0 / 30.0,     1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0, 7.0 / 6.0,        -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0, 854513.0 / 138.0,
};

}  // namespace zetareg::detail

#endif  // ZETAREG_SRC_BERNOULLI_HPP_
