#pragma once

#include "twocat/ideal.hpp"
#include "twocat/quiver.hpp"

namespace fixtures {

// 1 -alpha-> 2 -beta-> 3 -delta-> 5, 2 -gamma-> 4
inline twocat::Quiver example_quiver() {
  return twocat::Quiver({"1", "2", "3", "4", "5"},
                        {{"alpha", 0, 1}, {"beta", 1, 2}, {"gamma", 1, 3}, {"delta", 2, 4}}, true);
}

inline twocat::AlgebraPtr example_algebra() { return twocat::make_algebra(example_quiver()); }

inline twocat::AlgebraPtr linear_algebra(int n) { return twocat::make_algebra(twocat::Quiver::linear(n)); }

inline twocat::Ideal ideal(const twocat::AlgebraPtr& a, std::vector<std::string> d) {
  return twocat::parse_ideal(a, d);
}

}  // namespace fixtures
