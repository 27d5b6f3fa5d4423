#pragma once

#include <vector>

namespace oscent {

// Normalized Hermite function  H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)),
// evaluated by the renormalized three-term recurrence
//   h_n = x sqrt(2/n) h_{n-1} - sqrt((n-1)/n) h_{n-2},
// stable for n up to a few thousand (values stay O(1)).
double hermite_function(int n, double x);

// Gauss-Hermite rule for weight e^{-x^2} (Golub-Welsch).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermiteRule gauss_hermite(int n);

}  // namespace oscent
