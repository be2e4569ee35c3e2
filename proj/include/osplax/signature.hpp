#pragma once

#include <vector>

#include "osplax/rational.hpp"

namespace osplax {

// The orthosymplectic (N, m) data: parity sequence, involution i -> i',
// theta sequence and kappa. For even N = 2n the parity sequence is
// (0^n, 1^{2m}, 0^n); for odd N = 2n+1 it is (0^n, 1^m, 0, 1^m, 0^n).
// theta is fixed by theta_{i'} = (-1)^{|i|} theta_i and theta_{<=n+m} = 1,
// and kappa = N/2 - m - 1.
struct SuperSignature {
  int N = 0, m = 0, n = 0;
  bool odd = false;
  std::vector<int> parity;  // 0/1, length N+2m
  std::vector<int> theta;   // +-1
  Rational kappa;

  int dim() const { return N + 2 * m; }
  int dual(int i) const { return N + 2 * m + 1 - i; }
  int p(int i) const { return parity[size_t(i - 1)]; }
  int th(int i) const { return theta[size_t(i - 1)]; }
};

SuperSignature build_signature(int N, int m);

}  // namespace osplax
