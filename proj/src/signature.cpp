#include "osplax/signature.hpp"

#include <stdexcept>

namespace osplax {

SuperSignature build_signature(int N, int m) {
  if (N < 0 || m < 0) throw std::invalid_argument("build_signature: N,m must be >= 0");
  SuperSignature s;
  s.N = N;
  s.m = m;
  s.n = N / 2;
  s.odd = (N % 2) != 0;
  s.kappa = Rational(N - 2 * m - 2, 2);
  s.kappa.canonicalize();
  auto push = [&s](int count, int value, std::vector<int>& dst) {
    for (int i = 0; i < count; ++i) dst.push_back(value);
  };
  if (!s.odd) {
    push(s.n, 0, s.parity);
    push(2 * m, 1, s.parity);
    push(s.n, 0, s.parity);
    push(s.n + m, 1, s.theta);
    push(m, -1, s.theta);
    push(s.n, 1, s.theta);
  } else {
    push(s.n, 0, s.parity);
    push(m, 1, s.parity);
    push(1, 0, s.parity);
    push(m, 1, s.parity);
    push(s.n, 0, s.parity);
    push(s.n + m + 1, 1, s.theta);
    push(m, -1, s.theta);
    push(s.n, 1, s.theta);
  }
  return s;
}

}  // namespace osplax
