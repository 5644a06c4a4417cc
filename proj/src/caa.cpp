#include "ratt/caa.hpp"

#include "ratt/errors.hpp"

namespace ratt {

long long ebar(int n_robots, int n) {
  const long long q = n_robots / n;
  const long long r = n_robots - static_cast<long long>(n) * q;
  return q * (static_cast<long long>(n) * (n - 1) / 2) + r * (r - 1) / 2;
}

CaaResult caa(int n_robots, long long alpha_c) {
  const long long total_edges = static_cast<long long>(n_robots) * (n_robots - 1) / 2;
  if (alpha_c < 0 || alpha_c > total_edges) {
    throw BudgetExceeded("caa: alpha_c outside [0, N(N-1)/2]");
  }

  CaaResult out;
  out.e_r = total_edges - alpha_c;
  out.ebar.reserve(n_robots);
  for (int n = 1; n <= n_robots; ++n) {
    out.ebar.push_back(ebar(n_robots, n));
    if (out.n_max == 0 && out.e_r <= out.ebar.back()) {
      out.n_max = n;  // first n that can hold all surviving edges
    }
  }
  out.alpha_cs = n_robots - out.n_max;
  return out;
}

}  // namespace ratt
