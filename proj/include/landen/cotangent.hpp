#pragma once

// Multiple-angle cotangent polynomials: cot(m t) = P_m(cot t) / Q_m(cot t).

#include <string>
#include <vector>

#include "landen/errors.hpp"
#include "landen/polynomial.hpp"

namespace landen {

/// Row m of Pascal's triangle, built additively.
inline std::vector<Integer> binomial_row(int m) {
  std::vector<Integer> row{Integer(1)};
  for (int n = 1; n <= m; ++n) {
    std::vector<Integer> next(static_cast<std::size_t>(n) + 1, Integer(1));
    for (int k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return row;
}

/// C(n, k), zero when k < 0, n < 0 or k > n.
inline Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

struct CotangentPair {
  int m = 0;
  Polynomial<Integer> P;
  Polynomial<Integer> Q;

  /// R_m(x) = P(x) / Q(x).
  template <class S>
  S map(const S& x) const {
    return evaluate(P, x) / evaluate(Q, x);
  }
};

inline CotangentPair build_cotangent(int m) {
  if (m < 2) throw Error(ErrorCode::kInvalidOrder, "order must be at least 2, got " + std::to_string(m));
  const std::vector<Integer> row = binomial_row(m);
  // Descending coefficient k of P (power m - k) is (-1)^{k/2} C(m, k) for
  // even k; odd k feed Q at power m - k.
  std::vector<Integer> p(static_cast<std::size_t>(m) + 1, Integer(0));
  std::vector<Integer> q(static_cast<std::size_t>(m), Integer(0));
  for (int k = 0; k <= m; ++k) {
    Integer sign = (k / 2) % 2 == 0 ? 1 : -1;
    if (k % 2 == 0) {
      p[k] = sign * row[k];
    } else {
      q[k - 1] = sign * row[k];
    }
  }
  return {m, Polynomial<Integer>(std::move(p)), Polynomial<Integer>(std::move(q))};
}

}  // namespace landen
