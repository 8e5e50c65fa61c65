#pragma once

#include <cstddef>
#include <vector>

#include "landen/polynomial.hpp"

namespace landen {

inline std::vector<Polynomial<Rational>> sturm_chain(const Polynomial<Rational>& p) {
  std::vector<Polynomial<Rational>> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    chain.push_back(-divmod(a, b).remainder);
  }
  chain.pop_back();
  return chain;
}

/// Number of distinct real roots of p.
inline int sturm_real_root_count(const Polynomial<Rational>& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm count of the zero polynomial");
  if (p.degree() == 0) return 0;
  auto changes = [](const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  std::vector<int> at_minus, at_plus;
  for (const auto& q : sturm_chain(p)) {
    int lead = q.leading() > 0 ? 1 : -1;
    at_plus.push_back(lead);
    at_minus.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return changes(at_minus) - changes(at_plus);
}

}  // namespace landen
