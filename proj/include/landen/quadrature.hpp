#pragma once

// Reference integrators: the fold of the real line onto [0, 1], the
// composite trapezoidal rule, the closed form for quadratics and an adaptive
// Gauss-Legendre oracle.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "landen/errors.hpp"
#include "landen/landen.hpp"
#include "landen/polynomial.hpp"
#include "landen/scalars.hpp"

namespace landen {

/// g(t) = num(t) / den(t) on [0, 1] with primitive integer coefficients and
/// a positive leading denominator coefficient.
struct FoldedIntegrand {
  Polynomial<Rational> num;
  Polynomial<Rational> den;

  template <class S>
  S operator()(const S& t) const {
    return evaluate(num, t) / evaluate(den, t);
  }
};

namespace detail {

/// sum_k c_k (sign t)^k (1 - t)^{n-k}, with c_k the coefficient of x^k:
/// the numerator of P(sign t / (1 - t)) over (1 - t)^n.
inline Polynomial<Rational> homogenize(const Polynomial<Rational>& poly, int n, int sign) {
  const Polynomial<Rational> t({Rational(sign), Rational(0)});
  const Polynomial<Rational> one_minus_t({Rational(-1), Rational(1)});
  Polynomial<Rational> out;
  for (int k = 0; k <= std::max(poly.degree(), 0); ++k) {
    Rational c = poly.coefficient(k);
    if (c == 0) continue;
    out += t.pow(static_cast<unsigned>(k)) * one_minus_t.pow(static_cast<unsigned>(n - k)) * c;
  }
  return out;
}

inline std::pair<Polynomial<Rational>, Polynomial<Rational>> primitive_pair(Polynomial<Rational> num,
                                                                            Polynomial<Rational> den) {
  std::vector<Rational> all = num.coeffs();
  all.insert(all.end(), den.coeffs().begin(), den.coeffs().end());
  Rational scale = Rational(1) / rational_gcd(all);
  if (den.leading() < 0) scale = -scale;
  return {num * scale, den * scale};
}

}  // namespace detail

/// int_R F = int_0^1 [F(t/(1-t)) + F(t/(t-1))] / (1-t)^2 dt, as one reduced
/// fraction.
inline FoldedIntegrand fold(const RationalFunction<Rational>& f) {
  const int p = f.A.degree();
  const Polynomial<Rational> a_plus = detail::homogenize(f.A, p, 1);
  const Polynomial<Rational> a_minus = detail::homogenize(f.A, p, -1);
  const Polynomial<Rational> b_plus = detail::homogenize(f.B, p, 1);
  const Polynomial<Rational> b_minus = detail::homogenize(f.B, p, -1);
  const Polynomial<Rational> one_minus_t({Rational(-1), Rational(1)});
  Polynomial<Rational> num = b_plus * a_minus + b_minus * a_plus;
  Polynomial<Rational> den = one_minus_t * one_minus_t * a_plus * a_minus;
  if (num.is_zero()) return {num, Polynomial<Rational>::constant(Rational(1))};
  const Polynomial<Rational> common = gcd(num, den);
  num = div_exact(num, common);
  den = div_exact(den, common);
  auto [n, d] = detail::primitive_pair(std::move(num), std::move(den));
  return {std::move(n), std::move(d)};
}

enum class TrapezoidRule {
  kStandard,   // h (g_0/2 + g_1 + ... + g_{n-1} + g_n/2)
  kPublished,  // interior sum stopped at g_{n-2}
};

/// Composite trapezoidal rule with n panels on [0, 1] at `digits` precision.
inline BigFloat trapezoid(const FoldedIntegrand& g, int n, unsigned digits,
                          TrapezoidRule rule = TrapezoidRule::kStandard) {
  if (n < 1) throw std::invalid_argument("trapezoid needs at least one panel");
  PrecisionScope scope(digits);
  const Polynomial<BigFloat> num = polynomial_cast<BigFloat>(g.num);
  const Polynomial<BigFloat> den = polynomial_cast<BigFloat>(g.den);
  auto at = [&](int i) {
    const BigFloat t = BigFloat(i) / n;
    return evaluate(num, t) / evaluate(den, t);
  };
  BigFloat sum = (at(0) + at(n)) / 2;
  const int last = rule == TrapezoidRule::kStandard ? n - 1 : n - 2;
  for (int i = 1; i <= last; ++i) sum += at(i);
  return sum / n;
}

/// int dx / (a2 x^2 + a1 x + a0) = 2 pi / sqrt(4 a0 a2 - a1^2) (sign of a2).
inline BigFloat quadratic_closed_form(const Rational& a2, const Rational& a1, const Rational& a0) {
  const Rational disc = 4 * a0 * a2 - a1 * a1;
  if (disc <= 0 || a2 == 0) throw Error(ErrorCode::kRealPole, "quadratic has a real root");
  BigFloat value = 2 * pi() / sqrt(to_bigfloat(disc));
  return a2 > 0 ? value : BigFloat(-value);
}

struct GaussLegendreRule {
  std::vector<BigFloat> nodes;    // on [-1, 1]
  std::vector<BigFloat> weights;
};

/// k-point rule at the current precision, cached per (k, precision).
inline const GaussLegendreRule& gauss_legendre(int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, unsigned>, GaussLegendreRule> cache;
  const unsigned digits = PrecisionScope::current();
  std::lock_guard lock(mutex);
  auto key = std::make_pair(k, digits);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  GaussLegendreRule rule;
  const BigFloat tol = pow(BigFloat(10), -static_cast<long>(digits) + 2);
  const BigFloat pi_value = pi();
  // P_k and P_k' by the three-term recurrence.
  auto legendre = [k](const BigFloat& x) {
    BigFloat p0 = 1, p1 = x;
    for (int n = 2; n <= k; ++n) {
      BigFloat p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    BigFloat dp = k * (x * p1 - p0) / (x * x - 1);
    return std::make_pair(p1, dp);
  };
  for (int i = 1; i <= k; ++i) {
    BigFloat x = cos(pi_value * (BigFloat(i) - BigFloat(1) / 4) / (BigFloat(k) + BigFloat(1) / 2));
    BigFloat dp;
    for (int iter = 0; iter < 200; ++iter) {
      auto [p, d] = legendre(x);
      dp = d;
      BigFloat dx = p / d;
      x -= dx;
      if (abs(dx) <= tol) break;
    }
    dp = legendre(x).second;
    rule.nodes.push_back(x);
    rule.weights.push_back(2 / ((1 - x * x) * dp * dp));
  }
  return cache.emplace(key, std::move(rule)).first->second;
}

struct OracleResult {
  BigFloat value;
  double digits_agreed = 0;  // agreement between the last two refinement levels
  int panels = 0;
};

inline constexpr int kOracleDepthCap = 40;

/// Integral of F over the real line: fold, then adaptive Gauss-Legendre with
/// bisection until each panel agrees with its two halves to D - 10 digits.
inline OracleResult oracle_integral(const RationalFunction<Rational>& f, unsigned digits) {
  const FoldedIntegrand g = fold(f);
  PrecisionScope scope(digits + 10);
  const int k = static_cast<int>(digits * 3 / 5) + 10;
  const GaussLegendreRule& rule = gauss_legendre(k);
  const Polynomial<BigFloat> num = polynomial_cast<BigFloat>(g.num);
  const Polynomial<BigFloat> den = polynomial_cast<BigFloat>(g.den);

  auto panel = [&](const BigFloat& a, const BigFloat& b) {
    const BigFloat half = (b - a) / 2, mid = (a + b) / 2;
    BigFloat sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const BigFloat t = mid + half * rule.nodes[i];
      sum += rule.weights[i] * evaluate(num, t) / evaluate(den, t);
    }
    return sum * half;
  };

  const BigFloat rough = panel(BigFloat(0), BigFloat(1));
  BigFloat magnitude = abs(rough);
  if (magnitude == 0) magnitude = 1;
  const BigFloat target = magnitude * pow(BigFloat(10), -static_cast<long>(digits) + 10);

  OracleResult out;
  BigFloat total_gap = 0;
  struct Pending {
    BigFloat a, b, whole, tol;
    int depth;
  };
  std::vector<Pending> stack{{BigFloat(0), BigFloat(1), rough, target, 0}};
  BigFloat total = 0;
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    const BigFloat mid = (cur.a + cur.b) / 2;
    BigFloat left = panel(cur.a, mid);
    BigFloat right = panel(mid, cur.b);
    BigFloat gap = abs(left + right - cur.whole);
    if (gap <= cur.tol) {
      total += left + right;
      total_gap += gap;
      out.panels += 2;
      continue;
    }
    if (cur.depth + 1 >= kOracleDepthCap) {
      throw Error(ErrorCode::kNoConvergence, "adaptive refinement hit the depth cap");
    }
    stack.push_back({mid, cur.b, std::move(right), cur.tol / 2, cur.depth + 1});
    stack.push_back({cur.a, mid, std::move(left), cur.tol / 2, cur.depth + 1});
  }
  out.value = total;
  if (total_gap == 0) {
    out.digits_agreed = digits + 10;
  } else {
    BigFloat ratio = total_gap / abs(total == 0 ? BigFloat(1) : total);
    out.digits_agreed = std::min<double>(digits + 10, -static_cast<double>(log10(ratio)));
  }
  return out;
}

}  // namespace landen
