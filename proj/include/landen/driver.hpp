#pragma once

// Iterates the Landen map and reads off phi = F_n(0), which tends to I/pi.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "landen/errors.hpp"
#include "landen/landen.hpp"
#include "landen/scalars.hpp"
#include "landen/symbolic.hpp"

namespace landen {

enum class Mode { kExact, kFloat };

/// Fixed number of steps, or iterate until |phi_n - phi_{n-1}| <= tol (a
/// heuristic, not an error bound) with a cap on the number of steps.
struct StopRule {
  bool by_tolerance = false;
  int steps = 0;
  Rational tol = 0;
  int max_steps = 64;

  static StopRule fixed(int n) { return {false, n, Rational(0), n}; }
  static StopRule tolerance(const Rational& tol, int max_steps = 64) { return {true, 0, tol, max_steps}; }
};

struct RunConfig {
  int m = 2;
  Mode mode = Mode::kExact;
  unsigned digits = 30;
  StopRule stop = StopRule::fixed(6);
  /// Continued-fraction compression tolerance, exact mode only.
  std::optional<Rational> compress;
  /// Defaults to monic for quadratics and gcd otherwise.
  std::optional<Normalization> normalize;
  /// Apply precomputed formulas instead of running the pipeline each step.
  const LandenMap* formulas = nullptr;
};

template <CommutativeRing R>
struct TraceStep {
  int n = 0;
  std::vector<R> coeffs;
  R phi;
  BigFloat approx;
  Integer height_max = 0;  // exact mode only
  R delta;                 // |phi_n - phi_{n-1}|, zero at n = 0
};

template <CommutativeRing R>
struct IterationTrace {
  std::vector<TraceStep<R>> steps;
};

template <CommutativeRing R>
struct IntegrationResult {
  R phi;
  BigFloat approx;  // pi * phi at the run precision
  unsigned digits = 0;
  IterationTrace<R> trace;
  RationalFunction<R> final_function;
};

/// F(0) = b_{p-2} / a_p.
template <Field R>
R phi(const RationalFunction<R>& f) {
  const R den = f.A.trailing();
  if (RingOps<R>::is_zero(den)) throw Error(ErrorCode::kZeroTrailing, "denominator vanishes at 0");
  return f.B.trailing() / den;
}

inline Normalization default_normalization(int p) { return p == 2 ? Normalization::kMonic : Normalization::kGcd; }

inline Integer max_height(const std::vector<Rational>& coeffs) {
  Integer best = 0;
  for (const auto& c : coeffs) best = std::max(best, height(c));
  return best;
}

template <Field R>
RationalFunction<R> landen_step(const RationalFunction<R>& f, const RunConfig& cfg, Normalization mode) {
  if (cfg.formulas != nullptr) {
    if (cfg.formulas->p != f.p() || cfg.formulas->m != cfg.m) {
      throw Error(ErrorCode::kArityMismatch, "precomputed formulas are for p=" + std::to_string(cfg.formulas->p) +
                                                 " m=" + std::to_string(cfg.formulas->m));
    }
    return normalize(from_coefficients(landen::apply(*cfg.formulas, to_coefficients(f)), f.p()), mode);
  }
  return transform(f, cfg.m, mode);
}

/// Algorithm 2. Exact mode (R = Rational) keeps phi rational and multiplies
/// by pi only when rendering; float mode (R = BigFloat) runs entirely at
/// cfg.digits.
template <Field R>
IntegrationResult<R> integrate(const RationalFunction<R>& input, const RunConfig& cfg) {
  constexpr bool exact = std::is_same_v<R, Rational>;
  if (!exact && cfg.compress) throw std::invalid_argument("compression requires exact mode");
  PrecisionScope scope(cfg.digits);
  validate(input);
  const Normalization mode = cfg.normalize.value_or(default_normalization(input.p()));

  IntegrationResult<R> result;
  result.digits = cfg.digits;
  RationalFunction<R> f = input;
  auto record = [&](int n, const R& previous_phi) {
    TraceStep<R> step;
    step.n = n;
    step.coeffs = to_coefficients(f);
    step.phi = phi(f);
    step.approx = pi() * scalar_cast<BigFloat>(step.phi);
    if constexpr (exact) step.height_max = max_height(step.coeffs);
    step.delta = n == 0 ? RingOps<R>::zero() : R(abs(step.phi - previous_phi));
    result.trace.steps.push_back(std::move(step));
  };
  record(0, RingOps<R>::zero());

  int growing = 0;
  for (int n = 1;; ++n) {
    const auto& last = result.trace.steps.back();
    if (!cfg.stop.by_tolerance && last.n >= cfg.stop.steps) break;
    if (cfg.stop.by_tolerance) {
      if (last.n >= 1 && last.delta <= scalar_cast<R>(cfg.stop.tol)) break;
      if (last.n >= cfg.stop.max_steps) break;
    }
    f = landen_step(f, cfg, mode);
    if constexpr (exact) {
      if (cfg.compress) {
        f = normalize(f, Normalization::kMonic);
        std::vector<Rational> v = to_coefficients(f);
        for (auto& c : v) c = cf_compress(c, *cfg.compress);
        f = from_coefficients(v, f.p());
      }
    }
    R previous = result.trace.steps.back().phi;
    R previous_delta = result.trace.steps.back().delta;
    record(n, previous);
    if constexpr (!exact) {
      if (n >= 2 && result.trace.steps.back().delta > previous_delta) {
        if (++growing >= 3) {
          throw Error(ErrorCode::kDivergenceSuspected, "step size grew for 3 consecutive steps");
        }
      } else {
        growing = 0;
      }
    }
  }
  result.phi = result.trace.steps.back().phi;
  result.approx = result.trace.steps.back().approx;
  result.final_function = f;
  return result;
}

/// |pi phi_n - I| / |I| for every step, at the precision of reference.
template <CommutativeRing R>
std::vector<BigFloat> relative_errors(const IterationTrace<R>& trace, const BigFloat& reference) {
  PrecisionScope scope(static_cast<unsigned>(reference.precision()));
  const BigFloat pi_value = pi();
  std::vector<BigFloat> out;
  for (const auto& step : trace.steps) {
    BigFloat value = pi_value * scalar_cast<BigFloat>(step.phi);
    out.push_back(abs(value - reference) / abs(reference));
  }
  return out;
}

/// Median of log(e_{k+1}) / log(e_k) over consecutive pairs with
/// 0 < e_k < 1, e_{k+1} > 0 and e_{k+1} != e_k. Needs two such pairs.
inline double estimate_order(const std::vector<BigFloat>& errors) {
  std::vector<double> ratios;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    const BigFloat& a = errors[k];
    const BigFloat& b = errors[k + 1];
    if (a <= 0 || a >= 1 || b <= 0 || a == b) continue;
    ratios.push_back(static_cast<double>(log(b) / log(a)));
  }
  if (ratios.size() < 2) {
    throw Error(ErrorCode::kInsufficientData, "need at least three consecutive informative error values");
  }
  std::sort(ratios.begin(), ratios.end());
  const std::size_t mid = ratios.size() / 2;
  return ratios.size() % 2 == 1 ? ratios[mid] : (ratios[mid - 1] + ratios[mid]) / 2;
}

/// Order estimate from the relative errors of steps first..last.
template <CommutativeRing R>
double estimate_order(const IterationTrace<R>& trace, const BigFloat& reference, int first, int last) {
  std::vector<BigFloat> all = relative_errors(trace, reference);
  std::vector<BigFloat> window;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (trace.steps[i].n >= first && trace.steps[i].n <= last) window.push_back(all[i]);
  }
  return estimate_order(window);
}

/// Distance of the normalized quadratic state from its limit (eps, 0, eps).
inline BigFloat epsilon_error(const QuadraticState<BigFloat>& s, const BigFloat& eps) {
  const BigFloat u = s.a0 / s.b0 - eps;
  const BigFloat v = s.a1 / s.b0;
  const BigFloat w = s.a2 / s.b0 - eps;
  return sqrt(u * u + v * v + w * w);
}

/// Iterates 1/((x-2)^2 + eps^2), whose integral is pi/eps, and returns
/// err_0..err_n. Order 2 uses the closed-form quadratic map; other orders run
/// the general pipeline with p = 2.
inline std::vector<BigFloat> epsilon_study(const Rational& eps, int m, int n_steps, unsigned digits) {
  if (eps <= 0) throw std::invalid_argument("epsilon must be positive");
  if (m < 2) throw Error(ErrorCode::kInvalidOrder, "order must be at least 2");
  PrecisionScope scope(digits);
  const BigFloat e = to_bigfloat(eps);
  QuadraticState<BigFloat> s{to_bigfloat(Rational(4) + eps * eps), BigFloat(-4), BigFloat(1), BigFloat(1)};
  std::vector<BigFloat> errors{epsilon_error(s, e)};
  for (int n = 1; n <= n_steps; ++n) {
    if (m == 2) {
      s = make_monic(quadratic_map(s));
    } else {
      s = to_quadratic_state(transform(from_quadratic_state(s), m, Normalization::kMonic));
    }
    errors.push_back(epsilon_error(s, e));
    // The error is a difference of O(1 + eps) quantities; below the working
    // precision it is rounding noise.
    const BigFloat floor_value = pow(BigFloat(10), -static_cast<long>(digits) + 5) *
                                 std::max({BigFloat(1), BigFloat(abs(s.a0 / s.b0)), BigFloat(abs(s.a2 / s.b0))});
    if (errors.back() <= floor_value) {
      throw Error(ErrorCode::kPrecisionExhausted, "err_" + std::to_string(n) + " is below the resolution of " +
                                                      std::to_string(digits) + " digits");
    }
  }
  return errors;
}

}  // namespace landen
