#pragma once

// One rational Landen step: F = B/A of even degree p is mapped to J/H with
// the same integral over the real line, through the resultant H, the
// cotangent expansion E = sum h_i P^{p-i} Q^i, Z = E/A, C = B Z and a fixed
// linear map C -> J.

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "landen/cotangent.hpp"
#include "landen/errors.hpp"
#include "landen/multipoly.hpp"
#include "landen/polynomial.hpp"
#include "landen/resultant.hpp"
#include "landen/scalars.hpp"
#include "landen/sturm.hpp"

namespace landen {

/// B(x)/A(x), both descending. p = deg A.
template <CommutativeRing R>
struct RationalFunction {
  Polynomial<R> B;
  Polynomial<R> A;

  int p() const { return A.degree(); }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

struct PipelineDims {
  int p = 0;
  int m = 0;
  int r = 0;       // deg Z = p(m-1)
  int s = 0;       // deg C = mp - 2
  int nu = 0;      // p/2
  int lambda = 0;  // (mp-2)/2

  static PipelineDims make(int p, int m) {
    if (m < 2) throw Error(ErrorCode::kInvalidOrder, "order must be at least 2, got " + std::to_string(m));
    if (p < 2 || p % 2 != 0) {
      throw Error(ErrorCode::kOddDegree, "denominator degree must be even and at least 2, got " + std::to_string(p));
    }
    return {p, m, p * (m - 1), m * p - 2, p / 2, (m * p - 2) / 2};
  }
};

enum class Normalization {
  kNone,   // raw J/H
  kGcd,    // divide all 2p coefficients by their gcd (exact mode)
  kMonic,  // denominator leading coefficient 1
};

/// Checks the structural invariants; in exact mode also that A has no real
/// root. Returns f unchanged when valid.
template <CommutativeRing R>
const RationalFunction<R>& validate(const RationalFunction<R>& f) {
  const int p = f.A.degree();
  if (f.A.is_zero() || p < 2 || p % 2 != 0) {
    throw Error(ErrorCode::kOddDegree,
                "denominator degree must be even and at least 2, got " + std::to_string(f.A.is_zero() ? -1 : p));
  }
  if (!f.B.is_zero() && f.B.degree() > p - 2) {
    throw Error(ErrorCode::kDegreeGap, "numerator degree " + std::to_string(f.B.degree()) +
                                           " exceeds denominator degree minus 2 (" + std::to_string(p - 2) + ")");
  }
  if (RingOps<R>::is_zero(f.A.trailing())) {
    throw Error(ErrorCode::kZeroTrailingCoeff, "denominator has zero constant coefficient");
  }
  if constexpr (std::is_same_v<R, Rational>) {
    if (int roots = sturm_real_root_count(f.A); roots > 0) {
      throw Error(ErrorCode::kRealPole, "denominator has " + std::to_string(roots) + " real root(s)");
    }
  }
  return f;
}

// ---------------------------------------------------------------- Step 1

/// H(x) = Res_z(A(z), P_m(z) - x Q_m(z)) by evaluation at x = 0, 1, -1, 2, ...
/// and interpolation.
template <Field R>
Polynomial<R> step1_H(const Polynomial<R>& A, int m) {
  const CotangentPair pair = build_cotangent(m);
  const Polynomial<R> P = polynomial_cast<R>(pair.P);
  const Polynomial<R> Q = polynomial_cast<R>(pair.Q);
  const auto count = static_cast<std::size_t>(A.degree()) + 1;
  std::vector<R> xs, ys;
  for (long point : interpolation_points(count)) {
    R x = RingOps<R>::from_int(point);
    ys.push_back(resultant(A, P - Q * x));
    xs.push_back(std::move(x));
  }
  return interpolate(xs, ys);
}

/// Same resultant with indeterminate coefficients: P_m - x Q_m is monic in
/// z, so H is the norm of A in R[x][z]/(P_m - x Q_m), a division-free
/// determinant.
inline Polynomial<MultiPoly> step1_H(const Polynomial<MultiPoly>& A, int m) {
  using X = Polynomial<MultiPoly>;
  const CotangentPair pair = build_cotangent(m);
  std::vector<X> alpha;
  for (const auto& a : A.coeffs()) alpha.push_back(X::constant(a));
  std::vector<X> beta;
  for (int power = m; power >= 0; --power) {
    beta.push_back(X({MultiPoly(Integer(-pair.Q.coefficient(power))), MultiPoly(pair.P.coefficient(power))}));
  }
  return resultant_by_norm(Polynomial<X>(std::move(alpha)), Polynomial<X>(std::move(beta)));
}

// ---------------------------------------------------------------- Steps 2-4

/// E(x) = sum_i h_i P_m(x)^{p-i} Q_m(x)^i, h_i descending coefficients of H.
template <CommutativeRing R>
Polynomial<R> step2_E(const Polynomial<R>& H, const CotangentPair& pair, const PipelineDims& dims) {
  std::vector<Polynomial<Integer>> p_pow{Polynomial<Integer>::constant(Integer(1))};
  std::vector<Polynomial<Integer>> q_pow{Polynomial<Integer>::constant(Integer(1))};
  for (int k = 1; k <= dims.p; ++k) {
    p_pow.push_back(p_pow.back() * pair.P);
    q_pow.push_back(q_pow.back() * pair.Q);
  }
  Polynomial<R> E;
  for (int i = 0; i <= dims.p; ++i) {
    R h = H.coefficient(dims.p - i);
    if (RingOps<R>::is_zero(h)) continue;
    E += polynomial_cast<R>(p_pow[dims.p - i] * q_pow[i]) * h;
  }
  return E;
}

/// Z = E / A, exact.
template <CommutativeRing R>
Polynomial<R> step3_Z(const Polynomial<R>& E, const Polynomial<R>& A) {
  return div_exact(E, A);
}

template <CommutativeRing R>
Polynomial<R> step4_C(const Polynomial<R>& B, const Polynomial<R>& Z) {
  return B * Z;
}

// ---------------------------------------------------------------- Steps 5-7

/// T_x(a, b) = sum_{j=0}^{x} (-1)^{a-x+j} C(a, x-j) C(b, j); zero for x < 0.
inline Integer T(long x, long a, long b) {
  Integer sum = 0;
  for (long j = 0; j <= x; ++j) {
    Integer term = binomial(a, x - j) * binomial(b, j);
    if (term == 0) continue;
    if ((a - x + j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

namespace detail {

inline Rational signed_unit(long exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

inline void require(bool ok, const char* what) {
  if (!ok) throw std::out_of_range(what);
}

}  // namespace detail

/// M1 divided by c_{2j}.
inline Rational m1_weight(long j, long alpha, long beta, long gamma, const PipelineDims& d) {
  detail::require(j >= 0 && j <= d.lambda, "M1: j out of range");
  detail::require(alpha >= 1 && alpha <= d.nu - 1, "M1: alpha out of range");
  detail::require(beta >= 0 && beta <= alpha, "M1: beta out of range");
  detail::require(gamma >= 0 && gamma <= d.nu - 1, "M1: gamma out of range");
  const long s = d.s;
  Rational w = detail::signed_unit(j + alpha - beta);
  w *= Rational(Integer(mp::pow(Integer(2), static_cast<unsigned>(2 * (alpha - beta)))) * alpha, Integer(2 * alpha - beta));
  w *= Rational(binomial(2 * alpha - beta, beta) * binomial(d.nu - alpha - 1 + beta, gamma));
  w *= Rational(T(d.lambda + alpha * d.m, 2 * j, s - 2 * j) + T(d.lambda - alpha * d.m, 2 * j, s - 2 * j));
  return w;
}

/// M2 divided by c_{2j+1}.
inline Rational m2_weight(long j, long alpha, long beta, long gamma, const PipelineDims& d) {
  detail::require(j >= 0 && j <= d.lambda - 1, "M2: j out of range");
  detail::require(alpha >= 1 && alpha <= d.nu - 1, "M2: alpha out of range");
  detail::require(beta >= 0 && beta <= alpha - 1, "M2: beta out of range");
  detail::require(gamma >= 0 && gamma <= d.nu - 2, "M2: gamma out of range");
  const long s = d.s;
  Rational w = detail::signed_unit(j + beta);
  w *= Rational(Integer(mp::pow(Integer(2), static_cast<unsigned>(2 * beta + 1))));
  w *= Rational(binomial(alpha + beta, 2 * beta + 1) * binomial(d.nu - 2 - beta, gamma));
  w *= Rational(T(d.lambda + alpha * d.m, 2 * j + 1, s - 2 * j - 1) - T(d.lambda - alpha * d.m, 2 * j + 1, s - 2 * j - 1));
  return w;
}

template <Field R>
R M1(long j, long alpha, long beta, long gamma, const PipelineDims& d, const std::vector<R>& c) {
  R w = scalar_cast<R>(m1_weight(j, alpha, beta, gamma, d));
  return c.at(static_cast<std::size_t>(2 * j)) * w;
}

template <Field R>
R M2(long j, long alpha, long beta, long gamma, const PipelineDims& d, const std::vector<R>& c) {
  R w = scalar_cast<R>(m2_weight(j, alpha, beta, gamma, d));
  return c.at(static_cast<std::size_t>(2 * j + 1)) * w;
}

/// Step 7 as a matrix: row k (power x^k, k = 0..p-2) holds the weights of
/// c_0..c_s in the coefficient of x^k of J, the 1/2^s already applied.
using Step7Weights = std::vector<std::vector<Rational>>;

inline Step7Weights compute_step7_weights(const PipelineDims& d) {
  const long nu = d.nu, lambda = d.lambda;
  Step7Weights w(static_cast<std::size_t>(d.p - 1), std::vector<Rational>(static_cast<std::size_t>(d.s) + 1));
  auto at = [&](long power, long index) -> Rational& {
    return w[static_cast<std::size_t>(power)][static_cast<std::size_t>(index)];
  };
  for (long gamma = 0; gamma <= nu - 1; ++gamma) {
    for (long j = 0; j <= lambda; ++j) {
      at(2 * gamma, 2 * j) += detail::signed_unit(j) * Rational(binomial(nu - 1, gamma) * T(lambda, 2 * j, d.s - 2 * j));
    }
  }
  for (long gamma = 0; gamma <= nu - 2; ++gamma) {
    for (long j = 0; j <= lambda; ++j) {
      for (long alpha = 1; alpha <= nu - 1 - gamma; ++alpha) {
        for (long beta = 0; beta <= alpha; ++beta) at(2 * gamma, 2 * j) += m1_weight(j, alpha, beta, gamma, d);
      }
    }
  }
  for (long gamma = 1; gamma <= nu - 1; ++gamma) {
    for (long j = 0; j <= lambda; ++j) {
      for (long alpha = nu - gamma; alpha <= nu - 1; ++alpha) {
        for (long beta = alpha - nu + gamma + 1; beta <= alpha; ++beta) {
          at(2 * gamma, 2 * j) += m1_weight(j, alpha, beta, gamma, d);
        }
      }
    }
  }
  for (long gamma = 0; gamma <= nu - 2; ++gamma) {
    for (long j = 0; j <= lambda - 1; ++j) {
      for (long alpha = 1; alpha <= nu - 1 - gamma; ++alpha) {
        for (long beta = 0; beta <= alpha - 1; ++beta) at(2 * gamma + 1, 2 * j + 1) += m2_weight(j, alpha, beta, gamma, d);
      }
    }
  }
  for (long gamma = 1; gamma <= nu - 2; ++gamma) {
    for (long j = 0; j <= lambda - 1; ++j) {
      for (long alpha = nu - gamma; alpha <= nu - 1; ++alpha) {
        for (long beta = 0; beta <= alpha - 1; ++beta) at(2 * gamma + 1, 2 * j + 1) += m2_weight(j, alpha, beta, gamma, d);
      }
    }
  }
  const Rational scale(Integer(1), Integer(mp::pow(Integer(2), static_cast<unsigned>(d.s))));
  for (auto& row : w) {
    for (auto& x : row) x *= scale;
  }
  return w;
}

/// Cached per (p, m); safe to call from several threads.
inline const Step7Weights& step7_weights(const PipelineDims& d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, Step7Weights> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(d.p, d.m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_step7_weights(d)).first;
  return it->second;
}

/// J from the descending coefficients c_0..c_s of C.
template <CommutativeRing R>
Polynomial<R> step7_J(const std::vector<R>& c, const PipelineDims& d) {
  if (c.size() != static_cast<std::size_t>(d.s) + 1) {
    throw std::invalid_argument("step7_J: expected " + std::to_string(d.s + 1) + " coefficients");
  }
  const Step7Weights& w = step7_weights(d);
  std::vector<R> ascending;
  if constexpr (RingOps<R>::is_field) {
    for (const auto& row : w) {
      R sum = RingOps<R>::zero();
      for (std::size_t t = 0; t < row.size(); ++t) {
        if (row[t] != 0 && !RingOps<R>::is_zero(c[t])) sum += c[t] * scalar_cast<R>(row[t]);
      }
      ascending.push_back(std::move(sum));
    }
  } else {
    // Integer weights over a common denominator, then one exact division.
    Integer common = 1;
    for (const auto& row : w) {
      for (const auto& x : row) common = lcm(common, denominator_of(x));
    }
    for (const auto& row : w) {
      R sum = RingOps<R>::zero();
      for (std::size_t t = 0; t < row.size(); ++t) {
        if (row[t] == 0) continue;
        Integer k = numerator_of(row[t]) * (common / denominator_of(row[t]));
        sum += c[t] * R(k);
      }
      ascending.push_back(RingOps<R>::exact_div(sum, R(common)));
    }
  }
  return Polynomial<R>::from_ascending(std::move(ascending));
}

// ---------------------------------------------------------------- Step 8

/// Intermediate polynomials of one step, kept for inspection.
template <CommutativeRing R>
struct PipelineStages {
  PipelineDims dims;
  Polynomial<R> H, E, Z, C, J;
};

template <CommutativeRing R>
PipelineStages<R> run_pipeline(const Polynomial<R>& B, const Polynomial<R>& A, int m) {
  PipelineStages<R> st;
  st.dims = PipelineDims::make(A.degree(), m);
  const CotangentPair pair = build_cotangent(m);
  st.H = step1_H(A, m);
  st.E = step2_E(st.H, pair, st.dims);
  st.Z = step3_Z(st.E, A);
  st.C = step4_C(B, st.Z);
  st.J = step7_J(st.C.padded(st.dims.s), st.dims);
  return st;
}

inline Rational rational_gcd(const std::vector<Rational>& values) {
  Integer num = 0, den = 1;
  for (const auto& v : values) {
    if (v == 0) continue;
    num = gcd(num, Integer(abs(numerator_of(v))));
    den = lcm(den, denominator_of(v));
  }
  return num == 0 ? Rational(1) : Rational(num, den);
}

template <Field R>
RationalFunction<R> normalize(RationalFunction<R> f, Normalization mode) {
  if (mode == Normalization::kNone || f.A.is_zero()) return f;
  R divisor;
  if constexpr (std::is_same_v<R, Rational>) {
    if (mode == Normalization::kGcd) {
      std::vector<Rational> all = f.A.coeffs();
      all.insert(all.end(), f.B.coeffs().begin(), f.B.coeffs().end());
      divisor = rational_gcd(all);
    } else {
      divisor = f.A.leading();
    }
  } else {
    divisor = f.A.leading();  // float mode is always monic
  }
  R inverse = RingOps<R>::one() / divisor;
  return {f.B * inverse, f.A * inverse};
}

/// F_{1,m} = J/H.
template <Field R>
RationalFunction<R> transform(const RationalFunction<R>& f, int m, Normalization mode = Normalization::kNone) {
  PipelineStages<R> st = run_pipeline(f.B, f.A, m);
  return normalize(RationalFunction<R>{std::move(st.J), std::move(st.H)}, mode);
}

// ---------------------------------------------------------------- coefficient vectors

/// (a_0..a_p, b_0..b_{p-2}), both descending.
template <CommutativeRing R>
std::vector<R> to_coefficients(const RationalFunction<R>& f) {
  const int p = f.A.degree();
  std::vector<R> out = f.A.padded(p);
  std::vector<R> b = f.B.padded(p - 2);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

template <CommutativeRing R>
RationalFunction<R> from_coefficients(const std::vector<R>& v, int p) {
  if (p < 2 || v.size() != static_cast<std::size_t>(2 * p)) {
    throw Error(ErrorCode::kArityMismatch, "expected " + std::to_string(2 * p) + " coefficients, got " +
                                               std::to_string(v.size()));
  }
  auto split = v.begin() + p + 1;
  return {Polynomial<R>(std::vector<R>(split, v.end())), Polynomial<R>(std::vector<R>(v.begin(), split))};
}

// ---------------------------------------------------------------- degree 2

/// b0 / (a2 x^2 + a1 x + a0): CONSTANT coefficient first.
template <CommutativeRing R>
struct QuadraticState {
  R a0, a1, a2, b0;
  friend bool operator==(const QuadraticState&, const QuadraticState&) = default;
};

/// The closed-form order-2 step on quadratics.
template <CommutativeRing R>
QuadraticState<R> quadratic_map(const QuadraticState<R>& s) {
  return {(s.a0 - s.a1 + s.a2) * (s.a0 + s.a1 + s.a2), R(2) * s.a1 * (s.a0 - s.a2), R(4) * s.a0 * s.a2,
          R(2) * s.b0 * (s.a0 + s.a2)};
}

template <Field R>
QuadraticState<R> make_monic(const QuadraticState<R>& s) {
  return {s.a0 / s.a2, s.a1 / s.a2, RingOps<R>::one(), s.b0 / s.a2};
}

template <CommutativeRing R>
QuadraticState<R> to_quadratic_state(const RationalFunction<R>& f) {
  if (f.A.degree() != 2) throw Error(ErrorCode::kArityMismatch, "quadratic state needs a degree-2 denominator");
  return {f.A.coefficient(0), f.A.coefficient(1), f.A.coefficient(2), f.B.coefficient(0)};
}

template <CommutativeRing R>
RationalFunction<R> from_quadratic_state(const QuadraticState<R>& s) {
  return {Polynomial<R>::constant(s.b0), Polynomial<R>({s.a2, s.a1, s.a0})};
}

}  // namespace landen
