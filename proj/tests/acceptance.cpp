// Acceptance runner: one PASS/FAIL line per criterion, followed by indented
// measurements. Tolerances are fixed here.

#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "goldens.hpp"
#include "support.hpp"

using namespace landen;
using landen::testing::agreement_digits;
using landen::testing::expr;
using landen::testing::quadratic_example;
using landen::testing::quartic_example;
using landen::testing::quartic_integral;
using landen::testing::random_integrand;
using landen::testing::random_rational;
namespace goldens = landen::testing::goldens;

namespace {

struct Report {
  std::string title;
  std::vector<std::string> notes;
};
Report report;

void criterion(std::string title) { report = {std::move(title), {}}; }

template <class... Args>
void note(Args&&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  report.notes.push_back(out.str());
}

std::string sci(const BigFloat& x, int digits = 6) { return x.str(digits, std::ios::scientific); }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// "AC01_Name" -> "AC1", "AC04b_Name" -> "AC4b".
std::string label_of(const std::string& test_name) {
  std::string id = test_name.substr(0, test_name.find('_'));
  std::size_t digits = 2;
  while (digits < id.size() && id[digits] == '0') ++digits;
  return "AC" + id.substr(digits);
}

class CriterionPrinter : public ::testing::EmptyTestEventListener {
 public:
  void OnTestEnd(const ::testing::TestInfo& info) override {
    const bool ok = info.result()->Passed();
    ok ? ++passed_ : ++failed_;
    std::cout << label_of(info.name()) << (ok ? " PASS " : " FAIL ") << report.title << "\n";
    for (const auto& line : report.notes) std::cout << "    " << line << "\n";
    std::cout << std::flush;
  }
  void OnTestProgramEnd(const ::testing::UnitTest&) override {
    std::cout << "acceptance: " << passed_ << " passed, " << failed_ << " failed\n";
  }

 private:
  int passed_ = 0;
  int failed_ = 0;
};

RunConfig steps(int n, int m, unsigned digits) {
  RunConfig cfg;
  cfg.m = m;
  cfg.digits = digits;
  cfg.stop = StopRule::fixed(n);
  return cfg;
}

/// Descending coefficient k of a polynomial of degree n.
template <class R>
R coef(const Polynomial<R>& f, int n, int k) {
  return f.coefficient(n - k);
}

/// True when |value - printed| is at most one unit in the last digit of
/// `printed` (a decimal string such as "3.1505e-8").
bool within_last_digit(const BigFloat& value, const std::string& printed) {
  const std::string mantissa = printed.substr(0, printed.find_first_of("eE"));
  const long exponent = printed.find_first_of("eE") == std::string::npos
                            ? 0
                            : std::stol(printed.substr(printed.find_first_of("eE") + 1));
  const std::size_t dot = mantissa.find('.');
  const long decimals = dot == std::string::npos ? 0 : static_cast<long>(mantissa.size() - dot - 1);
  const BigFloat unit = pow(BigFloat(10), exponent - decimals);
  return abs(value - BigFloat(printed)) <= unit;
}

/// One unit in the third significant digit of `printed`.
bool within_third_digit(const BigFloat& value, const BigFloat& printed) {
  const BigFloat unit = pow(BigFloat(10), floor(log10(abs(printed))) - 2);
  return abs(value - printed) <= unit;
}

TEST(Acceptance, AC01_GoldenSexticFormulas) {
  criterion("golden formulas p=6 m=2: h, e, Z, c, d");
  Stopwatch clock;
  const int p = 6;
  auto st = generate_stages(p, 2);
  const LandenMap map = generate(p, 2);
  const double elapsed = clock.seconds();
  note("generation ", std::fixed, std::setprecision(2), elapsed, " s, shared scale ", map.scale.str());
  EXPECT_LT(elapsed, 10.0);

  int mismatches = 0;
  auto check = [&](const MultiPoly& got, const MultiPoly& want, const std::string& name) {
    EXPECT_EQ(got, want) << name;
    if (got != want) ++mismatches;
  };
  for (int k = 0; k <= 6; ++k) check(map.h[k] * MultiPoly(map.scale), expr(goldens::kSexticH[k], p), "h" + std::to_string(k));
  for (int k = 0; k <= 12; ++k) check(coef(st.E, 12, k), goldens::sextic_e(k), "e" + std::to_string(k));
  for (int k = 0; k <= 6; ++k) check(coef(st.Z, 6, k), expr(goldens::kSexticZ[k], p), "z" + std::to_string(k));
  for (int k = 0; k <= 10; ++k) check(coef(st.C, 10, k), expr(goldens::kSexticC[k], p), "c" + std::to_string(k));
  for (int k = 0; k <= 4; ++k) check(map.d[k] * MultiPoly(map.scale), expr(goldens::kSexticD[k], p), "d" + std::to_string(k));
  check(map.d[4], expr(goldens::kSexticD4Printed, p) + expr(goldens::kSexticD4Missing, p), "d4 vs printed");
  note("35 formulas compared, ", mismatches, " mismatches");
  note("odd e pairs carry the sign forced by E = A Z; printed d4 lacks -2a5b3");
}

TEST(Acceptance, AC02_GoldenQuarticDenominator) {
  criterion("golden H for p=4 m=2");
  auto H = step1_H(Polynomial<MultiPoly>({MultiPoly::variable(0), MultiPoly::variable(1), MultiPoly::variable(2),
                                          MultiPoly::variable(3), MultiPoly::variable(4)}),
                   2);
  ASSERT_EQ(H.degree(), 4);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(coef(H, 4, k), expr(goldens::kQuarticH[k], 4)) << "h" << k;
}

TEST(Acceptance, AC03_QuadraticIteratesBitExact) {
  criterion("three monic rational iterations on 1/(x^2+4x+15)");
  auto r = integrate(quadratic_example(), steps(3, 2, 40));
  ASSERT_EQ(r.trace.steps.size(), 4u);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto& row = goldens::kQuadraticIterates[n - 1];
    std::vector<Rational> want{1, parse_rational(row[1]), parse_rational(row[2]), parse_rational(row[0])};
    EXPECT_EQ(r.trace.steps[n].coeffs, want) << "n=" << n;
    note("n=", n, ": (", row[0], ", ", row[1], ", ", row[2], ")",
         r.trace.steps[n].coeffs == want ? " matches" : " differs");
  }
}

TEST(Acceptance, AC04a_SixthIterateExact) {
  criterion("c6 equals the reference rational, exact mode under 5 s");
  Stopwatch clock;
  auto r = integrate(quadratic_example(), steps(6, 2, 40));
  const double elapsed = clock.seconds();
  EXPECT_EQ(r.final_function.B.trailing(), parse_rational(goldens::kQuadraticC6));
  EXPECT_EQ(r.final_function.A.leading(), 1);
  EXPECT_LT(elapsed, 5.0);
  note("runtime ", std::fixed, std::setprecision(3), elapsed, " s");
}

TEST(Acceptance, AC04b_ThirteenDigitClaim) {
  criterion("pi*c6 agrees with pi/sqrt(11) to 13 significant digits");
  auto r = integrate(quadratic_example(), steps(6, 2, 60));
  PrecisionScope scope(60);
  const BigFloat approx = pi() * to_bigfloat(r.final_function.B.trailing());
  const BigFloat exact = pi() / sqrt(BigFloat(11));
  const double digits = agreement_digits(approx, exact);
  note("pi*c6 = ", approx.str(20), ", pi/sqrt(11) = ", exact.str(20));
  note("relative error ", sci(abs(approx - exact) / exact), ", ", std::fixed, std::setprecision(2), digits,
       " digits; pi*phi6 = pi*c6/b6 differs by the same amount");
  EXPECT_GE(digits, 13.0);
}

TEST(Acceptance, AC05_QuarticRFunctions) {
  criterion("R_{1,2} and R_{2,2} of the quartic up to a constant");
  auto monic = [](const RationalFunction<Rational>& f) { return normalize(f, Normalization::kMonic); };
  auto r1 = transform(quartic_example(), 2);
  auto r2 = transform(r1, 2);
  EXPECT_EQ(monic(r1), monic(goldens::quartic_r12()));
  EXPECT_EQ(monic(r2), monic(goldens::quartic_r22()));
  Rational k1 = r1.A.leading() / goldens::quartic_r12().A.leading();
  Rational k2 = r2.A.leading() / goldens::quartic_r22().A.leading();
  note("constants: ", to_string(k1), " and ", to_string(k2));
}

TEST(Acceptance, AC06_ConvergenceOrder) {
  criterion("estimate_order on the quartic: 2 +- 0.2 (m=2), 3 +- 0.3 (m=3)");
  PrecisionScope scope(600);
  const BigFloat reference = quartic_integral();
  for (auto [m, want, band] : {std::tuple{2, 2.0, 0.2}, std::tuple{3, 3.0, 0.3}}) {
    auto r = integrate(quartic_example(), steps(5, m, 600));
    const double order = estimate_order(r.trace, reference, 3, 5);
    note("m=", m, ": ", std::fixed, std::setprecision(4), order);
    EXPECT_NEAR(order, want, band) << "m=" << m;
  }
}

TEST(Acceptance, AC07_RelativeErrorGrid) {
  criterion("relative-error grid spot checks rel(3,3) and rel(4,3)");
  // Printed relative errors, rows n = 2..5, columns m = 2..6.
  const char* printed[4][5] = {
      {"0.30314", "0.022076", "0.0021170", "2.2646e-6", "6.3257e-7"},
      {"0.058475", "0.000035272", "5.2932e-12", "2.9440e-23", "4.4813e-40"},
      {"0.0021170", "3.2713e-15", "2.0616e-47", "1.9758e-115", "3.6655e-239"},
      {"3.2700e-6", "3.6952e-45", "5.3750e-190", "3.1671e-577", "4.0442e-1434"},
  };
  const unsigned digits = 600;
  PrecisionScope scope(digits);
  const BigFloat reference = quartic_integral();
  const BigFloat floor_checked("1e-100");
  std::vector<std::vector<BigFloat>> rel(7);
  for (int m = 2; m <= 6; ++m) {
    auto r = integrate(quartic_example(), steps(5, m, digits));
    rel[m] = relative_errors(r.trace, reference);
  }
  int flagged = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int m = 2; m <= 6; ++m) {
      const std::string text = printed[n - 2][m - 2];
      const BigFloat want(text);
      std::string status;
      if (want < floor_checked && m > 4) {
        status = rel[m][n] < pow(BigFloat(10), -static_cast<long>(digits) + 20) ? "not checked, below working precision"
                                                                              : "not checked";
      } else if (within_last_digit(rel[m][n], text)) {
        status = "agrees";
      } else {
        status = "suspected typo in printed value";
        ++flagged;
      }
      note("n=", n, " m=", m, ": computed ", sci(rel[m][n]), ", printed ", text, " -> ", status);
    }
  }
  note(flagged, " printed entries disagree; the invariance suite (AC9) backs the computed values");
  EXPECT_TRUE(within_third_digit(rel[3][3], BigFloat("3.5272e-5"))) << sci(rel[3][3]);
  EXPECT_TRUE(within_third_digit(rel[3][4], BigFloat("3.2713e-15"))) << sci(rel[3][4]);
}

TEST(Acceptance, AC08_TrapezoidBaseline) {
  criterion("trapezoid errors 5.29805e-6, 3.1505e-8, 2.9445e-10 at 40 digits under 30 s");
  Stopwatch clock;
  const unsigned digits = 40;
  const FoldedIntegrand g = fold(quartic_example());
  const std::pair<int, const char*> rows[] = {{100, "5.29805e-6"}, {1000, "3.1505e-8"}, {10000, "2.9445e-10"}};
  for (auto [n, text] : rows) {
    BigFloat value = trapezoid(g, n, digits, TrapezoidRule::kPublished);
    BigFloat standard = trapezoid(g, n, digits, TrapezoidRule::kStandard);
    PrecisionScope scope(digits);
    const BigFloat exact = quartic_integral();
    const BigFloat rel = abs(value - exact) / exact;
    note("n=", n, ": ", sci(rel), " (printed ", text, "); standard rule ", sci(abs(standard - exact) / exact));
    EXPECT_TRUE(within_last_digit(rel, text)) << "n=" << n << " " << sci(rel);
  }
  const double elapsed = clock.seconds();
  note("interior sum stops at n-2 as printed; runtime ", std::fixed, std::setprecision(2), elapsed, " s");
  EXPECT_LT(elapsed, 30.0);
}

TEST(Acceptance, AC09_IntegralInvariance) {
  criterion("integral invariance: 50 integrands x m in {2,3}, 25 digits at D=40");
  std::mt19937_64 rng(2024);
  const unsigned D = 40;
  double worst = 1e9;
  int pairs = 0;
  for (int i = 0; i < 50; ++i) {
    const int p = 2 + 2 * (i % 3);
    auto f = random_integrand(rng, p, 20);
    const OracleResult before = oracle_integral(f, D);
    for (int m : {2, 3}) {
      const OracleResult after = oracle_integral(transform(f, m, Normalization::kGcd), D);
      PrecisionScope scope(D);
      const double digits = agreement_digits(after.value, before.value);
      worst = std::min(worst, digits);
      ++pairs;
      EXPECT_GE(digits, 25.0) << "integrand " << i << " p=" << p << " m=" << m;
    }
  }
  note(pairs, " pairs, worst agreement ", std::fixed, std::setprecision(1), std::min(worst, 50.0), " digits");
}

TEST(Acceptance, AC10_SymbolicNumericEquivalence) {
  criterion("apply(generate(p,m), v) equals the unnormalized transform at 50 points");
  std::mt19937_64 rng(77);
  for (auto [p, m] : {std::pair{2, 2}, {4, 2}, {6, 2}, {2, 3}}) {
    const LandenMap map = generate(p, m);
    int agree = 0;
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rational> v;
      for (int i = 0; i < 2 * p; ++i) v.push_back(random_rational(rng, 30));
      if (v[0] == 0) v[0] = 1;
      if (v[static_cast<std::size_t>(p)] == 0) v[static_cast<std::size_t>(p)] = -1;
      const auto expected = to_coefficients(transform(from_coefficients(v, p), m));
      const auto got = landen::apply(map, v);
      EXPECT_EQ(got, expected) << "p=" << p << " m=" << m;
      agree += got == expected;
    }
    note("(", p, ",", m, "): ", agree, "/50 bit-exact");
  }
}

void epsilon_row(const char* eps, const char* printed, unsigned digits) {
  auto errors = epsilon_study(parse_rational(eps), 2, 16, digits);
  PrecisionScope scope(digits);
  const BigFloat ratio = errors[16] / errors[15];
  note("eps=", eps, ": err16/err15 = ", sci(ratio), ", printed ", printed, " (", digits, " digits)");
  EXPECT_TRUE(within_last_digit(ratio, printed)) << sci(ratio);
}

TEST(Acceptance, AC11a_EpsilonStudyTenToMinusFour) {
  criterion("epsilon study, order 2, eps=1e-4 at 200 digits");
  epsilon_row("1/10000", "2.16805e-2", 200);
}

TEST(Acceptance, AC11b_EpsilonStudyTenToMinusFive) {
  criterion("epsilon study, order 2, eps=1e-5 at 200 digits");
  epsilon_row("1/100000", "4.68150e-1", 200);
}

TEST(Acceptance, AC11c_EpsilonStudyOneTenth) {
  criterion("epsilon study, order 2, eps=0.1 at 2000 digits under 60 s");
  Stopwatch clock;
  epsilon_row("1/10", "3.58047e-569", 2000);
  const double elapsed = clock.seconds();
  note("runtime ", std::fixed, std::setprecision(2), elapsed, " s");
  EXPECT_LT(elapsed, 60.0);
}

TEST(Acceptance, AC12_CotangentIdentity) {
  criterion("cot(m t) = P_m(cot t)/Q_m(cot t) to 1e-30 for m=2..8, 100 angles, 40 digits");
  PrecisionScope scope(40);
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> angle(0.01, 3.13);
  const BigFloat pi_value = pi();
  const BigFloat bound("1e-30");
  BigFloat worst = 0;
  for (int m = 2; m <= 8; ++m) {
    auto pair = build_cotangent(m);
    const Polynomial<BigFloat> P = polynomial_cast<BigFloat>(pair.P);
    const Polynomial<BigFloat> Q = polynomial_cast<BigFloat>(pair.Q);
    for (int checked = 0; checked < 100;) {
      const BigFloat t = angle(rng);
      const BigFloat turns = m * t / pi_value;
      if (abs(turns - round(turns)) < BigFloat(1) / 50) continue;
      const BigFloat c = cos(t) / sin(t);
      const BigFloat diff = abs(evaluate(P, c) / evaluate(Q, c) - cos(m * t) / sin(m * t));
      if (diff > worst) worst = diff;
      EXPECT_LT(diff, bound) << "m=" << m;
      ++checked;
    }
  }
  note("worst absolute deviation ", sci(worst, 3));
}

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  ::testing::UnitTest::GetInstance()->listeners().Append(new CriterionPrinter);
  return RUN_ALL_TESTS();
}
