// landen: integrate rational functions over the real line with rational
// Landen transformations.
//
//   landen precompute --p 6 --m 2 [--cache-dir DIR] [--max-terms N]
//   landen integrate  --den 1,4,15 [--num 1] [--m 2] [--n 6 | --tol 1e-20]
//                     [--mode exact|float] [--digits 30] [--compress TOL]
//                     [--normalize none|gcd|monic] [--check] [--use-cache]
//   landen compare    --den 1,6,16,21,13 --m-list 2,3,4 --n-list 2,3,4
//                     [--baseline 100,1000,10000]
//   landen epsilon    --eps 1e-4,1e-5 [--m 2] [--steps 16] [--digits 200]
//
// Every command accepts --format text|kv. The kv report starts with the line
// "landen-report v1" followed by key=value lines; rationals are written as
// p/q and re-parse exactly.
//
// Exit status: 0 ok, 2 usage or parse error, 3 invalid integrand,
// 4 resource or precision limit.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "landen.hpp"

namespace fs = std::filesystem;
using namespace landen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitResource = 4;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidOrder:
    case ErrorCode::kArityMismatch:
      return kExitUsage;
    case ErrorCode::kOddDegree:
    case ErrorCode::kDegreeGap:
    case ErrorCode::kRealPole:
    case ErrorCode::kZeroTrailingCoeff:
    case ErrorCode::kZeroTrailing:
      return kExitInvalid;
    default:
      return kExitResource;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& token : split_list(text)) {
    try {
      out.push_back(parse_rational(token));
    } catch (const Error&) {
      throw Error(ErrorCode::kParseError, flag + ": cannot parse coefficient '" + token + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kParseError, flag + ": empty coefficient list");
  return out;
}

std::vector<int> parse_ints(const std::string& text, const std::string& flag, int minimum) {
  std::vector<int> out;
  for (const auto& token : split_list(text)) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) throw UsageError(flag + ": cannot parse '" + token + "'");
    if (value < minimum) throw UsageError(flag + ": " + token + " is below " + std::to_string(minimum));
    out.push_back(value);
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

RationalFunction<Rational> parse_integrand(const std::string& num, const std::string& den) {
  RationalFunction<Rational> f{Polynomial<Rational>(parse_rationals(num, "--num")),
                               Polynomial<Rational>(parse_rationals(den, "--den"))};
  validate(f);
  return f;
}

std::string render(const Polynomial<Rational>& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (int k = poly.degree(); k >= 0; --k) {
    const Rational c = poly.coefficient(k);
    if (c == 0) continue;
    std::string magnitude = to_string(abs(c));
    if (magnitude.find('/') != std::string::npos && k > 0) magnitude = "(" + magnitude + ")";
    if (magnitude == "1" && k > 0) magnitude.clear();
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    out += magnitude;
    if (k > 0) out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out;
}

std::string render(const RationalFunction<Rational>& f) {
  return "(" + render(f.B) + ") / (" + render(f.A) + ")";
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + to_string(values[i]);
  return out;
}

std::string join(const std::vector<BigFloat>& values, unsigned digits) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + to_decimal(values[i], digits);
  return out;
}

std::string short_decimal(const BigFloat& x) { return to_decimal(x, 6); }

/// Collects key=value pairs for the kv report; text output is written
/// directly by each command.
class Report {
 public:
  explicit Report(bool kv) : kv_(kv) {
    if (kv_) std::cout << "landen-report v1\n";
  }
  bool kv() const { return kv_; }
  void put(const std::string& key, const std::string& value) {
    if (kv_) std::cout << key << "=" << value << "\n";
  }

 private:
  bool kv_;
};

// ---------------------------------------------------------------- cache

fs::path cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("LANDEN_CACHE"); env != nullptr && *env != '\0') return env;
  return fs::current_path();
}

fs::path cache_file(const fs::path& dir, int p, int m) {
  return dir / ("landen-p" + std::to_string(p) + "-m" + std::to_string(m) + ".map");
}

std::optional<LandenMap> read_cache(const fs::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  return load(in);
}

/// Loads the map from the cache or generates and stores it. Sets `hit`.
LandenMap cached_map(const fs::path& dir, int p, int m, std::size_t max_terms, bool& hit) {
  const fs::path file = cache_file(dir, p, m);
  if (auto map = read_cache(file)) {
    if (map->p != p || map->m != m) throw Error(ErrorCode::kFormatError, file.string() + " holds another (p, m)");
    hit = true;
    return *map;
  }
  hit = false;
  LandenMap map = generate(p, m, max_terms);
  fs::create_directories(dir);
  std::ofstream out(file);
  if (!out) throw Error(ErrorCode::kResourceLimit, "cannot write " + file.string());
  save(map, out);
  return map;
}

// ---------------------------------------------------------------- commands

struct CommonOptions {
  std::string format = "text";
  unsigned digits = 30;
};

struct PrecomputeOptions {
  int p = 0;
  int m = 2;
  std::string cache_dir;
  std::size_t max_terms = kDefaultMaxTerms;
};

int cmd_precompute(const PrecomputeOptions& o, const CommonOptions& common) {
  try {
    PipelineDims::make(o.p, o.m);
  } catch (const Error& e) {
    std::cerr << "landen precompute: " << e.what() << "\n";
    return kExitUsage;
  }
  const fs::path dir = cache_dir(o.cache_dir);
  bool hit = false;
  LandenMap map;
  try {
    map = cached_map(dir, o.p, o.m, o.max_terms, hit);
  } catch (const Error& e) {
    std::cerr << "landen precompute: " << e.what() << "\n";
    if (e.code() == ErrorCode::kResourceLimit && o.p > 2) {
      std::cerr << "try a smaller problem, e.g. --p " << o.p - 2 << " --m " << o.m << ", or raise --max-terms\n";
    }
    return exit_code_for(e.code());
  }
  Report report(common.format == "kv");
  const fs::path file = cache_file(dir, o.p, o.m);
  report.put("command", "precompute");
  report.put("p", std::to_string(o.p));
  report.put("m", std::to_string(o.m));
  report.put("file", file.string());
  report.put("cache_hit", hit ? "1" : "0");
  report.put("scale", map.scale.str());
  if (!report.kv()) {
    std::cout << (hit ? "cache hit: " : "wrote ") << file.string() << "\n";
    std::cout << "shared scale " << map.scale.str() << "\n";
  }
  for (std::size_t i = 0; i < map.h.size() + map.d.size(); ++i) {
    const MultiPoly& f = i < map.h.size() ? map.h[i] : map.d[i - map.h.size()];
    const std::string name = formula_name(map, i);
    report.put("terms." + name, std::to_string(f.size()));
    if (!report.kv()) std::cout << "  " << std::setw(4) << std::left << name << f.size() << " terms\n";
  }
  return kExitOk;
}

struct IntegrateOptions {
  std::string num = "1";
  std::string den;
  int m = 2;
  int n = 6;
  std::string tol;
  int max_steps = 64;
  std::string mode = "exact";
  std::string compress;
  std::string normalize;
  bool check = false;
  bool use_cache = false;
  std::string cache_dir;
  std::size_t max_terms = kDefaultMaxTerms;
};

Normalization parse_normalization(const std::string& name) {
  if (name == "none") return Normalization::kNone;
  if (name == "gcd") return Normalization::kGcd;
  return Normalization::kMonic;
}

template <Field R>
void print_trace(const IntegrationResult<R>& result, unsigned digits, Report& report) {
  constexpr bool exact = std::is_same_v<R, Rational>;
  PrecisionScope scope(digits);
  if (!report.kv()) {
    std::cout << "    n  " << std::setw(16) << std::left << "pi*phi" << "  " << std::setw(14) << "delta";
    if constexpr (exact) std::cout << "height digits";
    std::cout << "\n";
  }
  for (const auto& step : result.trace.steps) {
    const std::string prefix = "step." + std::to_string(step.n) + ".";
    if constexpr (exact) {
      report.put(prefix + "phi", to_string(step.phi));
      report.put(prefix + "delta", to_string(step.delta));
      report.put(prefix + "height", step.height_max.str());
    } else {
      report.put(prefix + "phi", to_decimal(step.phi, digits));
      report.put(prefix + "delta", to_decimal(step.delta, digits));
    }
    if (!report.kv()) {
      std::cout << "  " << std::setw(3) << std::right << step.n << "  " << std::setw(16) << std::left
                << to_decimal(step.approx, 10) << "  " << std::setw(14)
                << short_decimal(scalar_cast<BigFloat>(step.delta));
      if constexpr (exact) std::cout << step.height_max.str().size();
      std::cout << "\n";
    }
  }
}

int cmd_integrate(const IntegrateOptions& o, const CommonOptions& common, bool tol_given) {
  const RationalFunction<Rational> f = parse_integrand(o.num, o.den);
  if (o.m < 2) throw Error(ErrorCode::kInvalidOrder, "--m must be at least 2");
  RunConfig cfg;
  cfg.m = o.m;
  cfg.mode = o.mode == "float" ? Mode::kFloat : Mode::kExact;
  cfg.digits = common.digits;
  cfg.stop = tol_given ? StopRule::tolerance(parse_rationals(o.tol, "--tol").front(), o.max_steps)
                       : StopRule::fixed(o.n);
  if (!o.compress.empty()) {
    if (cfg.mode == Mode::kFloat) throw UsageError("--compress needs --mode exact");
    cfg.compress = abs(parse_rationals(o.compress, "--compress").front());
  }
  if (!o.normalize.empty()) cfg.normalize = parse_normalization(o.normalize);

  std::optional<LandenMap> map;
  bool hit = false;
  if (o.use_cache) {
    map = cached_map(cache_dir(o.cache_dir), f.p(), o.m, o.max_terms, hit);
    cfg.formulas = &*map;
  }

  Report report(common.format == "kv");
  report.put("command", "integrate");
  report.put("num", join(f.B.coeffs()));
  report.put("den", join(f.A.coeffs()));
  report.put("m", std::to_string(cfg.m));
  report.put("mode", o.mode);
  report.put("digits", std::to_string(cfg.digits));
  if (o.use_cache) report.put("cache_hit", hit ? "1" : "0");
  if (!report.kv()) {
    std::cout << "integrand " << render(f) << "\n";
    std::cout << "order " << cfg.m << ", " << o.mode << " mode, " << cfg.digits << " digits";
    if (o.use_cache) std::cout << ", precomputed formulas" << (hit ? " (cache hit)" : "");
    std::cout << "\n";
  }

  BigFloat approx;
  if (cfg.mode == Mode::kExact) {
    auto result = integrate(f, cfg);
    print_trace(result, cfg.digits, report);
    approx = result.approx;
    report.put("steps", std::to_string(result.trace.steps.back().n));
    report.put("phi", to_string(result.phi));
    report.put("final.num", join(result.final_function.B.coeffs()));
    report.put("final.den", join(result.final_function.A.coeffs()));
  } else {
    PrecisionScope scope(cfg.digits);
    RationalFunction<BigFloat> ff{polynomial_cast<BigFloat>(f.B), polynomial_cast<BigFloat>(f.A)};
    auto result = integrate(ff, cfg);
    print_trace(result, cfg.digits, report);
    approx = result.approx;
    report.put("steps", std::to_string(result.trace.steps.back().n));
    report.put("phi", to_decimal(result.phi, cfg.digits));
    report.put("final.num", join(result.final_function.B.coeffs(), cfg.digits));
    report.put("final.den", join(result.final_function.A.coeffs(), cfg.digits));
  }
  PrecisionScope scope(cfg.digits);
  report.put("approx", to_decimal(approx, cfg.digits));
  if (!report.kv()) std::cout << "integral ~ " << to_decimal(approx, cfg.digits) << "\n";

  if (o.check) {
    OracleResult oracle = oracle_integral(f, cfg.digits + 10);
    PrecisionScope wide(cfg.digits + 10);
    BigFloat rel = abs(approx - oracle.value) / abs(oracle.value);
    report.put("reference", to_decimal(oracle.value, cfg.digits));
    report.put("rel_error", short_decimal(rel));
    if (!report.kv()) {
      std::cout << "reference " << to_decimal(oracle.value, cfg.digits) << " (quadrature)\n";
      std::cout << "relative error " << short_decimal(rel) << "\n";
    }
  }
  return kExitOk;
}

struct CompareOptions {
  std::string num = "1";
  std::string den;
  std::string m_list = "2,3,4";
  std::string n_list = "2,3,4,5";
  std::string baseline = "100,1000,10000";
};

int cmd_compare(const CompareOptions& o, const CommonOptions& common) {
  const std::vector<int> ms = parse_ints(o.m_list, "--m-list", 2);
  const std::vector<int> ns = parse_ints(o.n_list, "--n-list", 0);
  const std::vector<int> baseline = o.baseline.empty() ? std::vector<int>{} : parse_ints(o.baseline, "--baseline", 1);
  const RationalFunction<Rational> f = parse_integrand(o.num, o.den);
  const unsigned digits = common.digits;
  const int n_max = *std::max_element(ns.begin(), ns.end());

  const OracleResult oracle = oracle_integral(f, digits + 10);
  PrecisionScope scope(digits + 10);
  const BigFloat reference = oracle.value;

  Report report(common.format == "kv");
  report.put("command", "compare");
  report.put("num", join(f.B.coeffs()));
  report.put("den", join(f.A.coeffs()));
  report.put("digits", std::to_string(digits));
  report.put("reference", to_decimal(reference, digits));
  if (!report.kv()) {
    std::cout << "integrand " << render(f) << "\n";
    std::cout << "reference " << to_decimal(reference, digits) << " (quadrature, " << digits << " digits)\n";
    std::cout << "relative error of pi*phi after n steps of order m\n";
    std::cout << "    n";
    for (int m : ms) std::cout << "  " << std::setw(13) << std::left << ("m=" + std::to_string(m));
    std::cout << "\n";
  }

  std::vector<std::vector<BigFloat>> errors;
  for (int m : ms) {
    RunConfig cfg;
    cfg.m = m;
    cfg.digits = digits + 10;
    cfg.stop = StopRule::fixed(n_max);
    errors.push_back(relative_errors(integrate(f, cfg).trace, reference));
  }
  for (int n : ns) {
    if (!report.kv()) std::cout << "  " << std::setw(3) << std::right << n;
    for (std::size_t j = 0; j < ms.size(); ++j) {
      const BigFloat& e = errors[j][static_cast<std::size_t>(n)];
      report.put("rel." + std::to_string(n) + "." + std::to_string(ms[j]), short_decimal(e));
      if (!report.kv()) std::cout << "  " << std::setw(13) << std::left << short_decimal(e);
    }
    if (!report.kv()) std::cout << "\n";
  }

  if (!baseline.empty()) {
    const FoldedIntegrand g = fold(f);
    if (!report.kv()) std::cout << "trapezoid on the folded integrand\n  panels  standard      published\n";
    for (int n : baseline) {
      BigFloat standard = abs(trapezoid(g, n, digits + 10, TrapezoidRule::kStandard) - reference) / abs(reference);
      BigFloat published = abs(trapezoid(g, n, digits + 10, TrapezoidRule::kPublished) - reference) / abs(reference);
      report.put("trapezoid." + std::to_string(n) + ".standard", short_decimal(standard));
      report.put("trapezoid." + std::to_string(n) + ".published", short_decimal(published));
      if (!report.kv()) {
        std::cout << "  " << std::setw(6) << std::right << n << "  " << std::setw(12) << std::left
                  << short_decimal(standard) << "  " << short_decimal(published) << "\n";
      }
    }
  }
  return kExitOk;
}

struct EpsilonOptions {
  std::string eps;
  int m = 2;
  int steps = 16;
};

int cmd_epsilon(const EpsilonOptions& o, const CommonOptions& common) {
  const std::vector<Rational> eps = parse_rationals(o.eps, "--eps");
  for (const auto& e : eps) {
    if (e <= 0) throw UsageError("--eps: values must be positive, got " + to_string(e));
  }
  if (o.m < 2) throw Error(ErrorCode::kInvalidOrder, "--m must be at least 2");
  if (o.steps < 1) throw UsageError("--steps must be at least 1");

  Report report(common.format == "kv");
  report.put("command", "epsilon");
  report.put("m", std::to_string(o.m));
  report.put("steps", std::to_string(o.steps));
  report.put("digits", std::to_string(common.digits));
  const std::string ratio_name = "err_" + std::to_string(o.steps) + "/err_" + std::to_string(o.steps - 1);
  if (!report.kv()) {
    std::cout << "1/((x-2)^2 + eps^2), order " << o.m << ", " << common.digits << " digits\n";
    std::cout << "  " << std::setw(14) << std::left << "eps" << ratio_name << "\n";
  }
  bool exhausted = false;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const std::string key = "row." + std::to_string(i) + ".";
    report.put(key + "eps", to_string(eps[i]));
    std::string value;
    try {
      auto errors = epsilon_study(eps[i], o.m, o.steps, common.digits);
      PrecisionScope scope(common.digits);
      value = short_decimal(errors[static_cast<std::size_t>(o.steps)] / errors[static_cast<std::size_t>(o.steps) - 1]);
      report.put(key + "ratio", value);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPrecisionExhausted) throw;
      exhausted = true;
      value = e.what();
      report.put(key + "error", value);
    }
    if (!report.kv()) std::cout << "  " << std::setw(14) << std::left << to_string(eps[i]) << value << "\n";
  }
  return exhausted ? kExitResource : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrate rational functions over the real line with rational Landen transformations"};
  app.require_subcommand(1);
  CommonOptions common;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "kv"}));
    sub->add_option("--digits", common.digits, "Working and display precision in decimal digits")
        ->check(CLI::Range(5u, 200000u));
  };

  PrecomputeOptions pre;
  auto* precompute = app.add_subcommand("precompute", "Generate and cache the formulas for (p, m)");
  precompute->add_option("--p", pre.p, "Denominator degree (even)")->required();
  precompute->add_option("--m", pre.m, "Order of the transformation");
  precompute->add_option("--cache-dir", pre.cache_dir, "Cache directory (default: $LANDEN_CACHE or .)");
  precompute->add_option("--max-terms", pre.max_terms, "Abort when an intermediate exceeds this many terms");
  add_common(precompute);

  IntegrateOptions in;
  auto* integrate_cmd = app.add_subcommand("integrate", "Iterate the transformation and report pi*phi");
  integrate_cmd->add_option("--num", in.num, "Numerator coefficients, descending, comma separated");
  integrate_cmd->add_option("--den", in.den, "Denominator coefficients, descending, comma separated")->required();
  integrate_cmd->add_option("--m", in.m, "Order of the transformation");
  auto* n_opt = integrate_cmd->add_option("--n", in.n, "Number of steps")->check(CLI::NonNegativeNumber);
  auto* tol_opt = integrate_cmd->add_option("--tol", in.tol, "Stop once |phi_n - phi_{n-1}| <= tol");
  n_opt->excludes(tol_opt);
  integrate_cmd->add_option("--max-steps", in.max_steps, "Step cap for --tol")->check(CLI::PositiveNumber);
  integrate_cmd->add_option("--mode", in.mode, "Arithmetic")->check(CLI::IsMember({"exact", "float"}));
  integrate_cmd->add_option("--compress", in.compress, "Continued-fraction compression tolerance (exact mode)");
  integrate_cmd->add_option("--normalize", in.normalize, "Normalization after each step")
      ->check(CLI::IsMember({"none", "gcd", "monic"}));
  integrate_cmd->add_flag("--check", in.check, "Compare with an independent quadrature");
  integrate_cmd->add_flag("--use-cache", in.use_cache, "Apply cached precomputed formulas");
  integrate_cmd->add_option("--cache-dir", in.cache_dir, "Cache directory (default: $LANDEN_CACHE or .)");
  integrate_cmd->add_option("--max-terms", in.max_terms, "Term limit when generating formulas");
  add_common(integrate_cmd);

  CompareOptions cmp;
  auto* compare = app.add_subcommand("compare", "Relative-error grid against quadrature and the trapezoidal rule");
  compare->add_option("--num", cmp.num, "Numerator coefficients");
  compare->add_option("--den", cmp.den, "Denominator coefficients")->required();
  compare->add_option("--m-list", cmp.m_list, "Orders, comma separated");
  compare->add_option("--n-list", cmp.n_list, "Step counts, comma separated");
  compare->add_option("--baseline", cmp.baseline, "Trapezoid panel counts, comma separated (empty: none)");
  add_common(compare);

  EpsilonOptions eps;
  auto* epsilon = app.add_subcommand("epsilon", "Error ratios for 1/((x-2)^2 + eps^2)");
  epsilon->add_option("--eps", eps.eps, "Values of eps, comma separated")->required();
  epsilon->add_option("--m", eps.m, "Order of the transformation");
  epsilon->add_option("--steps", eps.steps, "Number of steps");
  add_common(epsilon);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*precompute) return cmd_precompute(pre, common);
    if (*integrate_cmd) return cmd_integrate(in, common, !in.tol.empty());
    if (*compare) return cmd_compare(cmp, common);
    if (*epsilon) return cmd_epsilon(eps, common);
  } catch (const UsageError& e) {
    std::cerr << "landen: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "landen: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "landen: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitUsage;
}
