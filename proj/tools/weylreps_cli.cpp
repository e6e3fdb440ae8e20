// weylreps-cli: command-line front end over the weylreps C API.
//
// Exit codes: 0 when every check passes, 1 when a property check fails,
// 2 for usage or input errors (including parse failures).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylreps.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Thrown for any failure that maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ElementDeleter {
  void operator()(wr_element* p) const { wr_element_free(p); }
};
struct StateDeleter {
  void operator()(wr_state* p) const { wr_state_free(p); }
};
struct PolynomialDeleter {
  void operator()(wr_polynomial* p) const { wr_polynomial_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { wr_string_free(p); }
};

using Element = std::unique_ptr<wr_element, ElementDeleter>;
using State = std::unique_ptr<wr_state, StateDeleter>;
using Polynomial = std::unique_ptr<wr_polynomial, PolynomialDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string describe_failure(wr_status status, const std::string& context) {
  std::string message = context + ": " + wr_status_name(status);
  const std::string detail = wr_last_error();
  if (!detail.empty()) message += ": " + detail;
  return message;
}

void check(wr_status status, const std::string& context) {
  if (status != WR_OK) throw UsageError(describe_failure(status, context));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Element load_element(const std::string& path) {
  const std::string text = read_file(path);
  wr_element* raw = nullptr;
  const wr_status status = wr_element_parse(text.c_str(), &raw);
  if (status == WR_ERR_PARSE && wr_last_error_line() > 0) {
    // The core message already carries "line L, column C".
    throw UsageError(path + ": " + wr_last_error());
  }
  check(status, path);
  return Element(raw);
}

State load_state(const std::string& text) {
  wr_state* raw = nullptr;
  check(wr_state_parse(text.c_str(), &raw), "--state '" + text + "'");
  return State(raw);
}

std::string take(char* raw) { return OwnedString(raw).get(); }

std::string format_complex(double re, double im) {
  std::ostringstream out;
  out.precision(17);
  out << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return out.str();
}

std::uint64_t effective_seed(std::uint64_t flag) {
  const char* env = std::getenv("WEYLREPS_SEED");
  if (env == nullptr || *env == '\0') return flag;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("WEYLREPS_SEED is not a non-negative integer: '") + env + "'");
  }
}

int run_product(const std::string& left_path, const std::string& right_path) {
  const Element left = load_element(left_path);
  const Element right = load_element(right_path);
  wr_element* raw = nullptr;
  check(wr_element_multiply(left.get(), right.get(), &raw), "product");
  const Element product(raw);
  char* text = nullptr;
  check(wr_element_serialize(product.get(), &text), "serialize");
  std::cout << take(text);
  return kExitPass;
}

int run_eval_state(const std::string& state_text, const std::string& path) {
  const State state = load_state(state_text);
  const Element x = load_element(path);
  double re = 0.0;
  double im = 0.0;
  check(wr_state_evaluate(state.get(), x.get(), &re, &im), "eval-state");
  std::cout.precision(17);
  std::cout << "re: " << re << "\nim: " << im << "\n";
  return kExitPass;
}

// Every term of the words file is one GNS vector W(a,b) Omega, scaled by its
// coefficient. Position and momentum owners also get the reduced form of
// each vector; the exit code follows the Gram positivity check.
int run_gns_build(const std::string& state_text, const std::string& path) {
  const State state = load_state(state_text);
  const Element all = load_element(path);
  std::size_t count = 0;
  check(wr_element_term_count(all.get(), &count), "gns-build");
  if (count == 0) throw UsageError(path + ": no words");

  std::vector<Element> words;
  std::vector<const wr_element*> handles;
  for (std::size_t i = 0; i < count; ++i) {
    wr_element* raw = nullptr;
    check(wr_element_term(all.get(), i, &raw), "gns-build");
    words.emplace_back(raw);
    handles.push_back(raw);
  }

  char* state_name = nullptr;
  check(wr_state_serialize(state.get(), &state_name), "gns-build");
  std::cout << "state: " << take(state_name) << "\nwords: " << count << "\n";

  std::cout.precision(17);
  for (std::size_t i = 0; i < count; ++i) {
    char* text = nullptr;
    check(wr_element_serialize(handles[i], &text), "gns-build");
    double norm = 0.0;
    check(wr_gns_norm(state.get(), handles[i], &norm), "gns-build");
    std::string line = take(text);
    while (!line.empty() && (line.back() == '\n' || line.back() == ' ')) line.pop_back();
    std::cout << "word " << i << ": " << line << " norm " << norm << "\n";

    char* reduced = nullptr;
    const wr_status status = wr_gns_reduce(state.get(), handles[i], &reduced);
    if (status == WR_OK) {
      std::string r = take(reduced);
      while (!r.empty() && r.back() == '\n') r.pop_back();
      std::cout << "  reduced: " << r << "\n";
    } else if (status != WR_ERR_INVALID_ARGUMENT) {
      check(status, "gns-build");
    }
  }

  std::cout << "inner products:\n";
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      double re = 0.0;
      double im = 0.0;
      check(wr_gns_inner(state.get(), handles[i], handles[j], &re, &im), "gns-build");
      std::cout << "  <" << i << "," << j << "> = " << format_complex(re, im) << "\n";
    }
  }

  double min_eigenvalue = 0.0;
  check(wr_state_min_gram_eigenvalue(state.get(), handles.data(), handles.size(), &min_eigenvalue), "gns-build");
  const double tolerance = 1e-9;
  const bool positive = min_eigenvalue >= -tolerance;
  std::cout << "min gram eigenvalue: " << min_eigenvalue << "\n";
  std::cout << "positivity: " << (positive ? "PASS" : "FAIL") << "\n";
  return positive ? kExitPass : kExitFail;
}

int run_continuity_scan(const std::string& state_text, const std::string& direction, const std::string& grid) {
  const State state = load_state(state_text);
  wr_direction dir = WR_DIRECTION_U;
  if (direction == "U" || direction == "u") {
    dir = WR_DIRECTION_U;
  } else if (direction == "V" || direction == "v") {
    dir = WR_DIRECTION_V;
  } else {
    throw UsageError("--direction must be U or V, got '" + direction + "'");
  }
  char* csv = nullptr;
  check(wr_continuity_scan_csv(state.get(), dir, grid.c_str(), &csv), "continuity-scan");
  std::cout << take(csv);
  return kExitPass;
}

int run_mean(const std::string& path, double half_width) {
  const std::string text = read_file(path);
  wr_polynomial* raw = nullptr;
  const wr_status status = wr_polynomial_parse(text.c_str(), &raw);
  if (status == WR_ERR_PARSE && wr_last_error_line() > 0) throw UsageError(path + ": " + wr_last_error());
  check(status, path);
  const Polynomial f(raw);

  double re = 0.0;
  double im = 0.0;
  check(wr_polynomial_mean(f.get(), &re, &im), "mean");
  double q_re = 0.0;
  double q_im = 0.0;
  double bound = 0.0;
  check(wr_polynomial_mean_quadrature(f.get(), half_width, &q_re, &q_im, &bound), "mean");

  const double deviation = std::hypot(q_re - re, q_im - im);
  // Quadrature error is far below the analytic truncation bound; the slack
  // only absorbs rounding.
  const bool consistent = deviation <= bound + 1e-9;
  std::cout.precision(17);
  std::cout << "mean: " << format_complex(re, im) << "\n";
  std::cout << "quadrature (N=" << half_width << "): " << format_complex(q_re, q_im) << "\n";
  std::cout << "deviation: " << deviation << "\nbound: " << bound << "\n";
  std::cout << "cross-check: " << (consistent ? "PASS" : "FAIL") << "\n";
  return consistent ? kExitPass : kExitFail;
}

int run_verify(const std::string& suite, bool oracle, std::uint64_t seed_flag) {
  const std::uint64_t seed = effective_seed(seed_flag);
  std::vector<std::string> suites{suite};
  if (oracle && suite != "oracle" && suite != "all") suites.emplace_back("oracle");

  bool all_passed = true;
  bool first = true;
  for (const auto& name : suites) {
    char* report = nullptr;
    int passed = 0;
    check(wr_verify_run(name.c_str(), seed, &report, &passed), "verify");
    std::string text = take(report);
    // The seed line is printed once even when several suites run.
    if (!first) text.erase(0, text.find('\n') + 1);
    std::cout << text;
    all_passed = all_passed && passed != 0;
    first = false;
  }
  std::cout << (all_passed ? "result: PASS" : "result: FAIL") << "\n";
  return all_passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl algebra representations: products, states, GNS vectors and verification suites"};
  app.set_version_flag("--version", std::string(wr_version()));
  app.require_subcommand(1);

  std::string left;
  std::string right;
  auto* product = app.add_subcommand("product", "Normal-ordered product of two element files");
  product->add_option("left", left, "Left factor")->required();
  product->add_option("right", right, "Right factor")->required();

  std::string state_text;
  std::string element_path;
  auto* eval = app.add_subcommand("eval-state", "Evaluate a state on an element file");
  eval->add_option("--state", state_text, "position:<lambda>, momentum:<mu> or vacuum")->required();
  eval->add_option("file", element_path, "Element file")->required();

  auto* gns = app.add_subcommand("gns-build", "Build GNS vectors from a words file");
  gns->add_option("--state", state_text, "Owning state")->required();
  gns->add_option("file", element_path, "Words file, one word per term")->required();

  std::string direction;
  std::string grid;
  auto* scan = app.add_subcommand("continuity-scan", "Sample t -> state(U_t) or state(V_t) as CSV");
  scan->add_option("--state", state_text, "State")->required();
  scan->add_option("--direction", direction, "U or V")->required();
  scan->add_option("--grid", grid, "Comma-separated rationals, e.g. 0,1/8,1/64")->required();

  std::string polynomial_path;
  double half_width = 1000.0;
  auto* mean = app.add_subcommand("mean", "Invariant mean of a trigonometric polynomial");
  mean->add_option("file", polynomial_path, "Polynomial file")->required();
  mean->add_option("--N", half_width, "Half-width of the quadrature window")->check(CLI::Range(1.0, 1e7));

  std::string suite = "all";
  bool oracle = false;
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "algebra, reps, gns, ap, oracle or all")
      ->check(CLI::IsMember({"algebra", "reps", "gns", "ap", "oracle", "all"}));
  verify->add_flag("--oracle", oracle, "Also run the Schrodinger-model oracle suite");
  verify->add_option("--seed", seed, "Random seed (WEYLREPS_SEED overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*product) return run_product(left, right);
    if (*eval) return run_eval_state(state_text, element_path);
    if (*gns) return run_gns_build(state_text, element_path);
    if (*scan) return run_continuity_scan(state_text, direction, grid);
    if (*mean) return run_mean(polynomial_path, half_width);
    if (*verify) return run_verify(suite, oracle, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
