// Command-line front end. Exit codes: 0 success, 1 negative decision, 2 error or budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "z2z2u/verify.hpp"
#include "z2z2u/z2z2u.hpp"

namespace {

using json = nlohmann::json;
using namespace z2z2u;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Options {
  std::string input;
  bool json = false;
  bool oracle = false;
  std::optional<std::uint64_t> budget;
  double timeout = 60.0;
  std::uint64_t seed = verify::SuiteOptions{}.seed;
  std::optional<std::size_t> beta;
  bool all = false;
  std::size_t t = 3;
  std::size_t n = 3;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::uint64_t enum_budget(const Options& o) { return o.budget.value_or(kDefaultEnumerationBudget); }

json code_json(const AnyCode& code) {
  const auto [alpha, beta] = shape_of(code);
  return {{"ring", std::string(ring_name(ring_of(code)))},
          {"alpha", alpha},
          {"beta", beta},
          {"generators", generator_rows(code)}};
}

void print_code(const AnyCode& code, const Options& o) {
  if (o.json) {
    std::cout << code_json(code).dump(2) << "\n";
  } else {
    std::cout << format_code(code);
  }
}

WeightEnumerator enumerator_of(const AnyCode& code, std::uint64_t budget) {
  return std::visit([&](const auto& c) { return weight_enumerator(c, budget); }, code);
}

std::uint64_t size_of(const AnyCode& code) {
  return std::visit([](const auto& c) -> std::uint64_t { return c.size(); }, code);
}

void print_enumerator(const WeightEnumerator& w, const Options& o) {
  if (o.json) {
    std::cout << json{{"length", w.length()}, {"size", w.total()}, {"weights", w.coefficients()}}.dump(2) << "\n";
  } else {
    std::cout << format_enumerator(w) << "\n";
  }
}

int cmd_info(const Options& o) {
  const AnyCode code = parse_code(read_input(o.input));
  const auto [alpha, beta] = shape_of(code);
  bool linear = true;
  if (const auto* q = std::get_if<Z2Z4Code>(&code)) linear = is_gray_linear_z4(*q);
  const auto w = enumerator_of(code, enum_budget(o));
  std::size_t d = 0;
  for (std::size_t i = 1; i <= w.length(); ++i) {
    if (w[i] != 0) {
      d = i;
      break;
    }
  }
  if (o.json) {
    std::cout << json{{"ring", std::string(ring_name(ring_of(code)))},
                      {"alpha", alpha},
                      {"beta", beta},
                      {"length", alpha + 2 * beta},
                      {"size", size_of(code)},
                      {"gray_linear", linear},
                      {"minimum_distance", d}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "ring " << ring_name(ring_of(code)) << "\n"
              << "alpha " << alpha << " beta " << beta << "\n"
              << "length " << alpha + 2 * beta << "\n"
              << "size " << size_of(code) << "\n"
              << "gray_linear " << (linear ? "yes" : "no") << "\n"
              << "minimum_distance " << d << "\n";
  }
  return kOk;
}

int cmd_dual(const Options& o) {
  const AnyCode code = parse_code(read_input(o.input));
  AnyCode out;
  if (const auto* b = std::get_if<BinaryLinearCode>(&code)) {
    out = b->dual();
  } else if (const auto* u = std::get_if<Z2Z2uCode>(&code)) {
    out = dual_z2u(*u, o.oracle ? DualMethod::BruteForce : DualMethod::GrayPullback, enum_budget(o));
  } else {
    out = dual_z2z4(std::get<Z2Z4Code>(code), enum_budget(o));
  }
  print_code(out, o);
  return kOk;
}

int cmd_gray(const Options& o) {
  const AnyCode code = parse_code(read_input(o.input));
  if (const auto* q = std::get_if<Z2Z4Code>(&code); q && !is_gray_linear_z4(*q)) {
    std::cerr << "Gray image is not Z2-linear\n";
    return kNegative;
  }
  print_code(binary_image(code), o);
  return kOk;
}

int cmd_enumerator(const Options& o) {
  print_enumerator(enumerator_of(parse_code(read_input(o.input)), enum_budget(o)), o);
  return kOk;
}

int cmd_macwilliams(const Options& o) {
  const std::string text = read_input(o.input);
  std::istringstream probe(text);
  std::string first;
  probe >> first;
  WeightEnumerator w;
  if (first == "weights") {
    w = parse_enumerator(text);
  } else {
    w = enumerator_of(parse_code(text), enum_budget(o));
  }
  print_enumerator(macwilliams_transform(w, w.length(), w.total()), o);
  return kOk;
}

std::string status_word(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "none";
    case SearchStatus::LimitExceeded: return "unknown";
  }
  return "?";
}

int cmd_structure(const Options& o) {
  const AnyCode parsed = parse_code(read_input(o.input));
  const BinaryLinearCode code = binary_image(parsed);
  SearchLimits limits;
  if (o.budget) limits.max_nodes = *o.budget;
  limits.timeout_seconds = o.timeout;

  std::vector<std::size_t> betas;
  if (o.all) {
    for (std::size_t b = 0; 2 * b <= code.length(); ++b) betas.push_back(b);
  } else {
    betas.push_back(*o.beta);
  }

  bool found_nontrivial = false, found_any = false, unknown = false;
  json results = json::array();
  for (std::size_t beta : betas) {
    const SearchResult r = find_involution(code, beta, limits);
    found_any |= r.found();
    found_nontrivial |= r.found() && beta > 0;
    unknown |= r.status == SearchStatus::LimitExceeded;
    const std::size_t alpha = code.length() - 2 * beta;
    json entry = {{"alpha", alpha}, {"beta", beta}, {"status", status_word(r.status)}, {"nodes", r.nodes}};
    std::string line = "beta " + std::to_string(beta) + ": ";
    if (r.certificate) {
      const Pairing& p = r.certificate->pairing;
      json pairs = json::array(), fixed = json::array();
      for (const auto& [a, b] : p.transpositions()) pairs.push_back({a + 1, b + 1});
      for (std::size_t f : p.fixed()) fixed.push_back(f + 1);
      entry["certificate"] = format_certificate(p);
      entry["pairs"] = pairs;
      entry["fixed"] = fixed;
      line += format_certificate(p);
    } else if (r.exhausted()) {
      line += "NONE (exhausted)";
    } else {
      line += "UNKNOWN (budget)";
    }
    if (o.json) {
      results.push_back(entry);
    } else {
      std::cout << line << "\n";
    }
  }
  if (o.json) std::cout << json{{"length", code.length()}, {"results", results}}.dump(2) << "\n";

  if (o.all) {
    if (found_nontrivial) return kOk;
    return unknown ? kError : kNegative;
  }
  if (found_any) return kOk;
  return unknown ? kError : kNegative;
}

int cmd_convert(const Options& o) {
  const AnyCode code = parse_code(read_input(o.input));
  const auto* q = std::get_if<Z2Z4Code>(&code);
  if (q == nullptr) throw PreconditionError("convert expects a 'ring z4' code file");
  print_code(convert_z2z4(*q), o);
  return kOk;
}

int cmd_catalog(const Options& o) {
  const std::string& name = o.input;
  AnyCode code;
  if (name == "repetition") {
    code = catalog::repetition(o.n);
  } else if (name == "even") {
    code = catalog::even_code(o.n);
  } else if (name == "hamming") {
    code = catalog::hamming(o.t);
  } else if (name == "simplex") {
    code = catalog::simplex(o.t);
  } else if (name == "extended-hamming") {
    code = catalog::extended_hamming(o.t);
  } else if (name == "hadamard") {
    code = catalog::hadamard_linear(o.t);
  } else if (name == "golay23") {
    code = catalog::golay23();
  } else if (name == "golay24") {
    code = catalog::golay24();
  } else if (name == "trivial-aut") {
    code = catalog::trivial_aut_example();
  } else if (name == "h3-fixture") {
    code = catalog::h3_fixture();
  } else if (name == "hamming4-paired") {
    code = catalog::hamming4_paired();
  } else if (name == "h4-fixture-7-4") {
    code = catalog::h4_fixture_7_4();
  } else if (name == "h4-fixture-3-6") {
    code = catalog::h4_fixture_3_6();
  } else {
    throw PreconditionError("unknown catalog entry '" + name + "'");
  }
  print_code(code, o);
  return kOk;
}

int cmd_verify(const Options& o) {
  verify::SuiteOptions opt;
  opt.seed = o.seed;
  std::vector<std::string> names;
  if (o.input == "all") {
    for (const auto& [name, fn] : verify::suites()) names.push_back(name);
  } else if (verify::suites().contains(o.input)) {
    names.push_back(o.input);
  } else {
    std::string known;
    for (const auto& [name, fn] : verify::suites()) known += " " + name;
    throw PreconditionError("unknown suite '" + o.input + "'; known suites: all" + known);
  }

  bool ok = true;
  json suites = json::array();
  if (!o.json) std::cout << "seed " << opt.seed << "\n";
  for (const auto& name : names) {
    const auto report = verify::suites().at(name)(opt);
    ok &= report.passed();
    if (o.json) {
      suites.push_back({{"name", report.name},
                        {"statement", report.statement},
                        {"passed", report.passed()},
                        {"cases", report.cases},
                        {"failures", report.failures},
                        {"first_failure", report.first_failure}});
    } else {
      std::cout << report.name << " " << (report.passed() ? "PASS" : "FAIL") << " cases=" << report.cases
                << " failures=" << report.failures << "  " << report.statement << "\n";
      if (!report.first_failure.empty()) std::cout << "  first failure: " << report.first_failure << "\n";
    }
  }
  if (o.json) {
    std::cout << json{{"seed", opt.seed}, {"passed", ok}, {"suites", suites}}.dump(2) << "\n";
  } else if (names.size() > 1) {
    std::cout << (ok ? "all suites passed" : "some suites FAILED") << "\n";
  }
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z2Z4 / Z2Z2[u] code construction, duality and structure search"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, const std::string& input_help) {
    sub->add_option("input", o.input, input_help)->required();
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_option("--budget", o.budget, "Search node budget (structure) or enumeration budget (others)");
  };

  auto* info = app.add_subcommand("info", "Shape, size and minimum distance of a code");
  add_common(info, "Code file ('-' for stdin)");
  auto* dual = app.add_subcommand("dual", "Dual code under the code's own inner product");
  add_common(dual, "Code file ('-' for stdin)");
  dual->add_flag("--oracle", o.oracle, "Brute-force Z2[u] dual instead of the Gray pullback");
  auto* gray = app.add_subcommand("gray", "Binary Gray image as a z2 code file");
  add_common(gray, "Code file ('-' for stdin)");
  auto* enumerator = app.add_subcommand("enumerator", "Weight enumerator of the Gray image");
  add_common(enumerator, "Code file ('-' for stdin)");
  auto* macw = app.add_subcommand("macwilliams", "MacWilliams transform of a code's (or a 'weights ...' file's) enumerator");
  add_common(macw, "Code file or weight enumerator file ('-' for stdin)");
  auto* structure = app.add_subcommand("structure", "Search for Z2Z2[u] structures (involutive automorphisms)");
  add_common(structure, "Code file ('-' for stdin)");
  auto* beta_opt = structure->add_option("--beta", o.beta, "Number of Z2[u] coordinates");
  auto* all_opt = structure->add_flag("--all", o.all, "Sweep every beta from 0 to n/2");
  beta_opt->excludes(all_opt);
  structure->add_option("--timeout", o.timeout, "Wall-clock limit per beta, in seconds");
  auto* convert = app.add_subcommand("convert", "theta image of a Z2Z4 code with linear Gray image");
  add_common(convert, "Code file ('-' for stdin)");
  auto* cat = app.add_subcommand("catalog", "Export a named code");
  add_common(cat,
             "repetition|even|hamming|simplex|extended-hamming|hadamard|golay23|golay24|trivial-aut|"
             "hamming4-paired|h3-fixture|h4-fixture-7-4|h4-fixture-3-6");
  cat->add_option("--t", o.t, "Hamming-family parameter t");
  cat->add_option("--n", o.n, "Length for repetition/even codes");
  auto* ver = app.add_subcommand("verify", "Run a named property suite (or 'all')");
  add_common(ver, "Suite name or 'all'");
  ver->add_option("--seed", o.seed, "Seed for randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }
  if (structure->parsed() && !o.beta && !o.all) {
    std::cerr << "structure: one of --beta or --all is required\n";
    return kError;
  }

  try {
    if (info->parsed()) return cmd_info(o);
    if (dual->parsed()) return cmd_dual(o);
    if (gray->parsed()) return cmd_gray(o);
    if (enumerator->parsed()) return cmd_enumerator(o);
    if (macw->parsed()) return cmd_macwilliams(o);
    if (structure->parsed()) return cmd_structure(o);
    if (convert->parsed()) return cmd_convert(o);
    if (cat->parsed()) return cmd_catalog(o);
    if (ver->parsed()) return cmd_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
