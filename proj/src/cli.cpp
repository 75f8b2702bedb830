#include "qca/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <regex>

#include "CLI11.hpp"
#include "json.hpp"
#include "qca/classical.hpp"
#include "qca/dcb.hpp"
#include "qca/verify.hpp"

namespace qca {

namespace {

enum class Format { Text, Json, Latex };

const std::map<std::string, Format> kFormats{{"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

ExponentVec to_exponents(const std::vector<int>& v) {
  if (v.size() != 4) throw UsageError("an index needs four entries a3 a2 a1 a0");
  for (int x : v)
    if (x < 0) throw UsageError("index entries must be nonnegative");
  return {v[0], v[1], v[2], v[3]};
}

std::string latex_index(const ExponentVec& a) {
  return "B[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
         std::to_string(a[3]) + "]";
}

DcbEngine make_engine() {
  DcbEngine engine;
  if (const char* dir = std::getenv("QCA_CACHE_DIR"); dir && *dir) engine.set_cache_dir(std::filesystem::path(dir));
  return engine;
}

/// "(c)*B[a] + ..." in the style of PBW elements; `name` is "B" or "E".
std::string render_combination(const Coefficients& c, const std::string& name, Format f) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [a, coef] : c) {
    if (!s.empty()) s += " + ";
    const std::string index = name + to_string(a);
    if (f == Format::Latex)
      s += coef.is_one() ? index : "(" + coef.to_latex() + ")" + index;
    else
      s += coef.is_one() ? index : "(" + coef.to_string() + ")*" + index;
  }
  return s;
}

nlohmann::json combination_json(const Coefficients& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [a, coef] : c) terms.push_back({{"exp", a}, {"coef", coef.to_string()}});
  return terms;
}

struct ComputeArgs {
  std::vector<int> index;
  std::string format = "text";
  bool dual_pbw = false;
  bool q1 = false;
};

int cmd_compute(const ComputeArgs& args, std::ostream& out) {
  const ExponentVec a = to_exponents(args.index);
  const Format f = kFormats.at(args.format);
  DcbEngine engine = make_engine();
  const PbwElement b = engine.b_element(a);
  if (args.dual_pbw) {
    const Coefficients c = expand_in_dual_pbw(b);
    if (f == Format::Json)
      out << nlohmann::json{{"exp", a}, {"dual_pbw", combination_json(c)}}.dump() << "\n";
    else
      out << render_combination(c, "E", f) << "\n";
  } else if (args.q1) {
    const CPoly p = specialize_q1(b);
    if (f == Format::Json)
      out << nlohmann::json{{"exp", a}, {"q1", p.to_string()}}.dump() << "\n";
    else
      out << (f == Format::Latex ? p.to_latex() : p.to_string()) << "\n";
  } else {
    out << (f == Format::Json ? b.to_json() : f == Format::Latex ? b.to_latex() : b.to_string()) << "\n";
  }
  return kExitOk;
}

struct ProductArgs {
  std::vector<int> indices;  // a3 a2 a1 a0 b3 b2 b1 b0
  std::string format = "text";
  int max_layer = 8;
};

int cmd_product(const ProductArgs& args, std::ostream& out) {
  if (args.indices.size() != 8) throw UsageError("product needs two indices of four entries each");
  const ExponentVec a = to_exponents({args.indices.begin(), args.indices.begin() + 4});
  const ExponentVec b = to_exponents({args.indices.begin() + 4, args.indices.end()});
  const Format f = kFormats.at(args.format);
  if (total(a) + total(b) > args.max_layer)
    throw ResourceLimit("target layer " + std::to_string(total(a) + total(b)) + " exceeds --max-layer " +
                        std::to_string(args.max_layer));
  DcbEngine engine = make_engine();
  const Coefficients c = engine.expand_in_basis(engine.b_element(a) * engine.b_element(b), args.max_layer);
  if (f == Format::Json) {
    out << nlohmann::json{{"a", a}, {"b", b}, {"terms", combination_json(c)}}.dump() << "\n";
  } else if (f == Format::Latex) {
    out << latex_index(a) << latex_index(b) << " = " << render_combination(c, "B", f) << "\n";
  } else {
    out << "B" << to_string(a) << "*B" << to_string(b) << " = " << render_combination(c, "B", f) << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  SuiteOptions options;
  std::string mode;
  std::string out_path;
  double timeout = 0;
};

int cmd_verify(VerifyArgs args, std::ostream& out, std::ostream& err) {
  if (!is_suite(args.suite)) throw UsageError("unknown suite: " + args.suite);
  if (args.options.n_max < 0 || args.options.k_max < 0) throw UsageError("--n-max and --k-max must be nonnegative");
  if (args.options.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (args.mode == "exact") args.options.mode = MembershipMode::Exact;
  if (args.mode == "probabilistic") args.options.mode = MembershipMode::Probabilistic;
  if (args.timeout > 0)
    set_deadline(std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(args.timeout)));
  Report report;
  try {
    report = run_suite(args.suite, args.options);
  } catch (...) {
    set_deadline(std::nullopt);
    throw;
  }
  set_deadline(std::nullopt);

  const std::string json = report_to_json(report);
  if (args.out_path.empty()) {
    out << json << "\n";
  } else {
    std::ofstream file(args.out_path);
    if (!file) throw UsageError("cannot write " + args.out_path);
    file << json << "\n";
  }
  int failed = 0;
  for (const auto& c : report)
    if (!c.ok) {
      ++failed;
      err << "FAILED " << c.suite << ": " << c.identity << " (n = " << c.n << "): " << c.detail << "\n";
    }
  err << report.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitIdentityFailed;
}

struct TableArgs {
  std::string kind;
  std::string range;
  std::string format = "text";
  int max_layer = 8;
};

/// Polynomial form of U_n in U3, U2, U1, U0 for any integer n.
CPoly cluster_polynomial(int n) {
  static const CVar initial[4] = {CVar::U0, CVar::U1, CVar::U2, CVar::U3};
  if (n >= 0 && n <= 3) return CPoly::var(initial[n]);
  if (n > 3) return polynomial_form(n - 3);
  return cluster_polynomial(3 - n).swap_symmetry();
}

int cmd_table(const TableArgs& args, std::ostream& out) {
  const Format f = kFormats.at(args.format);
  nlohmann::json rows = nlohmann::json::array();
  if (args.kind == "cluster") {
    static const std::regex range(R"((-?\d+)\.\.(-?\d+))");
    std::smatch m;
    if (!std::regex_match(args.range, m, range)) throw UsageError("cluster range must look like a..b");
    const int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
    for (int n = lo; n <= hi; ++n) {
      const CPoly p = cluster_polynomial(n);
      if (f == Format::Json)
        rows.push_back({{"n", n}, {"U", p.to_string()}});
      else if (f == Format::Latex)
        out << "U_{" << n << "} = " << p.to_latex() << "\n";
      else
        out << "U_" << n << " = " << p.to_string() << "\n";
    }
  } else if (args.kind == "layer") {
    static const std::regex number(R"(\d+)");
    if (!std::regex_match(args.range, number)) throw UsageError("layer must be a nonnegative integer");
    const int k = std::stoi(args.range);
    if (k > args.max_layer)
      throw ResourceLimit("layer " + std::to_string(k) + " exceeds --max-layer " + std::to_string(args.max_layer));
    DcbEngine engine = make_engine();
    const LayerTable layer = engine.layer(k);
    for (const auto& [a, b] : layer.entries) {
      if (f == Format::Json)
        rows.push_back({{"exp", a}, {"element", nlohmann::json::parse(b.to_json())}});
      else if (f == Format::Latex)
        out << latex_index(a) << " = " << b.to_latex() << "\n";
      else
        out << "B" << to_string(a) << " = " << b.to_string() << "\n";
    }
  } else {
    throw UsageError("table kind must be cluster or layer");
  }
  if (f == Format::Json) out << rows.dump() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in U_q^+(w) for w = s1s2s1s2 and its dual canonical basis"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"text", "json", "latex"});

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Print the dual canonical basis element B[a3,a2,a1,a0]");
  c->add_option("index", compute.index, "a3 a2 a1 a0")->expected(4)->required();
  c->add_option("--format", compute.format, "text, json or latex")->check(format_check);
  auto* dual = c->add_flag("--dual-pbw", compute.dual_pbw, "Print the coefficients in the dual PBW basis");
  c->add_flag("--q1", compute.q1, "Print the specialization at q = 1")->excludes(dual);

  ProductArgs product;
  auto* p = app.add_subcommand("product", "Expand B[a]*B[b] in the dual canonical basis");
  p->add_option("indices", product.indices, "a3 a2 a1 a0 b3 b2 b1 b0")->expected(8)->required();
  p->add_option("--format", product.format, "text, json or latex")->check(format_check);
  p->add_option("--max-layer", product.max_layer, "Largest total degree allowed")->capture_default_str();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  v->add_option("suite", verify.suite, "Suite name")->required();
  v->add_option("--n-max", verify.options.n_max, "Largest n for indexed identities")->capture_default_str();
  v->add_option("--k-max", verify.options.k_max, "Largest total degree for layer checks")->capture_default_str();
  v->add_option("--mode", verify.mode, "Serre ideal membership mode")->check(CLI::IsMember({"exact", "probabilistic"}));
  v->add_option("--seed", verify.options.seed, "Seed for randomized checks")->capture_default_str();
  v->add_option("--out", verify.out_path, "Write the JSON report to this file");
  v->add_option("--jobs", verify.options.jobs, "Suites run concurrently")->capture_default_str();
  v->add_option("--timeout", verify.timeout, "Wall-clock budget in seconds (0 = none)");

  TableArgs table;
  auto* t = app.add_subcommand("table", "Print a table of cluster variables or of a layer");
  t->add_option("kind", table.kind, "cluster or layer")->required()->check(CLI::IsMember({"cluster", "layer"}));
  t->add_option("range", table.range, "a..b for cluster, k for layer")->required();
  t->add_option("--format", table.format, "text, json or latex")->check(format_check);
  t->add_option("--max-layer", table.max_layer, "Largest layer allowed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out);
    if (p->parsed()) return cmd_product(product, out);
    if (v->parsed()) return cmd_verify(verify, out, err);
    return cmd_table(table, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  }
}

}  // namespace qca
