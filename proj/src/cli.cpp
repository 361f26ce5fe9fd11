#include "evenzeta/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "evenzeta/error.hpp"
#include "evenzeta/pk_engine.hpp"
#include "evenzeta/trees.hpp"
#include "evenzeta/verify.hpp"
#include "evenzeta/zeta.hpp"

namespace evenzeta::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxK = 500;

enum class Format { kText, kJson };

struct Options {
  std::string command;
  std::size_t k = 0;
  bool k_given = false;
  std::optional<std::size_t> max_k;
  std::string method = "recursion";
  std::string suite = "all";
  std::string format = "text";
  std::string sequence_file;
  bool translated = false;
  bool half_scale = false;
  bool basis = false;
  bool list = false;
  bool approx = false;
};

// What a command produced: structured JSON payload plus its text rendering.
struct Outcome {
  Json inputs = Json::object();
  Json result;
  std::string text;
  int exit_code = kOk;
};

std::string approx_string(long double v) {
  std::ostringstream os;
  os << std::setprecision(18) << v;
  return os.str();
}

void require_k(const Options& o, std::size_t lo, std::size_t hi) {
  if (!o.k_given) throw InputError("--k is required");
  if (o.k < lo || o.k > hi) {
    throw BoundError("--k " + std::to_string(o.k) + " outside the permitted range [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

Json index_values(const IndexSet& s) {
  Json a = Json::array();
  for (auto v : s.odd_values()) a.push_back(v);
  return a;
}

Outcome cmd_bernoulli(const Options& o) {
  Outcome r;
  if (o.method != "recursion" && o.method != "tree" && o.method != "classical") {
    throw InputError("--method must be recursion, tree or classical");
  }
  require_k(o, 1, o.method == "tree" ? kTreeSumBound : kMaxK);
  r.inputs = {{"k", o.k}, {"method", o.method}};
  Rational b;
  if (o.method == "recursion") {
    b = bernoulli_even(o.k);
  } else if (o.method == "tree") {
    b = bernoulli_from_zeta_coeff(o.k, zeta_coeff_via_trees(o.k));
  } else {
    b = bernoulli_classical_oracle(2 * o.k);
  }
  r.result = {{"n", 2 * o.k}, {"value", b.to_string()}};
  r.text = b.to_string();
  if (o.approx) {
    const std::string a = approx_string(b.to_long_double());
    r.result["approx"] = a;
    r.text += "  (approx " + a + ")";
  }
  return r;
}

Outcome cmd_ak(const Options& o) {
  Outcome r;
  std::size_t first = 1;
  std::size_t last = 0;
  if (o.max_k) {
    if (*o.max_k < 1 || *o.max_k > kMaxK) throw BoundError("--max must be in [1, 500]");
    last = *o.max_k;
    r.inputs = {{"max", last}};
  } else {
    require_k(o, 1, kMaxK);
    first = last = o.k;
    r.inputs = {{"k", o.k}};
  }
  Json values = Json::array();
  for (std::size_t k = first; k <= last; ++k) {
    const std::string v = compute_Ak(k).get_str();
    values.push_back(v);
    r.text += v + "\n";
  }
  r.result = {{"first_k", first}, {"values", values}};
  return r;
}

Outcome cmd_pk(const Options& o) {
  Outcome r;
  require_k(o, 1, kMaxK);
  if (o.half_scale && !o.translated) throw InputError("--half-scale requires --translated");
  r.inputs = {{"k", o.k}, {"translated", o.translated}, {"half_scale", o.half_scale}};
  const Polynomial p = o.translated ? translated_Pk(o.k, o.half_scale) : compute_Pk(o.k).poly;
  r.result = {{"variable", o.translated ? (o.half_scale ? "P_k(x/2 + k - 3/2)"
                                                        : "P_k(x + k - 3/2)")
                                        : "P_k(x)"},
              {"coefficients", p.to_strings()},
              {"text", p.to_string()}};
  r.text = p.to_string();
  if (o.basis) {
    if (o.k < 2) throw BoundError("--basis needs k >= 2");
    const auto c = compute_Pk(o.k, true).basis_coeffs.value();
    Json arr = Json::array();
    std::string line = "c_{i," + std::to_string(o.k) + "}:";
    for (const auto& ci : c) {
      arr.push_back(ci.to_string());
      line += " " + ci.to_string();
    }
    r.result["basis_coeffs"] = arr;
    r.text += "\n" + line;
  }
  r.text += "\n";
  return r;
}

Outcome cmd_zeta_even(const Options& o) {
  Outcome r;
  require_k(o, 1, kMaxK);
  r.inputs = {{"k", o.k}};
  const PiMultiple z = zeta_even_rational(o.k);
  r.result = {{"coeff", z.coeff().to_string()}, {"pi_power", z.power()}, {"text", z.to_string()}};
  r.text = z.to_string();
  if (o.approx) {
    const std::string a = approx_string(z.approx());
    r.result["approx"] = a;
    r.text += "  (approx " + a + ")";
  }
  r.text += "\n";
  return r;
}

Outcome cmd_trees(const Options& o) {
  Outcome r;
  require_k(o, 1, o.list ? kTreeEnumerationBound : kTreeSumBound);
  r.inputs = {{"k", o.k}, {"list", o.list}};
  r.result = {{"count", catalan(o.k - 1).get_str()}};
  if (o.k >= 2 && o.k <= kTreeSumBound) {
    const std::string ak = ak_via_trees(o.k).get_str();
    r.result["ak"] = ak;
    r.text = "trees: " + catalan(o.k - 1).get_str() + "\nA_" + std::to_string(o.k) +
             " via trees: " + ak + "\n";
  } else {
    r.text = "trees: " + catalan(o.k - 1).get_str() + "\n";
  }
  if (o.list) {
    Json list = Json::array();
    TreeEnumerator it(o.k);
    while (auto t = it.next()) {
      const TreeData d = tree_data(*t);
      list.push_back({{"levels", t->levels()},
                      {"low", index_values(d.low)},
                      {"high", index_values(d.high)},
                      {"weight", d.weight.get_str()}});
      std::string levels;
      for (auto l : t->levels()) levels += (levels.empty() ? "" : ",") + std::to_string(l);
      r.text += "levels=(" + levels + ") low=" + d.low.to_value_string() +
                " high=" + d.high.to_value_string() + " wt=" + d.weight.get_str() + "\n";
    }
    r.result["trees"] = std::move(list);
  }
  return r;
}

Outcome cmd_transform(const Options& o) {
  Outcome r;
  require_k(o, 1, kTreeSumBound);
  SequenceSpec seq;
  if (!o.sequence_file.empty()) seq = SequenceSpec::from_file(o.sequence_file);
  r.inputs = {{"k", o.k},
              {"sequence", o.sequence_file.empty() ? Json("R_n = 2n+1") : Json(o.sequence_file)}};
  const Rational v = generalized_transform(o.k, seq);
  r.result = {{"value", v.to_string()}};
  r.text = v.to_string();
  if (o.approx) {
    const std::string a = approx_string(v.to_long_double());
    r.result["approx"] = a;
    r.text += "  (approx " + a + ")";
  }
  r.text += "\n";
  return r;
}

Outcome cmd_verify(const Options& o) {
  Outcome r;
  const auto suite = parse_suite(o.suite);
  if (!suite) throw InputError("unknown suite '" + o.suite + "'");
  r.inputs = {{"suite", o.suite}};
  if (o.max_k) r.inputs["max_k"] = *o.max_k;
  const VerifyReport report = run_verify(*suite, o.max_k);

  Json checks = Json::array();
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    Json entry = {{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}};
    if (c.informational) entry["informational"] = true;
    if (!c.witness.empty()) {
      Json w = Json::object();
      for (const auto& [key, value] : c.witness) w[key] = value;
      entry["witness"] = std::move(w);
    }
    checks.push_back(std::move(entry));

    std::string line = c.informational ? "INFO " : (c.passed ? "PASS " : "FAIL ");
    line += c.suite + ": " + c.name;
    for (const auto& [key, value] : c.witness) line += "  " + key + "=" + value;
    r.text += line + "\n";
    if (!c.passed && !c.informational) ++failed;
  }
  r.result = {{"passed", report.passed()}, {"failed", failed}, {"checks", std::move(checks)}};
  r.text += report.passed() ? "all " + std::to_string(report.checks.size()) + " checks passed\n"
                            : std::to_string(failed) + " checks failed\n";
  r.exit_code = report.passed() ? kOk : kVerificationFailed;
  return r;
}

void emit(std::ostream& out, Format format, const std::string& command, const Outcome& r) {
  if (format == Format::kJson) {
    Json rec = {{"command", command},
                {"inputs", r.inputs},
                {"status", "ok"},
                {"result", r.result},
                {"error_detail", nullptr}};
    out << rec.dump(2) << "\n";
  } else {
    out << r.text;
    if (!r.text.empty() && r.text.back() != '\n') out << "\n";
  }
}

void emit_error(std::ostream& out, std::ostream& err, Format format, const std::string& command,
                const std::string& detail) {
  if (format == Format::kJson) {
    Json rec = {{"command", command},
                {"inputs", Json::object()},
                {"status", "error"},
                {"result", nullptr},
                {"error_detail", detail}};
    out << rec.dump(2) << "\n";
  } else {
    err << "error: " << detail << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bernoulli numbers and zeta(2k) through the P_k recursion and plane trees"};
  app.name("evenzeta");
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto with_k = [&](CLI::App* sub) {
    sub->add_option_function<std::size_t>(
        "--k", [&](const std::size_t& k) { o.k = k; o.k_given = true; }, "Index k");
  };

  using Handler = std::function<Outcome(const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto* bern = app.add_subcommand("bernoulli", "B_{2k} by recursion, tree sum, or classical oracle");
  with_k(bern);
  bern->add_option("--method", o.method, "recursion | tree | classical");
  bern->add_flag("--approx", o.approx, "Also print a decimal approximation");
  commands.emplace_back(bern, cmd_bernoulli);

  auto* ak = app.add_subcommand("ak", "The integers A_k = P_k(k)");
  with_k(ak);
  ak->add_option("--max,--max-k", o.max_k, "Emit A_1 .. A_max");
  commands.emplace_back(ak, cmd_ak);

  auto* pk = app.add_subcommand("pk", "The polynomial P_k(x)");
  with_k(pk);
  pk->add_flag("--translated", o.translated, "Show P_k(x + k - 3/2)");
  pk->add_flag("--half-scale", o.half_scale, "With --translated, show P_k(x/2 + k - 3/2)");
  pk->add_flag("--basis", o.basis, "Also show the coefficient-recursion coefficients c_{i,k}");
  commands.emplace_back(pk, cmd_pk);

  auto* zeta = app.add_subcommand("zeta-even", "zeta(2k) as a rational multiple of pi^{2k}");
  with_k(zeta);
  zeta->add_flag("--approx", o.approx, "Also print a decimal approximation");
  commands.emplace_back(zeta, cmd_zeta_even);

  auto* trees = app.add_subcommand("trees", "Plane trees with k vertices and their weights");
  with_k(trees);
  trees->add_flag("--list", o.list, "List every tree with Low, High and weight");
  commands.emplace_back(trees, cmd_trees);

  auto* transform = app.add_subcommand("transform", "Tree transform of a sequence R");
  with_k(transform);
  transform->add_option("--sequence", o.sequence_file, "File with one rational R_n per line");
  transform->add_flag("--approx", o.approx, "Also print a decimal approximation");
  commands.emplace_back(transform, cmd_transform);

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("--suite", o.suite,
                     "all | newton-girard | cycle-index | trees | coeffs | bernoulli | fn | "
                     "positivity | leading | lemma-2ni");
  verify->add_option("--max-k", o.max_k, "Largest k (or N, n) to check");
  commands.emplace_back(verify, cmd_verify);

  for (auto& [sub, handler] : commands) common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  const Format format = o.format == "json" ? Format::kJson : Format::kText;
  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    const std::string name = sub->get_name();
    try {
      const Outcome r = handler(o);
      emit(out, format, name, r);
      return r.exit_code;
    } catch (const Error& e) {
      emit_error(out, err, format, name, e.what());
      return kUsageError;
    }
  }
  return kUsageError;
}

}  // namespace evenzeta::cli
