#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "diffu/errors.hpp"
#include "report_json.hpp"

namespace diffu::cli {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  unsigned m = 0;
  std::string modulus;
  std::string moduli_file;
  std::string func;
  std::string table;
  std::int64_t d = 0;
  std::string format = "json";
  std::string mode = "auto";
  std::uint64_t seed = 0;
  std::uint64_t alpha_budget = 1000;
  std::uint32_t stop_at = 0;
  std::string suite;
  bool cross_check = false;
  bool no_timestamp = false;

  ordered_json to_json() const {
    ordered_json j = {{"command", command}};
    if (m) j["m"] = m;
    if (!modulus.empty()) j["mod"] = modulus;
    if (!moduli_file.empty()) j["moduli_file"] = moduli_file;
    if (!func.empty()) j["func"] = func;
    if (!table.empty()) j["table"] = table;
    if (d) j["d"] = d;
    if (command == "delta") {
      j["mode"] = mode;
      j["seed"] = seed;
      j["alpha_budget"] = alpha_budget;
      j["stop_at"] = stop_at;
    }
    if (command == "geom") j["cross_check"] = cross_check;
    if (command == "verify") {
      j["suite"] = suite;
      j["seed"] = seed;
    }
    j["format"] = format;
    return j;
  }
};

/// Usage errors that are not library exceptions.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

Field resolve_field(const RunConfig& c) {
  if (c.m == 0) throw UsageError("--m is required");
  if (!c.modulus.empty()) {
    const auto v = parse_hex(c.modulus);
    if (!v || *v > 0xFFFFFFFFu) throw UsageError("--mod must be a hex polynomial such as 0x11B");
    return Field::make(c.m, static_cast<std::uint32_t>(*v));
  }
  std::string table_path = c.moduli_file;
  if (table_path.empty()) {
    if (const char* env = std::getenv("DIFFU_MODULI_FILE")) table_path = env;
  }
  if (!table_path.empty()) {
    const auto table = load_modulus_table(table_path);
    const auto it = table.find(c.m);
    if (it == table.end()) throw UsageError("modulus table " + table_path + " has no entry for m = " + std::to_string(c.m));
    return Field::make(c.m, it->second);
  }
  return Field::make(c.m);
}

struct Input {
  std::optional<PolyFunc> poly;
  std::vector<Elem> table;  // set when the input was a value table
};

Input resolve_function(const RunConfig& c, const Field& field) {
  if (c.func.empty() == c.table.empty()) throw UsageError("give exactly one of --func or --table");
  Input in;
  if (!c.func.empty()) {
    in.poly = parse_function(field, c.func);
  } else {
    in.table = parse_value_table(field, read_file(c.table));
    if (field.degree() <= kMaxInterpolateDegree) in.poly = interpolate(field, in.table);
  }
  return in;
}

void emit(std::ostream& out, const RunConfig& c, ordered_json report) {
  report["config"] = c.to_json();
  if (!c.no_timestamp) report["timestamp"] = timestamp();
  out << report.dump(2) << "\n";
}

void emit_text(std::ostream& out, const ordered_json& j, const std::string& prefix = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      emit_text(out, v, prefix + k + ".");
    } else {
      out << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void output(std::ostream& out, const RunConfig& c, ordered_json report) {
  if (c.format == "text") {
    report["config"] = c.to_json();
    emit_text(out, report);
    return;
  }
  emit(out, c, std::move(report));
}

int cmd_delta(const RunConfig& c, std::ostream& out) {
  const Field field = resolve_field(c);
  const Input in = resolve_function(c, field);

  if (c.format == "csv") {
    if (!in.poly) throw UsageError("CSV dump needs a function representable on this field");
    const auto rows = full_ddt(*in.poly);
    out << "alpha";
    for (std::size_t b = 0; b < rows.size(); ++b) out << "," << to_hex(b);
    out << "\n";
    for (std::size_t a = 0; a < rows.size(); ++a) {
      out << to_hex(a);
      for (auto v : rows[a]) out << "," << v;
      out << "\n";
    }
    return kOk;
  }

  std::string mode = c.mode;
  const auto mono = in.poly ? in.poly->monomial_exponent() : std::nullopt;
  const bool unit_monomial = mono && in.poly->coefficient(*mono) == 1 && *mono >= 3;
  if (mode == "auto") {
    if (unit_monomial) {
      mode = "monomial";
    } else if (field.degree() <= kMaxExhaustiveDegree) {
      mode = "exhaustive";
    } else {
      mode = "sampled";
    }
  }

  DdtReport rep;
  if (mode == "monomial") {
    if (!unit_monomial) throw UsageError("--mode monomial needs a function of the form x^d with d >= 3");
    rep = delta_monomial(*mono, field);
  } else if (mode == "exhaustive") {
    rep = in.poly ? delta_exhaustive(*in.poly) : delta_exhaustive(field, in.table);
  } else if (mode == "sampled") {
    if (!in.poly) throw UsageError("sampled mode needs --func");
    rep = delta_sampled(*in.poly, {c.alpha_budget, c.seed, c.stop_at});
  } else {
    throw UsageError("unknown --mode " + mode);
  }

  ordered_json j = ddt_json(rep, field);
  if (in.poly) {
    const auto norm = normalize(*in.poly);
    j["function"] = in.poly->to_string();
    j["normalized"] = !norm.degenerate() && norm.normalized->poly() == *in.poly;
    if (norm.degenerate()) j["note"] = "degenerate: " + norm.reason;
  }
  output(out, c, std::move(j));
  return kOk;
}

NormalizedPolyFunc normalized_input(const RunConfig& c, const Field& field, ordered_json& j) {
  const Input in = resolve_function(c, field);
  if (!in.poly) throw UsageError("geometry needs a polynomial; value tables are interpolated only up to m = 12");
  unsigned roots = 0;
  auto norm = normalize_up_to_squares(*in.poly, &roots);
  if (norm.degenerate()) throw UsageError("degenerate function: " + norm.reason);
  j["function"] = in.poly->to_string();
  if (!(norm.normalized->poly() == *in.poly)) j["normalized_to"] = norm.normalized->poly().to_string();
  if (roots) j["square_roots_taken"] = roots;
  return std::move(*norm.normalized);
}

int cmd_geom(const RunConfig& c, std::ostream& out) {
  const Field field = resolve_field(c);
  if (field.degree() > kMaxContainmentDegree) {
    throw ResourceLimit("geom scans O(q^3) points and is limited to m <= " + std::to_string(kMaxContainmentDegree));
  }
  ordered_json extra;
  const auto f = normalized_input(c, field, extra);
  ordered_json j;
  bool ok = true;
  if (c.cross_check) {
    const auto eq = equivalence_details(f);
    j = geometry_json(eq.geometry, field);
    j["cross_check"] = {{"delta", eq.delta},
                        {"delta_at_most_4", eq.delta_at_most_4},
                        {"contained", eq.contained},
                        {"no_six_solutions", eq.no_six_solutions}};
    j["agree"] = eq.agree();
    ok = eq.agree();
  } else {
    j = geometry_json(contained_in_V(f), field);
  }
  j.update(extra);
  output(out, c, std::move(j));
  return ok ? kOk : kCheckFailed;
}

int cmd_curve(const RunConfig& c, std::ostream& out) {
  const Field field = resolve_field(c);
  if (c.d < 3 || c.d % 2 == 0) throw UsageError("--d must be odd and at least 3 (got " + std::to_string(c.d) + ")");
  const auto d = static_cast<std::uint64_t>(c.d);
  const auto count = proj_curve_points(d, field);
  ordered_json j = {{"d", c.d}, {"m", field.degree()}, {"count", count}};
  if (c.d >= 5) {
    const auto genus = arithmetic_genus(c.d);
    const auto [lo, hi] = weil_interval(field.order(), genus);
    j["genus"] = genus;
    j["weil_interval"] = {lo, hi};
    j["in_interval"] = static_cast<std::int64_t>(count) >= lo && static_cast<std::int64_t>(count) <= hi;
  } else {
    j["genus"] = nullptr;
    j["weil_interval"] = nullptr;
  }
  bool ok = true;
  if (field.degree() <= kMaxStructuralDegree) {
    const auto s = structural_checks(d, field);
    j["checks"] = structural_json(s);
    // Below r = 3 the checks are informational only.
    ok = s.all() || !is_mersenne_degree(c.d);
  } else {
    j["checks"] = nullptr;
  }
  j["field"] = field_json(field);
  output(out, c, std::move(j));
  return ok ? kOk : kCheckFailed;
}

int cmd_predict(const RunConfig& c, std::ostream& out) {
  if (c.m == 0) throw UsageError("--m is required");
  if (c.d < 1) throw UsageError("--d is required");
  output(out, c, bound_json(bound_report(c.d, c.m)));
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  SuiteOptions opts;
  if (c.m) opts.m = c.m;
  opts.seed = c.seed;
  SuiteResult r;
  try {
    r = run_suite(c.suite, opts);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  if (c.format == "json") {
    emit(out, c, suite_json(r));
  } else {
    out << "suite " << r.suite << ": " << r.description << "\n";
    for (const auto& cs : r.cases) {
      out << "  [" << status_name(cs.status) << "] " << cs.name << " -- " << cs.detail << "\n";
    }
    out << (r.passed() ? "PASS" : "FAIL") << " (" << r.count(CaseStatus::kPass) << " passed, "
        << r.count(CaseStatus::kFail) << " failed, " << r.count(CaseStatus::kInconclusive) << " inconclusive)\n";
  }
  return r.passed() ? kOk : kCheckFailed;
}

int cmd_pf(const RunConfig& c, std::ostream& out) {
  TriPoly p;
  if (c.d) {
    p = homogeneous_pf(static_cast<std::uint64_t>(c.d));
  } else {
    const Field field = resolve_field(c);
    const Input in = resolve_function(c, field);
    if (!in.poly) throw UsageError("pf needs a polynomial");
    p = pf_polynomial(*in.poly);
  }
  out << p.to_string();
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential uniformity of polynomial functions over F_{2^m}", "diffu"};
  app.require_subcommand(1);
  RunConfig c;

  const auto add_field = [&](CLI::App* sub) {
    sub->add_option("--m", c.m, "field degree m (q = 2^m)")->check(CLI::Range(2u, 24u));
    sub->add_option("--mod", c.modulus, "irreducible modulus in hex, e.g. 0x11B");
    sub->add_option("--moduli-file", c.moduli_file, "modulus table overriding the built-in defaults");
  };
  const auto add_function = [&](CLI::App* sub) {
    sub->add_option("--func", c.func, "function, e.g. x^7 or 0x3*x^7+0x1*x^5");
    sub->add_option("--table", c.table, "file with q hex values, one per line");
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json | text")->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_flag("--no-timestamp", c.no_timestamp, "omit the timestamp field");
  };

  auto* delta = app.add_subcommand("delta", "differential uniformity of a function");
  add_field(delta);
  add_function(delta);
  add_common(delta);
  delta->add_option("--mode", c.mode, "auto | exhaustive | monomial | sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "monomial", "sampled"}));
  delta->add_option("--seed", c.seed, "seed for sampled mode");
  delta->add_option("--alpha-budget", c.alpha_budget, "rows examined in sampled mode")->check(CLI::PositiveNumber);
  delta->add_option("--stop-at", c.stop_at, "sampled mode: stop once a row reaches this count");

  auto* geom = app.add_subcommand("geom", "decide whether X(F_q) lies in the seven hyperplanes");
  add_field(geom);
  add_function(geom);
  add_common(geom);
  geom->add_flag("--cross-check", c.cross_check, "also compare with the DDT and a direct six-solution search");

  auto* curve = app.add_subcommand("curve", "points on P_{x^d} = 0, Weil interval and structural checks");
  add_field(curve);
  add_common(curve);
  curve->add_option("--d", c.d, "exponent d")->required();

  auto* predict = app.add_subcommand("predict", "evaluate the bounds for (d, m)");
  predict->add_option("--d", c.d, "degree d")->required();
  predict->add_option("--m", c.m, "field degree m")->required()->check(CLI::Range(1u, kMaxBoundDegree));
  add_common(predict);

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", c.suite, "suite name")->required();
  verify->add_option("--m", c.m, "restrict the suite to one field degree")->check(CLI::Range(2u, 24u));
  std::uint64_t verify_seed = 1;
  std::string verify_format = "text";
  verify->add_option("--seed", verify_seed, "seed for random instances")->capture_default_str();
  verify->add_option("--format", verify_format, "text | json")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  verify->add_flag("--no-timestamp", c.no_timestamp, "omit the timestamp field");

  auto* pf = app.add_subcommand("pf", "print P_f as sorted coeff*x^i*y^j*z^k lines");
  add_field(pf);
  add_function(pf);
  pf->add_option("--d", c.d, "print P_{x^d} over the prime field instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (c.format == "csv" && !delta->parsed()) {
    err << "--format csv is only available for delta\n";
    return kUsage;
  }

  try {
    if (delta->parsed()) return (c.command = "delta", cmd_delta(c, out));
    if (geom->parsed()) return (c.command = "geom", cmd_geom(c, out));
    if (curve->parsed()) return (c.command = "curve", cmd_curve(c, out));
    if (predict->parsed()) return (c.command = "predict", cmd_predict(c, out));
    if (verify->parsed()) {
      c.command = "verify";
      c.seed = verify_seed;
      c.format = verify_format;
      return cmd_verify(c, out, err);
    }
    if (pf->parsed()) return (c.command = "pf", cmd_pf(c, out));
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace diffu::cli
