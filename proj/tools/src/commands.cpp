#include "frobcoh_cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "frobcoh/cohomology.hpp"
#include "frobcoh/deformation.hpp"
#include "frobcoh/random.hpp"
#include "frobcoh/yangbaxter.hpp"
#include "frobcoh_cli/acceptance.hpp"
#include "frobcoh_cli/algebra_file.hpp"
#include "frobcoh_cli/builtins.hpp"

namespace frobcoh::cli {

using nlohmann::json;

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["algebra"] = algebra.empty() ? json(nullptr) : json(algebra);
  j["field"] = field.empty() ? json(nullptr) : json(field);
  j["results"] = results;
  j["version"] = version;
  return j;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

}  // namespace

std::string render_table(const Report& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("command", report.command);
  if (!report.algebra.empty()) rows.emplace_back("algebra", report.algebra);
  if (!report.field.empty()) rows.emplace_back("field", report.field);
  flatten(report.results, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  return out.str();
}

namespace {

struct Source {
  std::string builtin;
  std::string file;
  std::string field;

  void attach(CLI::App* app) {
    auto* b = app->add_option("--builtin", builtin, "builtin algebra name");
    auto* f = app->add_option("--file", file, "algebra definition file");
    b->excludes(f);
    app->add_option("--field", field, "ground field override for poly/group builtins (Q, Qi, GF<p>)");
  }

  AlgebraPresentation presentation() const {
    std::optional<FieldSpec> f;
    if (!field.empty()) f = parse_field(field);
    if (!builtin.empty()) return resolve_builtin(builtin, f);
    if (file.empty()) throw Error(ErrorCode::InvalidArgument, "one of --builtin or --file is required");
    if (f) throw Error(ErrorCode::InvalidArgument, "--field does not apply to --file (the file names its field)");
    return parse_algebra_file(read_file(file), std::filesystem::path(file).stem().string());
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

struct Context {
  Report report;
  int exit = kOk;

  void fail_if(bool bad) {
    if (bad) exit = kMathFailure;
  }
};

json witness_json(const std::optional<YbeWitness>& w) {
  if (!w) return nullptr;
  return {{"row", w->row}, {"col", w->col}, {"lhs", to_string(w->lhs)}, {"rhs", to_string(w->rhs)}};
}

json coefficients_json(const SkeinCoefficients& c) {
  return {{"A", to_string(c.a)}, {"B", to_string(c.b)}, {"C", to_string(c.c)}, {"T", to_string(c.t)}};
}

json chain_json(const ChainCheck& c) {
  json j{{"name", c.name},
         {"holds", c.holds},
         {"columns_checked", c.columns_checked},
         {"failing_columns", c.failing_columns}};
  if (!c.holds) j["witness"] = c.witness;
  return j;
}

void describe_algebra(Context& ctx, const FrobeniusAlgebra& alg) {
  ctx.report.algebra = alg.id();
  ctx.report.field = alg.field().name();
}

// ---------------------------------------------------------------- check

void run_check(Context& ctx, const FrobeniusAlgebra& alg) {
  json& r = ctx.report.results;
  r["dimension"] = alg.dim();
  json axioms = json::object();
  for (const auto& a : verify_axioms(alg)) {
    axioms[a.name] = a.holds;
    ctx.fail_if(!a.holds);
  }
  r["axioms"] = axioms;
  r["delta0"] = to_string(alg.delta0());
  r["handle_element"] = format_element(alg.presentation(), alg.handle_element());
  r["delta1"] = alg.scalar_handle() ? json(to_string(*alg.scalar_handle())) : json(nullptr);
  r["symmetric"] = alg.symmetric();
  r["commutative"] = alg.commutative();
  json tl = json::object();
  for (const auto& a : temperley_lieb_checks(alg)) {
    tl[a.name] = a.holds;
    ctx.fail_if(!a.holds);
  }
  r["temperley_lieb"] = tl;
}

// ---------------------------------------------------------------- cohomology

struct CohomologyOptions {
  unsigned max_degree = 2;
  int variant = 1;
  bool deep = false;
};

void run_cohomology(Context& ctx, const FrobeniusAlgebra& alg, const CohomologyOptions& o) {
  if (o.max_degree == 3 && alg.dim() >= 4 && !o.deep) {
    throw Error(ErrorCode::InvalidArgument, "degree 3 on an algebra of dimension " + std::to_string(alg.dim()) +
                                                " is expensive; pass --deep to run it");
  }
  const Variant v = parse_variant(o.variant);
  auto report = cohomology_dims(alg, o.max_degree, v);
  json& r = ctx.report.results;
  r["variant"] = o.variant;
  json degrees = json::array();
  for (const auto& d : report.degrees) {
    degrees.push_back({{"degree", d.degree}, {"dim_Z", d.dim_z}, {"dim_B", d.dim_b}, {"dim_H", d.dim_h}});
  }
  r["degrees"] = degrees;
  json checks = json::array();
  for (const auto& c : report.chain_checks) {
    checks.push_back(chain_json(c));
    ctx.fail_if(!c.holds);
  }
  r["chain_checks"] = checks;
}

// ---------------------------------------------------------------- ybe

struct YbeOptions {
  std::string construction = "delta-mu";
  std::string a = "0", b = "0", c = "0", t = "0";
  std::string skein_case;
  bool c_given = false, t_given = false;
};

json solution_json(const SkeinSolution& s) {
  return {{"coefficients", coefficients_json(s.coefficients)},
          {"inverse_coefficients", coefficients_json(s.inverse_coefficients)},
          {"ybe_ok", s.ybe_ok},
          {"inverse_ok", s.inverse_ok}};
}

void run_ybe(Context& ctx, const FrobeniusAlgebra& alg, const YbeOptions& o) {
  json& r = ctx.report.results;
  r["construction"] = o.construction;
  const FieldSpec& f = alg.field();
  if (!o.skein_case.empty()) {
    if (o.construction != "skein") throw Error(ErrorCode::InvalidArgument, "--case requires --construction skein");
    r["case"] = o.skein_case;
    std::vector<SkeinSolution> sols;
    if (o.skein_case == "i") {
      sols = solve_skein_case_i(alg);
    } else {
      const Scalar c = o.c_given ? parse_scalar(o.c, f) : Scalar::one(f);
      const Scalar t = o.t_given ? parse_scalar(o.t, f) : Scalar::one(f);
      sols.push_back(solve_skein_case_ii(alg, c, t));
    }
    json list = json::array();
    for (const auto& s : sols) {
      list.push_back(solution_json(s));
      ctx.fail_if(!s.ybe_ok || !s.inverse_ok);
    }
    r["solutions"] = list;
    return;
  }
  RMatrix rm = [&] {
    if (o.construction == "delta-mu") return r_delta_mu(alg);
    if (o.construction == "tau-delta-mu") return r_tau_delta_mu(alg);
    if (o.construction == "sandwich") return r_sandwich(alg);
    return r_skein(alg, parse_scalar(o.a, f), parse_scalar(o.b, f), parse_scalar(o.c, f), parse_scalar(o.t, f));
  }();
  if (rm.coefficients) r["coefficients"] = coefficients_json(*rm.coefficients);
  const YbeResult y = check_ybe(rm);
  r["holds"] = y.holds;
  r["witness"] = witness_json(y.witness);
  r["invertible"] = invert(rm).has_value();
  ctx.fail_if(!y.holds);
}

// ---------------------------------------------------------------- deform

struct DeformOptions {
  std::string c = "1", t = "1";
  std::size_t sample = 0;
  std::uint64_t seed = 1;
};

json cochain_terms(const FrobeniusAlgebra& alg, std::span<const Scalar> coords) {
  json terms = json::object();
  const std::size_t d = alg.dim();
  const std::size_t n1 = d * d * d;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    // φ1 is d × d² and φ2 is d² × d, row-major.
    const bool first = i < n1;
    const std::size_t j = first ? i : i - n1;
    const std::size_t cols = first ? d * d : d;
    const std::string key = std::string(first ? "phi1[" : "phi2[") + std::to_string(j / cols) + "," +
                            std::to_string(j % cols) + "]";
    terms[key] = to_string(coords[i]);
  }
  return terms;
}

void run_deform(Context& ctx, const FrobeniusAlgebra& alg, const DeformOptions& o) {
  const FieldSpec& f = alg.field();
  const Scalar c = parse_scalar(o.c, f);
  const Scalar t = parse_scalar(o.t, f);
  const Subspace space = deformation_constraint_space(alg);
  json& r = ctx.report.results;
  r["C"] = to_string(c);
  r["T"] = to_string(t);
  r["constraint_dim"] = space.dim();
  auto evaluate = [&](std::span<const Scalar> coords) {
    const Cochain phi = Cochain::from_coordinates(alg, 2, coords);
    const DeformedR dr = deformed_r(alg, phi[0], phi[1], c, t);
    json j{{"cochain", cochain_terms(alg, coords)},
           {"ybe_ok", dr.ybe_ok},
           {"delta1", to_string(delta1_of(alg, phi[0], phi[1]))}};
    if (dr.witness) j["witness"] = *dr.witness;
    ctx.fail_if(!dr.ybe_ok);
    return j;
  };
  json basis = json::array();
  for (const auto& b : space.basis()) basis.push_back(evaluate(b));
  r["basis"] = basis;
  if (o.sample > 0) {
    RandomSource rng(o.seed);
    std::size_t ok = 0;
    json failures = json::array();
    for (std::size_t s = 0; s < o.sample; ++s) {
      Vector coords(space.ambient_dim(), Scalar::zero(f));
      for (const auto& b : space.basis()) {
        const Scalar k = rng.scalar(f);
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += k * b[i];
      }
      json j = evaluate(coords);
      if (j["ybe_ok"].get<bool>()) {
        ++ok;
      } else if (failures.size() < 5) {
        failures.push_back(j);
      }
    }
    r["sample"] = {{"count", o.sample}, {"seed", o.seed}, {"ybe_ok", ok}, {"failures", failures}};
  }
}

// ---------------------------------------------------------------- selftest

void run_selftest(Context& ctx, bool deep, std::ostream& out, bool json_mode) {
  AcceptanceOptions options;
  options.deep = deep;
  json criteria = json::array();
  auto results = run_acceptance(options, [&](const CriterionResult& c) {
    if (!json_mode) out << format_criterion(c) << std::flush;
  });
  std::size_t passed = 0;
  for (const auto& c : results) {
    criteria.push_back({{"number", c.number},
                        {"title", c.title},
                        {"passed", c.passed},
                        {"details", c.details},
                        {"discrepancies", c.discrepancies}});
    passed += c.passed;
    ctx.fail_if(!c.passed);
  }
  ctx.report.results["criteria"] = criteria;
  ctx.report.results["passed"] = passed;
  ctx.report.results["total"] = results.size();
  ctx.report.results["deep"] = deep;
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Frobenius algebra cohomology and Yang-Baxter tools", "frobcoh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit the JSON report");

  Source src;
  auto* check = app.add_subcommand("check", "validate an algebra and print its handle data");
  src.attach(check);

  CohomologyOptions co;
  auto* coh = app.add_subcommand("cohomology", "dimensions of Z, B and H");
  src.attach(coh);
  coh->add_option("--max-degree", co.max_degree)->check(CLI::Range(1, 3));
  coh->add_option("--variant", co.variant)->check(CLI::IsMember({1, 2}));
  coh->add_flag("--deep", co.deep, "allow degree 3 on algebras of dimension 4 and up");

  YbeOptions yo;
  auto* ybe = app.add_subcommand("ybe", "build an R-matrix and check the Yang-Baxter equation");
  src.attach(ybe);
  ybe->add_option("--construction", yo.construction)
      ->check(CLI::IsMember({"delta-mu", "tau-delta-mu", "sandwich", "skein"}));
  ybe->add_option("--A", yo.a);
  ybe->add_option("--B", yo.b);
  auto* yc = ybe->add_option("--C", yo.c);
  auto* yt = ybe->add_option("--T", yo.t);
  ybe->add_option("--case", yo.skein_case)->check(CLI::IsMember({"i", "ii"}));

  DeformOptions dopt;
  auto* deform = app.add_subcommand("deform", "first-order deformations and their R-matrices");
  src.attach(deform);
  deform->add_option("--C", dopt.c);
  deform->add_option("--T", dopt.t);
  deform->add_option("--sample", dopt.sample, "number of random constraint-space elements to check");
  deform->add_option("--seed", dopt.seed);

  bool self_deep = false;
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_flag("--deep", self_deep);

  std::string fmt_file;
  auto* fmt = app.add_subcommand("fmt", "print an algebra file in canonical form");
  fmt->add_option("file", fmt_file)->required();

  for (auto* sub : {check, coh, ybe, deform, self, fmt}) sub->add_flag("--json", json_mode, "emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Context ctx;
  ctx.report.command = app.get_subcommands().front()->get_name();
  yo.c_given = yc->count() > 0;
  yo.t_given = yt->count() > 0;
  try {
    if (fmt->parsed()) {
      // Canonical text is the output in both modes; JSON wraps it.
      const auto pres = parse_algebra_file(Source::read_file(fmt_file),
                                           std::filesystem::path(fmt_file).stem().string());
      const std::string text = print_algebra_file(pres);
      if (!json_mode) {
        out << text;
        return kOk;
      }
      ctx.report.field = pres.field.name();
      ctx.report.results["text"] = text;
    } else if (self->parsed()) {
      run_selftest(ctx, self_deep, out, json_mode);
      if (!json_mode) {
        const auto& r = ctx.report.results;
        out << r["passed"].get<std::size_t>() << "/" << r["total"].get<std::size_t>() << " criteria passed\n";
        return ctx.exit;
      }
    } else {
      const FrobeniusAlgebra alg = validate(src.presentation());
      describe_algebra(ctx, alg);
      if (check->parsed()) run_check(ctx, alg);
      if (coh->parsed()) run_cohomology(ctx, alg, co);
      if (ybe->parsed()) run_ybe(ctx, alg, yo);
      if (deform->parsed()) run_deform(ctx, alg, dopt);
    }
  } catch (const Error& e) {
    ctx.exit = is_mathematical(e.code()) ? kMathFailure : kInputError;
    ctx.report.results["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (!json_mode) {
      err << "error: " << e.what() << "\n";
      if (ctx.exit == kInputError) return ctx.exit;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (json_mode) {
    out << ctx.report.to_json().dump(2) << "\n";
  } else {
    out << render_table(ctx.report);
  }
  return ctx.exit;
}

}  // namespace frobcoh::cli
