#include "nij/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nij/acs.hpp"
#include "nij/autmod.hpp"
#include "nij/families.hpp"
#include "nij/json_io.hpp"
#include "nij/numsearch.hpp"

namespace nij::cli {

namespace {

// Exit code plus the JSON document a command prints.
struct Outcome {
  int code;
  Json payload;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("NIJ_SEED");
  if (!env || !*env) return 1;
  std::uint64_t v = 0;
  std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("NIJ_SEED must be an unsigned integer");
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string basis_label(std::size_t i) { return "e" + std::to_string(i % 3 + 1) + (i < 3 ? "" : "*"); }

template <class V>
std::optional<std::string> unit_label(const V& v) {
  int idx = -1;
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 || idx >= 0) return std::nullopt;
    idx = static_cast<int>(i);
  }
  if (idx < 0) return std::nullopt;
  return basis_label(static_cast<std::size_t>(idx));
}

Json diagnostics_json(const std::vector<FamilyId>& matches) {
  Json m = Json::array();
  for (FamilyId id : matches) m.push_back(std::string(to_string(id)));
  return m;
}

Json quasi_invariant_json(const Acs<Rational>& j) {
  Json out = Json::array();
  for (const auto& q : quasi_invariant(j)) {
    Json e;
    e["lambda"] = q.lambda.str();
    e["lambda_approx"] = q.lambda.approx;
    if (q.is_rational()) {
      const auto v = q.rational_v();
      e["v"] = vector_json(v);
      e["jstar_v"] = vector_json(q.rational_jstar_v());
      if (auto l = unit_label(v)) e["label"] = *l;
    } else {
      Json v = Json::array(), js = Json::array();
      for (std::size_t i = 0; i < 3; ++i) {
        v.push_back(q.v[i].approx(q.lambda.approx));
        js.push_back(q.jstar_v[i].approx(q.lambda.approx));
      }
      e["v"] = v;
      e["jstar_v"] = js;
      Json exact = Json::array();
      for (const auto& x : q.v) exact.push_back(x.value().str("lambda"));
      e["v_exact"] = exact;
    }
    e["identity_holds"] = satisfies_quasi_invariant_identity(j, q);
    out.push_back(e);
  }
  return out;
}

Json quasi_invariant_json(const Acs<double>& j, double eps) {
  Json out = Json::array();
  for (const auto& q : quasi_invariant(j, eps)) {
    Json e{{"lambda", q.lambda}, {"v", vector_json(q.v)}, {"jstar_v", vector_json(q.jstar_v)}};
    Vec3<double> rounded;
    for (std::size_t i = 0; i < 3; ++i) rounded[i] = std::fabs(q.v[i] - std::round(q.v[i])) <= eps ? std::round(q.v[i]) : q.v[i];
    if (auto l = unit_label(rounded)) e["label"] = *l;
    e["identity_holds"] = satisfies_quasi_invariant_identity(j, q, std::max(eps, 1e-8));
    out.push_back(e);
  }
  return out;
}

template <class T>
Outcome check_matrix(const Designator& d, const Mat6<T>& m, double eps) {
  const auto alg = make_algebra<T>(d);
  const auto palg = product(alg);
  const Acs<T> j(m);
  Json rep;
  rep["algebra"] = designator_of(alg);
  rep["scalar"] = std::string(to_string(kIsExact<T> ? ScalarMode::Rational : ScalarMode::Float));
  const auto acs = is_acs(j, eps);
  rep["is_acs"] = acs.ok;
  rep["acs_residual"] = to_json(acs.max_abs);
  const auto report = integrability_report(palg, j, eps);
  rep["max_nijenhuis"] = to_json(report.max_norm);
  Json nonzero = Json::array();
  for (const auto& p : report.pairs)
    if (!is_zero(p.value, eps))
      nonzero.push_back({{"pair", {basis_label(static_cast<std::size_t>(p.i)), basis_label(static_cast<std::size_t>(p.j))}},
                         {"value", vector_json(p.value)}});
  rep["nonzero_pairs"] = nonzero;
  const bool integrable = acs.ok && report.integrable;
  rep["integrable"] = integrable;
  if (acs.ok) {
    const auto r = star_rank(j);
    rep["star_rank"] = {r.g_to_star, r.star_to_g};
    rep["swaps_factors"] = swaps_factors(j, eps);
    if constexpr (kIsExact<T>)
      rep["quasi_invariant"] = quasi_invariant_json(j);
    else
      rep["quasi_invariant"] = quasi_invariant_json(j, eps);
  }
  if (integrable) rep["matches"] = diagnostics_json(classify(palg, j, eps).matches);
  return {integrable ? kOk : kCheckFailed, rep};
}

FamilyParams parse_params(FamilyId id, const std::vector<std::string>& kv, std::optional<std::uint64_t> sample_seed) {
  FamilyParams p = sample_seed ? sample_params(id, *sample_seed, 1).front() : FamilyParams::defaults(id);
  for (const auto& item : kv) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--param expects KEY=VALUE, got '" + item + "'");
    std::string key = item.substr(0, eq);
    if (key == "\xCE\xBB") key = "lambda";
    if (key == "\xCE\xBA") key = "kappa";
    if (key == "\xCE\xBA*") key = "kappa*";
    if (key == "\xCE\xB7") key = "eta";
    p.set(key, parse_rational(item.substr(eq + 1)));
  }
  return p;
}

Json params_json(const FamilyParams& p) {
  Json out = Json::object();
  for (const auto& [k, v] : p.values) out[k] = to_string(v);
  return out;
}

std::vector<double> parse_theta_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_double(item));
  if (out.empty()) throw ParseError("--thetas needs at least one value");
  return out;
}

Json algebra_catalogue() {
  struct Row {
    int tag;
    const char* parameter;
    std::vector<const char*> brackets;
    const char* integrable;
  };
  const std::vector<Row> rows = {
      {1, nullptr, {}, "yes"},
      {2, nullptr, {"[e1,e2] = e1"}, "yes"},
      {3, nullptr, {"[e1,e2] = e3"}, "yes"},
      {4, "theta != 0", {"[e1,e3] = e1", "[e2,e3] = theta e2"}, "only for theta = 1"},
      {5, nullptr, {"[e1,e3] = e1", "[e2,e3] = e1 + e2"}, "no"},
      {6, "theta > 0", {"[e1,e3] = theta e1 - e2", "[e2,e3] = e1 + theta e2"}, "yes"},
      {7, nullptr, {"[e1,e2] = e3", "[e1,e3] = e2", "[e2,e3] = e1"}, "yes"},
      {8, nullptr, {"[e1,e2] = e3", "[e1,e3] = -e2", "[e2,e3] = e1"}, "yes"},
  };
  Json list = Json::array();
  for (const auto& r : rows) {
    Json e{{"tag", r.tag}, {"brackets", r.brackets}, {"integrable_structure", r.integrable}};
    e["parameter"] = r.parameter ? Json(r.parameter) : Json(nullptr);
    list.push_back(e);
  }
  return Json{{"algebras", list}};
}

Json structure_constants_json(const LieAlgebra3<Rational>& alg) {
  Json b = Json::object();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      b["[" + basis_label(i) + "," + basis_label(j) + "]"] = vector_json(alg.constants(i, j));
  return b;
}

Outcome verify_families(int samples, std::uint64_t seed, std::optional<FamilyId> only, std::ostream& err) {
  Json results = Json::array();
  bool all_ok = true;
  for (FamilyId id : all_families()) {
    if (only && *only != id) continue;
    for (const auto& d : reference_algebras(id)) {
      const auto alg = make_algebra<Rational>(Designator::parse(d));
      int verified = 0;
      std::optional<std::string> first_error;
      for (const auto& p : sample_params(id, seed, samples)) {
        try {
          family(p, alg);
          ++verified;
        } catch (const std::exception& e) {
          if (!first_error) first_error = e.what();
        }
      }
      Json r{{"family", std::string(to_string(id))}, {"algebra", d}, {"samples", samples}, {"verified", verified}};
      r["first_error"] = first_error ? Json(*first_error) : Json(nullptr);
      if (verified != samples) {
        all_ok = false;
        err << "verify-families: " << to_string(id) << " on " << d << ": " << (samples - verified) << " of "
            << samples << " samples failed: " << *first_error << "\n";
      }
      results.push_back(r);
    }
  }
  return {all_ok ? kOk : kCheckFailed, Json{{"seed", seed}, {"samples", samples}, {"all_verified", all_ok}, {"results", results}}};
}

Json search_json(const LieAlgebra3<double>& alg, const SearchResult& r, const SearchConfig& cfg, bool trace) {
  Json out;
  out["algebra"] = designator_of(alg);
  out["verdict"] = std::string(to_string(r.verdict));
  out["best_residual"] = r.best_residual;
  out["restarts"] = cfg.restarts;
  out["restart_index"] = r.restart_index;
  out["iterations_used"] = r.iterations_used;
  out["seed"] = cfg.seed;
  out["success_tol"] = cfg.success_tol;
  out["nonexist_tol"] = cfg.nonexist_tol;
  out["at_or_above_nonexist_tol"] = r.best_residual >= cfg.nonexist_tol;
  out["matrix"] = to_json(r.best_matrix.matrix());
  if (r.verdict == Verdict::Found) {
    out["matches"] = diagnostics_json(match_families(alg, r.best_matrix, 1e-6));
  } else {
    out["note"] = admits_integrable(alg) ? "no structure found within the search budget"
                                         : "no structure found (non-existence is proven for this type)";
  }
  if (trace) out["trace"] = r.trace;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = raw_args;
  if (args.size() >= 2 && args[0] == "aut" && args[1] == "sample") {
    args.erase(args.begin());
    args[0] = "aut-sample";
  }

  CLI::App app{"Integrable complex structures on products of 3-dimensional Lie algebras", "nij"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string algebra, matrix_path, family_name, init_mode = "random", thetas_text = "1/2,1,2,3";
  std::vector<std::string> params;
  std::optional<std::uint64_t> seed_opt, sample_seed;
  int samples = 100, restarts = 0, max_iters = 300, count = 5, threads = 1;
  double eps = kDefaultEps, success_tol = 1e-10, nonexist_tol = kNonexistTol;
  bool trace = false;

  auto* list_cmd = app.add_subcommand("algebras-list", "List the Bianchi types, or one algebra's constants");
  list_cmd->add_option("--algebra", algebra, "Designator <tag> or <tag>:<theta>");

  auto* check_cmd = app.add_subcommand("check", "Check J^2 = -Id and integrability of a matrix document");
  check_cmd->add_option("--matrix", matrix_path, "Matrix JSON file")->required();
  check_cmd->add_option("--algebra", algebra, "Must agree with the document's algebra");
  check_cmd->add_option("--eps", eps, "Float-mode tolerance");

  auto* family_cmd = app.add_subcommand("family", "Emit a member of a classified family");
  family_cmd->add_option("--algebra", algebra)->required();
  family_cmd->add_option("--family", family_name)->required();
  family_cmd->add_option("--param", params, "KEY=VALUE, repeatable");
  family_cmd->add_option("--sample-seed", sample_seed, "Start from a seeded parameter sample");

  auto* verify_cmd = app.add_subcommand("verify-families", "Exactly verify seeded samples of every family");
  verify_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed_opt);
  verify_cmd->add_option("--family", family_name);

  auto* search_cmd = app.add_subcommand("search", "Numerical residual search for an integrable structure");
  search_cmd->add_option("--algebra", algebra)->required();
  search_cmd->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", seed_opt);
  search_cmd->add_option("--max-iters", max_iters)->check(CLI::PositiveNumber);
  search_cmd->add_option("--init", init_mode)->check(CLI::IsMember({"random", "family"}));
  search_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
  search_cmd->add_option("--success-tol", success_tol);
  search_cmd->add_option("--nonexist-tol", nonexist_tol);
  search_cmd->add_flag("--trace", trace, "Include the best restart's residual trace");

  auto* scan_cmd = app.add_subcommand("scan-nonexistence", "Search on type 4 for each theta");
  scan_cmd->add_option("--thetas", thetas_text, "Comma-separated theta values");
  scan_cmd->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--seed", seed_opt);
  scan_cmd->add_option("--max-iters", max_iters)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* aut_cmd = app.add_subcommand("aut-sample", "Sample automorphisms and test orbit invariances");
  aut_cmd->add_option("--algebra", algebra)->required();
  aut_cmd->add_option("--count", count)->check(CLI::PositiveNumber);
  aut_cmd->add_option("--seed", seed_opt);

  auto* mixed_cmd = app.add_subcommand("mixed", "Emit the mixed-type structure J u = u*, J v = w, J v* = w*");
  mixed_cmd->add_option("--algebra", algebra)->required();

  auto fail = [&](int code, const std::string& msg) {
    err << "error: " << msg << "\n";
    out << Json{{"error", msg}, {"exit_code", code}}.dump(2) << "\n";
    return code;
  };

  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args[0];
    if (!known) {
      err << app.help();
      return fail(kBadInput, "unknown command '" + args[0] + "'");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    out << Json{{"help", "usage printed to stderr"}}.dump(2) << "\n";
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    out << Json{{"help", "usage printed to stderr"}}.dump(2) << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << app.help();
    return fail(kBadInput, e.what());
  }

  try {
    const std::uint64_t seed = seed_opt ? *seed_opt : default_seed();
    Outcome result{kOk, Json::object()};

    if (list_cmd->parsed()) {
      if (algebra.empty()) {
        result.payload = algebra_catalogue();
      } else {
        const auto alg = make_algebra<Rational>(Designator::parse(algebra));
        result.payload = Json{{"algebra", designator_of(alg)},
                              {"tag", tag_number(alg.type)},
                              {"brackets", structure_constants_json(alg)},
                              {"jacobi_residual", vector_json(jacobi_check(alg.constants))},
                              {"admits_integrable", admits_integrable(alg)}};
      }
    } else if (check_cmd->parsed()) {
      const auto doc = parse_matrix_document(read_file(matrix_path));
      if (!algebra.empty() && !(Designator::parse(algebra).str() == doc.algebra.str())) {
        // Compare realised algebras so "6:1.5" and "6:3/2" agree.
        const auto a = make_algebra<Rational>(Designator::parse(algebra));
        const auto b = make_algebra<Rational>(doc.algebra);
        if (!(a.type == b.type && a.theta == b.theta))
          throw ParseError("--algebra " + algebra + " contradicts the document's algebra " + doc.algebra.str());
      }
      if (doc.mode() == ScalarMode::Rational)
        result = check_matrix(doc.algebra, std::get<Mat6<Rational>>(doc.matrix), eps);
      else
        result = check_matrix(doc.algebra, std::get<Mat6<double>>(doc.matrix), eps);
      if (result.code != kOk) err << "check: matrix is not an integrable complex structure\n";
    } else if (family_cmd->parsed()) {
      const auto alg = make_algebra<Rational>(Designator::parse(algebra));
      const FamilyId id = parse_family_id(family_name);
      const auto p = parse_params(id, params, sample_seed);
      const auto j = family(p, alg);
      result.payload = matrix_document(designator_of(alg), j.matrix());
      result.payload["family"] = std::string(to_string(id));
      result.payload["params"] = params_json(p);
    } else if (verify_cmd->parsed()) {
      std::optional<FamilyId> only;
      if (!family_name.empty()) only = parse_family_id(family_name);
      result = verify_families(samples, seed, only, err);
    } else if (search_cmd->parsed()) {
      const auto alg = make_algebra<double>(Designator::parse(algebra));
      SearchConfig cfg;
      cfg.restarts = restarts > 0 ? restarts : 50;
      cfg.seed = seed;
      cfg.max_iters = max_iters;
      cfg.init = init_mode == "family" ? InitMode::FamilyNoise : InitMode::Random;
      cfg.threads = threads;
      cfg.success_tol = success_tol;
      cfg.nonexist_tol = nonexist_tol;
      const auto r = search_integrable(product(alg), cfg);
      result.payload = search_json(alg, r, cfg, trace);
    } else if (scan_cmd->parsed()) {
      SearchConfig cfg;
      cfg.restarts = restarts > 0 ? restarts : 200;
      cfg.seed = seed;
      cfg.max_iters = max_iters;
      cfg.threads = threads;
      Json entries = Json::array();
      bool consistent = true;
      for (const auto& e : nonexistence_scan(parse_theta_list(thetas_text), cfg)) {
        const bool expect_found = e.theta == 1.0;
        const bool ok = (e.result.verdict == Verdict::Found) == expect_found &&
                        (expect_found || e.result.best_residual >= cfg.nonexist_tol);
        consistent = consistent && ok;
        entries.push_back({{"theta", e.theta},
                           {"verdict", std::string(to_string(e.result.verdict))},
                           {"best_residual", e.result.best_residual},
                           {"expected", expect_found ? "found" : "not-found"},
                           {"consistent", ok}});
      }
      result.payload = Json{{"tag", 4}, {"restarts", cfg.restarts}, {"seed", seed}, {"nonexist_tol", cfg.nonexist_tol},
                            {"entries", entries}, {"consistent", consistent}};
      if (!consistent) {
        result.code = kCheckFailed;
        err << "scan-nonexistence: outcome differs from the expected dichotomy\n";
      }
    } else if (aut_cmd->parsed()) {
      const auto alg = make_algebra<double>(Designator::parse(algebra));
      const auto s = sample_automorphisms(alg, count, seed);
      if (s.shortfall > 0) err << "aut-sample: only " << s.maps.size() << " of " << count << " maps accepted\n";
      const auto rep = orbit_invariance_check(alg, s.maps);
      Json maps = Json::array();
      for (const auto& m : s.maps) maps.push_back(to_json(m));
      result.payload = Json{{"algebra", designator_of(alg)},
                            {"seed", seed},
                            {"maps", maps},
                            {"residuals", s.residuals},
                            {"attempts", s.attempts},
                            {"shortfall", s.shortfall},
                            {"orbit_check",
                             {{"claims", rep.claims},
                              {"maps_checked", rep.maps_checked},
                              {"failures", rep.failures},
                              {"worst_deviation", rep.worst_deviation},
                              {"passed", rep.passed}}}};
      if (!rep.passed) result.code = kCheckFailed;
    } else if (mixed_cmd->parsed()) {
      const auto alg = make_algebra<Rational>(Designator::parse(algebra));
      const auto b = mixed_basis(alg);
      const auto j = mixed_structure(product(alg));
      result.payload = matrix_document(designator_of(alg), j.matrix());
      result.payload["basis"] = {{"u", basis_label(static_cast<std::size_t>(b.u))},
                                 {"v", basis_label(static_cast<std::size_t>(b.v))},
                                 {"w", basis_label(static_cast<std::size_t>(b.w))},
                                 {"sign", b.sign}};
    }
    out << result.payload.dump(2) << "\n";
    return result.code;
  } catch (const VerificationFailure& e) {
    return fail(kCheckFailed, e.what());
  } catch (const std::invalid_argument& e) {  // ParseError, family errors, bad algebra parameters
    return fail(kBadInput, e.what());
  } catch (const std::exception& e) {
    return fail(kBadInput, std::string("internal error: ") + e.what());
  }
}

}  // namespace nij::cli
