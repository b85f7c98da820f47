#include "grlie/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>

#include "grlie/algebras.hpp"
#include "grlie/independence.hpp"
#include "grlie/parse.hpp"
#include "grlie/report.hpp"
#include "grlie/selftest.hpp"
#include "grlie/tideal.hpp"
#include "grlie/tuples.hpp"

namespace grlie {
namespace {

struct AlgebraName {
  std::string name;    // "u1", "w1", "pauli"
  std::int64_t q = 0;  // pauli only
};

AlgebraName parse_algebra(const std::string& text) {
  if (text == "u1" || text == "w1") return {text, 0};
  if (text.rfind("pauli:", 0) == 0) {
    const std::string tail = text.substr(6);
    std::int64_t q = 0;
    std::size_t used = 0;
    try {
      q = std::stoll(tail, &used);
    } catch (...) {
      used = 0;
    }
    if (used == 0 || used != tail.size() || q < 2 || !is_prime(q))
      throw std::invalid_argument("pauli order in \"" + text + "\" must be a prime >= 2");
    return {"pauli", q};
  }
  throw std::invalid_argument("unknown algebra \"" + text + "\" (want u1, w1 or pauli:q)");
}

FieldSpec field_for(const AlgebraName& a, std::int64_t p) {
  if (p != 0) return FieldSpec::prime(p);
  if (a.name == "pauli" && a.q != 2) return FieldSpec::cyclotomic(a.q);
  return FieldSpec::rational();
}

GradingSpec grading_for(const AlgebraName& a) {
  return a.name == "pauli" ? GradingSpec::zq2(a.q) : GradingSpec::z();
}

struct CommonOpts {
  std::string json_path;  // empty = no JSON; "-" = stdout
  bool timing = false;
  bool verbose = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--json", c.json_path, "write a JSON report to this path (- for stdout)");
  cmd->add_flag("--timing", c.timing, "report wall-clock time (kept outside the verdict body)");
  cmd->add_flag("--verbose", c.verbose, "per-instance detail; JSON gains echelon rows");
}

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

/// Timing line and JSON emission; report content stays fixed without --timing.
void finish(Json& doc, const Stopwatch& sw, const CommonOpts& c, std::ostream& out) {
  if (c.timing) {
    double s = sw.seconds();
    attach_timing(doc, s);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    out << "elapsed: " << buf << " s\n";
  }
  if (c.json_path.empty()) return;
  if (c.json_path == "-") {
    out << render_json(doc);
    return;
  }
  std::ofstream f(c.json_path);
  if (!f) throw std::runtime_error("cannot write " + c.json_path);
  f << render_json(doc);
}

std::string join_int(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int do_classify(const std::string& tuple_text, std::int64_t p, const CommonOpts& c,
                std::ostream& out) {
  Stopwatch sw;
  std::vector<std::int64_t> tuple = parse_tuple(tuple_text);
  TupleClass cls = classify(tuple, p);
  FieldSpec field = p ? FieldSpec::prime(p) : FieldSpec::rational();
  out << "tuple: " << join_int(tuple) << "\n";
  out << "field: " << field.to_string() << "\n";
  out << "classification: " << cls.to_string() << "\n";
  Json doc = report_document("classify", field.to_string(),
                             Json{{"tuple", tuple}, {"char", p}},
                             Json::array({tuple_class_json(cls)}), true, {});
  finish(doc, sw, c, out);
  return 0;
}

int do_check(const std::string& poly_text, const std::string& algebra_text, std::int64_t p,
             const CommonOpts& c, std::ostream& out) {
  Stopwatch sw;
  AlgebraName a = parse_algebra(algebra_text);
  FieldSpec field = field_for(a, p);
  ThinAlgebra A = make_thin(a.name, field, a.q);
  std::vector<Term> terms = parse_poly(poly_text, field, grading_for(a));
  MultilinearPoly P = normalize(terms, field);
  Scalar canonical = eval_poly_thin(P, A);
  Scalar direct = A.zero();
  for (const Term& t : terms) direct += t.coeff * eval_tree_thin(t.expr, A).value;
  bool ident = canonical.is_zero();
  bool routes_agree = direct == canonical;
  out << "polynomial: " << print_poly(terms) << "\n";
  out << "algebra: " << A.name << " over " << field.to_string() << "\n";
  if (c.verbose) out << "normal form: " << P.to_string() << "\n";
  out << "identity: " << (ident ? "true" : "false") << "\n";
  if (!ident)
    out << "counterexample: canonical basis substitution evaluates to " << canonical.to_string()
        << " * e_(" << P.total_degree().to_string() << ")\n";
  if (!routes_agree)
    out << "ROUTE MISMATCH: direct tree evaluation gives " << direct.to_string() << "\n";
  Json verdict{{"identity", ident},
               {"value", canonical.to_string()},
               {"degree", P.total_degree().to_string()},
               {"routes_agree", routes_agree}};
  Json doc = report_document(
      "check", field.to_string(),
      Json{{"poly", poly_text}, {"algebra", algebra_text}, {"char", p}},
      Json::array({std::move(verdict)}), ident && routes_agree, {});
  finish(doc, sw, c, out);
  return ident && routes_agree ? 0 : 1;
}

/// Left-normed bracket value of one basis element per degree, on a structure
/// algebra whose homogeneous components have dimension <= 1. Zero scalar =
/// the product vanishes (or a degree has the zero component).
std::optional<Scalar> component_value(const std::vector<Degree>& ds, const StructureAlgebra& M) {
  auto one_dim = [&](const Degree& d) -> std::optional<int> {
    std::vector<int> comp = M.component(d);
    if (comp.size() > 1) return std::nullopt;
    return comp.empty() ? -1 : comp[0];
  };
  std::optional<int> first = one_dim(ds[0]);
  if (!first) return std::nullopt;
  if (*first < 0) return Scalar::zero(M.field);
  std::map<int, Scalar> acc{{*first, Scalar::one(M.field)}};
  for (std::size_t i = 1; i < ds.size(); ++i) {
    std::optional<int> bi = one_dim(ds[i]);
    if (!bi) return std::nullopt;
    if (*bi < 0) return Scalar::zero(M.field);
    acc = M.bracket(acc, {{*bi, Scalar::one(M.field)}});
  }
  if (acc.empty()) return Scalar::zero(M.field);
  if (acc.size() != 1) return std::nullopt;
  return acc.begin()->second;
}

/// Matrix-oracle counterpart of derive_swap_lambda (same conventions).
std::optional<Scalar> swap_lambda_structure(const std::vector<Degree>& ds,
                                            const StructureAlgebra& M) {
  std::optional<Scalar> ref = component_value({ds[0], ds[1], ds[2]}, M);
  std::optional<Scalar> swp = component_value({ds[0], ds[2], ds[1]}, M);
  if (!ref || !swp || ref->is_zero()) return std::nullopt;
  return *swp / *ref;
}

int do_lambda(const std::string& algebra_text, const std::string& degrees_text, std::int64_t p,
              const CommonOpts& c, std::ostream& out) {
  Stopwatch sw;
  AlgebraName a = parse_algebra(algebra_text);
  if (a.name != "pauli")
    throw std::invalid_argument("lambda: --algebra must be pauli:q");
  FieldSpec field = field_for(a, p);
  ThinAlgebra A = make_pauli(a.q, field);
  std::vector<Degree> ds = parse_degrees(degrees_text, grading_for(a));
  StructureAlgebra M = build_pauli_matrix_oracle(a.q, field);
  std::optional<Scalar> thin, oracle;
  if (ds.size() == 3) {
    thin = derive_swap_lambda(ds[0], ds[1], ds[2], A);
    oracle = swap_lambda_structure(ds, M);
  } else if (ds.size() == 4) {
    std::array<Degree, 4> g{ds[0], ds[1], ds[2], ds[3]};
    thin = derive_pauli_lambda(g, A);
    oracle = derive_pauli_lambda_structure(g, M);
  } else {
    throw std::invalid_argument("lambda: --degrees needs 3 or 4 degrees");
  }
  bool agree = thin.has_value() == oracle.has_value() && (!thin || *thin == *oracle);
  auto show = [](const std::optional<Scalar>& s) { return s ? s->to_string() : "none"; };
  out << "algebra: pauli:" << a.q << " over " << field.to_string() << "\n";
  out << "degrees: " << degrees_text << "\n";
  out << "lambda (thin route): " << show(thin) << "\n";
  out << "lambda (matrix oracle): " << show(oracle) << "\n";
  out << "agreement: " << (agree ? "true" : "false") << "\n";
  Json verdict{{"lambda", show(thin)}, {"lambda_oracle", show(oracle)}, {"agree", agree}};
  Json doc = report_document(
      "lambda", field.to_string(),
      Json{{"algebra", algebra_text}, {"degrees", degrees_text}, {"char", p}},
      Json::array({std::move(verdict)}), agree, {});
  finish(doc, sw, c, out);
  return agree ? 0 : 1;
}

int do_verify_basis(const std::string& algebra_text, std::int64_t p, int n_min, int n_max,
                    std::int64_t entry_max, std::optional<std::int64_t> entry_min, int threads,
                    bool allow_n6, const CommonOpts& c, std::ostream& out) {
  Stopwatch sw;
  AlgebraName a = parse_algebra(algebra_text);
  if (a.name == "pauli")
    throw std::invalid_argument("verify-basis: --algebra must be u1 or w1");
  SweepConfig cfg;
  cfg.algebra = a.name;
  cfg.characteristic = p;
  cfg.n_min = n_min;
  cfg.n_max = n_max;
  cfg.entry_max = entry_max;
  cfg.entry_min = entry_min.value_or(-entry_max);
  cfg.threads = threads;
  cfg.allow_n6 = allow_n6;
  cfg.gens.comm_pair = true;
  cfg.gens.triple = true;
  cfg.gens.support_zero = a.name == "w1";
  FieldSpec field = p ? FieldSpec::prime(p) : FieldSpec::rational();

  SweepResult r = sweep(cfg);

  out << "algebra: " << a.name << " over " << field.to_string() << "\n";
  out << "grid: n in [" << cfg.n_min << "," << cfg.n_max << "], entries in [" << cfg.entry_min
      << "," << cfg.entry_max << "]\n";
  out << "generators: " << cfg.gens.describe() << "\n";
  if (c.verbose)
    for (const TupleVerdict& v : r.verdicts) out << "  " << v.to_string() << "\n";
  for (const std::string& n : r.notes) out << "note: " << n << "\n";
  for (const std::string& x : r.counterexamples) out << "counterexample: " << x << "\n";
  out << "tuples checked: " << r.tuples_checked << "\n";
  out << "failures: " << r.failures << "\n";
  out << "all verified: " << (r.all_verified() ? "true" : "false") << "\n";

  Json verdicts = Json::array();
  if (!c.json_path.empty()) {
    ThinAlgebra A = make_thin(a.name, field);
    int bound = cfg.allow_n6 ? kMaxTupleLength : kDefaultTupleLength;
    for (const TupleVerdict& v : r.verdicts) {
      Json jv = verdict_json(v);
      if (c.verbose) {
        jv["kernel"] = subspace_json(identity_kernel(v.tuple, A, bound), true);
        jv["span"] = subspace_json(consequence_span(cfg.gens, v.tuple, A, nullptr, bound), true);
      }
      verdicts.push_back(std::move(jv));
    }
  }
  Json doc = report_document(
      "verify-basis", field.to_string(),
      Json{{"algebra", a.name},
           {"char", p},
           {"n_min", cfg.n_min},
           {"n_max", cfg.n_max},
           {"entry_min", cfg.entry_min},
           {"entry_max", cfg.entry_max},
           {"generators", cfg.gens.describe()}},
      std::move(verdicts), r.all_verified(), r.counterexamples);
  doc["summary"] = Json{{"tuples_checked", r.tuples_checked},
                        {"failures", r.failures},
                        {"notes", r.notes}};
  finish(doc, sw, c, out);
  return r.all_verified() ? 0 : 1;
}

int do_verify_independence(std::int64_t p, std::int64_t pairs_max, std::int64_t triples_max,
                           const CommonOpts& c, std::ostream& out) {
  Stopwatch sw;
  if (p != 0 && (p == 2 || !is_prime(p)))
    throw std::invalid_argument("verify-independence: --char must be 0 or an odd prime");
  FieldSpec field = p ? FieldSpec::prime(p) : FieldSpec::rational();
  Json verdicts = Json::array();
  std::vector<std::string> counterexamples;
  std::size_t pairs = 0, pair_failures = 0, triples = 0, triple_failures = 0;

  for (std::int64_t r = -pairs_max; r <= pairs_max; ++r)
    for (std::int64_t s = r; s <= pairs_max; ++s) {
      if (!minimal_filter(MinimalKind::pair, {r, s}, p)) continue;
      IndependenceEvidence e = check_pair_independence(r, s, p);
      ++pairs;
      if (!e.independent) {
        ++pair_failures;
        counterexamples.push_back("pair (" + std::to_string(r) + "," + std::to_string(s) +
                                  "): " + e.to_string());
      }
      if (c.verbose)
        out << "pair (" << r << "," << s << "): " << e.to_string() << "\n";
      Json j = independence_json(e);
      j["kind"] = "pair";
      j["params"] = Json::array({r, s});
      verdicts.push_back(std::move(j));
    }
  out << "pairs checked: " << pairs << " (failures: " << pair_failures << ")\n";

  if (p == 0) {
    out << "triples: none (the minimal triple family is stated for char p)\n";
  } else {
    for (std::int64_t a = -triples_max; a <= triples_max; ++a)
      for (std::int64_t b = -triples_max; b < a; ++b)
        for (std::int64_t cc = -triples_max; cc < b; ++cc) {
          if (!minimal_filter(MinimalKind::triple, {a, b, cc}, p)) continue;
          IndependenceEvidence e = check_triple_independence(a, b, cc, p);
          ++triples;
          if (!e.independent) {
            ++triple_failures;
            counterexamples.push_back("triple (" + std::to_string(a) + "," + std::to_string(b) +
                                      "," + std::to_string(cc) + "): " + e.to_string());
          }
          if (c.verbose)
            out << "triple (" << a << "," << b << "," << cc << "): " << e.to_string() << "\n";
          Json j = independence_json(e);
          j["kind"] = "triple";
          j["params"] = Json::array({a, b, cc});
          verdicts.push_back(std::move(j));
        }
    out << "triples checked: " << triples << " (failures: " << triple_failures << ")\n";
  }
  bool pass = pair_failures + triple_failures == 0;
  for (const std::string& x : counterexamples) out << "counterexample: " << x << "\n";
  out << "all independent: " << (pass ? "true" : "false") << "\n";
  Json doc = report_document(
      "verify-independence", field.to_string(),
      Json{{"char", p}, {"pairs_max", pairs_max}, {"triples_max", triples_max}},
      std::move(verdicts), pass, counterexamples);
  doc["summary"] = Json{{"pairs", pairs},
                        {"pair_failures", pair_failures},
                        {"triples", triples},
                        {"triple_failures", triple_failures}};
  finish(doc, sw, c, out);
  return pass ? 0 : 1;
}

int do_selftest(std::uint64_t seed, int instances, bool quick, const CommonOpts& c,
                std::ostream& out) {
  Stopwatch sw;
  SelftestOptions opt;
  opt.seed = seed;
  opt.instances = quick ? 100 : instances;
  SelftestResult r = run_selftest(opt, &out);
  out << "selftest: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  Json verdicts = Json::array();
  for (const SuiteResult& s : r.suites) {
    Json j{{"suite", s.name}, {"instances", s.instances}, {"failures", s.failures}};
    if (!s.first_failure.empty()) j["first_failure"] = s.first_failure;
    verdicts.push_back(std::move(j));
  }
  Json doc = report_document("selftest", "mixed",
                             Json{{"seed", seed}, {"instances", opt.instances}},
                             std::move(verdicts), r.pass(), {});
  finish(doc, sw, c, out);
  return r.pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of graded polynomial identities of U1, W1 and sl_q"};
  app.name("grlie");
  app.require_subcommand(1);
  int rc = 0;

  std::string tuple_text, poly_text, algebra_text, degrees_text;
  std::int64_t characteristic = 0;
  CommonOpts c_classify, c_check, c_lambda, c_basis, c_indep, c_selftest;

  auto* classify_cmd = app.add_subcommand("classify", "good/bad verdict for a Z-degree tuple");
  classify_cmd->add_option("--tuple", tuple_text, "comma-separated integer degrees")->required();
  classify_cmd->add_option("--char", characteristic, "0 (default) or an odd prime");
  add_common(classify_cmd, c_classify);
  classify_cmd->callback(
      [&] { rc = do_classify(tuple_text, characteristic, c_classify, out); });

  auto* check_cmd = app.add_subcommand("check", "is a graded polynomial an identity");
  check_cmd->add_option("--poly", poly_text, "polynomial in the input grammar")->required();
  check_cmd->add_option("--algebra", algebra_text, "u1, w1 or pauli:q")->required();
  check_cmd->add_option("--char", characteristic, "0 (default) or an odd prime");
  add_common(check_cmd, c_check);
  check_cmd->callback(
      [&] { rc = do_check(poly_text, algebra_text, characteristic, c_check, out); });

  auto* lambda_cmd = app.add_subcommand("lambda", "swap coefficient at Pauli degrees");
  lambda_cmd->add_option("--algebra", algebra_text, "pauli:q")->required();
  lambda_cmd->add_option("--degrees", degrees_text, "3 or 4 degrees, e.g. (1,0),(0,1),(1,1)")
      ->required();
  lambda_cmd->add_option("--char", characteristic, "0 (default) or an odd prime with q | p-1");
  add_common(lambda_cmd, c_lambda);
  lambda_cmd->callback(
      [&] { rc = do_lambda(algebra_text, degrees_text, characteristic, c_lambda, out); });

  int n_min = 1, n_max = 4, threads = 1;
  std::int64_t entry_max = 2;
  std::optional<std::int64_t> entry_min;
  bool allow_n6 = false;
  auto* basis_cmd = app.add_subcommand("verify-basis", "consequence span = identity kernel sweep");
  basis_cmd->add_option("--algebra", algebra_text, "u1 or w1")->required();
  basis_cmd->add_option("--char", characteristic, "0 (default) or an odd prime");
  basis_cmd->add_option("--n-max", n_max, "largest tuple length (default 4)");
  basis_cmd->add_option("--n-min", n_min, "smallest tuple length (default 1)");
  basis_cmd->add_option("--entry-max", entry_max, "largest degree entry (default 2)");
  basis_cmd->add_option("--entry-min", entry_min, "smallest degree entry (default -entry-max)");
  basis_cmd->add_option("--threads", threads, "worker threads (default 1)");
  basis_cmd->add_flag("--allow-n6", allow_n6, "opt in to n = 6 (ambient dimension 120)");
  add_common(basis_cmd, c_basis);
  basis_cmd->callback([&] {
    rc = do_verify_basis(algebra_text, characteristic, n_min, n_max, entry_max, entry_min,
                         threads, allow_n6, c_basis, out);
  });

  std::int64_t pairs_max = 6, triples_max = 4;
  auto* indep_cmd = app.add_subcommand("verify-independence", "minimal-basis independence grid");
  indep_cmd->add_option("--char", characteristic, "0 or an odd prime")->required();
  indep_cmd->add_option("--pairs-max", pairs_max, "|r|, |s| bound for pairs (default 6)");
  indep_cmd->add_option("--triples-max", triples_max, "|a|, |b|, |c| bound (default 4)");
  add_common(indep_cmd, c_indep);
  indep_cmd->callback([&] {
    rc = do_verify_independence(characteristic, pairs_max, triples_max, c_indep, out);
  });

  std::uint64_t seed = SelftestOptions{}.seed;
  int instances = 1000;
  bool quick = false;
  auto* self_cmd = app.add_subcommand("selftest", "randomized property suites");
  self_cmd->add_option("--seed", seed, "RNG seed");
  self_cmd->add_option("--instances", instances, "instances per suite (default 1000)");
  self_cmd->add_flag("--quick", quick, "100 instances per suite");
  add_common(self_cmd, c_selftest);
  self_cmd->callback([&] { rc = do_selftest(seed, instances, quick, c_selftest, out); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("grlie");
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace grlie
