#include "grlie/selftest.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <utility>

#include "grlie/algebras.hpp"
#include "grlie/freelie.hpp"
#include "grlie/parse.hpp"

namespace grlie {
namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
  }
  bool chance(int num, int den) { return uniform(1, den) <= num; }
};

struct AlgebraSample {
  ThinAlgebra A;
  std::int64_t q = 0;  // 0 for the Z-graded algebras
};

FieldSpec rand_witt_field(Rng& R) {
  switch (R.uniform(0, 3)) {
    case 0: return FieldSpec::rational();
    case 1: return FieldSpec::prime(3);
    case 2: return FieldSpec::prime(5);
    default: return FieldSpec::prime(7);
  }
}

AlgebraSample rand_algebra(Rng& R) {
  switch (R.uniform(0, 3)) {
    case 0: return {make_u1(rand_witt_field(R)), 0};
    case 1: return {make_w1(rand_witt_field(R)), 0};
    case 2: {
      // q = 2 over Q or F_p (eps = -1 lives everywhere).
      FieldSpec f = R.chance(1, 2) ? FieldSpec::rational()
                                   : FieldSpec::prime(R.chance(1, 2) ? 3 : 5);
      return {make_pauli(2, f), 2};
    }
    default: {
      if (R.chance(1, 2)) {
        FieldSpec f = R.chance(1, 2) ? FieldSpec::cyclotomic(3) : FieldSpec::prime(7);
        return {make_pauli(3, f), 3};
      }
      FieldSpec f = R.chance(1, 2) ? FieldSpec::cyclotomic(5) : FieldSpec::prime(11);
      return {make_pauli(5, f), 5};
    }
  }
}

Degree rand_degree(const AlgebraSample& s, Rng& R) {
  if (s.q) return Degree::zq(R.uniform(0, s.q - 1), R.uniform(0, s.q - 1), s.q);
  return Degree::z(R.uniform(-6, 6));
}

Scalar rand_coeff(const FieldSpec& f, Rng& R) {
  if (f.characteristic() > 0)
    return Scalar::from_int(f, R.uniform(1, f.characteristic() - 1));
  std::int64_t num = R.uniform(1, 9) * (R.chance(1, 2) ? 1 : -1);
  std::int64_t den = R.uniform(1, 9);
  return Scalar::from_fraction(f, mpq_class(num, den));
}

/// Random bracket shape over order[lo, hi); mixes binary splits with flat
/// left-normed nodes so printing covers both "[a,b]" and "[a,b,c,...]".
BracketExpr rand_tree(const std::vector<int>& order, std::size_t lo, std::size_t hi,
                      const std::vector<Degree>& deg, Rng& R) {
  std::size_t len = hi - lo;
  auto leaf = [&](std::size_t i) {
    return BracketExpr::var(Variable{order[i], deg[static_cast<std::size_t>(order[i]) - 1]});
  };
  if (len == 1) return leaf(lo);
  if (len >= 3 && R.chance(1, 3)) {
    std::vector<BracketExpr> kids;
    for (std::size_t i = lo; i < hi; ++i) kids.push_back(leaf(i));
    return BracketExpr::bracket(std::move(kids));
  }
  std::size_t cut = lo + 1 + static_cast<std::size_t>(R.uniform(0, static_cast<std::int64_t>(len) - 2));
  std::vector<BracketExpr> kids;
  kids.push_back(rand_tree(order, lo, cut, deg, R));
  kids.push_back(rand_tree(order, cut, hi, deg, R));
  return BracketExpr::bracket(std::move(kids));
}

std::vector<Term> rand_terms(int n, const std::vector<Degree>& deg, const FieldSpec& field,
                             int max_terms, Rng& R) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Term> terms;
  std::int64_t t = R.uniform(1, max_terms);
  for (std::int64_t k = 0; k < t; ++k) {
    std::shuffle(order.begin(), order.end(), R.gen);
    terms.push_back(Term{rand_coeff(field, R), rand_tree(order, 0, order.size(), deg, R)});
  }
  return terms;
}

std::string scalar_or(const Scalar& s) { return s.to_string(); }

// Suite bodies return "" on success, a description on failure.

std::string roundtrip_case(const SelftestOptions& opt, Rng& R) {
  int n = static_cast<int>(R.uniform(2, opt.max_n));
  FieldSpec field = FieldSpec::rational();
  GradingSpec grading = GradingSpec::z();
  switch (R.uniform(0, 3)) {
    case 0: break;
    case 1: field = FieldSpec::prime(R.chance(1, 2) ? 5 : 7); break;
    default: {
      std::int64_t q = R.chance(1, 2) ? 3 : 5;
      field = FieldSpec::cyclotomic(q);
      grading = GradingSpec::zq2(q);
      break;
    }
  }
  std::vector<Degree> deg;
  for (int i = 0; i < n; ++i) {
    if (grading.rank() == 2)
      deg.push_back(Degree::zq(R.uniform(0, grading.moduli[0] - 1),
                               R.uniform(0, grading.moduli[0] - 1), grading.moduli[0]));
    else
      deg.push_back(Degree::z(R.uniform(-5, 5)));
  }
  std::vector<Term> terms = rand_terms(n, deg, field, 4, R);
  std::string p1 = print_poly(terms);
  std::vector<Term> back = parse_poly(p1, field, grading);
  std::string p2 = print_poly(back);
  if (p1 != p2) return "print/parse/print not a fixed point: \"" + p1 + "\" vs \"" + p2 + "\"";
  if (normalize(terms, field).coords() != normalize(back, field).coords())
    return "round-trip changed the normal form of \"" + p1 + "\"";
  // Extra whitespace between tokens never changes the parse. Never split a
  // token: digit runs and a sign glued to its digits stay together.
  std::string spaced;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    spaced += p1[i];
    bool tail_digit = i + 1 < p1.size() && std::isdigit(static_cast<unsigned char>(p1[i + 1]));
    bool in_token = tail_digit && (std::isdigit(static_cast<unsigned char>(p1[i])) ||
                                   p1[i] == '-' || p1[i] == '+');
    if (!in_token && R.chance(1, 5)) spaced += ' ';
  }
  if (print_poly(parse_poly(spaced, field, grading)) != p1)
    return "whitespace changed the parse of \"" + p1 + "\"";
  return "";
}

std::string anticommutativity_case(Rng& R) {
  AlgebraSample s = rand_algebra(R);
  Degree g = rand_degree(s, R), h = rand_degree(s, R);
  Scalar lhs = s.A.c(g, h), rhs = -s.A.c(h, g);
  if (lhs != rhs)
    return s.A.name + ": c(" + g.to_string() + "," + h.to_string() + ") = " + scalar_or(lhs) +
           " but -c(h,g) = " + scalar_or(rhs);
  EvalResult e1 = eval_degrees_thin({g, h}, s.A);
  EvalResult e2 = eval_degrees_thin({h, g}, s.A);
  if (e1.value != -e2.value) return s.A.name + ": eval([x,y]) != -eval([y,x])";
  return "";
}

std::string jacobi_case(Rng& R) {
  AlgebraSample s = rand_algebra(R);
  std::array<Degree, 3> g = {rand_degree(s, R), rand_degree(s, R), rand_degree(s, R)};
  auto leaf = [&](int i) { return BracketExpr::var(Variable{i + 1, g[static_cast<std::size_t>(i)]}); };
  auto term = [&](int a, int b, int c) {
    return BracketExpr::bracket({BracketExpr::bracket({leaf(a), leaf(b)}), leaf(c)});
  };
  Scalar sum = eval_tree_thin(term(0, 1, 2), s.A).value;
  sum += eval_tree_thin(term(1, 2, 0), s.A).value;
  sum += eval_tree_thin(term(2, 0, 1), s.A).value;
  if (!sum.is_zero())
    return s.A.name + ": Jacobi sum " + scalar_or(sum) + " at (" + g[0].to_string() + "," +
           g[1].to_string() + "," + g[2].to_string() + ")";
  return "";
}

std::string four_term_case(Rng& R) {
  AlgebraSample s = rand_algebra(R);
  std::vector<Degree> g = {rand_degree(s, R), rand_degree(s, R), rand_degree(s, R),
                           rand_degree(s, R)};
  auto mono = [&](std::array<int, 4> idx) {
    Monomial m;
    for (int i : idx) m.push_back(Variable{i, g[static_cast<std::size_t>(i) - 1]});
    return BracketExpr::left_normed(m);
  };
  // [x1,x2,x3,x4] + [x2,x1,x4,x3] + [x4,x3,x2,x1] + [x3,x4,x1,x2] = 0 in
  // every Lie algebra; check it both as a normal form and under evaluation.
  std::vector<Term> terms;
  Scalar one = Scalar::one(s.A.field);
  for (std::array<int, 4> idx : {std::array<int, 4>{1, 2, 3, 4}, std::array<int, 4>{2, 1, 4, 3},
                                 std::array<int, 4>{4, 3, 2, 1}, std::array<int, 4>{3, 4, 1, 2}})
    terms.push_back(Term{one, mono(idx)});
  if (!normalize(terms, s.A.field).is_zero()) return "four-term sum has a nonzero normal form";
  Scalar sum = s.A.zero();
  for (const Term& t : terms) sum += eval_tree_thin(t.expr, s.A).value;
  if (!sum.is_zero()) return s.A.name + ": four-term sum evaluates to " + scalar_or(sum);
  return "";
}

std::string linearity_case(const SelftestOptions& opt, Rng& R) {
  FieldSpec field = rand_witt_field(R);
  ThinAlgebra A = R.chance(1, 2) ? make_u1(field) : make_w1(field);
  int n = static_cast<int>(R.uniform(2, std::min(opt.max_n, 5)));
  std::vector<Variable> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(Variable{i, Degree::z(R.uniform(-4, 4))});
  auto rand_poly = [&]() {
    MultilinearPoly P(vars, field);
    for (const Word& key : P.basis_keys())
      if (R.chance(1, 2)) P.add_coord(key, rand_coeff(field, R));
    return P;
  };
  MultilinearPoly P = rand_poly(), Q = rand_poly();
  Scalar a = rand_coeff(field, R), b = rand_coeff(field, R);
  MultilinearPoly combo = P.scaled(a);
  combo += Q.scaled(b);
  Scalar lhs = eval_poly_thin(combo, A);
  Scalar rhs = a * eval_poly_thin(P, A) + b * eval_poly_thin(Q, A);
  if (lhs != rhs)
    return A.name + ": eval(aP + bQ) = " + scalar_or(lhs) + " but a*eval(P) + b*eval(Q) = " +
           scalar_or(rhs);
  return "";
}

std::string dual_route_case(const SelftestOptions& opt, Rng& R) {
  AlgebraSample s = rand_algebra(R);
  int n = static_cast<int>(R.uniform(2, opt.max_n));
  std::vector<Degree> deg;
  for (int i = 0; i < n; ++i) deg.push_back(rand_degree(s, R));
  std::vector<Term> terms = rand_terms(n, deg, s.A.field, 3, R);
  Scalar direct = s.A.zero();
  for (const Term& t : terms) direct += t.coeff * eval_tree_thin(t.expr, s.A).value;
  Scalar canonical = eval_poly_thin(normalize(terms, s.A.field), s.A);
  if (direct != canonical)
    return s.A.name + ": tree evaluation " + scalar_or(direct) + " != normal-form evaluation " +
           scalar_or(canonical);
  return "";
}

template <class Body>
SuiteResult run_suite(const std::string& name, const SelftestOptions& opt, std::uint64_t salt,
                      std::ostream* log, Body&& body) {
  SuiteResult r;
  r.name = name;
  r.instances = opt.instances;
  Rng R(opt.seed + salt);
  for (int i = 0; i < opt.instances; ++i) {
    std::string fail = body(R);
    if (!fail.empty()) {
      if (r.failures == 0) r.first_failure = fail;
      ++r.failures;
    }
  }
  if (log) {
    *log << "suite " << name << ": " << (r.instances - r.failures) << "/" << r.instances << " ok";
    if (r.failures) *log << "; first failure: " << r.first_failure;
    *log << "\n";
  }
  return r;
}

}  // namespace

bool SelftestResult::pass() const {
  for (const SuiteResult& s : suites)
    if (s.failures) return false;
  return true;
}

SelftestResult run_selftest(const SelftestOptions& opt, std::ostream* log) {
  SelftestResult out;
  out.suites.push_back(run_suite("round-trip", opt, 1, log,
                                 [&](Rng& R) { return roundtrip_case(opt, R); }));
  out.suites.push_back(run_suite("anticommutativity", opt, 2, log,
                                 [&](Rng& R) { return anticommutativity_case(R); }));
  out.suites.push_back(run_suite("jacobi", opt, 3, log, [&](Rng& R) { return jacobi_case(R); }));
  out.suites.push_back(
      run_suite("four-term", opt, 4, log, [&](Rng& R) { return four_term_case(R); }));
  out.suites.push_back(run_suite("linearity", opt, 5, log,
                                 [&](Rng& R) { return linearity_case(opt, R); }));
  out.suites.push_back(run_suite("dual-route", opt, 6, log,
                                 [&](Rng& R) { return dual_route_case(opt, R); }));
  return out;
}

}  // namespace grlie
