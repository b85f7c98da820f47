#include "grlie/independence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grlie {

namespace {

std::int64_t mod_res(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

void require_odd_prime(std::int64_t p, const char* what) {
  if (p <= 2 || !is_prime(p))
    throw std::invalid_argument(std::string(what) + ": characteristic must be an odd prime");
}

// When any of these residue coincidences holds, the triple generator at
// (a, b, c) degenerates into a consequence of the degree-2 family: one of
// alpha, beta vanishes mod p and the surviving commutator factors through a
// congruent pair. They are also exactly what keeps the non-commuting
// component pairs of L^(a,b,c) incongruent.
bool triple_incongruences(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t p) {
  std::int64_t ra = mod_res(a, p), rb = mod_res(b, p), rc = mod_res(c, p);
  return ra != rb && ra != rc && rb != rc && ra != mod_res(b + c, p) &&
         rb != mod_res(a + c, p) && rc != mod_res(a + b, p);
}

StructureAlgebra build_ut(std::string name, const std::vector<std::pair<int, int>>& units,
                          const std::vector<std::int64_t>& degs, const FieldSpec& field) {
  StructureAlgebra A;
  A.name = std::move(name);
  A.field = field;
  A.grading = GradingSpec::z();
  auto pos_of = [&](int i, int j) {
    for (std::size_t k = 0; k < units.size(); ++k)
      if (units[k].first == i && units[k].second == j) return static_cast<int>(k);
    throw std::logic_error("matrix unit outside basis");
  };
  for (std::size_t k = 0; k < units.size(); ++k) {
    A.labels.push_back("E" + std::to_string(units[k].first) + std::to_string(units[k].second));
    A.degrees.push_back(Degree::z(degs[k]));
  }
  std::size_t d = units.size();
  A.table.assign(d, std::vector<std::map<int, Scalar>>(d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      auto [i, j] = units[x];
      auto [k, l] = units[y];
      std::map<int, Scalar> entry;
      // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj; for strict upper
      // triangular units at most one delta fires.
      if (j == k) entry.emplace(pos_of(i, l), Scalar::one(field));
      if (l == i) entry.emplace(pos_of(k, j), -Scalar::one(field));
      A.table[x][y] = std::move(entry);
    }
  return A;
}

MultilinearPoly pair_poly(std::int64_t r, std::int64_t s, const FieldSpec& field) {
  return make_generator({GenFamily::comm_pair, {Degree::z(r), Degree::z(s)}, std::nullopt}, field)
      .poly;
}

GeneratorInstance triple_gen(std::int64_t a, std::int64_t b, std::int64_t c,
                             const FieldSpec& field) {
  return make_generator(
      {GenFamily::triple, {Degree::z(a), Degree::z(b), Degree::z(c)}, std::nullopt}, field);
}

// The two descending-triple monomials [x1,x2,x3] and [x1,x3,x2] at degrees
// (a, b, c) as normalized polynomials.
std::pair<MultilinearPoly, MultilinearPoly> triple_monomials(std::int64_t a, std::int64_t b,
                                                             std::int64_t c,
                                                             const FieldSpec& field) {
  Variable x1{1, Degree::z(a)}, x2{2, Degree::z(b)}, x3{3, Degree::z(c)};
  Scalar one = Scalar::one(field);
  MultilinearPoly m1 = normalize({Term{one, BracketExpr::left_normed({x1, x2, x3})}}, field);
  MultilinearPoly m2 = normalize({Term{one, BracketExpr::left_normed({x1, x3, x2})}}, field);
  return {std::move(m1), std::move(m2)};
}

std::vector<std::int64_t> support_values(const StructureAlgebra& A) {
  std::set<std::int64_t> s;
  for (const Degree& d : A.degrees) s.insert(d.z_value());
  return {s.begin(), s.end()};
}

std::string witness_string(const IdentityWitness& w) {
  std::string s;
  for (std::size_t i = 0; i < w.assignment.size(); ++i) {
    if (i) s += ", ";
    s += w.assignment[i];
  }
  return s + " -> " + w.value;
}

}  // namespace

GradedUT build_H(std::int64_t r, std::int64_t s, const FieldSpec& field) {
  if (r > s) throw std::invalid_argument("build_H: requires r <= s");
  return build_ut("H(" + std::to_string(r) + "," + std::to_string(s) + ")",
                  {{1, 2}, {2, 3}, {1, 3}}, {r, s, r + s}, field);
}

GradedUT build_L4(std::int64_t a, std::int64_t b, std::int64_t c, const FieldSpec& field) {
  if (!(a > b && b > c)) throw std::invalid_argument("build_L4: requires a > b > c");
  return build_ut(
      "L(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")",
      {{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}, {1, 4}}, {a, b, c, a + b, b + c, a + b + c},
      field);
}

int nilpotency_class(const StructureAlgebra& A) {
  int d = A.dim();
  if (d == 0) return 0;
  auto to_map = [&](const std::vector<Scalar>& v) {
    std::map<int, Scalar> m;
    for (int i = 0; i < d; ++i)
      if (!v[static_cast<std::size_t>(i)].is_zero()) m.emplace(i, v[static_cast<std::size_t>(i)]);
    return m;
  };
  RowSpace cur(A.field, static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::vector<Scalar> e(static_cast<std::size_t>(d), Scalar::zero(A.field));
    e[static_cast<std::size_t>(i)] = Scalar::one(A.field);
    cur.insert(std::move(e));
  }
  int k = 1;
  while (true) {
    RowSpace next(A.field, static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      std::map<int, Scalar> ei{{i, Scalar::one(A.field)}};
      for (const auto& row : cur.rows()) {
        std::map<int, Scalar> br = A.bracket(ei, to_map(row));
        std::vector<Scalar> v(static_cast<std::size_t>(d), Scalar::zero(A.field));
        for (const auto& [idx, val] : br) v[static_cast<std::size_t>(idx)] = val;
        next.insert(std::move(v));
      }
    }
    if (next.rank() == 0) return k;
    if (k > d) throw std::logic_error("nilpotency_class: lower central series does not vanish");
    cur = std::move(next);
    ++k;
  }
}

std::string IndependenceEvidence::to_string() const {
  std::string s = independent ? "independent" : "NOT independent";
  s += " (fails on " + (failing_witness.empty() ? std::string("-") : failing_witness) + "; " +
       std::to_string(identities_checked) + " other instances hold";
  if (!failures.empty()) s += "; " + std::to_string(failures.size()) + " FAILURES";
  return s + ")";
}

IndependenceEvidence check_pair_independence(std::int64_t r, std::int64_t s, std::int64_t p) {
  if (p == 0) {
    if (r != s)
      throw std::invalid_argument("check_pair_independence: char 0 requires r = s");
  } else {
    require_odd_prime(p, "check_pair_independence");
    if ((r - s) % p != 0)
      throw std::invalid_argument("check_pair_independence: requires r = s mod p");
  }
  if (r > s) std::swap(r, s);
  FieldSpec field = p == 0 ? FieldSpec::rational() : FieldSpec::prime(p);
  GradedUT H = build_H(r, s, field);
  H.check_structure();

  IndependenceEvidence E;
  auto w = find_counterexample(pair_poly(r, s, field), H);
  if (w)
    E.failing_witness = witness_string(*w);
  else
    E.failures.push_back("target pair generator holds on H");

  std::vector<std::int64_t> supp = support_values(H);
  for (std::int64_t da : supp)
    for (std::int64_t db : supp)
      for (std::int64_t dc : supp) {
        if (!is_identity(triple_gen(da, db, dc, field).poly, H))
          E.failures.push_back("triple generator at (" + std::to_string(da) + "," +
                               std::to_string(db) + "," + std::to_string(dc) + ") fails on H");
        ++E.identities_checked;
      }
  for (std::int64_t u : supp)
    for (std::int64_t v : supp) {
      if (u > v || (u == r && v == s)) continue;
      bool congruent = p == 0 ? u == v : (u - v) % p == 0;
      if (!congruent) continue;
      if (!is_identity(pair_poly(u, v, field), H))
        E.failures.push_back("pair generator at (" + std::to_string(u) + "," +
                             std::to_string(v) + ") fails on H");
      ++E.identities_checked;
    }
  E.independent = w.has_value() && E.failures.empty();
  return E;
}

IndependenceEvidence check_triple_independence(std::int64_t a, std::int64_t b, std::int64_t c,
                                               std::int64_t p) {
  require_odd_prime(p, "check_triple_independence");
  if (!(a > b && b > c))
    throw std::invalid_argument("check_triple_independence: requires a > b > c");
  if (!triple_incongruences(a, b, c, p))
    throw std::invalid_argument(
        "check_triple_independence: requires, mod p, a, b, c pairwise distinct and "
        "a != b+c, b != a+c, c != a+b (any violation makes the generator a consequence "
        "of the degree-2 family)");
  FieldSpec field = FieldSpec::prime(p);
  GradedUT L = build_L4(a, b, c, field);
  L.check_structure();

  IndependenceEvidence E;
  auto w = find_counterexample(triple_gen(a, b, c, field).poly, L);
  if (w)
    E.failing_witness = witness_string(*w);
  else
    E.failures.push_back("target triple generator holds on L");

  std::vector<std::int64_t> supp = support_values(L);
  for (std::int64_t u : supp)
    for (std::int64_t v : supp) {
      if (u > v || (u - v) % p != 0) continue;
      if (!is_identity(pair_poly(u, v, field), L))
        E.failures.push_back("pair generator at (" + std::to_string(u) + "," +
                             std::to_string(v) + ") fails on L");
      ++E.identities_checked;
    }
  for (std::int64_t a2 : supp)
    for (std::int64_t b2 : supp)
      for (std::int64_t c2 : supp) {
        if (!(a2 > b2 && b2 > c2)) continue;
        if (a2 == a && b2 == b && c2 == c) continue;
        auto [m1, m2] = triple_monomials(a2, b2, c2, field);
        if (!is_identity(m1, L) || !is_identity(m2, L))
          E.failures.push_back("descending-triple monomial at (" + std::to_string(a2) + "," +
                               std::to_string(b2) + "," + std::to_string(c2) + ") fails on L");
        E.identities_checked += 2;
      }
  E.independent = w.has_value() && E.failures.empty();
  return E;
}

bool minimal_filter(MinimalKind kind, const std::vector<std::int64_t>& params, std::int64_t p) {
  if (kind == MinimalKind::pair) {
    if (params.size() != 2) throw std::invalid_argument("minimal_filter: pair needs (a, b)");
    std::int64_t a = params[0], b = params[1];
    if (p == 0) return a == b;
    // b = a stays in: [x1^a, x2^a] has no consequences from pairs of
    // distinct degrees or from triples inside its own two-variable space.
    return b - a >= 0 && (b - a) % p == 0;
  }
  if (params.size() != 3) throw std::invalid_argument("minimal_filter: triple needs (a, b, c)");
  if (p == 0) return false;  // the minimal triple family is stated for char p
  std::int64_t a = params[0], b = params[1], c = params[2];
  return a > b && b > c && triple_incongruences(a, b, c, p);
}

std::string NoFiniteBasisEvidence::to_string() const {
  std::string s = "level " + std::to_string(level) + ": span route " +
                  (span_route ? "ok" : "FAILED") + ", algebra route " +
                  (algebra_route ? "ok" : "FAILED");
  for (const std::string& n : notes) s += "; " + n;
  return s;
}

NoFiniteBasisEvidence check_no_finite_basis_level(int N, std::int64_t p) {
  require_odd_prime(p, "check_no_finite_basis_level");
  if (N < 0) throw std::invalid_argument("check_no_finite_basis_level: N >= 0");
  FieldSpec field = FieldSpec::prime(p);
  ThinAlgebra u1 = make_u1(field);
  std::int64_t target_s = 1 + p * (N + 1);
  MultilinearPoly target = pair_poly(1, target_s, field);

  NoFiniteBasisEvidence E;
  E.level = N;

  GeneratorSet lower;
  for (int k = 0; k <= N; ++k) lower.fixed.push_back(pair_poly(1, 1 + p * k, field));
  std::vector<Degree> ctx{Degree::z(1), Degree::z(target_s)};
  SpanBuildInfo info;
  Subspace span = consequence_span(lower, ctx, u1, &info);
  bool target_is_identity = is_identity(target, u1);
  E.span_route = target_is_identity && !is_member(target, span);
  E.notes.push_back("target f_{1," + std::to_string(target_s) + "}: span of levels <= " +
                    std::to_string(N) + " has dimension " + std::to_string(span.dim()) +
                    " in ambient dimension " + std::to_string(span.ambient_dim()));

  GradedUT H = build_H(1, target_s, field);
  H.check_structure();
  auto w = find_counterexample(target, H);
  bool lower_hold = true;
  for (int k = 0; k <= N; ++k)
    if (!is_identity(pair_poly(1, 1 + p * k, field), H)) {
      lower_hold = false;
      E.notes.push_back("level " + std::to_string(k) + " generator fails on the separator");
    }
  E.algebra_route = w.has_value() && lower_hold;
  if (w) E.notes.push_back("separator fails the target on " + witness_string(*w));
  return E;
}

}  // namespace grlie
