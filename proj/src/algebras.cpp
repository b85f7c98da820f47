#include "grlie/algebras.hpp"

#include <stdexcept>

namespace grlie {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

void require_z(const Degree& d, const std::string& who) {
  if (!(d.spec() == GradingSpec::z()))
    throw std::invalid_argument(who + ": expected a Z-degree, got " + d.to_string());
}

void require_zq2(const Degree& d, std::int64_t q, const std::string& who) {
  if (!(d.spec() == GradingSpec::zq2(q)))
    throw std::invalid_argument(who + ": expected a Z_" + std::to_string(q) +
                                " x Z_" + std::to_string(q) + " degree, got " + d.to_string());
}

Scalar pauli_eps(std::int64_t q, const FieldSpec& field) {
  switch (field.kind()) {
    case FieldSpec::Kind::cyclotomic:
      if (field.cyclotomic_order() != q)
        throw std::invalid_argument("pauli grading order " + std::to_string(q) +
                                    " does not match " + field.to_string());
      return Scalar::cyclotomic_eps(field);
    case FieldSpec::Kind::prime:
      return Scalar::from_int(field, find_root_of_unity(field.characteristic(), q));
    case FieldSpec::Kind::rational:
      if (q != 2)
        throw std::invalid_argument("rationals contain a primitive q-th root of unity only for q = 2");
      return Scalar::from_int(field, -1);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Scalar ThinAlgebra::c(const Degree& g, const Degree& h) const {
  if (!in_support(g) || !in_support(h) || !in_support(g + h)) return zero();
  return c_raw(g, h);
}

ThinAlgebra make_u1(const FieldSpec& field) {
  ThinAlgebra a;
  a.name = "u1";
  a.field = field;
  a.grading = GradingSpec::z();
  a.in_support = [](const Degree& d) {
    require_z(d, "u1");
    return true;
  };
  a.c_raw = [field](const Degree& g, const Degree& h) {
    return Scalar::from_int(field, h.z_value() - g.z_value());
  };
  return a;
}

ThinAlgebra make_w1(const FieldSpec& field) {
  ThinAlgebra a;
  a.name = "w1";
  a.field = field;
  a.grading = GradingSpec::z();
  a.in_support = [](const Degree& d) {
    require_z(d, "w1");
    return d.z_value() >= -1;
  };
  a.c_raw = [field](const Degree& g, const Degree& h) {
    return Scalar::from_int(field, h.z_value() - g.z_value());
  };
  return a;
}

ThinAlgebra make_pauli(std::int64_t q, const FieldSpec& field) {
  if (!is_prime(q)) throw std::invalid_argument("pauli grading requires prime q");
  Scalar eps = pauli_eps(q, field);
  ThinAlgebra a;
  a.name = "pauli_" + std::to_string(q);
  a.field = field;
  a.grading = GradingSpec::zq2(q);
  a.in_support = [q](const Degree& d) {
    require_zq2(d, q, "pauli");
    return !d.is_zero();
  };
  a.c_raw = [eps, q](const Degree& g, const Degree& h) {
    std::int64_t i = g.comps()[0], j = g.comps()[1];
    std::int64_t r = h.comps()[0], s = h.comps()[1];
    return eps.pow(mod_reduce(-r * j, q)) - eps.pow(mod_reduce(-i * s, q));
  };
  return a;
}

ThinAlgebra make_thin(const std::string& name, const FieldSpec& field, std::int64_t q) {
  if (name == "u1") return make_u1(field);
  if (name == "w1") return make_w1(field);
  if (name == "pauli") {
    if (q == 0) throw std::invalid_argument("make_thin: pauli requires q");
    return make_pauli(q, field);
  }
  throw std::invalid_argument("make_thin: unknown algebra " + name);
}

EvalResult eval_degrees_thin(const std::vector<Degree>& ds, const ThinAlgebra& A) {
  if (ds.empty()) throw std::invalid_argument("eval_degrees_thin: empty degree sequence");
  Degree total = degree_add(ds);
  for (const auto& d : ds)
    if (!A.in_support(d)) return {A.zero(), total};
  Scalar value = A.one();
  Degree acc = ds[0];
  for (std::size_t k = 1; k < ds.size(); ++k) {
    value *= A.c(acc, ds[k]);
    acc = acc + ds[k];
    if (value.is_zero()) break;
  }
  return {value, total};
}

EvalResult eval_monomial_thin(const Monomial& m, const ThinAlgebra& A) {
  return eval_degrees_thin(degree_sequence(m), A);
}

Scalar eval_poly_thin(const MultilinearPoly& p, const ThinAlgebra& A) {
  if (!(p.field() == A.field))
    throw FieldMismatchError("eval_poly_thin: polynomial field " + p.field().to_string() +
                             " vs algebra field " + A.field.to_string());
  Scalar acc = A.zero();
  for (const auto& [key, c] : p.coords())
    acc += c * eval_monomial_thin(p.monomial_for(key), A).value;
  return acc;
}

EvalResult eval_tree_thin(const BracketExpr& e, const ThinAlgebra& A) {
  if (e.is_var()) {
    const Degree& d = e.variable().degree;
    return {A.in_support(d) ? A.one() : A.zero(), d};
  }
  EvalResult acc = eval_tree_thin(e.children()[0], A);
  for (std::size_t i = 1; i < e.children().size(); ++i) {
    EvalResult rhs = eval_tree_thin(e.children()[i], A);
    acc.value = acc.value * rhs.value * A.c(acc.degree, rhs.degree);
    acc.degree = acc.degree + rhs.degree;
  }
  return acc;
}

bool is_identity(const MultilinearPoly& p, const ThinAlgebra& A) {
  return eval_poly_thin(p, A).is_zero();
}

std::vector<int> StructureAlgebra::component(const Degree& d) const {
  std::vector<int> idx;
  for (int i = 0; i < dim(); ++i)
    if (degrees[static_cast<std::size_t>(i)] == d) idx.push_back(i);
  return idx;
}

std::map<int, Scalar> StructureAlgebra::bracket(const std::map<int, Scalar>& x,
                                                const std::map<int, Scalar>& y) const {
  std::map<int, Scalar> acc;
  for (const auto& [i, xi] : x) {
    for (const auto& [j, yj] : y) {
      for (const auto& [k, ck] : table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        auto it = acc.find(k);
        if (it == acc.end()) it = acc.emplace(k, Scalar::zero(field)).first;
        it->second += xi * yj * ck;
      }
    }
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
  return acc;
}

void StructureAlgebra::check_structure() const {
  std::size_t n = labels.size();
  if (degrees.size() != n || table.size() != n)
    throw std::logic_error(name + ": inconsistent table sizes");
  auto neg = [&](std::map<int, Scalar> m) {
    for (auto& [k, v] : m) v = -v;
    return m;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw std::logic_error(name + ": inconsistent table row");
    if (!table[i][i].empty()) throw std::logic_error(name + ": [b,b] != 0");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(table[i][j] == neg(table[j][i])))
        throw std::logic_error(name + ": bracket table not antisymmetric");
      Degree dij = degrees[i] + degrees[j];
      for (const auto& [k, v] : table[i][j]) {
        if (v.is_zero()) throw std::logic_error(name + ": zero entry stored in table");
        if (!(degrees[static_cast<std::size_t>(k)] == dij))
          throw std::logic_error(name + ": bracket leaves the graded component");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::map<int, Scalar> bi{{static_cast<int>(i), Scalar::one(field)}};
    for (std::size_t j = 0; j < n; ++j) {
      std::map<int, Scalar> bj{{static_cast<int>(j), Scalar::one(field)}};
      for (std::size_t k = 0; k < n; ++k) {
        std::map<int, Scalar> bk{{static_cast<int>(k), Scalar::one(field)}};
        std::map<int, Scalar> sum = bracket(bracket(bi, bj), bk);
        for (const auto& [idx, v] : bracket(bracket(bj, bk), bi)) {
          auto it = sum.find(idx);
          if (it == sum.end()) it = sum.emplace(idx, Scalar::zero(field)).first;
          it->second += v;
        }
        for (const auto& [idx, v] : bracket(bracket(bk, bi), bj)) {
          auto it = sum.find(idx);
          if (it == sum.end()) it = sum.emplace(idx, Scalar::zero(field)).first;
          it->second += v;
        }
        for (const auto& [idx, v] : sum)
          if (!v.is_zero()) throw std::logic_error(name + ": Jacobi identity fails");
      }
    }
  }
}

namespace {

std::map<int, Scalar> eval_poly_structure(const MultilinearPoly& p, const StructureAlgebra& A,
                                          const std::map<int, int>& assignment) {
  std::map<int, Scalar> acc;
  for (const auto& [key, c] : p.coords()) {
    Monomial m = p.monomial_for(key);
    std::map<int, Scalar> cur{{assignment.at(m[0].index), Scalar::one(A.field)}};
    for (std::size_t i = 1; i < m.size(); ++i) {
      std::map<int, Scalar> nxt{{assignment.at(m[i].index), Scalar::one(A.field)}};
      cur = A.bracket(cur, nxt);
      if (cur.empty()) break;
    }
    for (const auto& [k, v] : cur) {
      auto it = acc.find(k);
      if (it == acc.end()) it = acc.emplace(k, Scalar::zero(A.field)).first;
      it->second += c * v;
    }
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
  return acc;
}

std::string element_str(const std::map<int, Scalar>& m, const StructureAlgebra& A) {
  if (m.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : m) {
    if (!s.empty()) s += " + ";
    s += v.to_string() + "*" + A.labels[static_cast<std::size_t>(k)];
  }
  return s;
}

}  // namespace

std::optional<IdentityWitness> find_counterexample(const MultilinearPoly& p,
                                                   const StructureAlgebra& A) {
  if (!(p.field() == A.field))
    throw FieldMismatchError("structure evaluation: field mismatch");
  const auto& vars = p.vars();
  std::vector<std::vector<int>> candidates;
  for (const auto& v : vars) {
    candidates.push_back(A.component(v.degree));
    if (candidates.back().empty()) return std::nullopt;  // zero component: vacuous identity
  }
  std::vector<std::size_t> pos(vars.size(), 0);
  while (true) {
    std::map<int, int> assignment;
    for (std::size_t i = 0; i < vars.size(); ++i)
      assignment[vars[i].index] = candidates[i][pos[i]];
    std::map<int, Scalar> val = eval_poly_structure(p, A, assignment);
    if (!val.empty()) {
      IdentityWitness w;
      for (std::size_t i = 0; i < vars.size(); ++i)
        w.assignment.push_back("x" + std::to_string(vars[i].index) + " <- " +
                               A.labels[static_cast<std::size_t>(candidates[i][pos[i]])]);
      w.value = element_str(val, A);
      return w;
    }
    std::size_t i = 0;
    for (; i < pos.size(); ++i) {
      if (++pos[i] < candidates[i].size()) break;
      pos[i] = 0;
    }
    if (i == pos.size()) return std::nullopt;
  }
}

bool is_identity(const MultilinearPoly& p, const StructureAlgebra& A) {
  return !find_counterexample(p, A).has_value();
}

std::optional<Scalar> derive_swap_lambda(const Degree& g, const Degree& h, const Degree& k,
                                         const ThinAlgebra& A) {
  Scalar e1 = eval_degrees_thin({g, h, k}, A).value;
  if (e1.is_zero()) return std::nullopt;
  Scalar e2 = eval_degrees_thin({g, k, h}, A).value;
  return e2 / e1;
}

std::optional<Scalar> derive_pauli_lambda(const std::array<Degree, 4>& g, const ThinAlgebra& A) {
  Scalar e1 = eval_degrees_thin({g[3], g[0], g[1], g[2]}, A).value;
  Scalar e2 = eval_degrees_thin({g[3], g[2], g[1], g[0]}, A).value;
  if (e1.is_zero() || e2.is_zero()) return std::nullopt;
  return e1 / e2;
}

namespace {

std::map<int, Scalar> fold_basis_degrees(const std::vector<Degree>& ds,
                                         const StructureAlgebra& A) {
  std::map<int, Scalar> acc;
  std::vector<int> comp = A.component(ds[0]);
  if (comp.empty()) return acc;
  if (comp.size() != 1) throw std::logic_error("fold_basis_degrees: component not one-dimensional");
  acc = {{comp[0], Scalar::one(A.field)}};
  for (std::size_t i = 1; i < ds.size(); ++i) {
    std::vector<int> ci = A.component(ds[i]);
    if (ci.empty()) return {};
    if (ci.size() != 1) throw std::logic_error("fold_basis_degrees: component not one-dimensional");
    acc = A.bracket(acc, {{ci[0], Scalar::one(A.field)}});
    if (acc.empty()) return {};
  }
  return acc;
}

}  // namespace

std::optional<Scalar> derive_pauli_lambda_structure(const std::array<Degree, 4>& g,
                                                    const StructureAlgebra& A) {
  std::map<int, Scalar> m1 = fold_basis_degrees({g[3], g[0], g[1], g[2]}, A);
  std::map<int, Scalar> m2 = fold_basis_degrees({g[3], g[2], g[1], g[0]}, A);
  if (m1.empty() || m2.empty()) return std::nullopt;
  if (m1.size() != 1 || m2.size() != 1 || m1.begin()->first != m2.begin()->first)
    throw std::logic_error("derive_pauli_lambda_structure: values not proportional");
  return m1.begin()->second / m2.begin()->second;
}

namespace {

using Mat = std::vector<std::vector<Scalar>>;

Mat mat_zero(std::int64_t q, const FieldSpec& f) {
  return Mat(static_cast<std::size_t>(q),
             std::vector<Scalar>(static_cast<std::size_t>(q), Scalar::zero(f)));
}

Mat mat_mul(const Mat& a, const Mat& b, const FieldSpec& f) {
  std::size_t q = a.size();
  Mat r = mat_zero(static_cast<std::int64_t>(q), f);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t k = 0; k < q; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < q; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Mat mat_sub(Mat a, const Mat& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
  return a;
}

bool mat_is_zero(const Mat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

}  // namespace

StructureAlgebra build_pauli_matrix_oracle(std::int64_t q, const FieldSpec& field) {
  if (!is_prime(q)) throw std::invalid_argument("pauli oracle requires prime q");
  Scalar eps = pauli_eps(q, field);
  std::size_t qq = static_cast<std::size_t>(q);

  Mat A = mat_zero(q, field), B = mat_zero(q, field);
  for (std::size_t r = 0; r < qq; ++r) A[r][r] = eps.pow(static_cast<std::int64_t>(qq - 1 - r));
  for (std::size_t r = 0; r + 1 < qq; ++r) B[r][r + 1] = Scalar::one(field);
  B[qq - 1][0] = Scalar::one(field);

  // M[i][j] = A^i B^j for all exponent pairs, identity included.
  std::vector<std::vector<Mat>> M(qq, std::vector<Mat>(qq, mat_zero(q, field)));
  Mat Ai = mat_zero(q, field);
  for (std::size_t r = 0; r < qq; ++r) Ai[r][r] = Scalar::one(field);
  for (std::size_t i = 0; i < qq; ++i) {
    Mat cur = Ai;
    for (std::size_t j = 0; j < qq; ++j) {
      M[i][j] = cur;
      cur = mat_mul(cur, B, field);
    }
    Ai = mat_mul(Ai, A, field);
  }

  StructureAlgebra out;
  out.name = "sl_" + std::to_string(q) + "_matrix";
  out.field = field;
  out.grading = GradingSpec::zq2(q);
  std::map<std::pair<std::int64_t, std::int64_t>, int> index;
  for (std::int64_t i = 0; i < q; ++i)
    for (std::int64_t j = 0; j < q; ++j) {
      if (i == 0 && j == 0) continue;
      index[{i, j}] = out.dim();
      out.labels.push_back("A^" + std::to_string(i) + "B^" + std::to_string(j));
      out.degrees.push_back(Degree::zq(i, j, q));
    }

  int n = out.dim();
  out.table.assign(static_cast<std::size_t>(n),
                   std::vector<std::map<int, Scalar>>(static_cast<std::size_t>(n)));
  for (const auto& [gi, bi] : index) {
    for (const auto& [gj, bj] : index) {
      Mat C = mat_sub(mat_mul(M[gi.first][gi.second], M[gj.first][gj.second], field),
                      mat_mul(M[gj.first][gj.second], M[gi.first][gi.second], field));
      std::int64_t ti = (gi.first + gj.first) % q, tj = (gi.second + gj.second) % q;
      if (ti == 0 && tj == 0) {
        if (!mat_is_zero(C))
          throw std::logic_error("pauli oracle: commutator escapes sl_q");
        continue;
      }
      const Mat& T = M[ti][tj];
      std::optional<Scalar> mu;
      for (std::size_t r = 0; r < qq && !mu; ++r)
        for (std::size_t c = 0; c < qq && !mu; ++c)
          if (!T[r][c].is_zero()) mu = C[r][c] / T[r][c];
      Mat check = T;
      for (auto& row : check)
        for (auto& v : row) v *= *mu;
      if (!mat_is_zero(mat_sub(C, check)))
        throw std::logic_error("pauli oracle: commutator not a multiple of the target basis matrix");
      if (!mu->is_zero())
        out.table[static_cast<std::size_t>(bi)][static_cast<std::size_t>(bj)] = {{index.at({ti, tj}), *mu}};
    }
  }
  return out;
}

}  // namespace grlie
