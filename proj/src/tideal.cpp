#include "grlie/tideal.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace grlie {

namespace {

std::vector<Variable> context_vars(const std::vector<Degree>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("empty degree tuple");
  std::vector<Variable> vars;
  vars.reserve(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i)
    vars.push_back(Variable{static_cast<int>(i) + 1, degrees[i]});
  return vars;
}

void check_bound(std::size_t n, int max_n, const char* what) {
  int bound = std::min(max_n, kMaxTupleLength);
  if (static_cast<int>(n) > bound)
    throw std::invalid_argument(std::string(what) + ": tuple length " + std::to_string(n) +
                                " exceeds bound " + std::to_string(bound));
}

std::string format_tuple(const std::vector<Degree>& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += g[i].to_string();
  }
  return s + ")";
}

// Left-normed basis monomials of one block: pivot (largest index) first,
// the remaining variables in every permutation, lexicographic order.
std::vector<Monomial> block_basis(const std::vector<Variable>& block) {
  Monomial rest(block.begin(), block.end() - 1);
  std::vector<int> idx(rest.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Monomial> out;
  do {
    Monomial m;
    m.reserve(block.size());
    m.push_back(block.back());
    for (int i : idx) m.push_back(rest[static_cast<std::size_t>(i)]);
    out.push_back(std::move(m));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

MultilinearPoly poly_from_coords(const std::vector<Variable>& vars, const FieldSpec& field,
                                 const std::vector<Word>& keys,
                                 const std::vector<Scalar>& coords) {
  MultilinearPoly p(vars, field);
  for (std::size_t j = 0; j < keys.size(); ++j)
    if (!coords[j].is_zero()) p.add_coord(keys[j], coords[j]);
  return p;
}

Subspace kernel_from_values(const std::vector<Degree>& g, const FieldSpec& field,
                            const std::vector<Scalar>& values) {
  Subspace K(g, field);
  std::size_t m = K.ambient_dim();
  std::size_t lead = m;
  for (std::size_t j = 0; j < m; ++j)
    if (!values[j].is_zero()) {
      lead = j;
      break;
    }
  Scalar zero = Scalar::zero(field);
  for (std::size_t i = 0; i < m; ++i) {
    if (i == lead) continue;
    std::vector<Scalar> v(m, zero);
    v[i] = Scalar::one(field);
    if (lead < m && !values[i].is_zero()) v[lead] = -(values[i] / values[lead]);
    K.insert_coords(std::move(v));
  }
  if (lead == m) {  // functional vanishes identically: the kernel is everything
    std::vector<Scalar> v(m, zero);
    if (m > 0) {
      v[m - 1] = Scalar::one(field);
      K.insert_coords(std::move(v));
    }
  }
  return K;
}

}  // namespace

Subspace::Subspace(std::vector<Degree> degrees, FieldSpec field)
    : vars_(context_vars(degrees)),
      field_(field),
      keys_(MultilinearPoly(vars_, field).basis_keys()),
      rows_(field, keys_.size()) {}

std::vector<Scalar> Subspace::coords_of(const MultilinearPoly& p) const {
  if (p.vars() != vars_ || !(p.field() == field_))
    throw std::invalid_argument("Subspace: ambient space mismatch");
  std::vector<Scalar> out;
  out.reserve(keys_.size());
  for (const Word& k : keys_) {
    auto it = p.coords().find(k);
    out.push_back(it == p.coords().end() ? Scalar::zero(field_) : it->second);
  }
  return out;
}

bool Subspace::contains(const MultilinearPoly& p) const { return rows_.contains(coords_of(p)); }

bool Subspace::insert(const MultilinearPoly& p) { return rows_.insert(coords_of(p)); }

bool Subspace::operator==(const Subspace& o) const {
  return vars_ == o.vars_ && field_ == o.field_ && rows_ == o.rows_;
}

std::vector<Scalar> basis_values(const std::vector<Degree>& g, const ThinAlgebra& A) {
  std::vector<Variable> vars = context_vars(g);
  MultilinearPoly ctx(vars, A.field);
  std::vector<Scalar> values;
  for (const Word& k : ctx.basis_keys())
    values.push_back(eval_monomial_thin(ctx.monomial_for(k), A).value);
  return values;
}

Subspace identity_kernel(const std::vector<Degree>& g, const ThinAlgebra& A, int max_n) {
  check_bound(g.size(), max_n, "identity_kernel");
  return kernel_from_values(g, A.field, basis_values(g, A));
}

std::string GeneratorSet::describe() const {
  std::vector<std::string> parts;
  if (comm_pair) parts.push_back("comm_pair");
  if (triple) parts.push_back("triple");
  if (support_zero) parts.push_back("support_zero");
  if (!fixed.empty()) parts.push_back(std::to_string(fixed.size()) + " fixed");
  if (parts.empty()) return "none";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "+" + parts[i];
  return s;
}

Subspace consequence_span(const GeneratorSet& gens, const std::vector<Degree>& g,
                          const ThinAlgebra& A, SpanBuildInfo* info, int max_n) {
  check_bound(g.size(), max_n, "consequence_span");
  const FieldSpec& field = A.field;
  const std::int64_t p = field.characteristic();
  Subspace S(g, field);
  std::vector<Variable> vars = context_vars(g);
  int n = static_cast<int>(vars.size());
  SpanBuildInfo local;
  SpanBuildInfo& inf = info ? *info : local;
  bool full = false;
  bool boundary_noted = false;
  const Scalar one = Scalar::one(field);

  // One normalize+insert per instance; stop once the span is everything
  // (nothing larger exists, and the soundness check runs on the set).
  auto emit = [&](const std::vector<Term>& inner,
                  const std::vector<std::vector<Variable>>& outer_orders) {
    for (const auto& order : outer_orders) {
      std::vector<Term> terms;
      terms.reserve(inner.size());
      for (const Term& t : inner) {
        if (order.empty()) {
          terms.push_back(t);
          continue;
        }
        std::vector<BracketExpr> kids;
        kids.reserve(order.size() + 1);
        kids.push_back(t.expr);
        for (const Variable& v : order) kids.push_back(BracketExpr::var(v));
        terms.push_back(Term{t.coeff, BracketExpr::bracket(std::move(kids))});
      }
      S.insert(normalize(terms, field));
      ++inf.rows_generated;
      if (S.dim() == S.ambient_dim()) {
        full = true;
        return;
      }
    }
  };

  // Ordered partitions of sub into k nonempty blocks; blocks keep ascending
  // variable order. Invokes fn(blocks, sums).
  auto for_partitions = [&](const std::vector<Variable>& sub, int k, auto&& fn) {
    int s = static_cast<int>(sub.size());
    if (s < k) return;
    std::vector<int> label(static_cast<std::size_t>(s), 0);
    while (true) {
      std::vector<std::vector<Variable>> blocks(static_cast<std::size_t>(k));
      for (int i = 0; i < s; ++i)
        blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])].push_back(
            sub[static_cast<std::size_t>(i)]);
      bool ok = std::none_of(blocks.begin(), blocks.end(),
                             [](const std::vector<Variable>& b) { return b.empty(); });
      if (ok) {
        std::vector<Degree> sums;
        sums.reserve(static_cast<std::size_t>(k));
        for (const auto& b : blocks) {
          Degree d = b[0].degree;
          for (std::size_t i = 1; i < b.size(); ++i) d = d + b[i].degree;
          sums.push_back(d);
        }
        fn(blocks, sums);
        if (full) return;
      }
      int pos = 0;
      while (pos < s && label[static_cast<std::size_t>(pos)] == k - 1) {
        label[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == s) break;
      ++label[static_cast<std::size_t>(pos)];
    }
  };

  // All left-normed substitution choices for the given blocks.
  auto for_block_monomials = [&](const std::vector<std::vector<Variable>>& blocks, auto&& fn) {
    std::size_t k = blocks.size();
    std::vector<std::vector<Monomial>> bb;
    bb.reserve(k);
    for (const auto& b : blocks) bb.push_back(block_basis(b));
    std::vector<std::size_t> choice(k, 0);
    while (true) {
      std::vector<BracketExpr> exprs;
      exprs.reserve(k);
      for (std::size_t i = 0; i < k; ++i) exprs.push_back(BracketExpr::left_normed(bb[i][choice[i]]));
      fn(exprs);
      if (full) return;
      std::size_t pos = 0;
      while (pos < k) {
        if (++choice[pos] < bb[pos].size()) break;
        choice[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  };

  for (unsigned mask = 1; mask < (1u << n) && !full; ++mask) {
    std::vector<Variable> sub, outer;
    for (int i = 0; i < n; ++i)
      ((mask >> i) & 1u ? sub : outer).push_back(vars[static_cast<std::size_t>(i)]);

    std::vector<std::vector<Variable>> outer_orders;
    {
      std::vector<int> idx(outer.size());
      std::iota(idx.begin(), idx.end(), 0);
      do {
        std::vector<Variable> ord;
        ord.reserve(outer.size());
        for (int i : idx) ord.push_back(outer[static_cast<std::size_t>(i)]);
        outer_orders.push_back(std::move(ord));
      } while (std::next_permutation(idx.begin(), idx.end()));
    }

    if (gens.comm_pair && !full) {
      for_partitions(sub, 2, [&](const auto& blocks, const std::vector<Degree>& h) {
        bool match = p == 0 ? h[0] == h[1] : (h[0].z_value() - h[1].z_value()) % p == 0;
        if (!match) return;
        for_block_monomials(blocks, [&](const std::vector<BracketExpr>& m) {
          emit({Term{one, BracketExpr::bracket({m[0], m[1]})}}, outer_orders);
        });
      });
    }

    if (gens.triple && !full) {
      for_partitions(sub, 3, [&](const auto& blocks, const std::vector<Degree>& h) {
        auto [alpha, beta] =
            triple_coefficients(h[0].z_value(), h[1].z_value(), h[2].z_value(), field);
        if (alpha.is_zero() && beta.is_zero()) return;  // degenerate instance
        for_block_monomials(blocks, [&](const std::vector<BracketExpr>& m) {
          emit({Term{alpha, BracketExpr::bracket({m[0], m[1], m[2]})},
                Term{-beta, BracketExpr::bracket({m[0], m[2], m[1]})}},
               outer_orders);
        });
      });
    }

    if (gens.support_zero && !full) {
      for_partitions(sub, 1, [&](const auto& blocks, const std::vector<Degree>& h) {
        if (A.in_support(h[0])) return;
        if (!boundary_noted && A.grading.rank() == 1 && A.grading.moduli[0] == 0 &&
            h[0].z_value() == -2) {
          inf.notes.push_back(
              "support_zero instance at degree -2: admitted by the support fact L_i = 0 for "
              "i <= -2, one step past the stated c < -2 range");
          boundary_noted = true;
        }
        for_block_monomials(blocks, [&](const std::vector<BracketExpr>& m) {
          emit({Term{one, m[0]}}, outer_orders);
        });
      });
    }

    for (const MultilinearPoly& P : gens.fixed) {
      if (full) break;
      int k = P.n();
      for_partitions(sub, k, [&](const auto& blocks, const std::vector<Degree>& h) {
        for (int i = 0; i < k; ++i)
          if (!(h[static_cast<std::size_t>(i)] == P.vars()[static_cast<std::size_t>(i)].degree))
            return;
        for_block_monomials(blocks, [&](const std::vector<BracketExpr>& m) {
          std::vector<Term> inner;
          for (const auto& [key, coeff] : P.coords()) {
            Monomial pm = P.monomial_for(key);
            std::vector<BracketExpr> kids;
            kids.reserve(pm.size());
            for (const Variable& v : pm) {
              auto it = std::find_if(P.vars().begin(), P.vars().end(),
                                     [&](const Variable& w) { return w.index == v.index; });
              kids.push_back(m[static_cast<std::size_t>(it - P.vars().begin())]);
            }
            inner.push_back(
                Term{coeff, kids.size() == 1 ? kids[0] : BracketExpr::bracket(std::move(kids))});
          }
          emit(inner, outer_orders);
        });
      });
    }
  }
  return S;
}

bool is_member(const MultilinearPoly& p, const Subspace& S) { return S.contains(p); }

std::string TupleVerdict::to_string() const {
  std::string s = format_tuple(tuple) + ": " + (classification.good ? "good" : "bad") +
                  ", ambient " + std::to_string(dim_ambient) + ", kernel " +
                  std::to_string(dim_kernel) + ", span " + std::to_string(dim_span) +
                  ", span<=kernel " + (span_subset_kernel ? "yes" : "NO") + ", kernel<=span " +
                  (kernel_subset_span ? "yes" : "NO");
  if (good_structure) s += std::string(", good-structure ") + (*good_structure ? "ok" : "BROKEN");
  if (counterexample) s += " [" + *counterexample + "]";
  return s;
}

TupleVerdict verify_tuple(const std::vector<Degree>& g, const ThinAlgebra& A,
                          const GeneratorSet& gens, int max_n) {
  check_bound(g.size(), max_n, "verify_tuple");
  TupleVerdict V;
  V.tuple = g;
  V.classification = oracle_classify(g, A);
  std::vector<Scalar> values = basis_values(g, A);
  Subspace kernel = kernel_from_values(g, A.field, values);
  SpanBuildInfo info;
  Subspace span = consequence_span(gens, g, A, &info, max_n);
  V.dim_ambient = kernel.ambient_dim();
  V.dim_kernel = kernel.dim();
  V.dim_span = span.dim();
  V.notes = info.notes;

  V.span_subset_kernel = true;
  for (const auto& row : span.rows().rows()) {
    Scalar acc = Scalar::zero(A.field);
    for (std::size_t j = 0; j < values.size(); ++j)
      if (!row[j].is_zero() && !values[j].is_zero()) acc += row[j] * values[j];
    if (!acc.is_zero()) {
      V.span_subset_kernel = false;
      MultilinearPoly bad = poly_from_coords(span.vars(), A.field, span.keys(), row);
      V.counterexample = "generated consequence " + bad.to_string() + " evaluates to " +
                         acc.to_string();
      break;
    }
  }

  V.kernel_subset_span = true;
  for (const auto& row : kernel.rows().rows()) {
    if (!span.contains(row)) {
      V.kernel_subset_span = false;
      if (!V.counterexample) {
        MultilinearPoly missing = poly_from_coords(kernel.vars(), A.field, kernel.keys(), row);
        V.counterexample = "identity " + missing.to_string() + " is not a generated consequence";
      }
      break;
    }
  }

  if (V.classification.good) {
    bool ok = V.dim_kernel + 1 == V.dim_ambient;
    if (!ok && !V.counterexample)
      V.counterexample = "good tuple but kernel codimension is not 1";
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < values.size(); ++j)
      if (!values[j].is_zero()) nonzero.push_back(j);
    Scalar zero = Scalar::zero(A.field);
    for (std::size_t a = 0; a < nonzero.size() && ok; ++a)
      for (std::size_t b = a + 1; b < nonzero.size() && ok; ++b) {
        std::vector<Scalar> v(values.size(), zero);
        v[nonzero[a]] = Scalar::one(A.field);
        v[nonzero[b]] = -(values[nonzero[a]] / values[nonzero[b]]);
        if (!span.contains(v)) {
          ok = false;
          if (!V.counterexample)
            V.counterexample = "non-identity basis monomials " + std::to_string(nonzero[a]) +
                               " and " + std::to_string(nonzero[b]) +
                               " are not equivalent modulo the span";
        }
      }
    V.good_structure = ok;
  }
  return V;
}

SweepResult sweep(const SweepConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
    throw std::invalid_argument("sweep: bad n range");
  if (cfg.n_max > kMaxTupleLength)
    throw std::invalid_argument("sweep: n_max exceeds hard bound " +
                                std::to_string(kMaxTupleLength));
  if (cfg.n_max > kDefaultTupleLength && !cfg.allow_n6)
    throw std::invalid_argument("sweep: n_max = 6 requires allow_n6 (ambient dimension 120)");
  if (cfg.entry_min > cfg.entry_max) throw std::invalid_argument("sweep: bad entry range");
  if (cfg.characteristic != 0 && (cfg.characteristic <= 2 || !is_prime(cfg.characteristic)))
    throw std::invalid_argument("sweep: characteristic must be 0 or an odd prime");
  if (cfg.algebra != "u1" && cfg.algebra != "w1")
    throw std::invalid_argument("sweep: algebra must be u1 or w1");

  FieldSpec field = cfg.characteristic == 0 ? FieldSpec::rational()
                                            : FieldSpec::prime(cfg.characteristic);
  std::vector<std::vector<std::int64_t>> tuples;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(n), cfg.entry_min);
    while (true) {
      tuples.push_back(t);
      int pos = n - 1;
      while (pos >= 0 && t[static_cast<std::size_t>(pos)] == cfg.entry_max) --pos;
      if (pos < 0) break;
      ++t[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < n; ++i)
        t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(pos)];
    }
  }

  std::vector<std::optional<TupleVerdict>> results(tuples.size());
  int max_n = cfg.n_max;
  auto run_one = [&](const ThinAlgebra& A, std::size_t i) {
    results[i] = verify_tuple(z_degrees(tuples[i]), A, cfg.gens, max_n);
  };
  int nthreads = std::max(1, cfg.threads);
  if (nthreads == 1 || tuples.size() < 2) {
    ThinAlgebra A = make_thin(cfg.algebra, field);
    for (std::size_t i = 0; i < tuples.size(); ++i) run_one(A, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::string error;
    auto worker = [&]() {
      ThinAlgebra A = make_thin(cfg.algebra, field);
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= tuples.size()) break;
        try {
          run_one(A, i);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lk(err_mutex);
          if (error.empty()) error = e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (!error.empty()) throw std::runtime_error("sweep worker failed: " + error);
  }

  SweepResult R;
  R.tuples_checked = tuples.size();
  std::set<std::string> note_set;
  for (auto& slot : results) {
    TupleVerdict V = std::move(*slot);
    if (!V.verified()) {
      ++R.failures;
      R.counterexamples.push_back(format_tuple(V.tuple) + ": " +
                                  V.counterexample.value_or("verification failed"));
    }
    for (const std::string& note : V.notes) note_set.insert(note);
    R.verdicts.push_back(std::move(V));
  }
  R.notes.assign(note_set.begin(), note_set.end());
  return R;
}

}  // namespace grlie
