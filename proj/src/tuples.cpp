#include "grlie/tuples.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grlie {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a = mod_reduce(a, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = (r * a) % p;
    a = (a * a) % p;
  }
  return r;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Over Z: does the compact multiset match the displayed pattern with base v?
// Entries must be v itself or negative multiples -lambda*v; a positive
// multiple k*v with k >= 2 fails the candidate.
bool try_pattern_z(const std::vector<std::int64_t>& c, std::int64_t v, BadPattern& out) {
  std::int64_t cnt = 0, sum = 0;
  std::vector<std::int64_t> lambdas;
  for (std::int64_t e : c) {
    if (e == v) {
      ++cnt;
      continue;
    }
    if (e % v != 0) return false;
    std::int64_t k = e / v;
    if (k >= 1) return false;
    lambdas.push_back(-k);
    sum += -k;
  }
  if (!lambdas.empty() && cnt < sum + 2) return false;
  std::sort(lambdas.begin(), lambdas.end());
  out.kind = lambdas.empty() ? BadPattern::Kind::all_equal : BadPattern::Kind::negatives;
  out.base = v;
  out.lambdas = std::move(lambdas);
  out.count_base = cnt;
  return true;
}

// Over F_p every nonzero residue e != v is -lambda*v for a unique
// lambda in [1, p-2]; only the count condition can fail.
bool try_pattern_p(const std::vector<std::int64_t>& c, std::int64_t v, std::int64_t p,
                   BadPattern& out) {
  std::int64_t vinv = mod_pow(v, p - 2, p);
  std::int64_t cnt = 0, sum = 0;
  std::vector<std::int64_t> lambdas;
  for (std::int64_t e : c) {
    if (e == v) {
      ++cnt;
      continue;
    }
    std::int64_t lam = mod_reduce(-e * vinv, p);
    lambdas.push_back(lam);
    sum += lam;
  }
  if (!lambdas.empty() && cnt < sum + 2) return false;
  std::sort(lambdas.begin(), lambdas.end());
  out.kind = lambdas.empty() ? BadPattern::Kind::all_equal : BadPattern::Kind::negatives;
  out.base = v;
  out.lambdas = std::move(lambdas);
  out.count_base = cnt;
  return true;
}

}  // namespace

bool BadPattern::matches(const std::vector<std::int64_t>& compact_entries, std::int64_t p) const {
  if (kind == Kind::zero_residues) return compact_entries.empty();
  BadPattern re;
  bool ok = p == 0 ? try_pattern_z(compact_entries, base, re)
                   : try_pattern_p(compact_entries, base, p, re);
  if (!ok) return false;
  return re.kind == kind && re.base == base && re.lambdas == lambdas &&
         re.count_base == count_base;
}

std::string BadPattern::to_string() const {
  switch (kind) {
    case Kind::zero_residues: return "all entries have zero residue";
    case Kind::all_equal:
      return "all " + std::to_string(count_base) + " nonzero entries equal g = " +
             std::to_string(base);
    case Kind::negatives: {
      std::string s = "base g = " + std::to_string(base) + ", negative multiples lambda = (";
      for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lambdas[i]);
      }
      std::int64_t sum = std::accumulate(lambdas.begin(), lambdas.end(), std::int64_t{0});
      s += "), |C|_g = " + std::to_string(count_base) + " >= " + std::to_string(sum + 2);
      return s;
    }
  }
  return "?";
}

std::string TupleClass::to_string() const {
  std::string s = good ? "good" : "bad";
  if (pattern) s += " (" + pattern->to_string() + ")";
  if (witness) {
    s += " (witness order:";
    for (int i : *witness) s += " " + std::to_string(i);
    s += ")";
  }
  if (orders_rejected) s += " (all " + std::to_string(*orders_rejected) + " orders vanish)";
  return s;
}

std::vector<std::int64_t> compact(const std::vector<std::int64_t>& tuple, std::int64_t p) {
  std::vector<std::int64_t> c;
  for (std::int64_t e : tuple) {
    std::int64_t v = p == 0 ? e : mod_reduce(e, p);
    if (v != 0) c.push_back(v);
  }
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<Degree> z_degrees(const std::vector<std::int64_t>& tuple) {
  std::vector<Degree> ds;
  ds.reserve(tuple.size());
  for (std::int64_t e : tuple) ds.push_back(Degree::z(e));
  return ds;
}

std::optional<std::vector<int>> standard_order(const std::vector<Degree>& tuple,
                                               const ThinAlgebra& A) {
  int n = static_cast<int>(tuple.size());
  if (n == 0) throw std::invalid_argument("standard_order: empty tuple");
  std::vector<int> order;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  order.reserve(static_cast<std::size_t>(n));

  // Depth-first over left-normed orders, pruning zero prefixes.
  std::function<bool(const Scalar&, const Degree&)> dfs = [&](const Scalar& value,
                                                              const Degree& acc) {
    if (static_cast<int>(order.size()) == n) return true;
    for (int i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      const Degree& d = tuple[static_cast<std::size_t>(i)];
      Scalar next = order.empty() ? (A.in_support(d) ? A.one() : A.zero()) : value * A.c(acc, d);
      if (next.is_zero()) continue;
      used[static_cast<std::size_t>(i)] = true;
      order.push_back(i);
      if (dfs(next, order.size() == 1 ? d : acc + d)) return true;
      order.pop_back();
      used[static_cast<std::size_t>(i)] = false;
    }
    return false;
  };
  if (dfs(A.zero(), tuple[0])) return order;
  return std::nullopt;
}

TupleClass oracle_classify(const std::vector<Degree>& tuple, const ThinAlgebra& A, int max_n) {
  int n = static_cast<int>(tuple.size());
  if (n > max_n)
    throw std::invalid_argument("oracle_classify: tuple length " + std::to_string(n) +
                                " exceeds bound " + std::to_string(max_n));
  TupleClass tc;
  auto w = standard_order(tuple, A);
  if (w) {
    tc.good = true;
    tc.witness = std::move(w);
  } else {
    tc.good = false;
    tc.orders_rejected = factorial(n);
  }
  return tc;
}

TupleClass classify(const std::vector<std::int64_t>& tuple, std::int64_t p) {
  if (tuple.empty()) throw std::invalid_argument("classify: empty tuple");
  if (p != 0 && (p <= 2 || !is_prime(p)))
    throw std::invalid_argument("classify: characteristic must be 0 or an odd prime");
  TupleClass tc;
  auto good_with_witness = [&]() {
    tc.good = true;
    FieldSpec f = p == 0 ? FieldSpec::rational() : FieldSpec::prime(p);
    tc.witness = standard_order(z_degrees(tuple), make_u1(f));
    return tc;
  };
  if (tuple.size() == 1) return good_with_witness();  // supp U1 = Z: a lone variable never vanishes
  std::vector<std::int64_t> c = compact(tuple, p);
  if (c.empty()) {
    tc.good = false;
    tc.pattern = BadPattern{BadPattern::Kind::zero_residues, 0, {}, 0};
    return tc;
  }
  if (c.size() == 1) return good_with_witness();
  std::vector<std::int64_t> cands(c.begin(), c.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  // Deterministic certificate: smallest |g| first.
  std::sort(cands.begin(), cands.end(), [](std::int64_t a, std::int64_t b) {
    return std::llabs(a) != std::llabs(b) ? std::llabs(a) < std::llabs(b) : a < b;
  });
  for (std::int64_t v : cands) {
    BadPattern pat;
    bool hit = p == 0 ? try_pattern_z(c, v, pat) : try_pattern_p(c, v, p, pat);
    if (hit) {
      tc.good = false;
      tc.pattern = std::move(pat);
      return tc;
    }
  }
  return good_with_witness();
}

}  // namespace grlie
