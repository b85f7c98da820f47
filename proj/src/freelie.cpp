#include "grlie/freelie.hpp"

#include <algorithm>
#include <stdexcept>

namespace grlie {

BracketExpr BracketExpr::var(Variable v) {
  BracketExpr e;
  e.var_ = std::move(v);
  return e;
}

BracketExpr BracketExpr::bracket(std::vector<BracketExpr> children) {
  if (children.size() < 2)
    throw std::invalid_argument("bracket node needs at least two children");
  BracketExpr e;
  e.kids_ = std::move(children);
  return e;
}

BracketExpr BracketExpr::left_normed(const Monomial& vars) {
  if (vars.empty()) throw std::invalid_argument("left_normed: empty monomial");
  if (vars.size() == 1) return var(vars[0]);
  std::vector<BracketExpr> kids;
  kids.reserve(vars.size());
  for (const auto& v : vars) kids.push_back(var(v));
  return bracket(std::move(kids));
}

const Variable& BracketExpr::variable() const {
  if (!is_var()) throw std::logic_error("variable() on a bracket node");
  return var_;
}

int BracketExpr::leaf_count() const {
  if (is_var()) return 1;
  int c = 0;
  for (const auto& k : kids_) c += k.leaf_count();
  return c;
}

void BracketExpr::collect_variables(std::vector<Variable>& out) const {
  if (is_var()) {
    out.push_back(var_);
    return;
  }
  for (const auto& k : kids_) k.collect_variables(out);
}

std::string BracketExpr::to_string() const {
  if (is_var()) return "x" + std::to_string(var_.index) + ":" + var_.degree.to_string();
  std::string s = "[";
  for (std::size_t i = 0; i < kids_.size(); ++i) {
    if (i) s += ",";
    s += kids_[i].to_string();
  }
  return s + "]";
}

std::vector<Degree> degree_sequence(const Monomial& m) {
  std::vector<Degree> ds;
  ds.reserve(m.size());
  for (const auto& v : m) ds.push_back(v.degree);
  return ds;
}

namespace {

std::vector<SignedWord> expand_raw(const BracketExpr& e) {
  if (e.is_var()) return {{1, {e.variable().index}}};
  std::vector<SignedWord> acc = expand_raw(e.children()[0]);
  for (std::size_t i = 1; i < e.children().size(); ++i) {
    std::vector<SignedWord> rhs = expand_raw(e.children()[i]);
    std::vector<SignedWord> next;
    next.reserve(acc.size() * rhs.size() * 2);
    for (const auto& a : acc) {
      for (const auto& b : rhs) {
        Word ab = a.word;
        ab.insert(ab.end(), b.word.begin(), b.word.end());
        Word ba = b.word;
        ba.insert(ba.end(), a.word.begin(), a.word.end());
        next.push_back({a.mult * b.mult, std::move(ab)});
        next.push_back({-a.mult * b.mult, std::move(ba)});
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::vector<SignedWord> assoc_expand(const BracketExpr& e) {
  std::map<Word, int> merged;
  for (auto& sw : expand_raw(e)) merged[sw.word] += sw.mult;
  std::vector<SignedWord> out;
  out.reserve(merged.size());
  for (auto& [w, m] : merged)
    if (m != 0) out.push_back({m, w});
  return out;
}

MultilinearPoly::MultilinearPoly(std::vector<Variable> vars, FieldSpec field)
    : vars_(std::move(vars)), field_(std::move(field)) {
  if (vars_.empty()) throw std::invalid_argument("MultilinearPoly: empty variable set");
  std::sort(vars_.begin(), vars_.end(),
            [](const Variable& a, const Variable& b) { return a.index < b.index; });
  for (std::size_t i = 0; i + 1 < vars_.size(); ++i) {
    if (vars_[i].index == vars_[i + 1].index)
      throw std::invalid_argument("MultilinearPoly: repeated variable index x" +
                                  std::to_string(vars_[i].index));
    if (!(vars_[i].degree.spec() == vars_[i + 1].degree.spec()))
      throw std::invalid_argument("MultilinearPoly: mixed grading among variable degrees");
  }
}

const Degree& MultilinearPoly::var_degree(int index) const {
  for (const auto& v : vars_)
    if (v.index == index) return v.degree;
  throw std::invalid_argument("var_degree: no variable x" + std::to_string(index));
}

Degree MultilinearPoly::total_degree() const {
  return degree_add(degree_sequence(vars_));
}

void MultilinearPoly::add_coord(const Word& key, const Scalar& c) {
  if (key.size() + 1 != vars_.size())
    throw std::invalid_argument("coordinate key length mismatch");
  auto it = coords_.find(key);
  if (it == coords_.end()) {
    if (!c.is_zero()) coords_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coords_.erase(it);
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& o) {
  if (!(vars_ == o.vars_))
    throw std::invalid_argument("polynomial addition across different variable contexts");
  for (const auto& [k, c] : o.coords_) add_coord(k, c);
  return *this;
}

MultilinearPoly MultilinearPoly::scaled(const Scalar& c) const {
  MultilinearPoly r(vars_, field_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : coords_) r.coords_.emplace(k, v * c);
  return r;
}

std::vector<Word> MultilinearPoly::basis_keys() const {
  Word base;
  for (std::size_t i = 0; i + 1 < vars_.size(); ++i) base.push_back(vars_[i].index);
  std::vector<Word> keys;
  std::sort(base.begin(), base.end());
  do {
    keys.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return keys;
}

Monomial MultilinearPoly::monomial_for(const Word& key) const {
  Monomial m;
  m.push_back(vars_.back());
  for (int idx : key) m.push_back({idx, var_degree(idx)});
  return m;
}

std::vector<Term> MultilinearPoly::terms() const {
  std::vector<Term> ts;
  ts.reserve(coords_.size());
  for (const auto& [k, c] : coords_)
    ts.push_back({c, BracketExpr::left_normed(monomial_for(k))});
  return ts;
}

std::string MultilinearPoly::to_string() const {
  if (coords_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : coords_) {
    std::string coeff = c.to_string();
    bool neg = coeff.size() > 1 && coeff[0] == '-' && coeff.find_first_of("+-", 1) == std::string::npos;
    if (s.empty()) {
      if (neg) {
        s += "-";
        coeff = coeff.substr(1);
      }
    } else {
      s += neg ? " - " : " + ";
      if (neg) coeff = coeff.substr(1);
    }
    if (coeff.find_first_of("+-e") != std::string::npos) coeff = "(" + coeff + ")";
    if (coeff != "1") s += coeff + "*";
    s += BracketExpr::left_normed(monomial_for(k)).to_string();
  }
  return s;
}

MultilinearPoly normalize(const std::vector<Term>& terms, const FieldSpec& field) {
  if (terms.empty()) throw std::invalid_argument("normalize: no terms");
  std::vector<Variable> vars;
  terms[0].expr.collect_variables(vars);
  MultilinearPoly poly(vars, field);
  for (const auto& t : terms) {
    if (!(t.coeff.field() == field))
      throw FieldMismatchError("normalize: term coefficient field mismatch");
    std::vector<Variable> tv;
    t.expr.collect_variables(tv);
    std::sort(tv.begin(), tv.end(),
              [](const Variable& a, const Variable& b) { return a.index < b.index; });
    if (!(tv == poly.vars()))
      throw std::invalid_argument("normalize: terms cover different variable sets");
  }
  int pivot = poly.pivot_index();
  for (const auto& t : terms) {
    for (const auto& sw : assoc_expand(t.expr)) {
      if (sw.word.front() != pivot) continue;
      Word key(sw.word.begin() + 1, sw.word.end());
      poly.add_coord(key, t.coeff * Scalar::from_int(field, sw.mult));
    }
  }
  return poly;
}

std::string family_name(GenFamily f) {
  switch (f) {
    case GenFamily::comm_pair: return "comm_pair";
    case GenFamily::triple: return "triple";
    case GenFamily::support_zero: return "support_zero";
    case GenFamily::commuting_pair: return "commuting_pair";
    case GenFamily::swap_lambda: return "swap_lambda";
    case GenFamily::pauli_deg4: return "pauli_deg4";
  }
  return "?";
}

std::pair<Scalar, Scalar> triple_coefficients(std::int64_t a, std::int64_t b, std::int64_t c,
                                              const FieldSpec& field) {
  auto s = [&](std::int64_t v) { return Scalar::from_int(field, v); };
  Scalar alpha = s(c - a) * s(b - c - a);
  Scalar beta = s(b - a) * s(c - b - a);
  return {alpha, beta};
}

namespace {

std::string degrees_str(const std::vector<Degree>& ds) {
  std::string s = "(";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) s += ",";
    s += ds[i].to_string();
  }
  return s + ")";
}

Variable make_var(int index, const Degree& d) { return {index, d}; }

}  // namespace

GeneratorInstance make_generator(const GeneratorSpec& spec, const FieldSpec& field) {
  const auto& ds = spec.degrees;
  auto need = [&](std::size_t k) {
    if (ds.size() != k)
      throw std::invalid_argument(family_name(spec.family) + " expects " + std::to_string(k) +
                                  " degrees, got " + std::to_string(ds.size()));
  };
  auto leaf = [&](int i) { return BracketExpr::var(make_var(i, ds[static_cast<std::size_t>(i - 1)])); };
  Scalar one = Scalar::one(field);
  std::string name = family_name(spec.family) + degrees_str(ds);
  switch (spec.family) {
    case GenFamily::comm_pair:
    case GenFamily::commuting_pair: {
      need(2);
      Term t{one, BracketExpr::bracket({leaf(1), leaf(2)})};
      return {normalize({t}, field), false, name};
    }
    case GenFamily::triple: {
      need(3);
      auto [alpha, beta] = triple_coefficients(ds[0].z_value(), ds[1].z_value(), ds[2].z_value(), field);
      Term t1{alpha, BracketExpr::bracket({leaf(1), leaf(2), leaf(3)})};
      Term t2{-beta, BracketExpr::bracket({leaf(1), leaf(3), leaf(2)})};
      MultilinearPoly p = normalize({t1, t2}, field);
      bool degenerate = alpha.is_zero() && beta.is_zero();
      return {std::move(p), degenerate, name};
    }
    case GenFamily::support_zero: {
      need(1);
      Term t{one, leaf(1)};
      return {normalize({t}, field), false, name};
    }
    case GenFamily::swap_lambda: {
      need(3);
      if (!spec.lambda) throw std::invalid_argument("swap_lambda requires lambda");
      Term t1{one, BracketExpr::bracket({leaf(1), leaf(3), leaf(2)})};
      Term t2{-*spec.lambda, BracketExpr::bracket({leaf(1), leaf(2), leaf(3)})};
      return {normalize({t1, t2}, field), false, name};
    }
    case GenFamily::pauli_deg4: {
      need(4);
      if (!spec.lambda) throw std::invalid_argument("pauli_deg4 requires lambda");
      Term t1{one, BracketExpr::bracket({leaf(4), leaf(1), leaf(2), leaf(3)})};
      Term t2{-*spec.lambda, BracketExpr::bracket({leaf(4), leaf(3), leaf(2), leaf(1)})};
      return {normalize({t1, t2}, field), false, name};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace grlie
