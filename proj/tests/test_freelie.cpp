#include <doctest.h>

#include <algorithm>

#include "grlie/freelie.hpp"

using namespace grlie;

namespace {

Variable zvar(int index, std::int64_t deg) { return Variable{index, Degree::z(deg)}; }

Monomial zmono(const std::vector<std::pair<int, std::int64_t>>& vs) {
  Monomial m;
  for (auto [i, d] : vs) m.push_back(zvar(i, d));
  return m;
}

std::map<Word, Scalar> zcoords(const std::vector<std::pair<Word, std::int64_t>>& entries,
                               const FieldSpec& f) {
  std::map<Word, Scalar> m;
  for (const auto& [w, c] : entries) m.emplace(w, Scalar::from_int(f, c));
  return m;
}

}  // namespace

TEST_CASE("assoc_expand: 2^(n-1) signed words") {
  BracketExpr e = BracketExpr::left_normed(zmono({{1, 0}, {2, 1}}));
  auto words = assoc_expand(e);
  REQUIRE(words.size() == 2);
  std::map<Word, int> got;
  for (const auto& sw : words) got[sw.word] = sw.mult;
  CHECK(got[Word{1, 2}] == 1);
  CHECK(got[Word{2, 1}] == -1);

  BracketExpr e3 = BracketExpr::left_normed(zmono({{1, 0}, {2, 1}, {3, 2}}));
  auto w3 = assoc_expand(e3);
  CHECK(w3.size() == 4);
  std::map<Word, int> got3;
  for (const auto& sw : w3) got3[sw.word] = sw.mult;
  CHECK(got3[Word{1, 2, 3}] == 1);
  CHECK(got3[Word{2, 1, 3}] == -1);
  CHECK(got3[Word{3, 1, 2}] == -1);
  CHECK(got3[Word{3, 2, 1}] == 1);
}

TEST_CASE("normalize: [x1,x2] has coordinate -1 on [x2,x1]") {
  FieldSpec Q = FieldSpec::rational();
  Term t{Scalar::one(Q), BracketExpr::left_normed(zmono({{1, 1}, {2, 2}}))};
  MultilinearPoly p = normalize({t}, Q);
  CHECK(p.coords() == zcoords({{Word{1}, -1}}, Q));
  CHECK(p.pivot_index() == 2);
  CHECK(p.total_degree() == Degree::z(3));
}

TEST_CASE("normalize: nested bracket equals its anticommutativity rewrite") {
  // [x1,[x2,x3]] = -[x2,x3,x1] = [x3,x2,x1], one unit coordinate at (2,1).
  FieldSpec Q = FieldSpec::rational();
  BracketExpr nested = BracketExpr::bracket(
      {BracketExpr::var(zvar(1, 0)), BracketExpr::left_normed(zmono({{2, 1}, {3, 2}}))});
  MultilinearPoly p = normalize({Term{Scalar::one(Q), nested}}, Q);
  CHECK(p.coords() == zcoords({{Word{2, 1}, 1}}, Q));

  Term rewrite{Scalar::one(Q), BracketExpr::left_normed(zmono({{3, 2}, {2, 1}, {1, 0}}))};
  CHECK(normalize({rewrite}, Q).coords() == p.coords());
}

TEST_CASE("normalize: bracket of two brackets") {
  FieldSpec Q = FieldSpec::rational();
  BracketExpr e = BracketExpr::bracket({BracketExpr::left_normed(zmono({{1, 0}, {2, 0}})),
                                        BracketExpr::left_normed(zmono({{3, 0}, {4, 0}}))});
  MultilinearPoly p = normalize({Term{Scalar::one(Q), e}}, Q);
  CHECK(p.coords() == zcoords({{Word{3, 1, 2}, 1}, {Word{3, 2, 1}, -1}}, Q));
}

TEST_CASE("normalize: round trip on every N_sigma basis monomial") {
  FieldSpec Q = FieldSpec::rational();
  std::vector<Variable> vars{zvar(1, -1), zvar(2, 0), zvar(3, 2), zvar(4, 1)};
  MultilinearPoly ambient(vars, Q);
  auto keys = ambient.basis_keys();
  CHECK(keys.size() == 6);
  for (const Word& key : keys) {
    Term t{Scalar::one(Q), BracketExpr::left_normed(ambient.monomial_for(key))};
    MultilinearPoly p = normalize({t}, Q);
    CHECK(p.coords() == zcoords({{key, 1}}, Q));
  }
}

TEST_CASE("normalize rejects non-multilinear input") {
  FieldSpec Q = FieldSpec::rational();
  CHECK_THROWS_AS(
      normalize({Term{Scalar::one(Q), BracketExpr::left_normed(zmono({{1, 0}, {1, 1}}))}}, Q),
      std::invalid_argument);
  Term a{Scalar::one(Q), BracketExpr::left_normed(zmono({{1, 0}, {2, 1}}))};
  Term b{Scalar::one(Q), BracketExpr::left_normed(zmono({{1, 0}, {3, 1}}))};
  CHECK_THROWS_AS(normalize({a, b}, Q), std::invalid_argument);
}

TEST_CASE("four-term bracket identity vanishes in the free Lie algebra") {
  FieldSpec Q = FieldSpec::rational();
  std::vector<std::int64_t> degs{1, 2, 3, 4};
  auto mono = [&](std::array<int, 4> idx) {
    Monomial m;
    for (int i : idx) m.push_back(zvar(i, degs[static_cast<std::size_t>(i) - 1]));
    return BracketExpr::left_normed(m);
  };
  std::vector<Term> terms;
  for (auto idx : {std::array<int, 4>{1, 2, 3, 4}, std::array<int, 4>{2, 1, 4, 3},
                   std::array<int, 4>{4, 3, 2, 1}, std::array<int, 4>{3, 4, 1, 2}})
    terms.push_back(Term{Scalar::one(Q), mono(idx)});
  CHECK(normalize(terms, Q).is_zero());
}

TEST_CASE("MultilinearPoly arithmetic") {
  FieldSpec F5 = FieldSpec::prime(5);
  std::vector<Variable> vars{zvar(1, 1), zvar(2, 1), zvar(3, 2)};
  MultilinearPoly p(vars, F5);
  p.add_coord(Word{1, 2}, Scalar::from_int(F5, 2));
  p.add_coord(Word{2, 1}, Scalar::from_int(F5, 4));
  p.add_coord(Word{1, 2}, Scalar::from_int(F5, 3));  // 2 + 3 = 0: drops
  CHECK(p.coords().size() == 1);
  MultilinearPoly q = p.scaled(Scalar::from_int(F5, 2));
  CHECK(q.coords().at(Word{2, 1}).residue() == 3);
  q += p;
  CHECK(q.coords().at(Word{2, 1}).residue() == 2);
  CHECK(normalize(q.terms(), F5).coords() == q.coords());
  CHECK(p.var_degree(3) == Degree::z(2));
  CHECK(p.n() == 3);
  CHECK_FALSE(p.is_zero());
}

TEST_CASE("triple generator at (0,1,2): exact coefficients") {
  FieldSpec Q = FieldSpec::rational();
  auto [alpha, beta] = triple_coefficients(0, 1, 2, Q);
  CHECK(alpha == Scalar::from_int(Q, -2));
  CHECK(beta == Scalar::from_int(Q, 1));
  GeneratorInstance g = make_generator(
      {GenFamily::triple, {Degree::z(0), Degree::z(1), Degree::z(2)}, std::nullopt}, Q);
  CHECK_FALSE(g.degenerate);
  CHECK(g.poly.coords() == zcoords({{Word{1, 2}, 3}, {Word{2, 1}, -2}}, Q));
  CHECK(g.name == "triple(0,1,2)");
}

TEST_CASE("triple degeneracy depends on the field") {
  // (0,3,0): alpha = 0, beta = -9; zero only in characteristic 3.
  std::vector<Degree> ds{Degree::z(0), Degree::z(3), Degree::z(0)};
  CHECK_FALSE(make_generator({GenFamily::triple, ds, std::nullopt}, FieldSpec::rational())
                  .degenerate);
  GeneratorInstance g3 = make_generator({GenFamily::triple, ds, std::nullopt}, FieldSpec::prime(3));
  CHECK(g3.degenerate);
  CHECK(g3.poly.is_zero());
  // (1,1,1) is degenerate in every field.
  CHECK(make_generator({GenFamily::triple,
                        {Degree::z(1), Degree::z(1), Degree::z(1)},
                        std::nullopt},
                       FieldSpec::rational())
            .degenerate);
}

TEST_CASE("pair, swap and degree-4 generator shapes") {
  FieldSpec Q = FieldSpec::rational();
  GeneratorInstance pair =
      make_generator({GenFamily::comm_pair, {Degree::z(1), Degree::z(1)}, std::nullopt}, Q);
  CHECK(pair.poly.coords() == zcoords({{Word{1}, -1}}, Q));

  // swap_lambda(g,h,k) = [x1,x3,x2] - lambda*[x1,x2,x3]
  GeneratorInstance swap = make_generator({GenFamily::swap_lambda,
                                           {Degree::z(0), Degree::z(1), Degree::z(2)},
                                           Scalar::from_int(Q, 2)},
                                          Q);
  CHECK(swap.poly.coords() == zcoords({{Word{1, 2}, 1}, {Word{2, 1}, -2}}, Q));
  CHECK_THROWS_AS(make_generator({GenFamily::swap_lambda,
                                  {Degree::z(0), Degree::z(1), Degree::z(2)},
                                  std::nullopt},
                                 Q),
                  std::invalid_argument);

  GeneratorInstance sz =
      make_generator({GenFamily::support_zero, {Degree::z(-2)}, std::nullopt}, Q);
  CHECK(sz.poly.n() == 1);
  CHECK(sz.poly.coords() == zcoords({{Word{}, 1}}, Q));

  // pauli_deg4 = [x4,x1,x2,x3] - lambda*[x4,x3,x2,x1]; both monomials are
  // already pivot-initial, so each is one basis coordinate.
  GeneratorInstance p4 = make_generator(
      {GenFamily::pauli_deg4,
       {Degree::zq(1, 0, 2), Degree::zq(0, 1, 2), Degree::zq(1, 1, 2), Degree::zq(0, 1, 2)},
       Scalar::from_int(Q, -1)},
      Q);
  CHECK(p4.poly.n() == 4);
  CHECK(p4.poly.pivot_index() == 4);
  CHECK(p4.poly.coords().size() == 2);
  CHECK(p4.poly.coords().at(Word{1, 2, 3}) == Scalar::one(Q));
  CHECK(p4.poly.coords().at(Word{3, 2, 1}) == Scalar::one(Q));
}

TEST_CASE("bracket expression plumbing") {
  BracketExpr e = BracketExpr::left_normed(zmono({{2, 1}, {1, 0}, {3, 2}}));
  CHECK(e.leaf_count() == 3);
  CHECK_FALSE(e.is_var());
  std::vector<Variable> vs;
  e.collect_variables(vs);
  REQUIRE(vs.size() == 3);
  CHECK(vs[0].index == 2);
  CHECK(degree_sequence(zmono({{2, 1}, {1, 0}}))[0] == Degree::z(1));
  CHECK(family_name(GenFamily::comm_pair) == "comm_pair");
  CHECK(family_name(GenFamily::pauli_deg4) == "pauli_deg4");
}
