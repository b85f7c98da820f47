#include <doctest.h>

#include "grlie/algebras.hpp"

using namespace grlie;

namespace {

Monomial witt_monomial(const std::vector<std::int64_t>& degs) {
  Monomial m;
  int idx = 1;
  for (auto d : degs) m.push_back(Variable{idx++, Degree::z(d)});
  return m;
}

}  // namespace

TEST_CASE("u1 structure coefficients") {
  ThinAlgebra A = make_u1(FieldSpec::rational());
  CHECK(A.c(Degree::z(2), Degree::z(3)) == Scalar::from_int(A.field, 1));
  CHECK(A.c(Degree::z(3), Degree::z(2)) == Scalar::from_int(A.field, -1));
  CHECK(A.c(Degree::z(4), Degree::z(4)).is_zero());
  CHECK(A.in_support(Degree::z(-100)));

  EvalResult r = eval_degrees_thin({Degree::z(1), Degree::z(2), Degree::z(1)}, A);
  CHECK(r.value == Scalar::from_int(A.field, -2));
  CHECK(r.degree == Degree::z(4));
}

TEST_CASE("w1 support cutoff") {
  ThinAlgebra A = make_w1(FieldSpec::rational());
  CHECK(A.in_support(Degree::z(-1)));
  CHECK_FALSE(A.in_support(Degree::z(-2)));
  // Both convention cases: an argument below the cutoff, and a sum below it.
  CHECK(A.c(Degree::z(-2), Degree::z(1)).is_zero());
  CHECK(A.c(Degree::z(-1), Degree::z(-1)).is_zero());
  EvalResult r = eval_degrees_thin({Degree::z(-2), Degree::z(3)}, A);
  CHECK(r.value.is_zero());
  // u1 has no such cutoff at the same degrees.
  ThinAlgebra U = make_u1(FieldSpec::rational());
  CHECK_FALSE(eval_degrees_thin({Degree::z(-2), Degree::z(3)}, U).value.is_zero());
}

TEST_CASE("pauli thin coefficients over the cyclotomic field") {
  FieldSpec C3 = FieldSpec::cyclotomic(3);
  ThinAlgebra A = make_pauli(3, C3);
  Scalar eps = Scalar::cyclotomic_eps(C3);
  CHECK(A.c(Degree::zq(1, 0, 3), Degree::zq(0, 1, 3)) == Scalar::from_int(C3, 2) + eps);
  // Equal degrees commute: eps^{-rj} = eps^{-is}.
  CHECK(A.c(Degree::zq(1, 1, 3), Degree::zq(1, 1, 3)).is_zero());
  CHECK(A.c(Degree::zq(1, 1, 3), Degree::zq(2, 2, 3)).is_zero());
  // Component (0,0) is zero, both as an argument and as a target.
  CHECK_FALSE(A.in_support(Degree::zq(0, 0, 3)));
  CHECK(A.c(Degree::zq(1, 0, 3), Degree::zq(2, 0, 3)).is_zero());
}

TEST_CASE("pauli field validation") {
  CHECK_THROWS_AS(make_pauli(3, FieldSpec::rational()), std::invalid_argument);
  CHECK_THROWS_AS(make_pauli(3, FieldSpec::prime(5)), std::invalid_argument);  // 3 does not divide 4
  CHECK_THROWS_AS(make_pauli(4, FieldSpec::cyclotomic(5)), std::invalid_argument);
  CHECK_NOTHROW(make_pauli(2, FieldSpec::rational()));
  CHECK_NOTHROW(make_pauli(3, FieldSpec::prime(7)));
  CHECK_NOTHROW(make_pauli(5, FieldSpec::prime(11)));
}

TEST_CASE("pauli over F_7 uses a cube root of unity") {
  ThinAlgebra A = make_pauli(3, FieldSpec::prime(7));
  // find_root_of_unity(7, 3) = 4: c((1,0),(0,1)) = 1 - eps^{-1} = 1 - 2 = 6.
  CHECK(A.c(Degree::zq(1, 0, 3), Degree::zq(0, 1, 3)).residue() == 6);
  CHECK(A.c(Degree::zq(0, 1, 3), Degree::zq(1, 0, 3)).residue() == 1);
}

TEST_CASE("matrix oracle agrees with the thin pauli table") {
  for (std::int64_t q : {2, 3}) {
    FieldSpec f = q == 2 ? FieldSpec::rational() : FieldSpec::cyclotomic(q);
    ThinAlgebra thin = make_pauli(q, f);
    StructureAlgebra oracle = build_pauli_matrix_oracle(q, f);
    oracle.check_structure();
    CHECK(oracle.dim() == static_cast<int>(q * q - 1));
    for (int bi = 0; bi < oracle.dim(); ++bi) {
      for (int bj = 0; bj < oracle.dim(); ++bj) {
        Degree g = oracle.degrees[static_cast<std::size_t>(bi)];
        Degree h = oracle.degrees[static_cast<std::size_t>(bj)];
        Scalar c = thin.c(g, h);
        const auto& entry = oracle.table[static_cast<std::size_t>(bi)][static_cast<std::size_t>(bj)];
        if (c.is_zero()) {
          CHECK(entry.empty());
        } else {
          REQUIRE(entry.size() == 1);
          int target = entry.begin()->first;
          CHECK(oracle.degrees[static_cast<std::size_t>(target)] == (g + h));
          CHECK(entry.begin()->second == c);
        }
      }
    }
  }
}

TEST_CASE("dual evaluation routes agree on a fixed polynomial") {
  FieldSpec Q = FieldSpec::rational();
  ThinAlgebra A = make_u1(Q);
  Term t1{Scalar::from_fraction(Q, mpq_class(3, 2)),
          BracketExpr::left_normed(witt_monomial({1, 2, -1}))};
  Term t2{Scalar::from_int(Q, -4),
          BracketExpr::bracket({BracketExpr::var(Variable{3, Degree::z(-1)}),
                                BracketExpr::left_normed(witt_monomial({1, 2}))})};
  MultilinearPoly p = normalize({t1, t2}, Q);
  Scalar direct = Scalar::zero(Q);
  for (const Term& t : {t1, t2}) direct += t.coeff * eval_tree_thin(t.expr, A).value;
  CHECK(eval_poly_thin(p, A) == direct);
  CHECK_FALSE(is_identity(p, A));
}

TEST_CASE("eval_poly_thin recognizes a known identity") {
  // [x1^2, x2^2] never vanishes, but [[x1^1,x2^1],[x3^1,x4^1]] does at equal degrees.
  FieldSpec Q = FieldSpec::rational();
  ThinAlgebra A = make_u1(Q);
  MultilinearPoly comm = normalize(
      {Term{Scalar::one(Q), BracketExpr::left_normed(witt_monomial({2, 2}))}}, Q);
  CHECK(is_identity(comm, A));
  MultilinearPoly noncomm = normalize(
      {Term{Scalar::one(Q), BracketExpr::left_normed(witt_monomial({2, 3}))}}, Q);
  CHECK_FALSE(is_identity(noncomm, A));
}

TEST_CASE("identity check against the structure algebra, with witness") {
  FieldSpec C3 = FieldSpec::cyclotomic(3);
  StructureAlgebra oracle = build_pauli_matrix_oracle(3, C3);
  auto pair_poly = [&](Degree g, Degree h) {
    Monomial m{Variable{1, g}, Variable{2, h}};
    return normalize({Term{Scalar::one(C3), BracketExpr::left_normed(m)}}, C3);
  };
  // (1,1) and (2,2) commute in sl_3; (1,0) and (0,1) do not.
  CHECK(is_identity(pair_poly(Degree::zq(1, 1, 3), Degree::zq(2, 2, 3)), oracle));
  auto witness = find_counterexample(pair_poly(Degree::zq(1, 0, 3), Degree::zq(0, 1, 3)), oracle);
  REQUIRE(witness.has_value());
  REQUIRE(witness->assignment.size() == 2);
  CHECK(witness->assignment[0] == "x1 <- A^1B^0");
  CHECK(witness->assignment[1] == "x2 <- A^0B^1");
  CHECK(witness->value == "2+e*A^1B^1");
}

TEST_CASE("swap lambda derivation") {
  FieldSpec C3 = FieldSpec::cyclotomic(3);
  ThinAlgebra A = make_pauli(3, C3);
  // Reference [x1,x2,x3] at ((1,0),(0,1),(1,1)) hits c((1,1),(1,1)) = 0.
  CHECK_FALSE(derive_swap_lambda(Degree::zq(1, 0, 3), Degree::zq(0, 1, 3), Degree::zq(1, 1, 3), A)
                  .has_value());
  // u1 at (0,1,2): eval [x1,x3,x2] / eval [x1,x2,x3] = (2*(-1)) / (1*1) = -2.
  ThinAlgebra U = make_u1(FieldSpec::rational());
  auto lam = derive_swap_lambda(Degree::z(0), Degree::z(1), Degree::z(2), U);
  REQUIRE(lam.has_value());
  CHECK(*lam == Scalar::from_int(U.field, -2));
}

TEST_CASE("degree-4 pauli lambda: thin and matrix routes") {
  FieldSpec Q = FieldSpec::rational();
  ThinAlgebra A2 = make_pauli(2, Q);
  StructureAlgebra O2 = build_pauli_matrix_oracle(2, Q);
  std::array<Degree, 4> g2{Degree::zq(1, 0, 2), Degree::zq(0, 1, 2), Degree::zq(1, 1, 2),
                           Degree::zq(0, 1, 2)};
  auto thin = derive_pauli_lambda(g2, A2);
  auto structural = derive_pauli_lambda_structure(g2, O2);
  REQUIRE(thin.has_value());
  REQUIRE(structural.has_value());
  CHECK(*thin == Scalar::from_int(Q, -1));
  CHECK(*thin == *structural);

  // Both monomials vanish at this q = 3 tuple; both routes must say so.
  FieldSpec C3 = FieldSpec::cyclotomic(3);
  ThinAlgebra A3 = make_pauli(3, C3);
  StructureAlgebra O3 = build_pauli_matrix_oracle(3, C3);
  std::array<Degree, 4> g3{Degree::zq(1, 0, 3), Degree::zq(0, 1, 3), Degree::zq(1, 1, 3),
                           Degree::zq(1, 0, 3)};
  CHECK_FALSE(derive_pauli_lambda(g3, A3).has_value());
  CHECK_FALSE(derive_pauli_lambda_structure(g3, O3).has_value());
}

TEST_CASE("make_thin dispatcher") {
  CHECK(make_thin("u1", FieldSpec::prime(5)).name == "u1");
  CHECK(make_thin("w1", FieldSpec::rational()).name == "w1");
  CHECK(make_thin("pauli", FieldSpec::rational(), 2).name == "pauli_2");
  CHECK_THROWS_AS(make_thin("nosuch", FieldSpec::rational()), std::invalid_argument);
}
