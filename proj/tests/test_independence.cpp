#include <doctest.h>

#include "grlie/independence.hpp"

using namespace grlie;

TEST_CASE("graded UT(3) and UT(4) witnesses are valid Lie algebras") {
  FieldSpec Q = FieldSpec::rational();
  GradedUT H = build_H(2, 3, Q);
  H.check_structure();
  CHECK(H.dim() == 3);
  CHECK(H.component(Degree::z(2)) == std::vector<int>{0});
  CHECK(H.component(Degree::z(5)) == std::vector<int>{2});
  CHECK(H.labels[2] == "E13");
  // Colliding degrees merge: H(2,2) has a two-dimensional component.
  CHECK(build_H(2, 2, Q).component(Degree::z(2)).size() == 2);
  CHECK(build_H(0, 0, Q).component(Degree::z(0)).size() == 3);
  CHECK_THROWS_AS(build_H(3, 1, Q), std::invalid_argument);

  GradedUT L = build_L4(3, 1, 0, FieldSpec::prime(5));
  L.check_structure();
  CHECK(L.dim() == 6);
  CHECK_THROWS_AS(build_L4(1, 1, 0, Q), std::invalid_argument);
}

TEST_CASE("nilpotency classes of the witnesses") {
  FieldSpec Q = FieldSpec::rational();
  CHECK(nilpotency_class(build_H(1, 2, Q)) == 2);
  CHECK(nilpotency_class(build_L4(3, 2, 1, Q)) == 3);
}

TEST_CASE("pair independence evidence") {
  IndependenceEvidence E = check_pair_independence(1, 6, 5);
  CHECK(E.independent);
  CHECK(E.failing_witness == "x1 <- E12, x2 <- E23 -> 1*E13");
  CHECK(E.identities_checked == 30);
  CHECK(E.failures.empty());

  // Characteristic 0 needs r = s; the merged component still separates.
  IndependenceEvidence E0 = check_pair_independence(2, 2, 0);
  CHECK(E0.independent);
  CHECK(E0.identities_checked == 9);
  CHECK(check_pair_independence(0, 0, 0).identities_checked == 1);
  // Degrees may be negative; (r, s) normalizes to r <= s.
  CHECK(check_pair_independence(5, -5, 5).independent);
  IndependenceEvidence En = check_pair_independence(0, -5, 5);
  CHECK(En.independent);
  CHECK(En.identities_checked == 10);  // supp H(-5,0) = {-5,0}: 8 triples + 2 pairs

  CHECK_THROWS_AS(check_pair_independence(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_pair_independence(1, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(check_pair_independence(1, 1, 2), std::invalid_argument);
}

TEST_CASE("triple independence evidence and preconditions") {
  // (4,2,1) at p = 5 violates c = a + b mod p: the generator collapses
  // into the degree-2 family there, so the check refuses to run.
  CHECK_THROWS_AS(check_triple_independence(4, 2, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(check_triple_independence(1, 2, 3, 5), std::invalid_argument);  // not descending
  CHECK_THROWS_AS(check_triple_independence(3, 1, 0, 0), std::invalid_argument);

  IndependenceEvidence E = check_triple_independence(3, 1, 0, 5);
  CHECK(E.independent);
  CHECK(E.failures.empty());
  CHECK_FALSE(E.failing_witness.empty());
}

TEST_CASE("minimal family membership filter") {
  CHECK(minimal_filter(MinimalKind::pair, {2, 2}, 0));
  CHECK_FALSE(minimal_filter(MinimalKind::pair, {1, 2}, 0));
  CHECK(minimal_filter(MinimalKind::pair, {2, 2}, 5));
  CHECK(minimal_filter(MinimalKind::pair, {1, 6}, 5));
  CHECK_FALSE(minimal_filter(MinimalKind::pair, {6, 1}, 5));  // descending duplicates the ideal
  CHECK_FALSE(minimal_filter(MinimalKind::pair, {1, 3}, 5));

  CHECK(minimal_filter(MinimalKind::triple, {3, 1, 0}, 5));
  CHECK_FALSE(minimal_filter(MinimalKind::triple, {4, 2, 1}, 5));  // c = a + b mod 5
  CHECK_FALSE(minimal_filter(MinimalKind::triple, {3, 2, 1}, 5));  // a = b + c
  CHECK_FALSE(minimal_filter(MinimalKind::triple, {3, 1, 0}, 0));
  CHECK_THROWS_AS(minimal_filter(MinimalKind::pair, {1}, 0), std::invalid_argument);
}

TEST_CASE("sampled chain levels admit no finite basis") {
  for (int N = 0; N <= 3; ++N) {
    NoFiniteBasisEvidence E = check_no_finite_basis_level(N, 5);
    CHECK(E.level == N);
    CHECK(E.span_route);
    CHECK(E.algebra_route);
    CHECK(E.independent());
  }
  NoFiniteBasisEvidence E1 = check_no_finite_basis_level(1, 5);
  REQUIRE(E1.notes.size() == 2);
  CHECK(E1.notes[0] ==
        "target f_{1,11}: span of levels <= 1 has dimension 0 in ambient dimension 1");
  CHECK(E1.notes[1] == "separator fails the target on x1 <- E12, x2 <- E23 -> 1*E13");
  CHECK_THROWS_AS(check_no_finite_basis_level(1, 4), std::invalid_argument);
}
