#pragma once
// Independence of the basis identities via graded counterexample algebras.
//
// A generator is independent of the others when some graded algebra
// satisfies all the others but fails it. The witnesses are gradings of
// strictly upper triangular matrices: UT(3) for the degree-2 family and
// UT(4) for the degree-3 family. Both supports are finite, so "satisfies
// all the others" is an exhaustive check over the support.

#include <cstdint>
#include <string>
#include <vector>

#include "grlie/algebras.hpp"
#include "grlie/tideal.hpp"

namespace grlie {

/// Strictly upper triangular matrix algebra with an assigned Z-degree map.
using GradedUT = StructureAlgebra;

/// UT(3) graded by deg E12 = r, deg E23 = s, deg E13 = r + s; requires
/// r <= s. Colliding degrees merge into higher-dimensional components
/// (r = s = 0 gives one 3-dim component, r = s != 0 one 2-dim component).
GradedUT build_H(std::int64_t r, std::int64_t s, const FieldSpec& field);

/// UT(4) graded by deg E12 = a, E23 = b, E34 = c, E13 = a+b, E24 = b+c,
/// E14 = a+b+c; requires a > b > c.
GradedUT build_L4(std::int64_t a, std::int64_t b, std::int64_t c, const FieldSpec& field);

/// Largest k with nonzero k-th term of the lower central series.
int nilpotency_class(const StructureAlgebra& A);

struct IndependenceEvidence {
  bool independent = false;
  /// Substitution on which the counterexample algebra fails the target.
  std::string failing_witness;
  /// Instances of the other generators verified to hold on the algebra.
  std::size_t identities_checked = 0;
  std::vector<std::string> failures;

  std::string to_string() const;
};

/// The pair generator [x1^r, x2^s] is not a consequence of the triple
/// family plus all other congruent pairs: H = build_H fails it and
/// satisfies every other instance with degrees inside supp H.
/// Requires r = s when p = 0, p | r - s when p > 0; (r, s) is normalized
/// to r <= s (the swapped generator spans the same ideal).
IndependenceEvidence check_pair_independence(std::int64_t r, std::int64_t s, std::int64_t p);

/// The triple generator at a > b > c is not a consequence of the pair
/// family plus all other descending-triple monomial pairs (char p only).
/// Preconditions (violations throw): a > b > c and, mod p, a, b, c pairwise
/// distinct with a != b + c, b != a + c, c != a + b. When any of the six
/// coincidences holds the generator degenerates into a pair-family
/// consequence, so independence is the wrong question to ask.
IndependenceEvidence check_triple_independence(std::int64_t a, std::int64_t b, std::int64_t c,
                                               std::int64_t p);

enum class MinimalKind { pair, triple };

/// Membership in the stated minimal generating family:
///   pair (a, b): char 0: a = b; char p: b - a >= 0 and p | b - a
///   (b = a included: nothing else generates [x1^a, x2^a]).
///   triple (a, b, c): char p: a > b > c plus the six incongruences above;
///   char 0: false (the minimal triple family is stated for char p).
bool minimal_filter(MinimalKind kind, const std::vector<std::int64_t>& params, std::int64_t p);

/// Evidence that the sampled chain f_{1, 1+pk} admits no finite basis:
/// the level-(N+1) generator is separated from levels 0..N both
/// syntactically (not in their consequence span inside its own P_2) and
/// semantically (a graded UT(3) satisfies levels <= N but fails it).
struct NoFiniteBasisEvidence {
  int level = 0;
  bool span_route = false;
  bool algebra_route = false;
  std::vector<std::string> notes;

  bool independent() const { return span_route && algebra_route; }
  std::string to_string() const;
};

NoFiniteBasisEvidence check_no_finite_basis_level(int N, std::int64_t p);

}  // namespace grlie
