#include <doctest.h>

#include <algorithm>
#include <random>

#include "grlie/rowspace.hpp"

using namespace grlie;

namespace {

std::vector<Scalar> vec(const FieldSpec& f, const std::vector<std::int64_t>& e) {
  std::vector<Scalar> v;
  for (auto x : e) v.push_back(Scalar::from_int(f, x));
  return v;
}

}  // namespace

TEST_CASE("insert, rank and pivots") {
  FieldSpec Q = FieldSpec::rational();
  RowSpace S(Q, 4);
  CHECK(S.insert(vec(Q, {0, 2, 4, 0})));
  CHECK(S.insert(vec(Q, {1, 1, 1, 1})));
  CHECK_FALSE(S.insert(vec(Q, {2, 4, 6, 2})));  // sum of the two
  CHECK_FALSE(S.insert(vec(Q, {0, 0, 0, 0})));
  CHECK(S.rank() == 2);
  CHECK(S.pivots() == std::vector<std::size_t>{0, 1});
  // RREF: leading entries 1, pivot columns cleared elsewhere.
  CHECK(S.rows()[0] == vec(Q, {1, 0, -1, 1}));
  CHECK(S.rows()[1] == vec(Q, {0, 1, 2, 0}));
}

TEST_CASE("canonical form is insertion-order independent") {
  FieldSpec Q = FieldSpec::rational();
  std::vector<std::vector<std::int64_t>> gens{
      {1, 2, 3, 4, 5}, {0, 1, 0, 2, 0}, {1, 3, 3, 6, 5}, {2, 0, 1, 0, 0}};
  std::mt19937 rng(7);
  RowSpace ref(Q, 5);
  for (const auto& g : gens) ref.insert(vec(Q, g));
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    RowSpace S(Q, 5);
    for (const auto& g : gens) S.insert(vec(Q, g));
    CHECK(S == ref);
  }
}

TEST_CASE("reduce and contains") {
  FieldSpec Q = FieldSpec::rational();
  RowSpace S(Q, 3);
  S.insert(vec(Q, {1, 0, 2}));
  S.insert(vec(Q, {0, 1, -1}));
  CHECK(S.contains(vec(Q, {3, 2, 4})));
  CHECK_FALSE(S.contains(vec(Q, {0, 0, 1})));
  CHECK(S.reduce(vec(Q, {5, 5, 5})) == vec(Q, {0, 0, 0}));  // 5*r1 + 5*r2
  CHECK(S.reduce(vec(Q, {5, 5, 6})) == vec(Q, {0, 0, 1}));
}

TEST_CASE("member vectors reconstruct from pivot coordinates") {
  // For v in the space, v = sum_i v[pivot_i] * row_i: RREF rows have unit
  // pivots and zero entries under every other pivot column.
  FieldSpec Q = FieldSpec::rational();
  RowSpace S(Q, 4);
  S.insert(vec(Q, {2, 4, 0, 6}));
  S.insert(vec(Q, {0, 0, 3, 3}));
  std::vector<Scalar> v = vec(Q, {1, 2, 6, 9});  // (1/2)*g1 + 2*g2
  REQUIRE(S.contains(v));
  std::vector<Scalar> rebuilt(4, Scalar::zero(Q));
  for (std::size_t i = 0; i < S.rank(); ++i)
    for (std::size_t j = 0; j < 4; ++j) rebuilt[j] += v[S.pivots()[i]] * S.rows()[i][j];
  CHECK(rebuilt == v);
}

TEST_CASE("row spaces over a prime field") {
  FieldSpec F3 = FieldSpec::prime(3);
  RowSpace S(F3, 3);
  CHECK(S.insert(vec(F3, {2, 1, 0})));
  CHECK_FALSE(S.insert(vec(F3, {1, 2, 0})));  // = 2 * first row mod 3
  CHECK(S.insert(vec(F3, {0, 0, 1})));
  CHECK(S.rank() == 2);
  CHECK(S.rows()[0] == vec(F3, {1, 2, 0}));
  // Width mismatch is a usage error.
  CHECK_THROWS_AS(S.insert(vec(F3, {1, 0})), std::invalid_argument);
  // Field mismatch is detected.
  CHECK_THROWS_AS(S.insert(vec(FieldSpec::rational(), {1, 0, 0})), FieldMismatchError);
}
