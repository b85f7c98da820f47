#include <doctest.h>

#include <map>

#include "grlie/scalar.hpp"

using namespace grlie;

TEST_CASE("rational arithmetic is exact and canonical") {
  FieldSpec Q = FieldSpec::rational();
  Scalar a = Scalar::from_fraction(Q, mpq_class(2, 4));
  CHECK(a.to_string() == "1/2");
  Scalar b = Scalar::from_int(Q, 3);
  CHECK((a + b).to_string() == "7/2");
  CHECK((a * b).to_string() == "3/2");
  CHECK((b / a).to_string() == "6");
  CHECK((-b).to_string() == "-3");
  CHECK(a.pow(-2).to_string() == "4");
  CHECK(Scalar::zero(Q).is_zero());
  CHECK(Scalar::one(Q).is_one());
  CHECK_THROWS_AS(Scalar::zero(Q).inv(), std::domain_error);
}

TEST_CASE("prime fields keep residues in [0, p)") {
  FieldSpec F5 = FieldSpec::prime(5);
  CHECK(Scalar::from_int(F5, -1).residue() == 4);
  CHECK(Scalar::from_int(F5, 12).residue() == 2);
  CHECK((Scalar::from_int(F5, 2).inv()).residue() == 3);
  CHECK((Scalar::from_int(F5, 4) + Scalar::from_int(F5, 3)).residue() == 2);
  CHECK(Scalar::from_int(F5, 2).pow(4).is_one());
  // denominators must be invertible
  CHECK_THROWS_AS(Scalar::from_fraction(F5, mpq_class(1, 5)), std::exception);
}

TEST_CASE("field validation: p = 2, composite p, composite q rejected") {
  CHECK_THROWS_AS(FieldSpec::prime(2), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(9), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::cyclotomic(4), std::invalid_argument);
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(15));
}

TEST_CASE("cyclotomic arithmetic over the power basis") {
  FieldSpec C3 = FieldSpec::cyclotomic(3);
  Scalar eps = Scalar::cyclotomic_eps(C3);
  // eps^2 = -1 - eps under the q = 3 reduction
  CHECK((eps * eps).cyclotomic_coords() == std::vector<mpq_class>{-1, -1});
  CHECK((eps.pow(3)).is_one());
  CHECK((eps * eps).to_string() == "-1-e");
  // 1 + eps + eps^2 = 0
  CHECK((Scalar::one(C3) + eps + eps * eps).is_zero());
  // inverse: eps^-1 = eps^2
  CHECK(eps.inv() == eps * eps);

  FieldSpec C5 = FieldSpec::cyclotomic(5);
  Scalar e5 = Scalar::cyclotomic_eps(C5);
  Scalar sum = Scalar::one(C5);
  for (int k = 1; k <= 4; ++k) sum += e5.pow(k);
  CHECK(sum.is_zero());
  CHECK(e5.pow(5).is_one());
  CHECK(e5.pow(-2) == e5.pow(3));
}

TEST_CASE("cyclotomic_canonical folds arbitrary exponents") {
  FieldSpec C3 = FieldSpec::cyclotomic(3);
  Scalar eps = Scalar::cyclotomic_eps(C3);
  std::map<std::int64_t, mpq_class> exps{{-1, 1}};
  CHECK(cyclotomic_canonical(C3, exps) == eps * eps);
  exps = {{5, 2}, {0, 1}};  // 2*eps^5 + 1 = 2*eps^2 + 1
  CHECK(cyclotomic_canonical(C3, exps) == Scalar::one(C3) + (eps * eps) + (eps * eps));
}

TEST_CASE("roots of unity in prime fields") {
  CHECK(find_root_of_unity(7, 3) == 4);  // 4^3 = 64 = 1 mod 7, 4 != 1
  std::int64_t r = find_root_of_unity(11, 5);
  std::int64_t acc = 1;
  for (int i = 0; i < 5; ++i) acc = acc * r % 11;
  CHECK(acc == 1);
  CHECK(r != 1);
  CHECK_THROWS_AS(find_root_of_unity(5, 3), std::invalid_argument);  // 3 does not divide 4
}

TEST_CASE("scalars from different fields never mix") {
  Scalar q = Scalar::one(FieldSpec::rational());
  Scalar f = Scalar::one(FieldSpec::prime(5));
  CHECK_THROWS_AS(q + f, FieldMismatchError);
  CHECK_THROWS_AS(q * f, FieldMismatchError);
}
