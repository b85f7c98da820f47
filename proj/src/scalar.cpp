#include "grlie/scalar.hpp"

#include <algorithm>
#include <utility>

namespace grlie {

namespace {

constexpr std::int64_t kMaxPrime = (std::int64_t{1} << 31) - 1;

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return (a * b) % p;  // p < 2^31 keeps the product in range
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a = mod_reduce(a, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
  }
  return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) throw std::domain_error("division by zero in F_p");
  return mod_pow(a, p - 2, p);
}

// Dense polynomial over Q, coefficients low to high.
using Poly = std::vector<mpq_class>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

// Exact division with remainder: a = q * b + r, deg r < deg b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q;
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
  }
  poly_trim(q);
  return {std::move(q), std::move(a)};
}

// Coordinates over 1, eps, ..., eps^(q-2) from a coefficient-per-exponent
// table; exponents are first reduced mod q, then eps^(q-1) is eliminated
// via eps^(q-1) = -(1 + eps + ... + eps^(q-2)).
std::vector<mpq_class> reduce_eps_powers(const std::map<std::int64_t, mpq_class>& exps,
                                         std::int64_t q) {
  std::vector<mpq_class> out(static_cast<std::size_t>(q - 1), mpq_class(0));
  for (const auto& [e, c] : exps) {
    std::int64_t k = mod_reduce(e, q);
    if (k == q - 1) {
      for (auto& v : out) v -= c;
    } else {
      out[static_cast<std::size_t>(k)] += c;
    }
  }
  return out;
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::rational() { return FieldSpec(Kind::rational, 0); }

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p <= 2 || p > kMaxPrime || !is_prime(p))
    throw std::invalid_argument("prime field requires an odd prime p, got " + std::to_string(p));
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::cyclotomic(std::int64_t q) {
  if (q < 2 || !is_prime(q))
    throw std::invalid_argument("cyclotomic field requires prime q, got " + std::to_string(q));
  return FieldSpec(Kind::cyclotomic, q);
}

std::int64_t FieldSpec::characteristic() const { return kind_ == Kind::prime ? n_ : 0; }

std::int64_t FieldSpec::cyclotomic_order() const { return kind_ == Kind::cyclotomic ? n_ : 0; }

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case Kind::rational: return "Q";
    case Kind::prime: return "F_" + std::to_string(n_);
    case Kind::cyclotomic: return "Q(eps_" + std::to_string(n_) + ")";
  }
  return "?";
}

Scalar Scalar::zero(const FieldSpec& f) { return from_int(f, 0); }

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, std::int64_t n) {
  switch (f.kind()) {
    case FieldSpec::Kind::rational: return Scalar(f, mpq_class(static_cast<long>(n)));
    case FieldSpec::Kind::prime: return Scalar(f, mod_reduce(n, f.characteristic()));
    case FieldSpec::Kind::cyclotomic: {
      Cyc c;
      c.c.assign(static_cast<std::size_t>(f.cyclotomic_order() - 1), mpq_class(0));
      c.c[0] = static_cast<long>(n);
      return Scalar(f, std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::from_fraction(const FieldSpec& f, const mpq_class& q) {
  mpq_class v = q;
  v.canonicalize();
  switch (f.kind()) {
    case FieldSpec::Kind::rational: return Scalar(f, std::move(v));
    case FieldSpec::Kind::prime: {
      std::int64_t p = f.characteristic();
      mpz_class pz(static_cast<long>(p));
      std::int64_t num = mpz_class(v.get_num() % pz).get_si();
      std::int64_t den = mpz_class(v.get_den() % pz).get_si();
      if (mod_reduce(den, p) == 0)
        throw std::domain_error("fraction denominator not invertible mod " + std::to_string(p));
      return Scalar(f, mod_mul(mod_reduce(num, p), mod_inv(den, p), p));
    }
    case FieldSpec::Kind::cyclotomic: {
      Cyc c;
      c.c.assign(static_cast<std::size_t>(f.cyclotomic_order() - 1), mpq_class(0));
      c.c[0] = v;
      return Scalar(f, std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::cyclotomic_eps(const FieldSpec& f) {
  if (f.kind() != FieldSpec::Kind::cyclotomic)
    throw std::invalid_argument("cyclotomic_eps on non-cyclotomic field");
  return from_cyclotomic_coords(f, reduce_eps_powers({{1, mpq_class(1)}}, f.cyclotomic_order()));
}

Scalar Scalar::from_cyclotomic_coords(const FieldSpec& f, std::vector<mpq_class> coords) {
  if (f.kind() != FieldSpec::Kind::cyclotomic)
    throw std::invalid_argument("from_cyclotomic_coords on non-cyclotomic field");
  if (coords.size() != static_cast<std::size_t>(f.cyclotomic_order() - 1))
    throw std::invalid_argument("cyclotomic coordinate count mismatch");
  for (auto& c : coords) c.canonicalize();
  Cyc c;
  c.c = std::move(coords);
  return Scalar(f, std::move(c));
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatchError("scalar fields differ: " + field_.to_string() + " vs " +
                             o.field_.to_string());
}

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldSpec::Kind::rational: return std::get<mpq_class>(rep_) == 0;
    case FieldSpec::Kind::prime: return std::get<std::int64_t>(rep_) == 0;
    case FieldSpec::Kind::cyclotomic: {
      const auto& c = std::get<Cyc>(rep_).c;
      return std::all_of(c.begin(), c.end(), [](const mpq_class& v) { return v == 0; });
    }
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      std::get<mpq_class>(rep_) += std::get<mpq_class>(o.rep_);
      break;
    case FieldSpec::Kind::prime:
      std::get<std::int64_t>(rep_) =
          mod_reduce(std::get<std::int64_t>(rep_) + std::get<std::int64_t>(o.rep_),
                     field_.characteristic());
      break;
    case FieldSpec::Kind::cyclotomic: {
      auto& a = std::get<Cyc>(rep_).c;
      const auto& b = std::get<Cyc>(o.rep_).c;
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  *this += -o;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      std::get<mpq_class>(r.rep_) = -std::get<mpq_class>(r.rep_);
      break;
    case FieldSpec::Kind::prime:
      std::get<std::int64_t>(r.rep_) =
          mod_reduce(-std::get<std::int64_t>(r.rep_), field_.characteristic());
      break;
    case FieldSpec::Kind::cyclotomic:
      for (auto& v : std::get<Cyc>(r.rep_).c) v = -v;
      break;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      return Scalar(field_, mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
    case FieldSpec::Kind::prime:
      return Scalar(field_, mod_mul(std::get<std::int64_t>(rep_), std::get<std::int64_t>(o.rep_),
                                    field_.characteristic()));
    case FieldSpec::Kind::cyclotomic: {
      const auto& a = std::get<Cyc>(rep_).c;
      const auto& b = std::get<Cyc>(o.rep_).c;
      std::map<std::int64_t, mpq_class> acc;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
          if (b[j] == 0) continue;
          acc[static_cast<std::int64_t>(i + j)] += a[i] * b[j];
        }
      }
      Cyc c;
      c.c = reduce_eps_powers(acc, field_.cyclotomic_order());
      return Scalar(field_, std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero in " + field_.to_string());
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      return Scalar(field_, mpq_class(1 / std::get<mpq_class>(rep_)));
    case FieldSpec::Kind::prime:
      return Scalar(field_, mod_inv(std::get<std::int64_t>(rep_), field_.characteristic()));
    case FieldSpec::Kind::cyclotomic: {
      // Extended Euclid against the cyclotomic polynomial 1 + x + ... + x^(q-1):
      // u * a = gcd (a nonzero constant) mod phi, so a^(-1) = u / gcd.
      std::int64_t q = field_.cyclotomic_order();
      Poly phi(static_cast<std::size_t>(q), mpq_class(1));
      Poly a = std::get<Cyc>(rep_).c;
      poly_trim(a);
      Poly r0 = phi, r1 = a;
      Poly u0, u1 = {mpq_class(1)};
      while (!r1.empty()) {
        auto [quot, rem] = poly_divmod(r0, r1);
        Poly u2 = poly_sub(u0, poly_mul(quot, u1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
      }
      if (r0.size() != 1)
        throw std::logic_error("cyclotomic inverse: gcd not constant");
      std::map<std::int64_t, mpq_class> exps;
      for (std::size_t i = 0; i < u0.size(); ++i)
        if (u0[i] != 0) exps[static_cast<std::int64_t>(i)] = u0[i] / r0[0];
      Cyc c;
      c.c = reduce_eps_powers(exps, q);
      return Scalar(field_, std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r = one(field_);
  Scalar base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return rep_ == o.rep_;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case FieldSpec::Kind::rational: return rat_str(std::get<mpq_class>(rep_));
    case FieldSpec::Kind::prime: return std::to_string(std::get<std::int64_t>(rep_));
    case FieldSpec::Kind::cyclotomic: {
      const auto& c = std::get<Cyc>(rep_).c;
      std::string s;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        mpq_class v = c[k];
        bool neg = v < 0;
        if (neg) v = -v;
        if (s.empty()) {
          if (neg) s += "-";
        } else {
          s += neg ? "-" : "+";
        }
        std::string mag = rat_str(v);
        if (k == 0) {
          s += mag;
        } else {
          if (mag != "1") s += mag + "*";
          s += k == 1 ? "e" : "e^" + std::to_string(k);
        }
      }
      return s.empty() ? "0" : s;
    }
  }
  return "?";
}

const mpq_class& Scalar::rational_value() const {
  if (field_.kind() != FieldSpec::Kind::rational)
    throw std::invalid_argument("rational_value on " + field_.to_string());
  return std::get<mpq_class>(rep_);
}

std::int64_t Scalar::residue() const {
  if (field_.kind() != FieldSpec::Kind::prime)
    throw std::invalid_argument("residue on " + field_.to_string());
  return std::get<std::int64_t>(rep_);
}

const std::vector<mpq_class>& Scalar::cyclotomic_coords() const {
  if (field_.kind() != FieldSpec::Kind::cyclotomic)
    throw std::invalid_argument("cyclotomic_coords on " + field_.to_string());
  return std::get<Cyc>(rep_).c;
}

Scalar cyclotomic_canonical(const FieldSpec& f, const std::map<std::int64_t, mpq_class>& exps) {
  if (f.kind() != FieldSpec::Kind::cyclotomic)
    throw std::invalid_argument("cyclotomic_canonical on " + f.to_string());
  return Scalar::from_cyclotomic_coords(f, reduce_eps_powers(exps, f.cyclotomic_order()));
}

std::int64_t find_root_of_unity(std::int64_t p, std::int64_t q) {
  if (!is_prime(p) || p <= 2) throw std::invalid_argument("find_root_of_unity: p must be an odd prime");
  if (!is_prime(q)) throw std::invalid_argument("find_root_of_unity: q must be prime");
  if ((p - 1) % q != 0)
    throw std::invalid_argument("no primitive " + std::to_string(q) + "-th root of unity mod " +
                                std::to_string(p));
  for (std::int64_t a = 2; a < p; ++a) {
    std::int64_t r = mod_pow(a, (p - 1) / q, p);
    if (r != 1) return r;  // order divides the prime q and exceeds 1, hence equals q
  }
  throw std::logic_error("unreachable: F_p has a generator");
}

Scalar scalar_arith(const std::string& op, const Scalar& a, const Scalar& b) {
  if (op == "add") return a + b;
  if (op == "sub") return a - b;
  if (op == "mul") return a * b;
  if (op == "div") return a / b;
  if (op == "neg") return -a;
  if (op == "inv") return a.inv();
  throw std::invalid_argument("scalar_arith: unknown op " + op);
}

}  // namespace grlie
