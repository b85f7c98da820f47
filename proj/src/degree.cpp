#include "grlie/degree.hpp"

#include <algorithm>
#include <stdexcept>

namespace grlie {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string GradingSpec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (i) s += ",";
    s += moduli[i] == 0 ? "Z" : "Z_" + std::to_string(moduli[i]);
  }
  return s + ")";
}

Degree::Degree(std::vector<std::int64_t> comps, GradingSpec spec)
    : comps_(std::move(comps)), spec_(std::move(spec)) {
  if (comps_.size() != spec_.rank())
    throw std::invalid_argument("degree rank does not match grading spec");
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (spec_.moduli[i] != 0) comps_[i] = mod_reduce(comps_[i], spec_.moduli[i]);
}

Degree Degree::z(std::int64_t n) { return Degree({n}, GradingSpec::z()); }

Degree Degree::zq(std::int64_t i, std::int64_t j, std::int64_t q) {
  if (q < 2) throw std::invalid_argument("zq modulus must be >= 2");
  return Degree({i, j}, GradingSpec::zq2(q));
}

bool Degree::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t Degree::z_value() const {
  if (spec_ != GradingSpec::z())
    throw std::invalid_argument("z_value: degree is not Z-graded");
  return comps_[0];
}

Degree Degree::operator+(const Degree& o) const {
  if (spec_ != o.spec_)
    throw std::invalid_argument("degree addition across different gradings");
  std::vector<std::int64_t> c(comps_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = comps_[i] + o.comps_[i];
  return Degree(std::move(c), spec_);
}

Degree Degree::operator-() const {
  std::vector<std::int64_t> c(comps_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -comps_[i];
  return Degree(std::move(c), spec_);
}

bool Degree::operator<(const Degree& o) const {
  if (spec_.moduli != o.spec_.moduli) return spec_.moduli < o.spec_.moduli;
  return comps_ < o.comps_;
}

std::string Degree::to_string() const {
  if (comps_.size() == 1 && spec_.moduli[0] == 0) return std::to_string(comps_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(comps_[i]);
  }
  return s + ")";
}

Degree degree_add(const std::vector<Degree>& ds) {
  if (ds.empty()) throw std::invalid_argument("degree_add: empty list");
  Degree acc = ds[0];
  for (std::size_t i = 1; i < ds.size(); ++i) acc = acc + ds[i];
  return acc;
}

std::int64_t degree_residue(const Degree& d, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("degree_residue: modulus must be >= 2");
  return mod_reduce(d.z_value(), p);
}

}  // namespace grlie
