#include "grlie/rowspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace grlie {

RowSpace::RowSpace(FieldSpec field, std::size_t width) : field_(field), width_(width) {}

std::vector<Scalar> RowSpace::reduce(std::vector<Scalar> v) const {
  if (v.size() != width_) throw std::invalid_argument("RowSpace: vector width mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& f = v[pivots_[i]];
    if (f.is_zero()) continue;
    Scalar c = f;  // copy before v is written through the pivot column
    for (std::size_t k = pivots_[i]; k < width_; ++k)
      if (!rows_[i][k].is_zero()) v[k] -= c * rows_[i][k];
  }
  return v;
}

bool RowSpace::contains(const std::vector<Scalar>& v) const {
  std::vector<Scalar> r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool RowSpace::insert(std::vector<Scalar> v) {
  v = reduce(std::move(v));
  std::size_t lead = width_;
  for (std::size_t k = 0; k < width_; ++k)
    if (!v[k].is_zero()) {
      lead = k;
      break;
    }
  if (lead == width_) return false;
  Scalar inv = v[lead].inv();
  for (std::size_t k = lead; k < width_; ++k)
    if (!v[k].is_zero()) v[k] = v[k] * inv;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar f = rows_[i][lead];
    if (f.is_zero()) continue;
    for (std::size_t k = lead; k < width_; ++k)
      if (!v[k].is_zero()) rows_[i][k] -= f * v[k];
  }
  std::size_t pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin());
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  return true;
}

bool RowSpace::operator==(const RowSpace& other) const {
  if (width_ != other.width_ || rows_.size() != other.rows_.size()) return false;
  if (pivots_ != other.pivots_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t k = 0; k < width_; ++k)
      if (!(rows_[i][k] == other.rows_[i][k])) return false;
  return true;
}

}  // namespace grlie
