#include "soclelab/linalg.hpp"

#include <stdexcept>

namespace soclelab {

QVec Echelon::reduce(QVec v) const {
  if (v.size() != ncols_) throw std::invalid_argument("Echelon: length mismatch");
  for (const auto& [p, row] : rows_) {
    if (v[p] == 0) continue;
    mpq_class c = v[p];
    for (size_t j = p; j < ncols_; ++j)
      if (row[j] != 0) v[j] -= c * row[j];
  }
  return v;
}

bool Echelon::member(QVec v) const {
  v = reduce(std::move(v));
  for (const mpq_class& x : v)
    if (x != 0) return false;
  return true;
}

bool Echelon::insert(QVec v) {
  v = reduce(std::move(v));
  size_t p = ncols_;
  for (size_t j = 0; j < ncols_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p == ncols_) return false;
  mpq_class lead = v[p];
  for (size_t j = p; j < ncols_; ++j)
    if (v[j] != 0) v[j] /= lead;
  for (auto& [pp, row] : rows_) {
    if (row[p] == 0) continue;
    mpq_class c = row[p];
    for (size_t j = p; j < ncols_; ++j)
      if (v[j] != 0) row[j] -= c * v[j];
  }
  rows_.emplace(p, std::move(v));
  return true;
}

std::vector<QVec> kernel_basis(const std::vector<QVec>& a, size_t ncols) {
  Echelon ech(ncols);
  for (const QVec& row : a) ech.insert(row);
  std::vector<QVec> out;
  for (size_t f = 0; f < ncols; ++f) {
    if (ech.rows().count(f)) continue;
    QVec x(ncols, 0);
    x[f] = 1;
    for (const auto& [p, row] : ech.rows()) x[p] = -row[f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace soclelab
