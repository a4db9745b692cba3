#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace soclelab {

using QVec = std::vector<mpq_class>;

/// Incremental reduced row-echelon span over the rationals. Rows are kept fully reduced
/// with unit pivots, so membership is a single reduction pass.
class Echelon {
 public:
  explicit Echelon(size_t ncols) : ncols_(ncols) {}

  size_t ncols() const { return ncols_; }
  size_t rank() const { return rows_.size(); }
  const std::map<size_t, QVec>& rows() const { return rows_; }

  QVec reduce(QVec v) const;
  bool member(QVec v) const;
  /// Returns true when the vector enlarged the span.
  bool insert(QVec v);

 private:
  size_t ncols_;
  std::map<size_t, QVec> rows_;  // pivot column -> row
};

/// Basis of the solution space of A x = 0, one vector per non-pivot column of A.
std::vector<QVec> kernel_basis(const std::vector<QVec>& a, size_t ncols);

}  // namespace soclelab
