#pragma once

#include <map>

#include <gmpxx.h>

#include "soclelab/weights.hpp"

namespace soclelab {

enum class BasisKind { verma, kac };

/// Sorts the a-block strictly decreasing and the b-block strictly increasing in place.
/// Returns the sign of the sorting permutation, or 0 if either block has a repeated entry.
int kac_canonicalize(BarLabel& label);

/// Finitely supported vector in the Grothendieck-group model over ranks (m, n), with exact
/// rational coefficients on either standard-basis (verma) or wedge-basis (kac) labels.
class GrothVec {
 public:
  GrothVec() = default;
  GrothVec(int m, int n, BasisKind basis) : m_(m), n_(n), basis_(basis) {}

  int m() const { return m_; }
  int n() const { return n_; }
  BasisKind basis() const { return basis_; }
  bool zero() const { return terms_.empty(); }
  const std::map<BarLabel, mpq_class>& terms() const { return terms_; }

  /// Accumulates a term on an already canonical label (kac labels must be sorted).
  void add(const BarLabel& label, const mpq_class& c);
  /// Accumulates a term, canonicalizing wedge labels with the sorting sign.
  void add_wedge(BarLabel label, const mpq_class& c);

  GrothVec& operator+=(const GrothVec& o);
  GrothVec& operator-=(const GrothVec& o);
  GrothVec& operator*=(const mpq_class& c);

  friend GrothVec operator+(GrothVec x, const GrothVec& y) { return x += y; }
  friend GrothVec operator-(GrothVec x, const GrothVec& y) { return x -= y; }
  friend bool operator==(const GrothVec& x, const GrothVec& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.basis_ == y.basis_ && x.terms_ == y.terms_;
  }

 private:
  int m_ = 0, n_ = 0;
  BasisKind basis_ = BasisKind::verma;
  std::map<BarLabel, mpq_class> terms_;
};

}  // namespace soclelab
