#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

namespace soclelab {

/// Laurent polynomial in two groups of variables (m of x, n of y) with exact integer
/// coefficients. Exponent vectors store the x block first.
class SuperPoly {
 public:
  SuperPoly() = default;
  SuperPoly(int m, int n) : m_(m), n_(n) {}
  static SuperPoly constant(int m, int n, const mpz_class& c);

  int m() const { return m_; }
  int n() const { return n_; }
  bool zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, const mpz_class& c);

  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly& operator*=(const mpz_class& c);
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  bool symmetric_in_x() const;
  bool symmetric_in_y() const;

  /// Substitutes x_i = y_j = t (1-based positions) and regroups by the exponent of t.
  /// The remaining variables are renumbered in order; each value is over (m-1, n-1).
  std::map<int, SuperPoly> substitute_pair(int i, int j) const;

 private:
  bool symmetric_under_swap(size_t p) const;  // adjacent positions p, p+1

  int m_ = 0, n_ = 0;
  std::map<std::vector<int>, mpz_class> terms_;
};

}  // namespace soclelab
