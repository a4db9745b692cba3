#include "soclelab/superpoly.hpp"

#include <stdexcept>
#include <utility>

namespace soclelab {

SuperPoly SuperPoly::constant(int m, int n, const mpz_class& c) {
  SuperPoly p(m, n);
  p.add_term(std::vector<int>(static_cast<size_t>(m + n), 0), c);
  return p;
}

void SuperPoly::add_term(const std::vector<int>& exps, const mpz_class& c) {
  if (exps.size() != static_cast<size_t>(m_ + n_)) throw std::invalid_argument("exponent length");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  if (a.m_ != b.m_ || a.n_ != b.n_) throw std::invalid_argument("variable count mismatch");
  SuperPoly out(a.m_, a.n_);
  std::vector<int> e(static_cast<size_t>(a.m_ + a.n_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool SuperPoly::symmetric_under_swap(size_t p) const {
  for (const auto& [e, c] : terms_) {
    if (e[p] == e[p + 1]) continue;
    std::vector<int> s = e;
    std::swap(s[p], s[p + 1]);
    auto it = terms_.find(s);
    if (it == terms_.end() || it->second != c) return false;
  }
  return true;
}

bool SuperPoly::symmetric_in_x() const {
  for (int p = 0; p + 1 < m_; ++p)
    if (!symmetric_under_swap(static_cast<size_t>(p))) return false;
  return true;
}

bool SuperPoly::symmetric_in_y() const {
  for (int p = 0; p + 1 < n_; ++p)
    if (!symmetric_under_swap(static_cast<size_t>(m_ + p))) return false;
  return true;
}

std::map<int, SuperPoly> SuperPoly::substitute_pair(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_) throw std::out_of_range("variable index");
  std::map<int, SuperPoly> out;
  const size_t xi = static_cast<size_t>(i - 1);
  const size_t yj = static_cast<size_t>(m_ + j - 1);
  std::vector<int> rest;
  rest.reserve(static_cast<size_t>(m_ + n_ - 2));
  for (const auto& [e, c] : terms_) {
    const int d = e[xi] + e[yj];
    rest.clear();
    for (size_t k = 0; k < e.size(); ++k)
      if (k != xi && k != yj) rest.push_back(e[k]);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, SuperPoly(m_ - 1, n_ - 1)).first;
    it->second.add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace soclelab
