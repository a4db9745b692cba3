#include "soclelab/groth.hpp"

#include <stdexcept>

namespace soclelab {

namespace {

// Sign of the permutation sorting `v` with the given comparison; 0 on ties.
template <typename Cmp>
int sort_sign(std::vector<int>& v, Cmp cmp) {
  int sign = 1;
  for (size_t i = 1; i < v.size(); ++i)
    for (size_t j = i; j > 0 && !cmp(v[j - 1], v[j]); --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

int kac_canonicalize(BarLabel& label) {
  int sa = sort_sign(label.a, [](int x, int y) { return x > y; });
  if (sa == 0) return 0;
  int sb = sort_sign(label.b, [](int x, int y) { return x < y; });
  return sa * sb;
}

void GrothVec::add(const BarLabel& label, const mpq_class& c) {
  if (label.m() != m_ || label.n() != n_)
    throw std::invalid_argument("GrothVec: label rank mismatch");
  if (basis_ == BasisKind::kac && !is_dominant_label(label))
    throw std::invalid_argument("GrothVec: wedge label must be sorted");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(label, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GrothVec::add_wedge(BarLabel label, const mpq_class& c) {
  if (basis_ == BasisKind::verma) {
    add(label, c);
    return;
  }
  int sign = kac_canonicalize(label);
  if (sign == 0) return;
  add(label, sign > 0 ? c : mpq_class(-c));
}

GrothVec& GrothVec::operator+=(const GrothVec& o) {
  if (m_ != o.m_ || n_ != o.n_ || basis_ != o.basis_)
    throw std::invalid_argument("GrothVec: ambient mismatch");
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

GrothVec& GrothVec::operator-=(const GrothVec& o) {
  if (m_ != o.m_ || n_ != o.n_ || basis_ != o.basis_)
    throw std::invalid_argument("GrothVec: ambient mismatch");
  for (const auto& [l, c] : o.terms_) add(l, mpq_class(-c));
  return *this;
}

GrothVec& GrothVec::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, v] : terms_) v *= c;
  return *this;
}

}  // namespace soclelab
