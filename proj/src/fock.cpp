#include "soclelab/fock.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace soclelab {

namespace {

int perm_sign(const std::vector<int>& p) {
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

void check_perm(const std::vector<int>& p, size_t len) {
  if (p.size() != len) throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(len, false);
  for (int v : p) {
    if (v < 0 || static_cast<size_t>(v) >= len || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
}

}  // namespace

PermPair PermPair::identity(int m, int n) {
  PermPair s;
  s.even.resize(static_cast<size_t>(m));
  s.odd.resize(static_cast<size_t>(n));
  for (int i = 0; i < m; ++i) s.even[static_cast<size_t>(i)] = i;
  for (int j = 0; j < n; ++j) s.odd[static_cast<size_t>(j)] = j;
  return s;
}

int PermPair::sign() const { return perm_sign(even) * perm_sign(odd); }

GrothVec apply_e(int i, const GrothVec& v) {
  GrothVec out(v.m(), v.n(), v.basis());
  for (const auto& [l, c] : v.terms()) {
    for (size_t p = 0; p < l.a.size(); ++p)
      if (l.a[p] == i + 1) {
        BarLabel t = l;
        t.a[p] = i;
        out.add_wedge(std::move(t), c);
      }
    for (size_t q = 0; q < l.b.size(); ++q)
      if (l.b[q] == i) {
        BarLabel t = l;
        t.b[q] = i + 1;
        out.add_wedge(std::move(t), mpq_class(-c));
      }
  }
  return out;
}

GrothVec apply_f(int i, const GrothVec& v) {
  GrothVec out(v.m(), v.n(), v.basis());
  for (const auto& [l, c] : v.terms()) {
    for (size_t p = 0; p < l.a.size(); ++p)
      if (l.a[p] == i) {
        BarLabel t = l;
        t.a[p] = i + 1;
        out.add_wedge(std::move(t), c);
      }
    for (size_t q = 0; q < l.b.size(); ++q)
      if (l.b[q] == i + 1) {
        BarLabel t = l;
        t.b[q] = i;
        out.add_wedge(std::move(t), mpq_class(-c));
      }
  }
  return out;
}

int weight_h(int i, const BarLabel& label) {
  int out = 0;
  for (int v : label.a) out += (v == i) - (v == i + 1);
  for (int v : label.b) out += (v == i + 1) - (v == i);
  return out;
}

GrothVec sym_act(const PermPair& s, const GrothVec& v) {
  if (v.basis() != BasisKind::verma)
    throw std::invalid_argument("sym_act: standard-basis vectors only");
  check_perm(s.even, static_cast<size_t>(v.m()));
  check_perm(s.odd, static_cast<size_t>(v.n()));
  GrothVec out(v.m(), v.n(), BasisKind::verma);
  for (const auto& [l, c] : v.terms()) {
    BarLabel t = l;
    for (size_t p = 0; p < l.a.size(); ++p) t.a[static_cast<size_t>(s.even[p])] = l.a[p];
    for (size_t q = 0; q < l.b.size(); ++q) t.b[static_cast<size_t>(s.odd[q])] = l.b[q];
    out.add(t, c);
  }
  return out;
}

GrothVec iota_kac(const GrothVec& v) {
  if (v.basis() != BasisKind::kac)
    throw std::invalid_argument("iota_kac: wedge-basis vectors only");
  GrothVec out(v.m(), v.n(), BasisKind::verma);
  std::vector<int> pe(static_cast<size_t>(v.m())), po(static_cast<size_t>(v.n()));
  for (const auto& [l, c] : v.terms()) {
    std::iota(pe.begin(), pe.end(), 0);
    do {
      std::iota(po.begin(), po.end(), 0);
      do {
        PermPair s{pe, po};
        BarLabel t = l;
        for (size_t p = 0; p < l.a.size(); ++p) t.a[static_cast<size_t>(pe[p])] = l.a[p];
        for (size_t q = 0; q < l.b.size(); ++q) t.b[static_cast<size_t>(po[q])] = l.b[q];
        out.add(t, s.sign() > 0 ? c : mpq_class(-c));
      } while (std::next_permutation(po.begin(), po.end()));
    } while (std::next_permutation(pe.begin(), pe.end()));
  }
  return out;
}

GrothVec contraction(int i, int j, const GrothVec& v) {
  if (v.basis() != BasisKind::verma)
    throw std::invalid_argument("contraction: standard-basis vectors only");
  if (i < 1 || i > v.m() || j < 1 || j > v.n())
    throw std::invalid_argument("contraction: position out of range");
  GrothVec out(v.m() - 1, v.n() - 1, BasisKind::verma);
  for (const auto& [l, c] : v.terms()) {
    if (l.a[static_cast<size_t>(i - 1)] != l.b[static_cast<size_t>(j - 1)]) continue;
    BarLabel t = l;
    t.a.erase(t.a.begin() + (i - 1));
    t.b.erase(t.b.begin() + (j - 1));
    out.add(t, c);
  }
  return out;
}

std::set<int> annihilator_support(const BarLabel& label) {
  std::set<int> out;
  GrothVec v(label.m(), label.n(), BasisKind::verma);
  v.add(label, 1);
  std::vector<int> entries = label.a;
  entries.insert(entries.end(), label.b.begin(), label.b.end());
  for (int e : entries) {
    for (int i : {e - 1, e}) {
      if (out.count(i)) continue;
      if (!apply_e(i, v).zero() || !apply_f(i, v).zero()) out.insert(i);
    }
  }
  return out;
}

}  // namespace soclelab
