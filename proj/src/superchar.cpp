#include "soclelab/superchar.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace soclelab {

namespace {

using MonomialMap = std::map<std::vector<int>, mpz_class>;

struct SsytState {
  std::vector<int> inner, outer;  // row lengths, inner padded to outer's length
  int nvars = 0;
  std::vector<std::vector<int>> fill;
  std::vector<int> content;
  MonomialMap* out = nullptr;
};

void fill_from(SsytState& st, size_t row, int col) {
  while (row < st.outer.size() && col >= st.outer[row]) {
    ++row;
    col = row < st.outer.size() ? st.inner[row] : 0;
  }
  if (row == st.outer.size()) {
    (*st.out)[st.content] += 1;
    return;
  }
  int lo = 1;
  if (col > st.inner[row]) lo = st.fill[row][static_cast<size_t>(col - 1)];
  if (row > 0 && col < st.outer[row - 1] && col >= st.inner[row - 1])
    lo = std::max(lo, st.fill[row - 1][static_cast<size_t>(col)] + 1);
  for (int v = lo; v <= st.nvars; ++v) {
    st.fill[row][static_cast<size_t>(col)] = v;
    ++st.content[static_cast<size_t>(v - 1)];
    fill_from(st, row, col + 1);
    --st.content[static_cast<size_t>(v - 1)];
  }
}

/// Monomials of the skew Schur polynomial s_{lambda/mu}(z_1..z_k), content -> multiplicity.
MonomialMap skew_schur_monomials(const Partition& lambda, const Partition& mu, int k) {
  MonomialMap out;
  if (!lambda.contains(mu)) return out;
  SsytState st;
  st.nvars = k;
  st.out = &out;
  st.outer = lambda.parts();
  for (int r = 0; r < lambda.length(); ++r) {
    st.inner.push_back(mu.part(r));
    st.fill.emplace_back(static_cast<size_t>(lambda.part(r)), 0);
  }
  st.content.assign(static_cast<size_t>(k), 0);
  if (lambda == mu) {
    out[st.content] = 1;
    return out;
  }
  if (k == 0) return out;
  fill_from(st, 0, st.inner[0]);
  return out;
}

/// Monomials of the Schur polynomial of a weakly decreasing integer sequence, allowing
/// negative entries via a power of z_1...z_k.
MonomialMap dominant_monomials(const std::vector<int>& w, int k) {
  int shift = 0;
  for (int v : w) shift = std::min(shift, v);
  std::vector<int> parts;
  for (int v : w) parts.push_back(v - shift);
  MonomialMap raw = skew_schur_monomials(Partition(parts), Partition(), k);
  if (shift == 0) return raw;
  MonomialMap out;
  for (const auto& [e, c] : raw) {
    std::vector<int> s = e;
    for (int& v : s) v += shift;
    out.emplace(std::move(s), c);
  }
  return out;
}

/// Appends each x-monomial (scaled) times each y-monomial into the output polynomial.
void add_products(SuperPoly& out, const MonomialMap& xs, const MonomialMap& ys,
                  const mpz_class& scale) {
  const size_t m = static_cast<size_t>(out.m()), n = static_cast<size_t>(out.n());
  std::vector<int> e(m + n);
  for (const auto& [ex, cx] : xs) {
    std::copy(ex.begin(), ex.end(), e.begin());
    for (const auto& [ey, cy] : ys) {
      std::copy(ey.begin(), ey.end(), e.begin() + static_cast<long>(m));
      out.add_term(e, scale * cx * cy);
    }
  }
}

}  // namespace

SuperPoly super_schur(const Partition& lambda, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative variable count");
  SuperPoly out(m, n);
  if (lambda.part(m) > n) return out;
  const Partition lc = lambda.conjugate();
  for (const auto& mu : partitions_up_to(lambda.size())) {
    if (!lambda.contains(mu) || mu.length() > m) continue;
    const MonomialMap ys = skew_schur_monomials(lc, mu.conjugate(), n);
    if (ys.empty()) continue;
    const MonomialMap xs = skew_schur_monomials(mu, Partition(), m);
    const mpz_class sign = (lambda.size() - mu.size()) % 2 == 0 ? 1 : -1;
    add_products(out, xs, ys, sign);
  }
  return out;
}

SuperPoly kac_supercharacter(const Weight& lambda, int m, int n) {
  if (lambda.m() != m || lambda.n() != n)
    throw std::invalid_argument("weight shape does not match variable counts");
  if (!is_dominant(lambda)) throw std::domain_error("non-dominant weight");
  SuperPoly out(m, n);
  add_products(out, dominant_monomials(lambda.even, m), dominant_monomials(lambda.odd, n), 1);
  std::vector<int> e(static_cast<size_t>(m + n), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      SuperPoly factor = SuperPoly::constant(m, n, 1);
      e[static_cast<size_t>(i)] = -1;
      e[static_cast<size_t>(m + j)] = 1;
      factor.add_term(e, -1);
      e[static_cast<size_t>(i)] = 0;
      e[static_cast<size_t>(m + j)] = 0;
      out = out * factor;
    }
  }
  return out;
}

bool is_supersymmetric(const SuperPoly& p) {
  if (!p.symmetric_in_x() || !p.symmetric_in_y()) return false;
  if (p.m() == 0 || p.n() == 0) return true;
  for (const auto& [d, part] : p.substitute_pair(p.m(), p.n()))
    if (d != 0) return false;
  return true;
}

SuperPoly ds_eval(const SuperPoly& p) {
  if (p.m() == 0 || p.n() == 0) throw std::domain_error("no variable pair to evaluate");
  auto by_degree = p.substitute_pair(p.m(), p.n());
  SuperPoly out(p.m() - 1, p.n() - 1);
  for (auto& [d, part] : by_degree) {
    if (d != 0) throw std::domain_error("substitution leaves terms of degree " + std::to_string(d));
    out = std::move(part);
  }
  return out;
}

SuperPoly ds_power(SuperPoly p, int k) {
  if (k < 0 || k > std::min(p.m(), p.n())) throw std::invalid_argument("bad power");
  for (int s = 0; s < k; ++s) p = ds_eval(p);
  return p;
}

bool pair_independence_check(const SuperPoly& p, int i, int j) {
  if (!is_supersymmetric(p)) throw std::domain_error("input is not supersymmetric");
  SuperPoly res(p.m() - 1, p.n() - 1);
  for (auto& [d, part] : p.substitute_pair(i, j)) {
    if (d != 0) return false;
    res = std::move(part);
  }
  return res == ds_eval(p);
}

FiltrationReport tensor_filtration_shadow(int m, int n, int degree_bound) {
  if (m < 1 || n < 1) throw std::invalid_argument("need at least one variable on each side");
  FiltrationReport rep;
  const auto shapes = partitions_up_to(degree_bound);
  for (const auto& even : shapes) {
    if (even.length() > m) continue;
    for (const auto& odd : shapes) {
      if (odd.length() > n || even.size() + odd.size() > degree_bound) continue;
      Weight w;
      w.even.assign(even.parts().begin(), even.parts().end());
      w.even.resize(static_cast<size_t>(m), 0);
      w.odd.assign(odd.parts().begin(), odd.parts().end());
      w.odd.resize(static_cast<size_t>(n), 0);
      ++rep.kac_checked;
      if (!ds_eval(kac_supercharacter(w, m, n)).zero()) rep.kac_vanishing = false;
    }
  }
  for (const auto& lambda : shapes) {
    ++rep.schur_checked;
    if (!(ds_eval(super_schur(lambda, m, n)) == super_schur(lambda, m - 1, n - 1)))
      rep.schur_stability = false;
  }
  return rep;
}

}  // namespace soclelab
