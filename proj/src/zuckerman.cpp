#include "soclelab/zuckerman.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace soclelab {

Weight dot_action(const PermPair& s, const Weight& lambda) {
  BarLabel l = bar(lambda);
  if (s.even.size() != l.a.size() || s.odd.size() != l.b.size())
    throw std::invalid_argument("dot_action: permutation rank mismatch");
  BarLabel t = l;
  for (size_t p = 0; p < l.a.size(); ++p) t.a[static_cast<size_t>(s.even[p])] = l.a[p];
  for (size_t q = 0; q < l.b.size(); ++q) t.b[static_cast<size_t>(s.odd[q])] = l.b[q];
  return unbar(t);
}

GrothVec dot_antisymmetrize(const GrothVec& v) {
  if (v.basis() != BasisKind::verma)
    throw std::invalid_argument("dot_antisymmetrize: standard-basis vectors only");
  GrothVec out(v.m(), v.n(), BasisKind::verma);
  std::vector<int> pe(static_cast<size_t>(v.m())), po(static_cast<size_t>(v.n()));
  for (const auto& [l, c] : v.terms()) {
    bool repeat = false;  // such labels cancel pairwise
    for (size_t p = 1; !repeat && p < l.a.size(); ++p)
      repeat = std::find(l.a.begin(), l.a.begin() + static_cast<long>(p), l.a[p]) !=
               l.a.begin() + static_cast<long>(p);
    for (size_t q = 1; !repeat && q < l.b.size(); ++q)
      repeat = std::find(l.b.begin(), l.b.begin() + static_cast<long>(q), l.b[q]) !=
               l.b.begin() + static_cast<long>(q);
    if (repeat) continue;

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

GrothVec wedge_projector(const GrothVec& v) {
  GrothVec out = dot_antisymmetrize(v);
  mpz_class fm, fn;
  mpz_fac_ui(fm.get_mpz_t(), static_cast<unsigned long>(v.m()));
  mpz_fac_ui(fn.get_mpz_t(), static_cast<unsigned long>(v.n()));
  out *= mpq_class(1) / mpq_class(fm * fn);
  return out;
}

}  // namespace soclelab
