#include "soclelab/verify.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <vector>

#include "soclelab/fock.hpp"
#include "soclelab/superchar.hpp"
#include "soclelab/window.hpp"
#include "soclelab/zuckerman.hpp"

namespace soclelab {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

GrothVec random_vec(std::mt19937_64& rng, int m, int n, BasisKind basis, int nterms) {
  GrothVec v(m, n, basis);
  for (int t = 0; t < nterms; ++t) {
    BarLabel l;
    for (int i = 0; i < m; ++i) l.a.push_back(uniform(rng, -5, 5));
    for (int j = 0; j < n; ++j) l.b.push_back(uniform(rng, -5, 5));
    v.add_wedge(std::move(l), uniform(rng, -3, 3));
  }
  return v;
}

GrothVec apply_h(int i, const GrothVec& v) {
  GrothVec out(v.m(), v.n(), v.basis());
  for (const auto& [l, c] : v.terms()) out.add(l, c * weight_h(i, l));
  return out;
}

bool check_relations(std::mt19937_64& rng, int count, std::ostream& out) {
  struct Space {
    int m, n;
    BasisKind basis;
    const char* name;
  };
  const Space spaces[] = {{1, 1, BasisKind::verma, "T(1|1)"},
                          {2, 1, BasisKind::verma, "T(2|1)"},
                          {2, 2, BasisKind::verma, "T(2|2)"},
                          {2, 2, BasisKind::kac, "W(2|2)"}};
  long checked = 0;
  for (const Space& sp : spaces) {
    for (int t = 0; t < count; ++t) {
      GrothVec v = random_vec(rng, sp.m, sp.n, sp.basis, 4);
      for (int i = -6; i <= 6; ++i) {
        for (int j = -6; j <= 6; ++j) {
          GrothVec br = apply_e(i, apply_f(j, v)) - apply_f(j, apply_e(i, v));
          if (i == j ? !(br == apply_h(i, v)) : !br.zero()) {
            out << "FAIL relations: [e_" << i << ", f_" << j << "] on " << sp.name << "\n";
            return false;
          }
          ++checked;
          if (std::abs(i - j) >= 2) {
            if (!(apply_e(i, apply_e(j, v)) == apply_e(j, apply_e(i, v))) ||
                !(apply_f(i, apply_f(j, v)) == apply_f(j, apply_f(i, v)))) {
              out << "FAIL relations: locality at (" << i << "," << j << ") on " << sp.name
                  << "\n";
              return false;
            }
          } else if (i != j) {
            GrothVec eie = apply_e(i, apply_e(j, apply_e(i, v)));
            eie *= 2;
            GrothVec fif = apply_f(i, apply_f(j, apply_f(i, v)));
            fif *= 2;
            bool serre_e = (apply_e(i, apply_e(i, apply_e(j, v))) - eie +
                            apply_e(j, apply_e(i, apply_e(i, v))))
                               .zero();
            bool serre_f = (apply_f(i, apply_f(i, apply_f(j, v))) - fif +
                            apply_f(j, apply_f(i, apply_f(i, v))))
                               .zero();
            if (!serre_e || !serre_f) {
              out << "FAIL relations: serre at (" << i << "," << j << ") on " << sp.name << "\n";
              return false;
            }
          }
        }
      }
    }
  }
  out << "ok relations: " << checked << " bracket checks over 4 spaces, generators in [-6,6]\n";
  return true;
}

bool check_gamma(std::mt19937_64& rng, int count, std::ostream& out) {
  long checked = 0;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      mpz_class fm, fn;
      mpz_fac_ui(fm.get_mpz_t(), static_cast<unsigned long>(m));
      mpz_fac_ui(fn.get_mpz_t(), static_cast<unsigned long>(n));
      const mpq_class scale(fm * fn);
      for (int t = 0; t < count; ++t) {
        GrothVec v = random_vec(rng, m, n, BasisKind::verma, 3);
        GrothVec g = dot_antisymmetrize(v);
        GrothVec scaled = g;
        scaled *= scale;
        if (!(dot_antisymmetrize(g) == scaled)) {
          out << "FAIL gamma: not idempotent up to scale at (" << m << "|" << n << ")\n";
          return false;
        }
        const int i = uniform(rng, -5, 5);
        if (!(dot_antisymmetrize(apply_e(i, v)) == apply_e(i, g)) ||
            !(dot_antisymmetrize(apply_f(i, v)) == apply_f(i, g))) {
          out << "FAIL gamma: not equivariant at (" << m << "|" << n << ")\n";
          return false;
        }
        GrothVec k = random_vec(rng, m, n, BasisKind::kac, 3);
        GrothVec emb = iota_kac(k);
        GrothVec emb_scaled = emb;
        emb_scaled *= scale;
        if (!(dot_antisymmetrize(emb) == emb_scaled)) {
          out << "FAIL gamma: does not fix the wedge image at (" << m << "|" << n << ")\n";
          return false;
        }
        // sign twist under a random transposition of two even positions
        if (m >= 2) {
          PermPair s = PermPair::identity(m, n);
          std::swap(s.even[0], s.even[1]);
          GrothVec neg = g;
          neg *= -1;
          if (!(dot_antisymmetrize(sym_act(s, v)) == neg)) {
            out << "FAIL gamma: sign twist at (" << m << "|" << n << ")\n";
            return false;
          }
        }
        // labels with a repeated entry die
        BarLabel sing;
        for (int p = 0; p < m; ++p) sing.a.push_back(0);
        for (int p = 0; p < n; ++p) sing.b.push_back(uniform(rng, -3, 3));
        if (m >= 2) {
          GrothVec sv(m, n, BasisKind::verma);
          sv.add(sing, 1);
          if (!dot_antisymmetrize(sv).zero()) {
            out << "FAIL gamma: repeated-entry label survives at (" << m << "|" << n << ")\n";
            return false;
          }
        }
        ++checked;
      }
    }
  }
  out << "ok gamma: " << checked << " vector checks over ranks up to (3|3)\n";
  return true;
}

bool check_ds(std::mt19937_64& rng, int count, std::ostream& out) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const auto& lambda : partitions_up_to(5)) {
        if (!is_supersymmetric(super_schur(lambda, m, n))) {
          out << "FAIL ds: schur polynomial not supersymmetric\n";
          return false;
        }
        if (!(ds_eval(super_schur(lambda, m, n)) == super_schur(lambda, m - 1, n - 1))) {
          out << "FAIL ds: stability broken\n";
          return false;
        }
      }
  for (int t = 0; t < count / 2; ++t) {
    const int m = uniform(rng, 1, 2), n = uniform(rng, 1, 2);
    Weight w;
    int v = uniform(rng, -3, 5);
    for (int i = 0; i < m; ++i) {
      w.even.push_back(v);
      v -= uniform(rng, 0, 3);
    }
    v = uniform(rng, -3, 5);
    for (int j = 0; j < n; ++j) {
      w.odd.push_back(v);
      v -= uniform(rng, 0, 3);
    }
    if (!ds_eval(kac_supercharacter(w, m, n)).zero()) {
      out << "FAIL ds: kac polynomial survives evaluation\n";
      return false;
    }
  }
  for (const auto& lambda : partitions_up_to(3)) {
    const SuperPoly f = super_schur(lambda, 2, 2);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        if (!pair_independence_check(f, i, j)) {
          out << "FAIL ds: pair dependence detected\n";
          return false;
        }
  }
  const auto shapes = partitions_up_to(3);
  for (int t = 0; t < count; ++t) {
    const SuperPoly f = super_schur(shapes[rng() % shapes.size()], 2, 2);
    const SuperPoly g = super_schur(shapes[rng() % shapes.size()], 2, 2);
    if (!(ds_eval(f * g) == ds_eval(f) * ds_eval(g))) {
      out << "FAIL ds: not multiplicative\n";
      return false;
    }
  }
  out << "ok ds: cancellation, stability, kac kernel, pair independence, ring maps\n";
  return true;
}

bool check_appendix(std::ostream& out) {
  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= 2; ++n) {
      const int half = 2 * (m + n);
      const Window w{-half, half - 1};
      if (!appendix_inclusion_check(m, n, w, 0)) {
        out << "FAIL appendix: inclusion fails at (" << m << "|" << n << ") on [" << w.lo
            << "," << w.hi << "]\n";
        return false;
      }
      out << "ok appendix: (" << m << "|" << n << ") window [" << w.lo << "," << w.hi
          << "] split at 0\n";
    }
  }
  return true;
}

}  // namespace

bool verify_suite(const std::string& which, const VerifyOptions& opt, std::ostream& out) {
  const bool all = which == "all";
  if (!all && which != "relations" && which != "gamma" && which != "ds" &&
      which != "appendix")
    throw std::invalid_argument("unknown suite '" + which + "'");
  out << "verify " << which << " seed=" << opt.seed << " size=" << opt.size << "\n";
  std::mt19937_64 rng(opt.seed);
  bool ok = true;
  if (all || which == "relations") ok &= check_relations(rng, 200 * opt.size, out);
  if (all || which == "gamma") ok &= check_gamma(rng, 30 * opt.size, out);
  if (all || which == "ds") ok &= check_ds(rng, 100 * opt.size, out);
  if (all || which == "appendix") ok &= check_appendix(out);
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

}  // namespace soclelab
