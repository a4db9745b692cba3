// Acceptance gate: one check per shipped guarantee, one PASS/FAIL line each, all exact.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "soclelab/fock.hpp"
#include "soclelab/lr.hpp"
#include "soclelab/socle.hpp"
#include "soclelab/superchar.hpp"
#include "soclelab/verify.hpp"
#include "soclelab/window.hpp"
#include "soclelab/zuckerman.hpp"

using namespace soclelab;

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool lr_oracle_equivalence() {
  const auto shapes = partitions_up_to(6);
  for (const auto& lambda : shapes)
    for (const auto& mu : shapes)
      for (const auto& nu : shapes)
        if (lr_coeff(lambda, mu, nu) != lr_coeff_oracle(lambda, mu, nu)) return false;
  return true;
}

bool adjoint_hull_layers() {
  const Partition one = Partition::parse("1");
  for (int r = 1; r <= 5; ++r) {
    SemisimpleDecomp expect{{{Partition(), Partition()}, r}};
    if (socle_layer_injective(one, one, r, 1) != expect) return false;
    if (socle_layer_injective(one, one, r, 0) != SemisimpleDecomp{{{one, one}, 1}})
      return false;
  }
  return true;
}

bool column_pair_closed_form() {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const auto layers = socle_layers_J(m, n);
      if (static_cast<int>(layers.size()) != std::min(m, n) + 1) return false;
      const Partition colM(std::vector<int>(static_cast<size_t>(m), 1));
      const Partition colN(std::vector<int>(static_cast<size_t>(n), 1));
      for (int i = 0; i <= std::min(m, n); ++i) {
        Partition lam(std::vector<int>(static_cast<size_t>(m - i), 1));
        Partition mu(std::vector<int>(static_cast<size_t>(n - i), 1));
        if (layers[static_cast<size_t>(i)] != SemisimpleDecomp{{{lam, mu}, i + 1}})
          return false;
        if (layers[static_cast<size_t>(i)] != socle_layer_injective(colM, colN, 2, i))
          return false;
      }
    }
  }
  return true;
}

bool single_block_degeneration() {
  // One block: layer k is the plain one-shape sum of products of LR coefficients.
  const auto pool = partitions_up_to(3);
  for (const auto& lambda : pool) {
    for (const auto& mu : pool) {
      for (int k = 0; k <= std::min(lambda.size(), mu.size()); ++k) {
        SemisimpleDecomp direct;
        for (const auto& gamma : partitions_up_to(k)) {
          if (gamma.size() != k) continue;
          for (const auto& lp : partitions_up_to(lambda.size() - k))
            for (const auto& mp : partitions_up_to(mu.size() - k)) {
              const mpz_class c =
                  lr_coeff(lambda, lp, gamma) * lr_coeff(mu, mp, gamma);
              if (c != 0) direct[{lp, mp}] += c;
            }
        }
        if (socle_layer_injective(lambda, mu, 1, k) != direct) return false;
      }
    }
  }
  const auto vv = socle_layers_injective(Partition::parse("1"), Partition::parse("1"), 1);
  const Partition one = Partition::parse("1");
  return vv.size() == 2 && vv[0] == SemisimpleDecomp{{{one, one}, 1}} &&
         vv[1] == SemisimpleDecomp{{{Partition(), Partition()}, 1}};
}

bool jh_three_routes() {
  const auto shapes = partitions_up_to(6);
  for (const auto& lambda : shapes) {
    for (const auto& mu : shapes) {
      if (lambda.size() + mu.size() > 6) continue;
      // shared index set of sub-pairs
      std::vector<PartitionPair> idx;
      for (const auto& a : partitions_up_to(lambda.size()))
        for (const auto& b : partitions_up_to(mu.size()))
          if (lambda.contains(a) && mu.contains(b)) idx.push_back({a, b});
      std::map<PartitionPair, size_t> pos;
      for (size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = i;
      std::vector<std::vector<mpz_class>> mat(idx.size(),
                                              std::vector<mpz_class>(idx.size()));
      for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
          mat[i][j] = branching_matrix_entry(idx[i].first, idx[i].second, idx[j].first,
                                             idx[j].second);
      std::vector<mpz_class> row(idx.size());
      row[pos.at({lambda, mu})] = 1;
      for (int r = 1; r <= 3; ++r) {
        std::vector<mpz_class> next(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) {
          if (row[i] == 0) continue;
          for (size_t j = 0; j < idx.size(); ++j)
            if (mat[i][j] != 0) next[j] += row[i] * mat[i][j];
        }
        row = std::move(next);
        SemisimpleDecomp from_power;
        for (size_t j = 0; j < idx.size(); ++j)
          if (row[j] != 0) from_power[idx[j]] = row[j];
        SemisimpleDecomp from_layers;
        for (const auto& layer : socle_layers_injective(lambda, mu, r))
          for (const auto& [pair, mult] : layer) from_layers[pair] += mult;
        const SemisimpleDecomp from_jh = jh_injective(lambda, mu, r);
        if (from_power != from_jh || from_layers != from_jh) return false;
      }
    }
  }
  return true;
}

bool window_kernel_dimensions() {
  for (int N = 0; N <= 4; ++N) {
    const int side = 2 * N + 1;
    if (static_cast<int>(socle_T_window(1, 1, Window{-N, N}).size()) != side * side - 1)
      return false;
  }
  std::mt19937_64 rng(67);
  for (int t = 0; t < 50; ++t) {
    GrothVec v(2, 2, BasisKind::verma);
    for (int s = 0; s < 4; ++s) {
      BarLabel l{{uniform(rng, -5, 5), uniform(rng, -5, 5)},
                 {uniform(rng, -5, 5), uniform(rng, -5, 5)}};
      v.add_wedge(std::move(l), uniform(rng, -3, 3));
    }
    const int i = uniform(rng, -6, 6);
    for (int p = 1; p <= 2; ++p)
      for (int q = 1; q <= 2; ++q) {
        if (!(contraction(p, q, apply_e(i, v)) == apply_e(i, contraction(p, q, v))))
          return false;
        if (!(contraction(p, q, apply_f(i, v)) == apply_f(i, contraction(p, q, v))))
          return false;
      }
  }
  return true;
}

bool filtration_shadow() {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 4; ++d)
        if (!tensor_filtration_shadow(m, n, d).ok()) return false;
  return true;
}

bool layer_size_identity() {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const auto layers = socle_layers_K(m, n);
      for (size_t k = 0; k < layers.size(); ++k)
        for (const auto& [pair, mult] : layers[k]) {
          if (m - pair.first.size() != static_cast<int>(k)) return false;
          if (n - pair.second.size() != static_cast<int>(k)) return false;
        }
    }
  }
  return true;
}

bool suite(const char* name) {
  std::ostringstream sink;
  return verify_suite(name, VerifyOptions{}, sink);
}

struct Criterion {
  const char* text;
  double bound_s;  // 0 = no stated bound
  std::function<bool()> check;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"LR coefficients: pruned expansion matches brute-force oracle, |lambda| <= 6", 60,
       lr_oracle_equivalence},
      {"adjoint-type injective: layer k=1 over r blocks is r copies of the trivial pair",
       0, adjoint_hull_layers},
      {"column-pair socle closed form matches the two-block formula, m,n <= 6", 30,
       column_pair_closed_form},
      {"one-block degeneration reduces to plain LR products; V tensor V* spot case", 0,
       single_block_degeneration},
      {"layer sums, JH multiset and branching-matrix power agree, |l|+|m| <= 6, r <= 3",
       300, jh_three_routes},
      {"Chevalley bracket, locality and Serre relations on random sparse vectors", 0,
       [] { return suite("relations"); }},
      {"antisymmetrizer: scaled idempotent, equivariant, sign twist, wedge image, m,n <= 3",
       0, [] { return suite("gamma"); }},
      {"window socle dimensions (1|1) up to N=4; contraction commutes with generators", 0,
       window_kernel_dimensions},
      {"window socle sits inside the traceless low-block image, m,n <= 2, parts 2(m+n)",
       300, [] { return suite("appendix"); }},
      {"supersymmetry: cancellation, stability, kac kernel, pair independence, ring maps",
       0, [] { return suite("ds"); }},
      {"evaluation shadow of the tensor filtration, m,n <= 3, degree <= 4", 0,
       filtration_shadow},
      {"socle layers of the big injective: layer k drops k boxes on each side, m,n <= 4",
       0, layer_size_identity},
  };

  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      std::printf("%2d FAIL %s (exception: %s)\n", index, c.text, e.what());
      ++failed;
      continue;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.bound_s > 0 && secs > c.bound_s) ok = false;
    if (!ok) ++failed;
    if (c.bound_s > 0)
      std::printf("%2d %s %s (%.2fs, bound %.0fs)\n", index, ok ? "PASS" : "FAIL", c.text,
                  secs, c.bound_s);
    else
      std::printf("%2d %s %s (%.2fs)\n", index, ok ? "PASS" : "FAIL", c.text, secs);
  }
  std::printf("acceptance: %d/12 passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}
