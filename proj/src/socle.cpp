#include "soclelab/socle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace soclelab {

namespace {

// Runs `fn` on every r-tuple of partitions with total size k whose members fit inside both
// bounding diagrams (other tuples contribute nothing).
void for_each_tuple(int r, int k, const Partition& boundA, const Partition& boundB,
                    std::vector<Partition>& acc,
                    const std::function<void(const std::vector<Partition>&)>& fn) {
  if (static_cast<int>(acc.size()) == r) {
    if (k == 0) fn(acc);
    return;
  }
  int slots_left = r - static_cast<int>(acc.size()) - 1;
  for (int sz = 0; sz <= k; ++sz) {
    if (slots_left == 0 && sz != k) continue;
    for (const Partition& gamma : partitions_of(sz)) {
      if (!boundA.contains(gamma) || !boundB.contains(gamma)) continue;
      acc.push_back(gamma);
      for_each_tuple(r, k - sz, boundA, boundB, acc, fn);
      acc.pop_back();
    }
  }
}

// Joint fold of iterated skews along one gamma tuple, tracking pairs of shapes.
SemisimpleDecomp fold_tuple(const Partition& lambda, const Partition& mu,
                            const std::vector<Partition>& gammas) {
  SemisimpleDecomp state;
  state[{lambda, mu}] = 1;
  for (const Partition& gamma : gammas) {
    SemisimpleDecomp next;
    for (const auto& [pair, c] : state) {
      SchurExpansion left = lr_skew(pair.first, gamma);
      if (left.empty()) continue;
      SchurExpansion right = lr_skew(pair.second, gamma);
      for (const auto& [lp, cl] : left)
        for (const auto& [mp, cr] : right) next[{lp, mp}] += c * cl * cr;
    }
    state = std::move(next);
  }
  return state;
}

void prune_zeros(SemisimpleDecomp& d) {
  for (auto it = d.begin(); it != d.end();)
    it = it->second == 0 ? d.erase(it) : std::next(it);
}

}  // namespace

SemisimpleDecomp socle_layer_injective(const Partition& lambda, const Partition& mu, int r,
                                       int k) {
  if (r < 1) throw std::invalid_argument("socle_layer_injective: need at least one block");
  if (k < 0) throw std::invalid_argument("socle_layer_injective: negative layer index");
  SemisimpleDecomp out;
  std::vector<Partition> acc;
  for_each_tuple(r, k, lambda, mu, acc, [&](const std::vector<Partition>& gammas) {
    for (const auto& [pair, c] : fold_tuple(lambda, mu, gammas)) out[pair] += c;
  });
  prune_zeros(out);
  return out;
}

std::vector<SemisimpleDecomp> socle_layers_injective(const Partition& lambda,
                                                     const Partition& mu, int r) {
  std::vector<SemisimpleDecomp> layers;
  int kmax = std::min(lambda.size(), mu.size());
  for (int k = 0; k <= kmax; ++k) layers.push_back(socle_layer_injective(lambda, mu, r, k));
  while (!layers.empty() && layers.back().empty()) layers.pop_back();
  return layers;
}

mpz_class branching_matrix_entry(const Partition& lambda, const Partition& mu,
                                 const Partition& lambda_prime, const Partition& mu_prime) {
  if (lambda.size() - lambda_prime.size() != mu.size() - mu_prime.size()) return 0;
  SchurExpansion left = lr_skew(lambda, lambda_prime);
  SchurExpansion right = lr_skew(mu, mu_prime);
  mpz_class out = 0;
  for (const auto& [gamma, cl] : left) {
    auto it = right.find(gamma);
    if (it != right.end()) out += cl * it->second;
  }
  return out;
}

SemisimpleDecomp jh_injective(const Partition& lambda, const Partition& mu, int r) {
  if (r < 1) throw std::invalid_argument("jh_injective: need at least one block");

  // Index set closed under passing to sub-pairs.
  std::vector<PartitionPair> idx;
  for (const Partition& a : partitions_up_to(lambda.size())) {
    if (!lambda.contains(a)) continue;
    for (const Partition& b : partitions_up_to(mu.size())) {
      if (!mu.contains(b)) continue;
      idx.push_back({a, b});
    }
  }
  size_t N = idx.size();
  std::map<PartitionPair, size_t> pos;
  for (size_t i = 0; i < N; ++i) pos[idx[i]] = i;

  std::vector<std::vector<mpz_class>> A(N, std::vector<mpz_class>(N, 0));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j)
      A[i][j] = branching_matrix_entry(idx[i].first, idx[i].second, idx[j].first, idx[j].second);

  size_t row = pos.at({lambda, mu});
  std::vector<mpz_class> v(N, 0);
  v[row] = 1;
  for (int step = 0; step < r; ++step) {
    std::vector<mpz_class> next(N, 0);
    for (size_t i = 0; i < N; ++i) {
      if (v[i] == 0) continue;
      for (size_t j = 0; j < N; ++j)
        if (A[i][j] != 0) next[j] += v[i] * A[i][j];
    }
    v = std::move(next);
  }

  SemisimpleDecomp out;
  for (size_t j = 0; j < N; ++j)
    if (v[j] != 0) out[idx[j]] = v[j];
  return out;
}

std::vector<SemisimpleDecomp> socle_layers_K(int m, int n) {
#ifndef SOCLE_LAB_ALLOW_RANK_ZERO
  if (m < 1 || n < 1) throw std::invalid_argument("socle_layers_K: both ranks must be positive");
#endif
  if (m < 0 || n < 0) throw std::invalid_argument("socle_layers_K: negative rank");
  std::vector<SemisimpleDecomp> layers(static_cast<size_t>(std::min(m, n)) + 1);
  for (const Partition& lambda : partitions_of(m)) {
    mpz_class dl = sym_group_dim(lambda);
    for (const Partition& mu : partitions_of(n)) {
      mpz_class w = dl * sym_group_dim(mu);
      for (size_t k = 0; k < layers.size(); ++k)
        for (const auto& [pair, c] : socle_layer_injective(lambda, mu, 2, static_cast<int>(k)))
          layers[k][pair] += w * c;
    }
  }
  while (!layers.empty() && layers.back().empty()) layers.pop_back();
  return layers;
}

std::vector<SemisimpleDecomp> socle_layers_J(int m, int n) {
#ifndef SOCLE_LAB_ALLOW_RANK_ZERO
  if (m < 1 || n < 1) throw std::invalid_argument("socle_layers_J: both ranks must be positive");
#endif
  if (m < 0 || n < 0) throw std::invalid_argument("socle_layers_J: negative rank");
  std::vector<SemisimpleDecomp> layers;
  for (int i = 0; i <= std::min(m, n); ++i) {
    Partition colA(std::vector<int>(static_cast<size_t>(m - i), 1));
    Partition colB(std::vector<int>(static_cast<size_t>(n - i), 1));
    SemisimpleDecomp layer;
    layer[{colA, colB}] = i + 1;
    layers.push_back(std::move(layer));
  }
  return layers;
}

}  // namespace soclelab
