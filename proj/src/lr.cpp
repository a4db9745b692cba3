#include "soclelab/lr.hpp"

namespace soclelab {

namespace {

// Expansion of a product of Schur functions by chaining horizontal strips, one strip per
// value of the content. The lattice condition is the prefix-sum bound between consecutive
// strips: through every row, the running count of value v+1 may not exceed the count of
// value v through the previous row.
struct ExpandState {
  std::vector<int> content;
  const Partition* limit;
  SchurExpansion out;
};

void next_value(ExpandState& st, size_t v, const std::vector<int>& shape,
                const std::vector<int>& strip);

// Chooses the strip profile `cur` for value `v` on top of `old_shape` row by row.
// psum_prev / psum_cur are prefix sums of the previous strip through row-1 and of the
// current strip through the rows already fixed.
void place_strip(ExpandState& st, size_t v, const std::vector<int>& old_shape,
                 const std::vector<int>& prev, std::vector<int>& cur, size_t row,
                 int remaining, int psum_prev, int psum_cur) {
  if (remaining == 0) {
    std::vector<int> shape(std::max(old_shape.size(), cur.size()), 0);
    for (size_t r = 0; r < shape.size(); ++r) {
      shape[r] = (r < old_shape.size() ? old_shape[r] : 0) + (r < cur.size() ? cur[r] : 0);
      if (shape[r] == 0) {
        shape.resize(r);
        break;
      }
    }
    next_value(st, v + 1, shape, cur);
    return;
  }
  if (row > old_shape.size()) return;

  int base = row < old_shape.size() ? old_shape[row] : 0;
  int cap = remaining;
  if (row > 0) cap = std::min(cap, old_shape[row - 1] - base);
  if (v > 0) cap = std::min(cap, psum_prev - psum_cur);
  if (st.limit) cap = std::min(cap, st.limit->part(static_cast<int>(row)) - base);
  int pp = psum_prev + (row < prev.size() ? prev[row] : 0);
  for (int t = 0; t <= cap; ++t) {
    cur[row] = t;
    place_strip(st, v, old_shape, prev, cur, row + 1, remaining - t, pp, psum_cur + t);
  }
  cur[row] = 0;
}

void next_value(ExpandState& st, size_t v, const std::vector<int>& shape,
                const std::vector<int>& strip) {
  if (v == st.content.size()) {
    std::vector<int> parts = shape;
    st.out[Partition(std::move(parts))] += 1;
    return;
  }
  std::vector<int> cur(shape.size() + 1, 0);
  place_strip(st, v, shape, strip, cur, 0, st.content[v], 0, 0);
}

}  // namespace

SchurExpansion lr_expand(const Partition& mu, const Partition& nu, const Partition* limit) {
  if (limit && !limit->contains(mu)) return {};
  ExpandState st{nu.parts(), limit, {}};
  next_value(st, 0, mu.parts(), {});
  return std::move(st.out);
}

namespace {

// Depth-first fill in reverse reading order (each row right to left, rows top to bottom),
// maintaining value counts so the lattice property holds on every prefix.
struct SkewState {
  const Partition* lambda;
  const Partition* mu;
  std::vector<std::vector<int>> cells;
  std::vector<int> cnt;
  SchurExpansion out;
};

void fill_cell(SkewState& st, int row, int col) {
  const Partition& lambda = *st.lambda;
  const Partition& mu = *st.mu;
  while (row < lambda.length() && (col < mu.part(row) || lambda.part(row) == mu.part(row))) {
    ++row;
    col = row < lambda.length() ? lambda.part(row) - 1 : 0;
  }
  if (row >= lambda.length()) {
    std::vector<int> content = st.cnt;
    st.out[Partition(std::move(content))] += 1;
    return;
  }

  int lo = 1, hi = lambda.length();
  if (row > 0 && col >= mu.part(row - 1))
    lo = std::max(lo, st.cells[static_cast<size_t>(row - 1)][static_cast<size_t>(col)] + 1);
  if (col + 1 < lambda.part(row))
    hi = std::min(hi, st.cells[static_cast<size_t>(row)][static_cast<size_t>(col + 1)]);
  for (int v = lo; v <= hi; ++v) {
    if (v > 1 && st.cnt[static_cast<size_t>(v - 2)] <= st.cnt[static_cast<size_t>(v - 1)])
      continue;  // the prefix would stop being a lattice word
    st.cells[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
    ++st.cnt[static_cast<size_t>(v - 1)];
    fill_cell(st, row, col - 1);
    --st.cnt[static_cast<size_t>(v - 1)];
  }
}

}  // namespace

SchurExpansion lr_skew(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return {};
  SkewState st;
  st.lambda = &lambda;
  st.mu = &mu;
  st.cells.resize(static_cast<size_t>(lambda.length()));
  for (int r = 0; r < lambda.length(); ++r)
    st.cells[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda.part(r)), 0);
  st.cnt.assign(static_cast<size_t>(lambda.length()), 0);
  fill_cell(st, 0, lambda.part(0) - 1);
  return std::move(st.out);
}

mpz_class lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
  SchurExpansion exp = lr_expand(mu, nu, &lambda);
  auto it = exp.find(lambda);
  return it == exp.end() ? mpz_class(0) : it->second;
}

mpz_class multi_lr(const Partition& lambda, std::span<const Partition> gammas,
                   const Partition& lambda_prime) {
  std::map<Partition, mpz_class> state;
  state[lambda] = 1;
  for (const Partition& gamma : gammas) {
    std::map<Partition, mpz_class> next;
    for (const auto& [kappa, c] : state) {
      if (!kappa.contains(lambda_prime)) continue;
      for (const auto& [rest, cnt] : lr_skew(kappa, gamma)) next[rest] += c * cnt;
    }
    state = std::move(next);
  }
  auto it = state.find(lambda_prime);
  return it == state.end() ? mpz_class(0) : it->second;
}

}  // namespace soclelab
