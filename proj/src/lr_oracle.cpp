#include "soclelab/lr.hpp"

namespace soclelab {

namespace {

struct Cell {
  int row, col;
};

// Checks the reverse reading word (rows top to bottom, each row right to left) of a fully
// filled diagram for the lattice property by scanning it, with no shortcuts.
bool lattice_word(const std::vector<std::vector<int>>& fill, const Partition& lambda,
                  const Partition& mu, int maxval) {
  std::vector<int> seen(static_cast<size_t>(maxval) + 1, 0);
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = lambda.part(r) - 1; c >= mu.part(r); --c) {
      int v = fill[static_cast<size_t>(r)][static_cast<size_t>(c)];
      ++seen[static_cast<size_t>(v)];
      if (v > 1 && seen[static_cast<size_t>(v)] > seen[static_cast<size_t>(v - 1)]) return false;
    }
  }
  return true;
}

void enumerate(const std::vector<Cell>& cells, size_t idx, int maxval,
               std::vector<std::vector<int>>& fill, const Partition& lambda, const Partition& mu,
               const Partition& nu, mpz_class& count) {
  if (idx == cells.size()) {
    std::vector<int> content(static_cast<size_t>(maxval) + 1, 0);
    for (const Cell& cell : cells)
      ++content[static_cast<size_t>(fill[static_cast<size_t>(cell.row)][static_cast<size_t>(cell.col)])];
    for (int v = 1; v <= maxval; ++v)
      if (content[static_cast<size_t>(v)] != nu.part(v - 1)) return;
    if (lattice_word(fill, lambda, mu, maxval)) ++count;
    return;
  }
  auto [r, c] = cells[idx];
  for (int v = 1; v <= maxval; ++v) {
    if (c > mu.part(r) && fill[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] > v)
      continue;  // rows weakly increase
    if (r > 0 && c >= mu.part(r - 1) && c < lambda.part(r - 1) &&
        fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] >= v)
      continue;  // columns strictly increase
    fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
    enumerate(cells, idx + 1, maxval, fill, lambda, mu, nu, count);
  }
}

}  // namespace

mpz_class lr_coeff_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!lambda.contains(mu)) return 0;
  if (lambda.size() - mu.size() != nu.size()) return 0;
  if (nu.empty()) return 1;  // the empty filling

  std::vector<Cell> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = mu.part(r); c < lambda.part(r); ++c) cells.push_back({r, c});

  std::vector<std::vector<int>> fill(static_cast<size_t>(lambda.length()));
  for (int r = 0; r < lambda.length(); ++r)
    fill[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda.part(r)), 0);

  mpz_class count = 0;
  enumerate(cells, 0, nu.length(), fill, lambda, mu, nu, count);
  return count;
}

}  // namespace soclelab
