#include "soclelab/window.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "soclelab/linalg.hpp"

namespace soclelab {

namespace {

constexpr long kMaxLabels = 1L << 20;

// Net content of a label: value -> (#a entries) - (#b entries), zeros dropped.
using WeightSig = std::vector<std::pair<int, int>>;

WeightSig weight_sig(const BarLabel& l) {
  std::map<int, int> acc;
  for (int v : l.a) ++acc[v];
  for (int v : l.b) --acc[v];
  WeightSig out;
  for (const auto& [v, c] : acc)
    if (c != 0) out.push_back({v, c});
  return out;
}

template <typename Fn>
void for_each_label(int m, int n, Window w, Fn fn) {
  BarLabel l;
  l.a.assign(static_cast<size_t>(m), w.lo);
  l.b.assign(static_cast<size_t>(n), w.lo);
  while (true) {
    fn(l);
    int pos = m + n - 1;
    for (; pos >= 0; --pos) {
      int& entry = pos < m ? l.a[static_cast<size_t>(pos)] : l.b[static_cast<size_t>(pos - m)];
      if (entry < w.hi) {
        ++entry;
        break;
      }
      entry = w.lo;
    }
    if (pos < 0) return;
  }
}

void check_window(int m, int n, Window w) {
  if (w.size() <= 0) throw std::invalid_argument("window must be nonempty");
  if (w.size() > max_window_size())
    throw std::invalid_argument("window too large for the configured resource bound (" +
                                std::to_string(max_window_size()) + " entries)");
  double labels = 1;
  for (int k = 0; k < m + n; ++k) labels *= w.size();
  if (labels > static_cast<double>(kMaxLabels))
    throw std::invalid_argument("window span exceeds the label budget");
}

// Stacked contraction constraints on one weight block, as rows over the given columns.
std::vector<QVec> contraction_rows(const std::vector<BarLabel>& cols, int m, int n) {
  std::map<std::tuple<int, int, BarLabel>, QVec> rows;
  for (size_t c = 0; c < cols.size(); ++c) {
    const BarLabel& l = cols[c];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        if (l.a[static_cast<size_t>(i)] != l.b[static_cast<size_t>(j)]) continue;
        BarLabel t = l;
        t.a.erase(t.a.begin() + i);
        t.b.erase(t.b.begin() + j);
        auto [it, fresh] = rows.try_emplace({i, j, std::move(t)}, QVec());
        if (fresh) it->second.assign(cols.size(), 0);
        it->second[c] += 1;
      }
  }
  std::vector<QVec> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace

int max_window_size() {
  if (const char* env = std::getenv("SOCLE_LAB_MAX_WINDOW")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("SOCLE_LAB_MAX_WINDOW must be a positive integer");
  }
  return 64;
}

std::vector<GrothVec> socle_T_window(int m, int n, Window w) {
  if (m < 0 || n < 0) throw std::invalid_argument("socle_T_window: negative rank");
  check_window(m, n, w);

  std::map<WeightSig, std::vector<BarLabel>> groups;
  for_each_label(m, n, w, [&](const BarLabel& l) { groups[weight_sig(l)].push_back(l); });

  std::vector<GrothVec> basis;
  for (const auto& [sig, cols] : groups) {
    if (m == 0 || n == 0) {
      for (const BarLabel& l : cols) {
        GrothVec v(m, n, BasisKind::verma);
        v.add(l, 1);
        basis.push_back(std::move(v));
      }
      continue;
    }
    std::vector<QVec> rows = contraction_rows(cols, m, n);
    for (const QVec& x : kernel_basis(rows, cols.size())) {
      GrothVec v(m, n, BasisKind::verma);
      for (size_t c = 0; c < cols.size(); ++c)
        if (x[c] != 0) v.add(cols[c], x[c]);
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

namespace {

// Echelon over the span of low-block labels of shape (p, q) with constant net content c,
// generated by the off-diagonal operators of the low block.
struct BlockSpan {
  std::vector<BarLabel> coords;
  std::map<BarLabel, size_t> index;
  Echelon ech{0};
};

BlockSpan build_block_span(int p, int q, int c, int lo, int hi) {
  Window w1{lo, hi};
  std::map<WeightSig, std::vector<BarLabel>> by_sig;
  for_each_label(p, q, w1, [&](const BarLabel& l) { by_sig[weight_sig(l)].push_back(l); });

  WeightSig target;
  if (c != 0)
    for (int v = lo; v <= hi; ++v) target.push_back({v, c});

  BlockSpan span;
  auto it = by_sig.find(target);
  if (it == by_sig.end()) return span;
  span.coords = it->second;
  for (size_t i = 0; i < span.coords.size(); ++i) span.index[span.coords[i]] = i;
  span.ech = Echelon(span.coords.size());

  for (int u = lo; u <= hi; ++u)
    for (int v = lo; v <= hi; ++v) {
      if (u == v) continue;
      // source class: target content shifted so that E_{uv} lands on it
      std::map<int, int> src;
      if (c != 0)
        for (int x = lo; x <= hi; ++x) src[x] = c;
      src[u] -= 1;
      src[v] += 1;
      WeightSig src_sig;
      for (const auto& [x, d] : src)
        if (d != 0) src_sig.push_back({x, d});
      auto sit = by_sig.find(src_sig);
      if (sit == by_sig.end()) continue;
      for (const BarLabel& l : sit->second) {
        QVec img(span.coords.size(), 0);
        bool any = false;
        for (size_t pos = 0; pos < l.a.size(); ++pos)
          if (l.a[pos] == v) {
            BarLabel t = l;
            t.a[pos] = u;
            img[span.index.at(t)] += 1;
            any = true;
          }
        for (size_t pos = 0; pos < l.b.size(); ++pos)
          if (l.b[pos] == u) {
            BarLabel t = l;
            t.b[pos] = v;
            img[span.index.at(t)] -= 1;
            any = true;
          }
        if (any) span.ech.insert(std::move(img));
      }
    }
  return span;
}

using BucketKey = std::tuple<unsigned, unsigned, std::vector<int>>;

}  // namespace

bool appendix_inclusion_check(int m, int n, Window w, int q) {
  if (m < 1 || n < 1) throw std::invalid_argument("appendix_inclusion_check: ranks must be positive");
  check_window(m, n, w);
  int w1_size = std::min(q, w.hi + 1) - w.lo;  // entries below q
  if (w1_size <= 0) return true;               // no low entries, nothing to contain
  if (q > w.hi) throw std::invalid_argument("appendix_inclusion_check: degenerate split (high part empty)");
  int w1_hi = q - 1;

  std::map<std::pair<std::pair<int, int>, int>, BlockSpan> spans;
  auto block_span = [&](int p, int qq, int c) -> BlockSpan& {
    auto key = std::make_pair(std::make_pair(p, qq), c);
    auto it = spans.find(key);
    if (it == spans.end()) it = spans.emplace(key, build_block_span(p, qq, c, w.lo, w1_hi)).first;
    return it->second;
  };

  std::map<WeightSig, std::vector<BarLabel>> groups;
  for_each_label(m, n, w, [&](const BarLabel& l) {
    bool low = false;
    for (int v : l.a) low = low || v < q;
    for (int v : l.b) low = low || v < q;
    if (low) groups[weight_sig(l)].push_back(l);
  });

  for (const auto& [sig, cols] : groups) {
    std::vector<QVec> rows = contraction_rows(cols, m, n);
    for (const QVec& x : kernel_basis(rows, cols.size())) {
      // split the kernel vector into blocks with fixed positions and high entries
      std::map<BucketKey, std::map<BarLabel, mpq_class>> buckets;
      for (size_t c = 0; c < cols.size(); ++c) {
        if (x[c] == 0) continue;
        const BarLabel& l = cols[c];
        unsigned amask = 0, bmask = 0;
        BarLabel low_part;
        std::vector<int> high;
        for (size_t pos = 0; pos < l.a.size(); ++pos) {
          if (l.a[pos] < q) {
            amask |= 1u << pos;
            low_part.a.push_back(l.a[pos]);
          } else {
            high.push_back(l.a[pos]);
          }
        }
        for (size_t pos = 0; pos < l.b.size(); ++pos) {
          if (l.b[pos] < q) {
            bmask |= 1u << pos;
            low_part.b.push_back(l.b[pos]);
          } else {
            high.push_back(l.b[pos]);
          }
        }
        buckets[{amask, bmask, std::move(high)}][std::move(low_part)] = x[c];
      }

      for (const auto& [key, comp] : buckets) {
        int p = comp.begin()->first.m();
        int qq = comp.begin()->first.n();
        // constant net content is the only case the torus does not already absorb
        if ((p - qq) % w1_size != 0) continue;
        int c = (p - qq) / w1_size;
        WeightSig got = [&] {
          std::map<int, int> acc;
          for (const auto& [lbl, coef] : comp) {
            for (int v : lbl.a) ++acc[v];
            for (int v : lbl.b) --acc[v];
            break;
          }
          WeightSig s;
          for (const auto& [v, d] : acc)
            if (d != 0) s.push_back({v, d});
          return s;
        }();
        WeightSig want;
        if (c != 0)
          for (int v = w.lo; v <= w1_hi; ++v) want.push_back({v, c});
        if (got != want) continue;  // nonconstant content, scaled into the image by the torus

        BlockSpan& span = block_span(p, qq, c);
        QVec vec(span.coords.size(), 0);
        for (const auto& [lbl, coef] : comp) vec[span.index.at(lbl)] = coef;
        if (!span.ech.member(std::move(vec))) return false;
      }
    }
  }
  return true;
}

}  // namespace soclelab
