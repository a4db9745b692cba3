#include "soclelab/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace soclelab {

namespace {

std::vector<int> parse_block(std::string_view s) {
  std::vector<int> out;
  if (s.empty() || s == "-") return out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok(s.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed weight entry: " + tok);
    }
    if (used != tok.size()) throw std::invalid_argument("malformed weight entry: " + tok);
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Weight Weight::parse(std::string_view s) {
  size_t bar_pos = s.find('|');
  if (bar_pos == std::string_view::npos)
    throw std::invalid_argument("weight must contain '|' between the blocks");
  return Weight{parse_block(s.substr(0, bar_pos)), parse_block(s.substr(bar_pos + 1))};
}

std::string Weight::str() const {
  std::string out;
  for (size_t i = 0; i < even.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(even[i]);
  }
  out += '|';
  for (size_t i = 0; i < odd.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(odd[i]);
  }
  return out;
}

Weight rho(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("rho: negative rank");
  Weight out;
  for (int i = 0; i < m; ++i) out.even.push_back(m - 1 - i);
  for (int j = 0; j < n; ++j) out.odd.push_back(-j);
  return out;
}

BarLabel bar(const Weight& lambda) {
  BarLabel out;
  int m = lambda.m(), n = lambda.n();
  out.a.reserve(static_cast<size_t>(m));
  out.b.reserve(static_cast<size_t>(n));
  for (int i = 0; i < m; ++i) out.a.push_back(lambda.even[static_cast<size_t>(i)] + (m - 1 - i));
  for (int j = 0; j < n; ++j) out.b.push_back(-(lambda.odd[static_cast<size_t>(j)] - j));
  return out;
}

Weight unbar(const BarLabel& label) {
  Weight out;
  int m = label.m(), n = label.n();
  for (int i = 0; i < m; ++i) out.even.push_back(label.a[static_cast<size_t>(i)] - (m - 1 - i));
  for (int j = 0; j < n; ++j) out.odd.push_back(j - label.b[static_cast<size_t>(j)]);
  return out;
}

std::map<int, int> supp_multiset(const Weight& lambda) {
  BarLabel l = bar(lambda);
  std::map<int, int> out;
  for (int v : l.a) ++out[v];
  for (int v : l.b) ++out[v];
  return out;
}

int atypicality(const Weight& lambda) {
  BarLabel l = bar(lambda);
  std::map<int, int> ca, cb;
  for (int v : l.a) ++ca[v];
  for (int v : l.b) ++cb[v];
  int out = 0;
  for (const auto& [v, c] : ca) {
    auto it = cb.find(v);
    if (it != cb.end()) out += std::min(c, it->second);
  }
  return out;
}

bool is_dominant_label(const BarLabel& label) {
  for (size_t i = 1; i < label.a.size(); ++i)
    if (label.a[i] >= label.a[i - 1]) return false;
  for (size_t j = 1; j < label.b.size(); ++j)
    if (label.b[j] <= label.b[j - 1]) return false;
  return true;
}

bool is_dominant(const Weight& lambda) { return is_dominant_label(bar(lambda)); }

}  // namespace soclelab
