#include "soclelab/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace soclelab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view s) {
  if (s.empty() || s == "-") return Partition{};
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    if (tok.empty()) throw std::invalid_argument("malformed partition: empty entry");
    size_t used = 0;
    int v;
    try {
      v = std::stoi(std::string(tok), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition entry: " + std::string(tok));
    }
    if (used != tok.size()) throw std::invalid_argument("malformed partition entry: " + std::string(tok));
    if (v < 0) throw std::invalid_argument("partition parts must be nonnegative");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[static_cast<size_t>(i)] > parts_[static_cast<size_t>(i)]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[static_cast<size_t>(j)];
  return Partition(std::move(out));
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void gen_partitions(int remaining, int cap, std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, cap); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n, acc, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto pk = partitions_of(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

mpz_class sym_group_dim(const Partition& lambda) {
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
  Partition conj = lambda.conjugate();
  mpz_class hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j)
      hooks *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;
  return num / hooks;  // exact
}

}  // namespace soclelab
