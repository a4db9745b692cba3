#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace soclelab {

/// Integer partition: weakly decreasing positive parts, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses the CLI form "3,2,1"; "-" (or an empty string) is the empty partition.
  static Partition parse(std::string_view s);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }                       // number of boxes
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {                                  // 0-based, 0 past the end
    return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }
  bool empty() const { return parts_.empty(); }
  bool contains(const Partition& mu) const;                // mu inside this diagram
  Partition conjugate() const;
  std::string str() const;

  friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
    return x.parts_ <=> y.parts_;
  }
  friend bool operator==(const Partition& x, const Partition& y) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);   // all partitions of 0..n, by size then lex

/// Dimension of the irreducible symmetric-group representation indexed by the partition
/// (hook length formula).
mpz_class sym_group_dim(const Partition& lambda);

}  // namespace soclelab
