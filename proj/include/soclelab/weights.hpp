#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace soclelab {

/// Integral weight for the (m|n) pair of blocks: even entries then odd entries.
struct Weight {
  std::vector<int> even, odd;

  int m() const { return static_cast<int>(even.size()); }
  int n() const { return static_cast<int>(odd.size()); }

  /// Parses "a1,...,am|b1,...,bn"; an empty (or "-") side is a zero-length block.
  static Weight parse(std::string_view s);
  std::string str() const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Shifted-coordinate label: a holds the shifted even entries, b the negated shifted odd
/// entries, so both blocks live on the same integer axis.
struct BarLabel {
  std::vector<int> a, b;

  int m() const { return static_cast<int>(a.size()); }
  int n() const { return static_cast<int>(b.size()); }

  friend std::strong_ordering operator<=>(const BarLabel&, const BarLabel&) = default;
};

Weight rho(int m, int n);
BarLabel bar(const Weight& lambda);
Weight unbar(const BarLabel& label);

/// Multiset of all label entries, as value -> multiplicity.
std::map<int, int> supp_multiset(const Weight& lambda);

/// Size of the multiset intersection of the two entry blocks of the label.
int atypicality(const Weight& lambda);

/// Strictly decreasing a-block and strictly increasing b-block.
bool is_dominant_label(const BarLabel& label);
bool is_dominant(const Weight& lambda);

}  // namespace soclelab
