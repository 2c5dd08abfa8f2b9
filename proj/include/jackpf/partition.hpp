#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace jackpf {

/// Young diagram stored as its weakly decreasing positive row lengths.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  /// Number of nonempty rows.
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  /// Row i, 1-based; zero beyond the last row.
  int row(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Frobenius coordinates (P | Q): arms and legs of the diagonal boxes.
struct FrobeniusCoords {
  std::vector<int> P;
  std::vector<int> Q;

  int diagonal() const { return static_cast<int>(P.size()); }
  friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

Partition conjugate(const Partition& lambda);

/// (l1, l1, l2, l2, ...)
Partition double_union(const Partition& lambda);

FrobeniusCoords to_frobenius(const Partition& mu);

/// Throws InvalidArgument unless P, Q have equal length and are strictly
/// decreasing sequences of nonnegative integers.
Partition from_frobenius(const FrobeniusCoords& f);

inline constexpr int kDefaultEnumerationCap = 40;

/// All partitions of n in lexicographically decreasing order. Throws CapExceeded
/// when n > cap.
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap);

/// All partitions with at most max_size boxes, by size then lexicographically decreasing.
std::vector<Partition> enumerate_partitions_up_to(int max_size, int cap = kDefaultEnumerationCap);

/// "[3,1]"; the empty diagram is "[]".
std::string to_string(const Partition& lambda);
Partition parse_partition(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Partition& lambda);

}  // namespace jackpf
