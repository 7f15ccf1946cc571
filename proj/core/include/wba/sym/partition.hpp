#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace wba {

/// Integer partition / Young diagram: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int n() const { return n_; }
  int height() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int row) const;  // 0-based row, 0 past the last row

  Partition conjugate() const;
  /// Hook length of the box in (row, col), both 0-based.
  int hook(int row, int col) const;
  /// True when every row of *this fits inside the same row of other.
  bool contained_in(const Partition& other) const;

  /// "[3,1,1]"; the empty partition prints as "[]".
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);

/// Partitions of alpha.n() + k that contain alpha (k boxes added anywhere).
std::vector<Partition> add_boxes(const Partition& alpha, int k);

/// Parses "[3,1,1]", "3,1,1" or "(3,1,1)".
Partition parse_partition(std::string_view text);

}  // namespace wba
