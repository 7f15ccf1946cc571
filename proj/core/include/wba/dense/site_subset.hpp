#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace wba {

/// Sorted set of 1-based site labels.
class SiteSubset {
 public:
  SiteSubset() = default;
  SiteSubset(std::initializer_list<int> sites);
  explicit SiteSubset(std::vector<int> sites);

  /// {first, ..., last}; empty when last < first.
  static SiteSubset range(int first, int last);
  /// Decodes a bit mask: bit t-1 set means site t belongs to the set.
  static SiteSubset from_mask(unsigned mask, int n);

  const std::vector<int>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  bool contains(int site) const;
  /// Largest label, 0 for the empty set.
  int max_site() const { return sites_.empty() ? 0 : sites_.back(); }
  /// Throws unless every site lies in 1..n.
  void check_range(int n) const;
  SiteSubset complement(int n) const;

  auto begin() const { return sites_.begin(); }
  auto end() const { return sites_.end(); }

  /// "{1,3}".
  std::string to_string() const;

  bool operator==(const SiteSubset&) const = default;
  auto operator<=>(const SiteSubset&) const = default;

 private:
  std::vector<int> sites_;
};

/// Parses "1,3", "{1,3}", "13" (compact digits) or "" / "{}".
SiteSubset parse_site_subset(std::string_view text);

}  // namespace wba
