#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wba/dense/operator.hpp"
#include "wba/dense/site_subset.hpp"
#include "wba/sym/permutation.hpp"

namespace wba {

/// Perfect matching on the 2n endpoints of an n-site diagram. Endpoint
/// t-1 is the ket ("bottom") of site t, endpoint n+t-1 its bra ("top").
///
/// A permutation p joins ket_{p(t)} with bra_t, so the realization has
/// <i|p|j> = prod_t delta(i_{p(t)}, j_t). Transposing site s exchanges the
/// roles of ket_s and bra_s.
class WbaDiagram {
 public:
  WbaDiagram() = default;

  static WbaDiagram identity(int n);
  static WbaDiagram from_permutation(const Permutation& p, const SiteSubset& transposed = {});
  /// partner[e] for every endpoint; must be a fixed-point-free involution.
  static WbaDiagram from_partners(std::vector<int> partner);

  int n() const { return static_cast<int>(partner_.size() / 2); }
  int partner(int endpoint) const { return partner_[static_cast<std::size_t>(endpoint)]; }
  const std::vector<int>& partners() const { return partner_; }

  static int ket(int /*n*/, int site) { return site - 1; }
  static int bra(int n, int site) { return n + site - 1; }

  WbaDiagram transposed(const SiteSubset& sites) const;
  /// Same diagram on m >= n sites with vertical strands added on the right.
  WbaDiagram extended(int m) const;

  /// Canonical (p, S) with this == from_permutation(p, S): in every cycle of
  /// sites linked by the matching, the smallest site is left untransposed.
  std::pair<Permutation, SiteSubset> as_transposed_permutation() const;
  bool is_permutation() const { return as_transposed_permutation().second.empty(); }

  /// "(1 2 3 4)^T{4}"; "id" when there are no crossings or transposes.
  std::string to_string() const;

  auto operator<=>(const WbaDiagram&) const = default;
  bool operator==(const WbaDiagram&) const = default;

 private:
  explicit WbaDiagram(std::vector<int> partner) : partner_(std::move(partner)) {}
  std::vector<int> partner_;
};

struct DiagramProduct {
  WbaDiagram diagram;
  int loops = 0;
};

/// a·b with b applied first: a's bras are glued to b's kets, closed loops in
/// the middle are removed and counted, so realize(a) realize(b) =
/// d^loops realize(diagram).
DiagramProduct compose_diagrams(const WbaDiagram& a, const WbaDiagram& b);

/// Parses "(1 2 3 4)^T{4}", "(12)^T{2}", "(1 3)^{T2,3}" or a plain cycle
/// string. With n = 0 the site count is the largest label that appears.
WbaDiagram parse_diagram(std::string_view text, int n = 0);

/// 0/1 dense realization; throws SizeGuardError when d^n > size_guard.
DenseOperator realize(const WbaDiagram& diagram, int d, std::size_t size_guard);
DenseOperator realize(const WbaDiagram& diagram, int d);

}  // namespace wba
