#include "wba/algebra/diagram.hpp"

#include <cctype>
#include <numeric>

#include "wba/util/error.hpp"
#include "wba/util/tolerances.hpp"

namespace wba {

WbaDiagram WbaDiagram::identity(int n) { return from_permutation(Permutation::identity(n)); }

WbaDiagram WbaDiagram::from_permutation(const Permutation& p, const SiteSubset& transposed) {
  const int n = p.degree();
  transposed.check_range(n);
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int t = 0; t < n; ++t) {
    const int k = p.image0(t);
    partner[static_cast<std::size_t>(k)] = n + t;
    partner[static_cast<std::size_t>(n + t)] = k;
  }
  return WbaDiagram(std::move(partner)).transposed(transposed);
}

WbaDiagram WbaDiagram::from_partners(std::vector<int> partner) {
  const int size = static_cast<int>(partner.size());
  if (size % 2 != 0) throw Error("diagram needs an even number of endpoints");
  for (int e = 0; e < size; ++e) {
    const int q = partner[static_cast<std::size_t>(e)];
    if (q < 0 || q >= size || q == e || partner[static_cast<std::size_t>(q)] != e) {
      throw Error("diagram partners must form a fixed-point-free involution");
    }
  }
  return WbaDiagram(std::move(partner));
}

WbaDiagram WbaDiagram::transposed(const SiteSubset& sites) const {
  const int m = n();
  sites.check_range(m);
  if (sites.empty()) return *this;
  // relabel[e]: where endpoint e goes after swapping ket/bra on the sites.
  std::vector<int> relabel(partner_.size());
  std::iota(relabel.begin(), relabel.end(), 0);
  for (int s : sites) std::swap(relabel[static_cast<std::size_t>(s - 1)], relabel[static_cast<std::size_t>(m + s - 1)]);
  std::vector<int> out(partner_.size());
  for (std::size_t e = 0; e < partner_.size(); ++e) {
    out[static_cast<std::size_t>(relabel[e])] = relabel[static_cast<std::size_t>(partner_[e])];
  }
  return WbaDiagram(std::move(out));
}

WbaDiagram WbaDiagram::extended(int m) const {
  const int n0 = n();
  if (m < n0) throw Error("cannot shrink a diagram");
  std::vector<int> out(static_cast<std::size_t>(2 * m));
  auto remap = [&](int e) { return e < n0 ? e : m + (e - n0); };
  for (int e = 0; e < 2 * n0; ++e) out[static_cast<std::size_t>(remap(e))] = remap(partner_[static_cast<std::size_t>(e)]);
  for (int s = n0; s < m; ++s) {
    out[static_cast<std::size_t>(s)] = m + s;
    out[static_cast<std::size_t>(m + s)] = s;
  }
  return WbaDiagram(std::move(out));
}

std::pair<Permutation, SiteSubset> WbaDiagram::as_transposed_permutation() const {
  const int m = n();
  std::vector<int> flip(static_cast<std::size_t>(m), -1);
  auto site_of = [m](int e) { return e < m ? e : e - m; };
  auto is_ket = [m](int e) { return e < m; };
  for (int s = 0; s < m; ++s) {
    if (flip[static_cast<std::size_t>(s)] != -1) continue;
    flip[static_cast<std::size_t>(s)] = 0;
    // Leave s through its (unflipped) ket and walk the site cycle.
    int leave = s;
    while (true) {
      const int arrive = partner_[static_cast<std::size_t>(leave)];
      const int site = site_of(arrive);
      if (site == s) break;
      // The arrival endpoint must act as a bra.
      flip[static_cast<std::size_t>(site)] = is_ket(arrive) ? 1 : 0;
      leave = is_ket(arrive) ? m + site : site;
    }
  }
  std::vector<int> transposed;
  for (int s = 0; s < m; ++s)
    if (flip[static_cast<std::size_t>(s)] == 1) transposed.push_back(s + 1);
  const SiteSubset set(transposed);
  const WbaDiagram plain = this->transposed(set);
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    const int k = plain.partner_[static_cast<std::size_t>(m + t)];
    if (!is_ket(k)) throw Error("internal: diagram did not untangle into a permutation");
    images[static_cast<std::size_t>(t)] = k + 1;
  }
  return {Permutation::from_one_line(images), set};
}

std::string WbaDiagram::to_string() const {
  const auto [p, s] = as_transposed_permutation();
  std::string out = p.to_string();
  if (!s.empty()) {
    out += "^T{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(s.sites()[i]);
    }
    out += "}";
  }
  return out;
}

DiagramProduct compose_diagrams(const WbaDiagram& a, const WbaDiagram& b) {
  const int n = a.n();
  if (b.n() != n) throw Error("compose_diagrams: site counts differ");
  // Nodes 0..2n-1 belong to a, 2n..4n-1 to b. Outer endpoints: a's kets and
  // b's bras. a's bra_t is glued to b's ket_t.
  const int size = 2 * n;
  auto across = [&](int node) {
    // Middle node -> the node it is glued to on the other diagram.
    return node < size ? size + (node - n) : n + (node - size);
  };
  auto is_outer = [&](int node) { return node < n || node >= size + n; };
  auto follow = [&](int node) {
    return node < size ? a.partner(node) : size + b.partner(node - size);
  };
  auto outer_label = [&](int node) { return node < n ? node : node - size; };
  std::vector<char> seen(static_cast<std::size_t>(2 * size), 0);
  std::vector<int> partner(static_cast<std::size_t>(size), -1);
  for (int start = 0; start < 2 * size; ++start) {
    if (!is_outer(start) || seen[static_cast<std::size_t>(start)]) continue;
    int node = start;
    seen[static_cast<std::size_t>(node)] = 1;
    while (true) {
      node = follow(node);
      seen[static_cast<std::size_t>(node)] = 1;
      if (is_outer(node)) break;
      node = across(node);
      seen[static_cast<std::size_t>(node)] = 1;
    }
    partner[static_cast<std::size_t>(outer_label(start))] = outer_label(node);
    partner[static_cast<std::size_t>(outer_label(node))] = outer_label(start);
  }
  int loops = 0;
  for (int start = 0; start < 2 * size; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++loops;
    int node = start;
    while (!seen[static_cast<std::size_t>(node)]) {
      seen[static_cast<std::size_t>(node)] = 1;
      node = follow(node);
      seen[static_cast<std::size_t>(node)] = 1;
      node = across(node);
    }
  }
  return {WbaDiagram::from_partners(std::move(partner)), loops};
}

WbaDiagram parse_diagram(std::string_view text, int n) {
  const auto caret = text.find('^');
  const std::string_view perm_text = text.substr(0, caret);
  SiteSubset sites;
  if (caret != std::string_view::npos) {
    std::string rest;
    for (char c : text.substr(caret + 1))
      if (c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c))) rest += c;
    if (rest.empty() || (rest[0] != 'T' && rest[0] != 't')) {
      throw Error("bad diagram '" + std::string(text) + "': expected ^T{sites}");
    }
    sites = parse_site_subset(std::string_view(rest).substr(1));
  }
  Permutation p = parse_permutation(perm_text, 0);
  const int needed = std::max({n, p.degree(), sites.max_site()});
  if (n != 0 && needed > n) throw Error("diagram '" + std::string(text) + "' uses sites beyond n=" + std::to_string(n));
  return WbaDiagram::from_permutation(p.extended(needed), sites);
}

DenseOperator realize(const WbaDiagram& diagram, int d, std::size_t size_guard) {
  const int n = diagram.n();
  const std::size_t dim = checked_dimension(d, n);
  if (dim > size_guard) {
    throw SizeGuardError("d^n = " + std::to_string(dim) + " exceeds the size guard " + std::to_string(size_guard));
  }
  // One free index per line; every assignment contributes a single 1.
  std::vector<std::pair<int, int>> lines;
  for (int e = 0; e < 2 * n; ++e)
    if (e < diagram.partner(e)) lines.emplace_back(e, diagram.partner(e));
  std::vector<std::size_t> weight(static_cast<std::size_t>(2 * n));
  std::size_t w = 1;
  for (int t = n - 1; t >= 0; --t) {
    weight[static_cast<std::size_t>(t)] = w;
    weight[static_cast<std::size_t>(n + t)] = w;
    w *= static_cast<std::size_t>(d);
  }
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  std::vector<int> value(lines.size(), 0);
  for (std::size_t count = 0; count < dim; ++count) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      for (int e : {lines[l].first, lines[l].second}) {
        const std::size_t add = static_cast<std::size_t>(value[l]) * weight[static_cast<std::size_t>(e)];
        if (e < n) row += add;
        else col += add;
      }
    }
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      if (++value[l] < d) break;
      value[l] = 0;
    }
  }
  return {n, d, std::move(m)};
}

DenseOperator realize(const WbaDiagram& diagram, int d) { return realize(diagram, d, default_size_guard()); }

}  // namespace wba
