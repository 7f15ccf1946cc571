#include "wba/dense/operator.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>

#include "wba/dense/site_subset.hpp"
#include "wba/util/error.hpp"
#include "wba/util/tolerances.hpp"

namespace wba {

std::size_t default_size_guard() {
  static const std::size_t guard = [] {
    const char* env = std::getenv("WBA_SIZE_GUARD");
    if (env == nullptr) return tol::kDefaultSizeGuard;
    std::size_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return tol::kDefaultSizeGuard;
    return value;
  }();
  return guard;
}

std::size_t checked_dimension(int d, int n) {
  if (d < 1) throw Error("local dimension must be at least 1, got " + std::to_string(d));
  if (n < 0) throw Error("site count must be non-negative, got " + std::to_string(n));
  std::size_t dim = 1;
  for (int t = 0; t < n; ++t) {
    if (dim > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(d)) {
      throw SizeGuardError("d^n overflows for d=" + std::to_string(d) + ", n=" + std::to_string(n));
    }
    dim *= static_cast<std::size_t>(d);
  }
  return dim;
}

DenseOperator::DenseOperator(int n, int d) : n_(n), d_(d) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(d, n));
  m_ = Matrix::Zero(dim, dim);
}

DenseOperator::DenseOperator(int n, int d, Matrix entries) : n_(n), d_(d), m_(std::move(entries)) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(d, n));
  if (m_.rows() != dim || m_.cols() != dim) {
    throw Error("operator on " + std::to_string(n) + " sites of dimension " + std::to_string(d) +
                " must be " + std::to_string(dim) + "x" + std::to_string(dim) + ", got " +
                std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
  }
}

DenseOperator DenseOperator::identity(int n, int d) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(d, n));
  return {n, d, Matrix::Identity(dim, dim)};
}

DenseOperator DenseOperator::single_site(Matrix entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) throw Error("single-site operator must be square");
  const int d = static_cast<int>(entries.rows());
  return {1, d, std::move(entries)};
}

bool DenseOperator::is_hermitian(double tol) const { return sup_norm(m_ - m_.adjoint()) <= tol; }

void DenseOperator::check_shape(const DenseOperator& other) const {
  if (other.n_ != n_ || other.d_ != d_) {
    throw Error("operator shape mismatch: (n=" + std::to_string(n_) + ", d=" + std::to_string(d_) + ") vs (n=" +
                std::to_string(other.n_) + ", d=" + std::to_string(other.d_) + ")");
  }
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
  check_shape(other);
  m_ += other.m_;
  return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& other) {
  check_shape(other);
  m_ -= other.m_;
  return *this;
}

DenseOperator& DenseOperator::operator*=(Complex s) {
  m_ *= s;
  return *this;
}

DenseOperator operator+(DenseOperator a, const DenseOperator& b) { return a += b; }
DenseOperator operator-(DenseOperator a, const DenseOperator& b) { return a -= b; }
DenseOperator operator*(Complex s, DenseOperator a) { return a *= s; }

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.n() != b.n() || a.d() != b.d()) throw Error("operator product shape mismatch");
  return {a.n(), a.d(), a.matrix() * b.matrix()};
}

double sup_norm(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }
double sup_norm(const DenseOperator& a) { return sup_norm(a.matrix()); }

double sup_distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) throw Error("sup_distance: dimension mismatch");
  return sup_norm(a.matrix() - b.matrix());
}

std::vector<int> unpack_index(std::size_t index, int n, int d) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int t = n - 1; t >= 0; --t) {
    digits[static_cast<std::size_t>(t)] = static_cast<int>(index % static_cast<std::size_t>(d));
    index /= static_cast<std::size_t>(d);
  }
  return digits;
}

std::size_t pack_index(const std::vector<int>& digits, int d) {
  std::size_t index = 0;
  for (int v : digits) index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(v);
  return index;
}

// SiteSubset

SiteSubset::SiteSubset(std::initializer_list<int> sites) : SiteSubset(std::vector<int>(sites)) {}

SiteSubset::SiteSubset(std::vector<int> sites) : sites_(std::move(sites)) {
  std::sort(sites_.begin(), sites_.end());
  if (std::adjacent_find(sites_.begin(), sites_.end()) != sites_.end()) throw Error("duplicate site in subset");
  if (!sites_.empty() && sites_.front() < 1) throw Error("sites are 1-based, got " + std::to_string(sites_.front()));
}

SiteSubset SiteSubset::range(int first, int last) {
  std::vector<int> s;
  for (int t = first; t <= last; ++t) s.push_back(t);
  return SiteSubset(std::move(s));
}

SiteSubset SiteSubset::from_mask(unsigned mask, int n) {
  std::vector<int> s;
  for (int t = 1; t <= n; ++t)
    if (mask & (1u << (t - 1))) s.push_back(t);
  return SiteSubset(std::move(s));
}

bool SiteSubset::contains(int site) const { return std::binary_search(sites_.begin(), sites_.end(), site); }

void SiteSubset::check_range(int n) const {
  if (!sites_.empty() && sites_.back() > n) {
    throw Error("site " + std::to_string(sites_.back()) + " out of range 1.." + std::to_string(n));
  }
}

SiteSubset SiteSubset::complement(int n) const {
  check_range(n);
  std::vector<int> s;
  for (int t = 1; t <= n; ++t)
    if (!contains(t)) s.push_back(t);
  return SiteSubset(std::move(s));
}

std::string SiteSubset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sites_[i]);
  }
  return out + "}";
}

SiteSubset parse_site_subset(std::string_view text) {
  std::vector<int> sites;
  const bool has_separator = text.find_first_of(", ") != std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '{' || c == '}' || c == ',' || c == ' ') {
      ++i;
      continue;
    }
    if (c < '0' || c > '9') throw Error("bad site list '" + std::string(text) + "'");
    if (!has_separator) {
      sites.push_back(c - '0');
      ++i;
      continue;
    }
    int value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') value = value * 10 + (text[i++] - '0');
    sites.push_back(value);
  }
  return SiteSubset(std::move(sites));
}

}  // namespace wba
