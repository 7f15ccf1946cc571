#include "wba/sym/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "wba/util/error.hpp"

namespace wba {

Permutation Permutation::identity(int n) {
  if (n < 0) throw Error("permutation degree must be non-negative");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<int> zero_based(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t t = 0; t < images.size(); ++t) {
    const int v = images[t];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw Error("one-line notation is not a bijection on 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    zero_based[t] = v - 1;
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int a = cycle[i];
      if (a < 1 || a > n) {
        throw Error("cycle entry " + std::to_string(a) + " outside 1.." + std::to_string(n));
      }
      if (used[static_cast<std::size_t>(a - 1)]) {
        throw Error("cycles are not disjoint at " + std::to_string(a));
      }
      used[static_cast<std::size_t>(a - 1)] = true;
      const int b = cycle[(i + 1) % cycle.size()];
      p.images_[static_cast<std::size_t>(a - 1)] = b - 1;
    }
  }
  return p;
}

int Permutation::operator()(int site) const {
  if (site < 1 || site > degree()) throw Error("site " + std::to_string(site) + " out of range");
  return images_[static_cast<std::size_t>(site - 1)] + 1;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t t = 0; t < images_.size(); ++t) inv[static_cast<std::size_t>(images_[t])] = static_cast<int>(t);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t t = 0; t < images_.size(); ++t)
    if (images_[t] != static_cast<int>(t)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    std::size_t t = start;
    while (!seen[t]) {
      seen[t] = true;
      cycle.push_back(static_cast<int>(t) + 1);
      t = static_cast<std::size_t>(images_[t]);
    }
    if (cycle.size() >= 2) out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t t = start; !seen[t]; t = static_cast<std::size_t>(images_[t])) {
      seen[t] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

Permutation Permutation::extended(int n) const {
  if (n < degree()) throw Error("cannot shrink a permutation");
  std::vector<int> images = images_;
  for (int t = degree(); t < n; ++t) images.push_back(t);
  return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "id";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error("cannot compose permutations of degree " + std::to_string(p.degree()) + " and " +
                std::to_string(q.degree()));
  }
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int t = 0; t < p.degree(); ++t) images[static_cast<std::size_t>(t)] = p.image0(q.image0(t));
  return Permutation(std::move(images));
}

std::vector<Permutation> enumerate_group(int n) {
  if (n < 1 || n > 7) throw Error("enumerate_group supports 1 <= n <= 7, got " + std::to_string(n));
  std::vector<int> one(static_cast<std::size_t>(n));
  std::iota(one.begin(), one.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(one));
  } while (std::next_permutation(one.begin(), one.end()));
  return out;
}

Permutation parse_permutation(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.substr(i).starts_with("id")) {
    i += 2;
    skip_space();
    if (i != text.size()) throw Error("unexpected text after 'id': " + std::string(text));
    return Permutation::identity(n);
  }
  int max_label = 0;
  while (true) {
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '(') throw Error("expected '(' in permutation text: " + std::string(text));
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw Error("unbalanced '(' in: " + std::string(text));
    const std::string_view body = text.substr(i + 1, close - i - 1);
    i = close + 1;
    const bool separated = body.find_first_of(" ,\t") != std::string_view::npos;
    std::vector<int> cycle;
    if (separated) {
      std::string token;
      auto flush = [&] {
        if (!token.empty()) {
          cycle.push_back(std::stoi(token));
          token.clear();
        }
      };
      for (char ch : body) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
          token.push_back(ch);
        } else if (ch == ' ' || ch == ',' || ch == '\t') {
          flush();
        } else {
          throw Error("bad character in cycle: " + std::string(body));
        }
      }
      flush();
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw Error("bad character in cycle: " + std::string(body));
        cycle.push_back(ch - '0');
      }
    }
    for (int v : cycle) max_label = std::max(max_label, v);
    if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
  }
  if (n == 0) n = max_label;
  if (max_label > n) throw Error("cycle label " + std::to_string(max_label) + " exceeds degree " + std::to_string(n));
  return Permutation::from_cycles(n, cycles);
}

}  // namespace wba
