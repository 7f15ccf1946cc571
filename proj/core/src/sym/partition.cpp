#include "wba/sym/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "wba/util/error.hpp"

namespace wba {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw Error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

int Partition::operator[](int row) const {
  if (row < 0) throw Error("negative partition row");
  return row < height() ? parts_[static_cast<std::size_t>(row)] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    for (int c = 0; c < parts_.front(); ++c) {
      int len = 0;
      while (len < height() && parts_[static_cast<std::size_t>(len)] > c) ++len;
      cols.push_back(len);
    }
  }
  return Partition(std::move(cols));
}

int Partition::hook(int row, int col) const {
  if (row < 0 || row >= height() || col < 0 || col >= (*this)[row]) throw Error("hook outside diagram");
  int below = 0;
  for (int r = row + 1; r < height() && (*this)[r] > col; ++r) ++below;
  return (*this)[row] - col + below;
}

bool Partition::contained_in(const Partition& other) const {
  if (height() > other.height()) return false;
  for (int r = 0; r < height(); ++r)
    if ((*this)[r] > other[r]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> add_boxes(const Partition& alpha, int k) {
  if (k < 0) throw Error("cannot add a negative number of boxes");
  std::vector<Partition> out;
  for (const auto& mu : partitions_of(alpha.n() + k))
    if (alpha.contained_in(mu)) out.push_back(mu);
  return out;
}

Partition parse_partition(std::string_view text) {
  const std::string original(text);
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && (text.front() == '[' || text.front() == '(')) {
    const char close = text.front() == '[' ? ']' : ')';
    if (text.size() < 2 || text.back() != close) throw Error("unbalanced brackets in partition text: " + original);
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      parts.push_back(std::stoi(token));
      token.clear();
    }
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      token.push_back(ch);
    } else if (ch == ',' || ch == ' ') {
      flush();
    } else {
      throw Error("bad character in partition text: " + original);
    }
  }
  flush();
  return Partition(std::move(parts));
}

}  // namespace wba
