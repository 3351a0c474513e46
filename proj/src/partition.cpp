#include "sbt/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sbt {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxPoints)
    throw ValidationError("size " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxPoints));
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int n) {
  check_size(n);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw ValidationError("generator index out of range");
  return identity(n).times_simple(i);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  check_size(n);
  std::vector<bool> seen(n, false);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) {
    if (images[i] < 0 || images[i] >= n || seen[images[i]])
      throw ValidationError("not a permutation");
    seen[images[i]] = true;
    p.img_[i] = static_cast<std::uint8_t>(images[i]);
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& w, const Permutation& v) {
  if (w.n_ != v.n_) throw ValidationError("permutation size mismatch");
  Permutation p;
  p.n_ = w.n_;
  for (int i = 0; i < w.n_; ++i) p.img_[i] = w.img_[v.img_[i]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::times_simple(int i) const {
  Permutation p = *this;
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) inv += img_[i] > img_[j];
  }
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  // Peel right descents: w = (w s_i) s_i.
  std::vector<int> word;
  Permutation p = *this;
  bool found = true;
  while (found) {
    found = false;
    for (int i = 1; i < n_; ++i) {
      if (p.has_right_descent(i)) {
        word.push_back(i);
        p = p.times_simple(i);
        found = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation Permutation::extended(int n) const {
  check_size(n);
  Permutation p = *this;
  for (int i = n_; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
  p.n_ = static_cast<std::uint8_t>(n);
  return p;
}

Permutation Permutation::restricted() const {
  if (n_ == 0 || img_[n_ - 1] != n_ - 1)
    throw ValidationError("restriction of a permutation moving the last point");
  Permutation p = *this;
  --p.n_;
  p.img_[p.n_] = 0;
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < n_; ++i) out << (i ? " " : "") << img_[i] + 1;
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------
// SetPartition

SetPartition SetPartition::singletons(int n) {
  check_size(n);
  SetPartition p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.code_[i] = static_cast<std::uint8_t>(i);
  return p;
}

SetPartition SetPartition::single_block(int n) {
  check_size(n);
  SetPartition p;
  p.n_ = static_cast<std::uint8_t>(n);
  return p;
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  check_size(n);
  SetPartition p;
  p.n_ = static_cast<std::uint8_t>(n);
  std::vector<std::pair<int, int>> seen;  // label -> block number
  for (int i = 0; i < n; ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& e) { return e.first == labels[i]; });
    int block = 0;
    if (it == seen.end()) {
      block = static_cast<int>(seen.size());
      seen.emplace_back(labels[i], block);
    } else {
      block = it->second;
    }
    p.code_[i] = static_cast<std::uint8_t>(block);
  }
  return p;
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  check_size(n);
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& block : blocks) {
    for (int point : block) {
      if (point < 0 || point >= n) throw ValidationError("partition point out of range");
      if (used[point]) throw ValidationError("point listed in two blocks");
      used[point] = true;
      labels[point] = n + block.front();
    }
  }
  return from_labels(labels);
}

SetPartition SetPartition::pair(int n, int i, int j) { return from_blocks(n, {{i, j}}); }

int SetPartition::num_blocks() const {
  int m = 0;
  for (int i = 0; i < n_; ++i) m = std::max(m, code_[i] + 1);
  return m;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks());
  for (int i = 0; i < n_; ++i) out[code_[i]].push_back(i);
  return out;
}

std::vector<int> SetPartition::block_of(int point) const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (code_[i] == code_[point]) out.push_back(i);
  }
  return out;
}

SetPartition SetPartition::join(const SetPartition& other) const {
  if (n_ != other.n_) throw ValidationError("partition size mismatch in join");
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  std::array<int, kMaxPoints> first_a;
  std::array<int, kMaxPoints> first_b;
  first_a.fill(-1);
  first_b.fill(-1);
  for (int i = 0; i < n_; ++i) {
    for (auto [code, first] : {std::pair{code_[i], &first_a}, std::pair{other.code_[i], &first_b}}) {
      int& f = (*first)[code];
      if (f < 0) {
        f = i;
      } else {
        const int r1 = find_root(parent, f);
        const int r2 = find_root(parent, i);
        if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
      }
    }
  }
  std::vector<int> labels(n_);
  for (int i = 0; i < n_; ++i) labels[i] = find_root(parent, i);
  return from_labels(labels);
}

SetPartition SetPartition::apply(const Permutation& w) const {
  if (w.size() != n_) throw ValidationError("permutation size mismatch in action");
  std::vector<int> labels(n_);
  for (int i = 0; i < n_; ++i) labels[w(i)] = code_[i];
  return from_labels(labels);
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (n_ != coarser.n_) throw ValidationError("partition size mismatch");
  return join(coarser) == coarser;
}

SetPartition SetPartition::plus() const {
  check_size(n_ + 1);
  SetPartition p = *this;
  p.code_[n_] = static_cast<std::uint8_t>(num_blocks());
  ++p.n_;
  return p;
}

SetPartition SetPartition::merge(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw ValidationError("merge index out of range");
  std::vector<int> labels = code();
  const int from = code_[j];
  for (int& l : labels) {
    if (l == from) l = code_[i];
  }
  return from_labels(labels);
}

SetPartition SetPartition::drop(int j) const {
  if (j < 0 || j >= n_) throw ValidationError("drop index out of range");
  std::vector<int> labels = code();
  labels.erase(labels.begin() + j);
  return from_labels(labels);
}

SetPartition SetPartition::attach(int i) const {
  if (i < 0 || i >= n_) throw ValidationError("attach index out of range");
  check_size(n_ + 1);
  SetPartition p = *this;
  p.code_[n_] = code_[i];
  ++p.n_;
  return p;
}

SetPartition SetPartition::star(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw ValidationError("star index out of range");
  if (i == j) return plus();
  return drop(std::max(i, j));
}

SetPartition SetPartition::restricted() const {
  if (n_ == 0) throw ValidationError("restriction of the empty partition");
  return drop(n_ - 1);
}

SetPartition SetPartition::extended(int n) const {
  check_size(n);
  SetPartition p = *this;
  for (int i = n_; i < n; ++i) p = p.plus();
  return p;
}

std::vector<SetPartition> SetPartition::enumerate(int n) {
  check_size(n);
  std::vector<SetPartition> out;
  SetPartition p;
  p.n_ = static_cast<std::uint8_t>(n);
  if (n == 0) {
    out.push_back(p);
    return out;
  }
  // Restricted-growth strings in lexicographic order.
  std::vector<int> code(n, 0);
  std::vector<int> max_prefix(n, 0);  // max(code[0..i-1])
  while (true) {
    for (int i = 0; i < n; ++i) p.code_[i] = static_cast<std::uint8_t>(code[i]);
    out.push_back(p);
    int i = n - 1;
    while (i > 0 && code[i] == max_prefix[i] + 1) --i;
    if (i == 0) break;
    ++code[i];
    for (int k = i + 1; k < n; ++k) {
      code[k] = 0;
      max_prefix[k] = std::max(max_prefix[k - 1], code[k - 1]);
    }
  }
  return out;
}

SetPartition SetPartition::parse(std::string_view text, int n) {
  check_size(n);
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<std::vector<int>> blocks;
  if (text.empty() || text == "-") return singletons(n);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t bar = text.find('|', start);
    if (bar == std::string_view::npos) bar = text.size();
    std::string_view block_text = trim(text.substr(start, bar - start));
    if (block_text.empty()) throw ParseError("empty block in partition '" + std::string(text) + "'");
    std::vector<int> block;
    std::size_t bstart = 0;
    while (bstart <= block_text.size()) {
      std::size_t comma = block_text.find(',', bstart);
      if (comma == std::string_view::npos) comma = block_text.size();
      std::string_view item = trim(block_text.substr(bstart, comma - bstart));
      if (item.empty() || !std::all_of(item.begin(), item.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad partition member '" + std::string(item) + "'");
      const int point = std::stoi(std::string(item));
      if (point < 1 || point > n)
        throw ValidationError("partition member " + std::to_string(point) + " outside 1.." +
                              std::to_string(n));
      block.push_back(point - 1);
      bstart = comma + 1;
    }
    blocks.push_back(std::move(block));
    start = bar + 1;
  }
  return from_blocks(n, blocks);
}

std::string SetPartition::to_string() const {
  std::string out;
  for (const auto& block : blocks()) {
    if (block.size() < 2) continue;
    if (!out.empty()) out += '|';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(block[k] + 1);
    }
  }
  return out.empty() ? "-" : out;
}

}  // namespace sbt
