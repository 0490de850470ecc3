#include "symdom/partition.hpp"

#include "symdom/errors.hpp"

#include <algorithm>
#include <numeric>

namespace symdom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ParameterError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ParameterError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::rectangle(int part, int count) {
  if (part < 0 || count < 0) throw ParameterError("invalid rectangle partition");
  if (part == 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::plus_boxes(int n, int rank) const {
  if (rank < length()) throw ParameterError("plus_boxes rank below partition length");
  std::vector<int> p(static_cast<std::size_t>(rank), n);
  for (int i = 0; i < length(); ++i) p[static_cast<std::size_t>(i)] += part(i);
  return Partition(std::move(p));
}

std::optional<Partition> Partition::bump(int row, int delta) const {
  if (row < 0) return std::nullopt;
  std::vector<int> p = parts_;
  if (row >= length()) p.resize(static_cast<std::size_t>(row) + 1, 0);
  p[static_cast<std::size_t>(row)] += delta;
  if (p[static_cast<std::size_t>(row)] < 0) return std::nullopt;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) return std::nullopt;
  return Partition(std::move(p));
}

Partition Partition::conjugate() const {
  if (empty()) return Partition();
  std::vector<int> c(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

bool Partition::dominates(const Partition& other) const {
  int run_a = 0, run_b = 0;
  int n = std::max(length(), other.length());
  for (int i = 0; i < n; ++i) {
    run_a += part(i);
    run_b += other.part(i);
    if (run_a < run_b) return false;
  }
  return run_a == run_b;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (int i = 0; i < length(); ++i) {
    if (i) s += ",";
    s += std::to_string(part(i));
  }
  return s + ")";
}

namespace {
void gen(int remaining, int max_part, int max_len, std::vector<int>& acc,
         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen(remaining - p, p, max_len - 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of_weight(int w, int max_len) {
  std::vector<Partition> out;
  if (w < 0) return out;
  std::vector<int> acc;
  gen(w, w, max_len, acc, out);
  // lexicographically decreasing first parts come first already; make the
  // dominance-compatible order explicit
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.parts() > b.parts();
  });
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_len) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto ps = partitions_of_weight(w, max_len);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

}  // namespace symdom
