#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace symdom {

// Integer partition: weakly decreasing nonnegative parts, trailing zeros
// stripped. The empty partition is the unit for most of the algebra here.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition rectangle(int part, int count);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  // i is 0-based; rows beyond the length read as 0.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  // mu + n(1,...,1) with `rank` rows (rows beyond length(mu) become n).
  Partition plus_boxes(int n, int rank) const;
  // mu +/- eps_row (0-based row); nullopt when the result is not a partition.
  std::optional<Partition> bump(int row, int delta) const;
  Partition conjugate() const;
  // Dominance order; both partitions must have equal weight.
  bool dominates(const Partition& other) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string to_string() const;  // "(2,1)"; "()" for the empty partition

 private:
  std::vector<int> parts_;
};

std::vector<Partition> partitions_of_weight(int w, int max_len);
// All partitions with weight in [0, max_weight], length <= max_len, ordered
// by weight then reverse-lexicographically (a dominance-compatible order).
std::vector<Partition> partitions_up_to(int max_weight, int max_len);

}  // namespace symdom
