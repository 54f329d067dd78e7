#pragma once

#include "bwbverify/levi.hpp"

#include <cstdint>
#include <vector>

namespace bwbverify {

/// Weakly decreasing row lengths; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const;  // number of boxes
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// Row i (0-based), 0 past the end.
  int row(int i) const noexcept { return i < length() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Multiset of highest weights with multiplicities.
using Decomposition = WeightMultiset;

/// SL_{n+1} convention: part_i = a_i + ... + a_n over n+1 rows.
Partition weight_to_partition(const Weight& lambda);
/// Inverse on partitions of at most n+1 rows; full columns of height n+1 are dropped.
Weight partition_to_weight(const Partition& p, int rank);

/// Littlewood-Richardson product of A_n irreducibles (n = weight length).
/// Memoized.
Decomposition lr_decompose(const Weight& lambda, const Weight& mu);

/// Partition-level LR coefficients restricted to at most `max_rows` rows.
std::vector<std::pair<Partition, std::uint64_t>> lr_product(const Partition& lambda, const Partition& mu, int max_rows);

/// Independent route: Freudenthal weight multiplicities of one factor, then
/// the Brauer-Klimyk reflection formula.
/// Throws DomainError when dim(lambda) * dim(mu) exceeds `dimension_cap`.
Decomposition lr_oracle(const RootSystem& sys, const Weight& lambda, const Weight& mu,
                        std::uint64_t dimension_cap = 1'000'000);

/// Freudenthal multiplicities of the weights of V(lambda) that are dominant.
WeightMultiset dominant_character(const RootSystem& sys, const Weight& lambda);
/// Every weight of V(lambda) with multiplicity.
WeightMultiset full_character(const RootSystem& sys, const Weight& lambda);

/// S^a (x) S^b on G/P: decompose the Levi parts, lift each summand and twist
/// it by (r_a + r_b - r_sigma) w_k. Requires a type-A Levi.
Decomposition tensor_bundles(const ParabolicData& parab, const Weight& a, const Weight& b);

}  // namespace bwbverify
