#pragma once

#include "bwbverify/root_system.hpp"

#include <cstdint>
#include <vector>

namespace bwbverify {

/// A maximal parabolic P_k of the ambient group together with the derived
/// group of its Levi factor. The Levi diagram is the ambient diagram with
/// vertex k deleted; remaining vertices keep their relative order.
class ParabolicData {
 public:
  ParabolicData(RootSystem ambient, int marked_vertex);

  /// E6 / P2, the adjoint Grassmannian (Levi A5).
  static ParabolicData E6_P2();

  const RootSystem& ambient() const noexcept { return ambient_; }
  const RootSystem& levi() const noexcept { return levi_; }
  int marked_vertex() const noexcept { return marked_; }
  int rank() const noexcept { return ambient_.rank(); }

  /// Ambient vertex (!= k) -> Levi vertex, both 1-based.
  int levi_vertex(int ambient_vertex) const;
  /// Levi vertex -> ambient vertex.
  int ambient_vertex(int levi_vertex) const;

  /// w_k, the generator of the Picard group: O(1) = S^{w_k}.
  Weight line_generator() const;
  Weight zero() const { return ambient_.zero(); }

  /// Coefficients at all unmarked vertices are >= 0.
  bool is_levi_dominant(const Weight& mu) const;
  /// Throws DomainError unless mu is integral and Levi-dominant.
  void require_bundle_weight(const Weight& mu, const char* what) const;

  /// Dimension of the variety G/P (number of positive roots not in the Levi).
  int variety_dimension() const;

  /// Cache-key prefix identifying (ambient, k).
  std::string signature() const;

 private:
  RootSystem ambient_;
  RootSystem levi_;
  int marked_;
  std::vector<int> to_levi_;     // index: ambient vertex - 1, value: levi vertex or 0
  std::vector<int> to_ambient_;  // index: levi vertex - 1
};

struct LeviRestriction {
  Weight levi_weight;
  Rational charge;  // r_mu = <mu, w_k> / <w_k, w_k>
};

LeviRestriction restrict_levi(const ParabolicData& parab, const Weight& mu);

/// Levi weight -> ambient weight with coefficient 0 at the marked vertex.
Weight lift(const ParabolicData& parab, const Weight& levi_weight);

/// Levi-dominant element of the W_L-orbit of mu (reflections at unmarked vertices only).
Weight levi_dominant_representative(const ParabolicData& parab, const Weight& mu);

/// Highest weight of the dual bundle: -w_0^L(mu).
Weight dual_weight(const ParabolicData& parab, const Weight& mu);

/// Index r with omega_X = O(-r): the k-th coordinate of rho - w_0^L w_0 rho,
/// divided by <w_k, alpha_k>.
int canonical_index(const ParabolicData& parab);

/// Rank of S^mu = dimension of the Levi representation with highest weight mu'.
std::uint64_t rank_of_bundle(const ParabolicData& parab, const Weight& mu);

}  // namespace bwbverify
