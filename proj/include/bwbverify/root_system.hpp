#pragma once

#include "bwbverify/errors.hpp"
#include "bwbverify/weight.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace bwbverify {

/// Simply-laced root system given by its Cartan matrix (Bourbaki vertex
/// order). Roots are normalized to <alpha, alpha> = 2, so fundamental weights
/// pair with simple roots as <w_i, alpha_j> = delta_ij and
/// <w_i, w_j> = (C^-1)_ij.
///
/// Copies share the immutable data and the lazily computed Weyl group order.
class RootSystem {
 public:
  RootSystem(std::string label, Eigen::MatrixXi cartan);

  static RootSystem E6();
  /// A_n, n >= 0 (A_0 is the empty system).
  static RootSystem A(int n);

  const std::string& label() const noexcept;
  int rank() const noexcept;
  const Eigen::MatrixXi& cartan() const noexcept;
  const Matrix<Rational>& inverse_cartan() const noexcept;
  /// Canonical text of the Cartan matrix; identifies the system in memo keys.
  const std::string& signature() const noexcept;

  /// Positive roots in fundamental coordinates.
  const std::vector<Weight>& positive_roots() const noexcept;
  /// Same roots, same order, as integer coefficients over the simple roots.
  const std::vector<Eigen::VectorXi>& positive_roots_root_basis() const noexcept;

  Weight simple_root(int vertex) const;
  Weight fundamental_weight(int vertex) const;
  Weight zero() const;
  /// Sum of the fundamental weights.
  Weight rho() const;
  /// Coordinates over the simple roots: lambda * C^-1.
  Weight to_root_basis(const Weight& lambda) const;

  /// Order of W, by breadth-first enumeration of the orbit of rho. Computed once.
  std::uint64_t weyl_group_order() const;

  void check_vertex(int vertex) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.signature() == b.signature(); }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Reflection s_j(lambda) = lambda - lambda_j * alpha_j. Works for any scalar.
template <typename Derived>
typename Derived::PlainObject simple_reflection(const RootSystem& sys, int vertex,
                                                const Eigen::MatrixBase<Derived>& lambda) {
  sys.check_vertex(vertex);
  if (lambda.size() != sys.rank()) throw DomainError("weight length does not match rank of " + sys.label());
  using Scalar = typename Derived::Scalar;
  typename Derived::PlainObject out = lambda;
  const Scalar c = lambda(vertex - 1);
  for (int i = 0; i < sys.rank(); ++i) {
    const int a = sys.cartan()(vertex - 1, i);
    if (a != 0) out(i) -= c * Scalar(a);
  }
  return out;
}

/// In-place variant for enumeration loops.
template <typename Derived>
void reflect_in_place(const RootSystem& sys, int vertex, Eigen::MatrixBase<Derived>& lambda) {
  using Scalar = typename Derived::Scalar;
  const Scalar c = lambda(vertex - 1);
  for (int i = 0; i < sys.rank(); ++i) {
    const int a = sys.cartan()(vertex - 1, i);
    if (a != 0) lambda(i) -= c * Scalar(a);
  }
}

Rational inner_product(const RootSystem& sys, const Weight& lambda, const Weight& mu);

/// Dominant element of the W-orbit of lambda, reached by reflecting at the
/// lowest-index negative coordinate. `word` (optional) receives the vertices used.
Weight dominant_representative(const RootSystem& sys, const Weight& lambda, std::vector<int>* word = nullptr);

/// lambda -> -w_0(lambda): the highest weight of the dual representation.
Weight dual_dominant(const RootSystem& sys, const Weight& lambda);

std::vector<Weight> positive_roots(const RootSystem& sys);
std::uint64_t weyl_group_order(const RootSystem& sys);

/// Weyl dimension formula. lambda must be dominant and integral.
std::uint64_t weyl_dim(const RootSystem& sys, const Weight& lambda);

/// True iff the Cartan matrix is the A_rank path 1-2-...-rank.
bool is_type_a(const RootSystem& sys);

}  // namespace bwbverify
