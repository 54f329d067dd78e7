#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>

namespace bwbverify {

using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Weight in the fundamental-weight basis: coeffs(i) multiplies w_{i+1}.
using Weight = Vector<Rational>;
/// Integral weight used by the hot enumeration loops.
using IntWeight = Vector<long long>;

Weight make_weight(std::initializer_list<long long> coeffs);
Weight zero_weight(int rank);
/// Fundamental weight w_vertex (1-based vertex).
Weight fundamental(int rank, int vertex);

bool is_integer(const Rational& q);
bool is_integral(const Weight& w);
bool is_dominant(const Weight& w);
bool is_regular_dominant(const Weight& w);

/// Throws DomainError when w is not integral or a coordinate does not fit in 32 bits.
IntWeight to_int_weight(const Weight& w);
Weight to_weight(const IntWeight& w);

/// Lexicographic order on exact coordinates; shorter vectors first.
struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const;
};

struct IntWeightHash {
  std::size_t operator()(const IntWeight& w) const noexcept;
};
struct IntWeightEqual {
  bool operator()(const IntWeight& a, const IntWeight& b) const noexcept {
    return a.size() == b.size() && a == b;
  }
};

/// "p" or "p/q".
std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& text);
/// "[1,-4,0,0,0,1]"
std::string bracket_string(const Weight& w);
/// Space-separated exact coordinates; used as memo-table key.
std::string weight_key(const Weight& w);

/// Formal non-negative combination of weights; equal weights are merged.
class WeightMultiset {
 public:
  using Map = std::map<Weight, std::uint64_t, WeightLess>;

  WeightMultiset() = default;
  static WeightMultiset single(const Weight& w, std::uint64_t mult = 1);

  void add(const Weight& w, std::uint64_t mult = 1);
  void merge(const WeightMultiset& other, std::uint64_t scale = 1);

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::uint64_t total_multiplicity() const;
  const Map& terms() const noexcept { return terms_; }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  /// Applies f to every weight and re-merges.
  WeightMultiset transformed(const std::function<Weight(const Weight&)>& f) const;

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

}  // namespace bwbverify
