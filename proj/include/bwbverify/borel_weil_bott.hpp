#pragma once

#include "bwbverify/levi.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bwbverify {

/// Ordered simple reflections (1-based vertices), first applied first.
struct WeylWord {
  std::vector<int> reflections;

  std::size_t length() const noexcept { return reflections.size(); }
  /// "s2 s4"; empty word prints as "1".
  std::string to_string() const;
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// Cohomology of S^mu: either acyclic, or one irreducible G-module in one degree.
struct CohomologyResult {
  bool acyclic = false;
  int degree = 0;           // l(w); meaningful when !acyclic
  Weight g_weight;          // w.(mu + rho) - rho; empty when acyclic
  WeylWord word;            // reflections applied by the descent
  int singular_vertex = 0;  // vertex holding the zero coordinate; acyclic only

  static CohomologyResult make_acyclic(int vertex, WeylWord word);
  static CohomologyResult make_concentrated(int degree, Weight g_weight, WeylWord word);
};

/// Same cohomology (ignores the descent witness).
bool same_cohomology(const CohomologyResult& a, const CohomologyResult& b);

/// Multiset of (degree, G-weight) with multiplicities.
class GradedVector {
 public:
  using Key = std::pair<int, Weight>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.first != b.first) return a.first < b.first;
      return WeightLess{}(a.second, b.second);
    }
  };
  using Map = std::map<Key, std::uint64_t, KeyLess>;

  void add(int degree, const Weight& g_weight, std::uint64_t mult = 1);
  void merge(const GradedVector& other, std::uint64_t scale = 1);

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const Map& entries() const noexcept { return entries_; }
  bool has_degree(int degree) const;
  GradedVector degree_slice(int degree) const;
  /// Sum of mult * dim V^lambda.
  std::uint64_t dimension(const RootSystem& g) const;

  /// No irreducible appears in two adjacent degrees, so no differential of a
  /// filtration spectral sequence can cancel anything.
  bool cancellation_free() const;

  friend bool operator==(const GradedVector& a, const GradedVector& b) { return a.entries_ == b.entries_; }

 private:
  Map entries_;
};

/// Cohomology of S^mu by reflecting mu + rho toward the dominant chamber at
/// the lowest-index negative coordinate. Memoized per (parabolic, mu).
CohomologyResult bwb_cohomology(const ParabolicData& parab, const Weight& mu);

/// Unmemoized variant with a caller-chosen reflection among the negative
/// coordinates (1-based vertices, ascending). Used to test strategy independence.
using ReflectionStrategy = std::function<int(const std::vector<int>& negative_vertices)>;
CohomologyResult bwb_cohomology_with(const ParabolicData& parab, const Weight& mu, const ReflectionStrategy& choose);

bool is_acyclic(const ParabolicData& parab, const Weight& mu);

GradedVector cohomology_of_sum(const ParabolicData& parab, const std::vector<std::pair<Weight, std::uint64_t>>& summands);
GradedVector cohomology_of_sum(const ParabolicData& parab, const WeightMultiset& summands);

/// Checks the acyclicity of S^mu(-m) for mu = sum a_i w_i over the unmarked
/// vertices with every a_i > 0 and a_4 = m. mu must carry no w_2 term.
bool verify_lemma_3_4(const ParabolicData& parab, const Weight& mu, int m);

/// Persist/restore the memo table for one parabolic as a line-oriented text
/// file: "<coords> | A <vertex> | <word>" or "<coords> | C <degree> <g-weight coords> | <word>".
void save_bwb_cache(const ParabolicData& parab, const std::string& path);
std::size_t load_bwb_cache(const ParabolicData& parab, const std::string& path);
std::size_t bwb_cache_size();

}  // namespace bwbverify
