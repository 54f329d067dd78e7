#pragma once

#include "bwbverify/borel_weil_bott.hpp"
#include "bwbverify/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bwbverify {

/// Formal sum of irreducible equivariant bundles S^mu (Levi-dominant integral mu).
using BundleExpr = WeightMultiset;

BundleExpr dualize(const ParabolicData& parab, const BundleExpr& e);
BundleExpr twist(const ParabolicData& parab, const BundleExpr& e, int i);
/// Throws DomainError unless every weight is Levi-dominant and integral.
void validate_bundle(const ParabolicData& parab, const BundleExpr& e);

/// Equivariant bundle with a filtration whose graded pieces are semisimple,
/// listed from sub to quotient. An irreducible S^mu is the one-piece case.
class FilteredBundle {
 public:
  FilteredBundle() = default;
  FilteredBundle(std::string name, std::vector<BundleExpr> pieces, int twist = 0);
  static FilteredBundle irreducible(const Weight& mu);
  static FilteredBundle from_expr(const BundleExpr& e);

  /// Base name for named bundles ("T~"); empty for anonymous ones.
  const std::string& name() const noexcept { return name_; }
  int twist() const noexcept { return twist_; }
  const std::vector<BundleExpr>& pieces() const noexcept { return pieces_; }

  bool is_irreducible() const;
  /// Highest weight of an irreducible bundle.
  const Weight& weight() const;
  BundleExpr semisimplify() const;
  FilteredBundle twisted(const ParabolicData& parab, int i) const;
  /// "T~(-1)", "S^{w1}(1)", "O(1) + S^{w4}(-1)".
  std::string label(const ParabolicData& parab) const;

 private:
  std::string name_;
  int twist_ = 0;
  std::vector<BundleExpr> pieces_;
};

/// Sum of ranks over the semisimplification.
std::uint64_t bundle_rank(const ParabolicData& parab, const FilteredBundle& e);

/// Named filtered bundles loaded from the fixture file, with the extension
/// 0 -> sub -> V -> quotient -> 0 each one is defined by.
class BundleLibrary {
 public:
  struct Entry {
    FilteredBundle bundle;
    std::string sub;
    std::string quotient;
    std::string provenance;
  };

  static BundleLibrary load(const ParabolicData& parab, const std::string& path);
  /// `<data dir>/bundles.json`.
  static BundleLibrary load_default(const ParabolicData& parab);

  bool contains(const std::string& name) const { return entries_.count(name) > 0; }
  const Entry& entry(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Resolves "T~", "E~(2)", "S^{w1}(1)", "O(-1)", "w1+w6-2w2", ... to a bundle.
  FilteredBundle resolve(const ParabolicData& parab, const std::string& text) const;
  /// Sub and quotient of a named bundle, twisted along with it.
  std::pair<FilteredBundle, FilteredBundle> extension_of(const ParabolicData& parab, const FilteredBundle& named) const;

 private:
  std::map<std::string, Entry> entries_;
};

/// Directory holding bundles.json and scripts/ (BWBVERIFY_DATA env var overrides the build-time path).
std::string data_directory();

/// a^vee (x) b decomposed into irreducibles, summed over all pairs of summands.
BundleExpr hom_bundle(const ParabolicData& parab, const BundleExpr& a, const BundleExpr& b);

/// Ext^*(a, b) = H^*(a^vee (x) b).
GradedVector ext_groups(const ParabolicData& parab, const BundleExpr& a, const BundleExpr& b);
/// Ext between semisimplifications: a degreewise upper bound for the filtered bundles.
GradedVector ext_groups(const ParabolicData& parab, const FilteredBundle& a, const FilteredBundle& b);

/// The computed Ext equals the true Ext of the filtered bundles: both are
/// irreducible, or no irreducible sits in adjacent degrees.
bool ext_is_exact(const FilteredBundle& a, const FilteredBundle& b, const GradedVector& ss_ext);

struct NilradicalDegree {
  std::vector<Weight> roots;         // positive roots with this alpha_k coefficient
  std::vector<Weight> levi_highest;  // the Levi-dominant ones among them
};

struct NilradicalGrading {
  std::map<int, NilradicalDegree> degrees;

  std::size_t total_roots() const;
  std::vector<Weight> dominant_roots() const;
  /// T_X with graded pieces ordered by increasing degree.
  FilteredBundle tangent_bundle() const;
};

NilradicalGrading nilradical_grading(const ParabolicData& parab);

enum class ExtensionVerdict { Exceptional, NoNontrivialExtension, Inconclusive };
std::string to_string(ExtensionVerdict v);

struct ExtensionCheck {
  ExtensionVerdict verdict = ExtensionVerdict::Inconclusive;
  GradedVector sub_sub, quot_quot, sub_quot, quot_sub;
  bool sub_sub_exact = false, quot_quot_exact = false, quot_sub_exact = false;
};

/// Decides whether the unique nontrivial extension 0 -> sub -> V -> quot -> 0
/// exists and is exceptional (it is then the mutation of the exceptional pair).
ExtensionCheck check_extension_exceptional(const ParabolicData& parab, const FilteredBundle& sub,
                                           const FilteredBundle& quot);

enum class VanishingStatus { Proven, Unknown };
/// Ext(a, b) = 0 is Proven when it already vanishes on semisimplifications.
VanishingStatus ext_vanishes_filtered(const ParabolicData& parab, const FilteredBundle& a, const FilteredBundle& b);

/// Degree-0 part of the cohomology of the semisimplification.
GradedVector global_sections(const ParabolicData& parab, const FilteredBundle& e);

struct ComplexRankCheck {
  std::uint64_t global_sections_dim = 0;  // dim H^0(T~) = 78 + 1
  std::uint64_t left_rank = 0;            // rk T~(-1)
  std::uint64_t right_rank = 0;           // rk T~
  std::uint64_t kernel_rank = 0;          // rk S^{w1+w6}(-1)
  bool ok = false;
};

/// Rank arithmetic of T~(-1) -> H^0(T~) (x) O -> T~ with cohomology S^{kernel}.
ComplexRankCheck complex_rank_check(const ParabolicData& parab, const FilteredBundle& tilde_t, const Weight& kernel);
/// Same with T~ from the library and kernel S^{w1+w6}(-1).
bool complex_rank_check(const ParabolicData& parab, const BundleLibrary& library);

}  // namespace bwbverify
