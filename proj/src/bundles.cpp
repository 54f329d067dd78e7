#include "bwbverify/bundles.hpp"

#include "bwbverify/literal.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>

namespace bwbverify {

BundleExpr dualize(const ParabolicData& parab, const BundleExpr& e) {
  return e.transformed([&](const Weight& w) { return dual_weight(parab, w); });
}

BundleExpr twist(const ParabolicData& parab, const BundleExpr& e, int i) {
  const Weight shift = Rational(i) * parab.line_generator();
  return e.transformed([&](const Weight& w) { return Weight(w + shift); });
}

void validate_bundle(const ParabolicData& parab, const BundleExpr& e) {
  for (const auto& [w, m] : e) parab.require_bundle_weight(w, "bundle summand");
}

FilteredBundle::FilteredBundle(std::string name, std::vector<BundleExpr> pieces, int twist)
    : name_(std::move(name)), twist_(twist), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw DomainError("filtered bundle needs at least one graded piece");
  for (const auto& p : pieces_)
    if (p.empty()) throw DomainError("filtered bundle has an empty graded piece");
}

FilteredBundle FilteredBundle::irreducible(const Weight& mu) { return FilteredBundle({}, {BundleExpr::single(mu)}); }

FilteredBundle FilteredBundle::from_expr(const BundleExpr& e) { return FilteredBundle({}, {e}); }

bool FilteredBundle::is_irreducible() const {
  return pieces_.size() == 1 && pieces_.front().size() == 1 && pieces_.front().begin()->second == 1;
}

const Weight& FilteredBundle::weight() const {
  if (!is_irreducible()) throw DomainError("bundle '" + name_ + "' is not irreducible");
  return pieces_.front().begin()->first;
}

BundleExpr FilteredBundle::semisimplify() const {
  BundleExpr out;
  for (const auto& p : pieces_) out.merge(p);
  return out;
}

FilteredBundle FilteredBundle::twisted(const ParabolicData& parab, int i) const {
  std::vector<BundleExpr> pieces;
  pieces.reserve(pieces_.size());
  for (const auto& p : pieces_) pieces.push_back(bwbverify::twist(parab, p, i));
  return FilteredBundle(name_, std::move(pieces), twist_ + i);
}

std::string FilteredBundle::label(const ParabolicData& parab) const {
  if (!name_.empty()) return twist_ == 0 ? name_ : name_ + "(" + std::to_string(twist_) + ")";
  if (is_irreducible()) return format_bundle(parab, weight());
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += " ; ";
    out += format_decomposition(parab, pieces_[i]);
  }
  return pieces_.size() == 1 ? out : "[" + out + "]";
}

std::uint64_t bundle_rank(const ParabolicData& parab, const FilteredBundle& e) {
  std::uint64_t total = 0;
  for (const auto& [w, m] : e.semisimplify()) total += m * rank_of_bundle(parab, w);
  return total;
}

// ---------------------------------------------------------------------------

std::string data_directory() {
  if (const char* env = std::getenv("BWBVERIFY_DATA"); env && *env) return env;
  return BWBVERIFY_DATA_DIR;
}

BundleLibrary BundleLibrary::load(const ParabolicData& parab, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open bundle library '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bundle library '" + path + "': " + e.what());
  }
  BundleLibrary lib;
  try {
    for (const auto& item : doc.at("bundles")) {
      const std::string name = item.at("name").get<std::string>();
      std::vector<BundleExpr> pieces;
      for (const auto& piece : item.at("pieces")) {
        BundleExpr expr;
        for (const auto& coords : piece) {
          const auto v = coords.get<std::vector<long long>>();
          if (static_cast<int>(v.size()) != parab.rank())
            throw ParseError("bundle '" + name + "': piece weight has wrong length");
          Weight w = zero_weight(parab.rank());
          for (int i = 0; i < parab.rank(); ++i) w(i) = v[i];
          expr.add(w);
        }
        validate_bundle(parab, expr);
        pieces.push_back(std::move(expr));
      }
      Entry entry{FilteredBundle(name, std::move(pieces)), item.at("sub").get<std::string>(),
                  item.at("quotient").get<std::string>(), item.value("provenance", std::string())};
      if (!lib.entries_.emplace(name, std::move(entry)).second)
        throw ParseError("bundle library: duplicate name '" + name + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bundle library '" + path + "': " + e.what());
  }
  // Every sub/quotient must resolve and reassemble the graded pieces.
  for (const auto& [name, entry] : lib.entries_) {
    BundleExpr both = lib.resolve(parab, entry.sub).semisimplify();
    both.merge(lib.resolve(parab, entry.quotient).semisimplify());
    if (!(both == entry.bundle.semisimplify()))
      throw ParseError("bundle library: sub and quotient of '" + name + "' do not match its graded pieces");
  }
  return lib;
}

BundleLibrary BundleLibrary::load_default(const ParabolicData& parab) {
  return load(parab, data_directory() + "/bundles.json");
}

const BundleLibrary::Entry& BundleLibrary::entry(const std::string& name) const {
  const auto it = entries_.find(name);
  if (it == entries_.end()) throw DomainError("unknown named bundle '" + name + "'");
  return it->second;
}

std::vector<std::string> BundleLibrary::names() const {
  std::vector<std::string> out;
  for (const auto& [name, e] : entries_) out.push_back(name);
  return out;
}

FilteredBundle BundleLibrary::resolve(const ParabolicData& parab, const std::string& text) const {
  const auto [base, shift] = split_twist(text);
  if (contains(base)) return entry(base).bundle.twisted(parab, shift);
  const Weight mu = parse_bundle_weight(parab, text);
  parab.require_bundle_weight(mu, "bundle literal");
  return FilteredBundle::irreducible(mu);
}

std::pair<FilteredBundle, FilteredBundle> BundleLibrary::extension_of(const ParabolicData& parab,
                                                                     const FilteredBundle& named) const {
  const Entry& e = entry(named.name());
  return {resolve(parab, e.sub).twisted(parab, named.twist()), resolve(parab, e.quotient).twisted(parab, named.twist())};
}

// ---------------------------------------------------------------------------

BundleExpr hom_bundle(const ParabolicData& parab, const BundleExpr& a, const BundleExpr& b) {
  BundleExpr out;
  for (const auto& [wa, ma] : a) {
    const Weight dual = dual_weight(parab, wa);
    for (const auto& [wb, mb] : b) out.merge(tensor_bundles(parab, dual, wb), ma * mb);
  }
  return out;
}

GradedVector ext_groups(const ParabolicData& parab, const BundleExpr& a, const BundleExpr& b) {
  return cohomology_of_sum(parab, hom_bundle(parab, a, b));
}

GradedVector ext_groups(const ParabolicData& parab, const FilteredBundle& a, const FilteredBundle& b) {
  return ext_groups(parab, a.semisimplify(), b.semisimplify());
}

bool ext_is_exact(const FilteredBundle& a, const FilteredBundle& b, const GradedVector& ss_ext) {
  const bool semisimple = a.pieces().size() == 1 && b.pieces().size() == 1;
  return semisimple || ss_ext.cancellation_free();
}

std::size_t NilradicalGrading::total_roots() const {
  std::size_t n = 0;
  for (const auto& [c, d] : degrees) n += d.roots.size();
  return n;
}

std::vector<Weight> NilradicalGrading::dominant_roots() const {
  std::vector<Weight> out;
  for (const auto& [c, d] : degrees) out.insert(out.end(), d.levi_highest.begin(), d.levi_highest.end());
  return out;
}

FilteredBundle NilradicalGrading::tangent_bundle() const {
  std::vector<BundleExpr> pieces;
  for (const auto& [c, d] : degrees) {
    BundleExpr piece;
    for (const auto& w : d.levi_highest) piece.add(w);
    pieces.push_back(std::move(piece));
  }
  return FilteredBundle("T_X", std::move(pieces));
}

NilradicalGrading nilradical_grading(const ParabolicData& parab) {
  const RootSystem& g = parab.ambient();
  const int k = parab.marked_vertex();
  const auto& fundamental_coords = g.positive_roots();
  const auto& root_coords = g.positive_roots_root_basis();
  NilradicalGrading out;
  for (std::size_t r = 0; r < fundamental_coords.size(); ++r) {
    const int c = root_coords[r](k - 1);
    if (c < 1) continue;
    auto& degree = out.degrees[c];
    degree.roots.push_back(fundamental_coords[r]);
    if (parab.is_levi_dominant(fundamental_coords[r])) degree.levi_highest.push_back(fundamental_coords[r]);
  }
  for (auto& [c, d] : out.degrees) {
    // Each graded piece of the nilradical must be accounted for by its Levi highest weights.
    std::uint64_t ranks = 0;
    for (const auto& w : d.levi_highest) ranks += rank_of_bundle(parab, w);
    if (ranks != d.roots.size())
      throw InvariantViolation("nilradical degree " + std::to_string(c) + " is not spanned by its highest weights");
  }
  return out;
}

std::string to_string(ExtensionVerdict v) {
  switch (v) {
    case ExtensionVerdict::Exceptional:
      return "Exceptional";
    case ExtensionVerdict::NoNontrivialExtension:
      return "NoNontrivialExtension";
    case ExtensionVerdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

ExtensionCheck check_extension_exceptional(const ParabolicData& parab, const FilteredBundle& sub,
                                           const FilteredBundle& quot) {
  ExtensionCheck out;
  out.sub_sub = ext_groups(parab, sub, sub);
  out.quot_quot = ext_groups(parab, quot, quot);
  out.sub_quot = ext_groups(parab, sub, quot);
  out.quot_sub = ext_groups(parab, quot, sub);
  out.sub_sub_exact = ext_is_exact(sub, sub, out.sub_sub);
  out.quot_quot_exact = ext_is_exact(quot, quot, out.quot_quot);
  out.quot_sub_exact = ext_is_exact(quot, sub, out.quot_sub);

  // The semisimplified Ext bounds the true one degreewise.
  if (!out.quot_sub.has_degree(1)) {
    out.verdict = ExtensionVerdict::NoNontrivialExtension;
    return out;
  }
  GradedVector c0, c1;
  c0.add(0, parab.zero());
  c1.add(1, parab.zero());
  const bool clean = out.sub_sub == c0 && out.sub_sub_exact && out.quot_quot == c0 && out.quot_quot_exact &&
                     out.sub_quot.empty() && out.quot_sub == c1 && out.quot_sub_exact;
  out.verdict = clean ? ExtensionVerdict::Exceptional : ExtensionVerdict::Inconclusive;
  return out;
}

VanishingStatus ext_vanishes_filtered(const ParabolicData& parab, const FilteredBundle& a, const FilteredBundle& b) {
  return ext_groups(parab, a, b).empty() ? VanishingStatus::Proven : VanishingStatus::Unknown;
}

GradedVector global_sections(const ParabolicData& parab, const FilteredBundle& e) {
  return cohomology_of_sum(parab, e.semisimplify()).degree_slice(0);
}

ComplexRankCheck complex_rank_check(const ParabolicData& parab, const FilteredBundle& tilde_t, const Weight& kernel) {
  ComplexRankCheck out;
  out.global_sections_dim = global_sections(parab, tilde_t).dimension(parab.ambient());
  out.left_rank = bundle_rank(parab, tilde_t.twisted(parab, -1));
  out.right_rank = bundle_rank(parab, tilde_t);
  out.kernel_rank = rank_of_bundle(parab, kernel);
  out.ok = out.global_sections_dim >= out.left_rank + out.right_rank &&
           out.global_sections_dim - out.left_rank - out.right_rank == out.kernel_rank;
  return out;
}

bool complex_rank_check(const ParabolicData& parab, const BundleLibrary& library) {
  const Weight kernel = parse_bundle_weight(parab, "S^{w1+w6}(-1)");
  return complex_rank_check(parab, library.resolve(parab, "T~"), kernel).ok;
}

}  // namespace bwbverify
