#include "bwbverify/levi.hpp"

namespace bwbverify {

namespace {

RootSystem make_levi(const RootSystem& ambient, int k) {
  const int n = ambient.rank();
  Eigen::MatrixXi c(n - 1, n - 1);
  for (int i = 0, ri = 0; i < n; ++i) {
    if (i == k - 1) continue;
    for (int j = 0, rj = 0; j < n; ++j) {
      if (j == k - 1) continue;
      c(ri, rj++) = ambient.cartan()(i, j);
    }
    ++ri;
  }
  RootSystem probe("levi", c);
  const std::string label =
      is_type_a(probe) ? "A" + std::to_string(n - 1) : ambient.label() + "/P" + std::to_string(k) + " Levi";
  return RootSystem(label, c);
}

}  // namespace

ParabolicData::ParabolicData(RootSystem ambient, int marked_vertex)
    : ambient_(std::move(ambient)), levi_(RootSystem::A(0)), marked_(marked_vertex) {
  ambient_.check_vertex(marked_vertex);
  levi_ = make_levi(ambient_, marked_vertex);
  to_levi_.assign(ambient_.rank(), 0);
  for (int v = 1, lv = 1; v <= ambient_.rank(); ++v) {
    if (v == marked_) continue;
    to_levi_[v - 1] = lv++;
    to_ambient_.push_back(v);
  }
  // Deleting vertex k and reindexing must reproduce the Levi Cartan matrix.
  for (int a = 1; a <= levi_.rank(); ++a)
    for (int b = 1; b <= levi_.rank(); ++b)
      if (levi_.cartan()(a - 1, b - 1) != ambient_.cartan()(to_ambient_[a - 1] - 1, to_ambient_[b - 1] - 1))
        throw InvariantViolation("Levi Cartan matrix does not match the ambient diagram");
}

ParabolicData ParabolicData::E6_P2() { return ParabolicData(RootSystem::E6(), 2); }

int ParabolicData::levi_vertex(int ambient_vertex) const {
  ambient_.check_vertex(ambient_vertex);
  if (ambient_vertex == marked_) throw DomainError("the marked vertex has no Levi counterpart");
  return to_levi_[ambient_vertex - 1];
}

int ParabolicData::ambient_vertex(int levi_vertex) const {
  levi_.check_vertex(levi_vertex);
  return to_ambient_[levi_vertex - 1];
}

Weight ParabolicData::line_generator() const { return ambient_.fundamental_weight(marked_); }

bool ParabolicData::is_levi_dominant(const Weight& mu) const {
  if (mu.size() != rank()) return false;
  for (int v = 1; v <= rank(); ++v)
    if (v != marked_ && mu(v - 1) < 0) return false;
  return true;
}

void ParabolicData::require_bundle_weight(const Weight& mu, const char* what) const {
  if (mu.size() != rank())
    throw DomainError(std::string(what) + ": weight " + bracket_string(mu) + " has wrong length for " +
                      ambient_.label());
  if (!is_integral(mu)) throw DomainError(std::string(what) + ": weight " + bracket_string(mu) + " is not integral");
  if (!is_levi_dominant(mu))
    throw DomainError(std::string(what) + ": weight " + bracket_string(mu) + " is not Levi-dominant");
}

int ParabolicData::variety_dimension() const {
  return static_cast<int>(ambient_.positive_roots().size() - levi_.positive_roots().size());
}

std::string ParabolicData::signature() const { return ambient_.signature() + "/P" + std::to_string(marked_); }

LeviRestriction restrict_levi(const ParabolicData& parab, const Weight& mu) {
  if (mu.size() != parab.rank()) throw DomainError("restrict_levi: weight has wrong length");
  Weight levi(parab.levi().rank());
  for (int j = 1; j <= parab.levi().rank(); ++j) levi(j - 1) = mu(parab.ambient_vertex(j) - 1);
  const Weight wk = parab.line_generator();
  const Rational charge = inner_product(parab.ambient(), mu, wk) / inner_product(parab.ambient(), wk, wk);
  return {std::move(levi), charge};
}

Weight lift(const ParabolicData& parab, const Weight& levi_weight) {
  if (levi_weight.size() != parab.levi().rank()) throw DomainError("lift: Levi weight has wrong length");
  Weight mu = parab.zero();
  for (int j = 1; j <= parab.levi().rank(); ++j) mu(parab.ambient_vertex(j) - 1) = levi_weight(j - 1);
  return mu;
}

Weight levi_dominant_representative(const ParabolicData& parab, const Weight& mu) {
  Weight w = mu;
  const std::size_t bound = parab.levi().positive_roots().size();
  for (std::size_t step = 0;; ++step) {
    int negative = 0;
    for (int v = 1; v <= parab.rank(); ++v) {
      if (v != parab.marked_vertex() && w(v - 1) < 0) {
        negative = v;
        break;
      }
    }
    if (negative == 0) return w;
    if (step >= bound) throw InvariantViolation("Levi descent exceeded |Phi+(L)| reflections");
    reflect_in_place(parab.ambient(), negative, w);
  }
}

Weight dual_weight(const ParabolicData& parab, const Weight& mu) {
  if (!parab.is_levi_dominant(mu)) throw DomainError("dual_weight: " + bracket_string(mu) + " is not Levi-dominant");
  return levi_dominant_representative(parab, Weight(-mu));
}

int canonical_index(const ParabolicData& parab) {
  const RootSystem& g = parab.ambient();
  const Weight rho = g.rho();
  // w_0 rho is the antidominant element of the orbit of rho.
  const Weight w0_rho = -dual_dominant(g, rho);
  // w_0^L sends the Levi-antidominant chamber to the Levi-dominant one and
  // w0_rho is Levi-regular, so Levi descent realizes w_0^L on it.
  const Weight twisted = levi_dominant_representative(parab, w0_rho);
  const Weight diff = rho - twisted;
  const Weight alpha_k = g.simple_root(parab.marked_vertex());
  const Weight wk = parab.line_generator();
  const Rational r = inner_product(g, diff, alpha_k) / inner_product(g, wk, alpha_k);
  if (!is_integer(r) || r <= 0) throw InvariantViolation("canonical index is not a positive integer: " + format_rational(r));
  return boost::multiprecision::numerator(r).convert_to<int>();
}

std::uint64_t rank_of_bundle(const ParabolicData& parab, const Weight& mu) {
  parab.require_bundle_weight(mu, "rank_of_bundle");
  return weyl_dim(parab.levi(), restrict_levi(parab, mu).levi_weight);
}

}  // namespace bwbverify
