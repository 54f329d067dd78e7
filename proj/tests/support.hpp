#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls the reflection descent, the LR rule, or the fixture scripts.

#include "bwbverify/collections.hpp"
#include "bwbverify/literal.hpp"
#include "bwbverify/tensor.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace bwbverify;

inline const VerificationContext& ctx() {
  static const VerificationContext c = VerificationContext::standard();
  return c;
}

inline const ParabolicData& e6p2() { return ctx().parab; }

inline Weight W(const std::string& text) { return parse_bundle_weight(e6p2(), text); }

// E6 Cartan matrix typed in again, Bourbaki labels: 1-3-4-5-6 with 2 on 4.
inline constexpr std::array<std::array<int, 6>, 6> kE6Cartan = {{
    {2, 0, -1, 0, 0, 0},
    {0, 2, 0, -1, 0, 0},
    {-1, 0, 2, -1, 0, 0},
    {0, -1, -1, 2, -1, 0},
    {0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, -1, 2},
}};

using RootCoeffs = std::array<int, 6>;

// Positive roots over the simple roots, grown by the simply-laced string rule:
// beta + alpha_i is a root iff <beta, alpha_i> = -1.
inline const std::vector<RootCoeffs>& e6_roots_oracle() {
  static const std::vector<RootCoeffs> roots = [] {
    std::vector<RootCoeffs> out;
    for (int i = 0; i < 6; ++i) {
      RootCoeffs r{};
      r[i] = 1;
      out.push_back(r);
    }
    for (std::size_t n = 0; n < out.size(); ++n) {
      for (int i = 0; i < 6; ++i) {
        int pairing = 0;
        for (int j = 0; j < 6; ++j) pairing += out[n][j] * kE6Cartan[j][i];
        if (pairing != -1) continue;
        RootCoeffs next = out[n];
        ++next[i];
        bool seen = false;
        for (const auto& r : out) seen = seen || r == next;
        if (!seen) out.push_back(next);
      }
    }
    return out;
  }();
  return roots;
}

// <lambda, alpha> for lambda in fundamental coordinates.
inline long long pairing(const IntWeight& lambda, const RootCoeffs& alpha) {
  long long s = 0;
  for (int i = 0; i < 6; ++i) s += lambda(i) * alpha[i];
  return s;
}

struct BwbOracle {
  bool acyclic = false;
  int degree = 0;
};

// Bott's theorem read off the product formula: mu + rho is singular iff some
// positive root is orthogonal to it; otherwise the degree is the number of
// positive roots pairing negatively with it.
inline BwbOracle bwb_oracle(const Weight& mu) {
  IntWeight l = to_int_weight(mu);
  for (int i = 0; i < 6; ++i) l(i) += 1;
  BwbOracle out;
  for (const auto& a : e6_roots_oracle()) {
    const long long p = pairing(l, a);
    if (p == 0) return {true, 0};
    if (p < 0) ++out.degree;
  }
  return out;
}

// Levi-dominant random weight on E6/P2: unmarked coordinates in [0, hi],
// the w2 coordinate in [lo2, hi2].
inline Weight random_bundle_weight(std::mt19937& rng, int hi, int lo2, int hi2) {
  std::uniform_int_distribution<int> pos(0, hi), twist(lo2, hi2);
  Weight w = zero_weight(6);
  for (int i = 0; i < 6; ++i) w(i) = i == 1 ? twist(rng) : pos(rng);
  return w;
}

// Dimension of the A5 irreducible with the given Dynkin labels, by the
// hook-content formula on the associated partition.
inline std::uint64_t a5_dim_oracle(const std::array<int, 5>& labels) {
  std::array<int, 6> rows{};
  for (int i = 4; i >= 0; --i) rows[i] = rows[i + 1] + labels[i];
  long double num = 1, den = 1;
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < rows[r]; ++c) {
      int arm = rows[r] - c - 1, leg = 0;
      for (int rr = r + 1; rr < 6 && rows[rr] > c; ++rr) ++leg;
      num *= 6 + c - r;
      den *= arm + leg + 1;
    }
  }
  return static_cast<std::uint64_t>(num / den + 0.5L);
}

// Rank of S^mu via the oracle above (unmarked coordinates 1,3,4,5,6 as A5 labels).
inline std::uint64_t rank_oracle(const Weight& mu) {
  const IntWeight m = to_int_weight(mu);
  return a5_dim_oracle({static_cast<int>(m(0)), static_cast<int>(m(2)), static_cast<int>(m(3)),
                        static_cast<int>(m(4)), static_cast<int>(m(5))});
}

}  // namespace testing
