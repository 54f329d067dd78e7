#pragma once

#include "bwbverify/borel_weil_bott.hpp"
#include "bwbverify/tensor.hpp"

#include <string>
#include <vector>

namespace bwbverify {

/// Accepts "[1,-4,0,0,0,1]" (fundamental coordinates) or a symbolic sum such
/// as "w1+w6-4w2", "-w2", "2w1", "0". Coefficients may be "p/q".
Weight parse_weight(const std::string& text, int rank);

/// Canonical symbolic form, terms in vertex order: "w1-4w2+w6"; zero is "0".
std::string format_weight(const Weight& w);

/// "O", "O(-2)", "S^{w1+w6}(-1)": the Levi part followed by the twist by w_k.
std::string format_bundle(const ParabolicData& parab, const Weight& mu);

/// Inverse of format_bundle; a bare weight literal is also accepted.
Weight parse_bundle_weight(const ParabolicData& parab, const std::string& text);

/// Splits a trailing "(i)" twist off a name: "T~(-1)" -> {"T~", -1}.
std::pair<std::string, int> split_twist(const std::string& text);

/// "C[0]", "V^{w1}[-2]", "2*C[-1]"; summands joined by " + ", empty prints "0".
std::string format_graded(const GradedVector& v);
GradedVector parse_graded(const std::vector<std::string>& items, int rank);

/// "O + S^{w1+w6}(-1)", "2*S^{w4}"; empty prints "0".
std::string format_decomposition(const ParabolicData& parab, const Decomposition& d);
Decomposition parse_decomposition(const ParabolicData& parab, const std::vector<std::string>& items);

}  // namespace bwbverify
