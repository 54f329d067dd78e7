#include "bwbverify/literal.hpp"

#include <regex>

namespace bwbverify {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

int parse_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "' in '" + context + "'");
  }
}

// Splits "N*rest" into {N, rest}; multiplicity defaults to 1.
std::pair<std::uint64_t, std::string> split_multiplicity(const std::string& item) {
  const auto star = item.find('*');
  if (star == std::string::npos) return {1, item};
  const int m = parse_int(item.substr(0, star), item);
  if (m <= 0) throw ParseError("multiplicity must be positive in '" + item + "'");
  return {static_cast<std::uint64_t>(m), item.substr(star + 1)};
}

std::string multiplicity_prefix(std::uint64_t m) { return m == 1 ? std::string() : std::to_string(m) + "*"; }

// Splits every item at '+' outside braces and parentheses, so a printed sum
// reads back; a lone "0" is the empty sum.
std::vector<std::string> sum_terms(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& raw : items) {
    const std::string item = strip(raw);
    if (item == "0") continue;
    int depth = 0;
    std::string cur;
    for (char c : item) {
      if (c == '{' || c == '(' || c == '[') ++depth;
      if (c == '}' || c == ')' || c == ']') --depth;
      if (c == '+' && depth == 0) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
  }
  return out;
}

}  // namespace

Weight parse_weight(const std::string& raw, int rank) {
  const std::string text = strip(raw);
  if (text.empty()) throw ParseError("empty weight literal");
  Weight w = zero_weight(rank);
  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated weight literal '" + raw + "'");
    const std::string body = text.substr(1, text.size() - 2);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : body) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    if (static_cast<int>(parts.size()) != rank)
      throw ParseError("weight literal '" + raw + "' needs " + std::to_string(rank) + " coordinates");
    for (int i = 0; i < rank; ++i) w(i) = parse_rational(parts[i]);
    return w;
  }
  if (text == "0") return w;
  static const std::regex term(R"(([+-]?)(\d+(?:/\d+)?)?\*?w(\d+))");
  std::size_t pos = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position()) != pos) break;
    if (pos > 0 && m[1].str().empty()) throw ParseError("missing sign between terms in '" + raw + "'");
    Rational coeff = m[2].matched ? parse_rational(m[2].str()) : Rational(1);
    if (m[1].str() == "-") coeff = -coeff;
    const int vertex = parse_int(m[3].str(), raw);
    if (vertex < 1 || vertex > rank) throw ParseError("vertex w" + std::to_string(vertex) + " out of range in '" + raw + "'");
    w(vertex - 1) += coeff;
    pos += m.length();
  }
  if (pos != text.size()) throw ParseError("cannot parse weight literal '" + raw + "'");
  return w;
}

std::string format_weight(const Weight& w) {
  std::string out;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const Rational& c = w(i);
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (mag != 1) out += format_rational(mag);
    out += 'w' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string format_bundle(const ParabolicData& parab, const Weight& mu) {
  if (mu.size() != parab.rank()) throw DomainError("format_bundle: weight has wrong length");
  const int k = parab.marked_vertex();
  Weight levi_part = mu;
  levi_part(k - 1) = 0;
  const Rational twist = mu(k - 1);
  std::string out = levi_part.isZero() ? "O" : "S^{" + format_weight(levi_part) + "}";
  if (twist != 0) out += "(" + format_rational(twist) + ")";
  return out;
}

std::pair<std::string, int> split_twist(const std::string& raw) {
  const std::string text = strip(raw);
  if (text.empty() || text.back() != ')') return {text, 0};
  const auto open = text.rfind('(');
  if (open == std::string::npos) throw ParseError("unbalanced parenthesis in '" + raw + "'");
  return {text.substr(0, open), parse_int(text.substr(open + 1, text.size() - open - 2), raw)};
}

Weight parse_bundle_weight(const ParabolicData& parab, const std::string& raw) {
  const auto [base, twist] = split_twist(raw);
  Weight mu;
  if (base == "O") {
    mu = parab.zero();
  } else if (base.rfind("S^{", 0) == 0 && base.back() == '}') {
    mu = parse_weight(base.substr(3, base.size() - 4), parab.rank());
  } else if (twist == 0) {
    return parse_weight(base, parab.rank());
  } else {
    throw ParseError("cannot parse bundle '" + raw + "'");
  }
  return mu + Rational(twist) * parab.line_generator();
}

std::string format_graded(const GradedVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [key, m] : v.entries()) {
    if (!out.empty()) out += " + ";
    out += multiplicity_prefix(m);
    out += key.second.isZero() ? std::string("C") : "V^{" + format_weight(key.second) + "}";
    out += "[" + std::to_string(-key.first) + "]";
  }
  return out;
}

GradedVector parse_graded(const std::vector<std::string>& items, int rank) {
  GradedVector out;
  for (const auto& raw : sum_terms(items)) {
    const auto [mult, body] = split_multiplicity(strip(raw));
    const auto open = body.rfind('[');
    if (open == std::string::npos || body.back() != ']') throw ParseError("bad graded term '" + raw + "'");
    const int shift = parse_int(body.substr(open + 1, body.size() - open - 2), raw);
    const std::string head = body.substr(0, open);
    Weight w;
    if (head == "C") {
      w = zero_weight(rank);
    } else if (head.rfind("V^{", 0) == 0 && head.back() == '}') {
      w = parse_weight(head.substr(3, head.size() - 4), rank);
    } else {
      throw ParseError("bad graded term '" + raw + "'");
    }
    out.add(-shift, w, mult);
  }
  return out;
}

std::string format_decomposition(const ParabolicData& parab, const Decomposition& d) {
  if (d.empty()) return "0";
  std::string out;
  for (const auto& [w, m] : d) {
    if (!out.empty()) out += " + ";
    out += multiplicity_prefix(m) + format_bundle(parab, w);
  }
  return out;
}

Decomposition parse_decomposition(const ParabolicData& parab, const std::vector<std::string>& items) {
  Decomposition out;
  for (const auto& raw : items) {
    const auto [mult, body] = split_multiplicity(strip(raw));
    out.add(parse_bundle_weight(parab, body), mult);
  }
  return out;
}

}  // namespace bwbverify
