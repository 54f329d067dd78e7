#include "bwbverify/weight.hpp"

#include "bwbverify/errors.hpp"

#include <limits>
#include <sstream>

namespace bwbverify {

Weight make_weight(std::initializer_list<long long> coeffs) {
  Weight w(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (long long c : coeffs) w(i++) = Rational(c);
  return w;
}

Weight zero_weight(int rank) {
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w(i) = 0;
  return w;
}

Weight fundamental(int rank, int vertex) {
  if (vertex < 1 || vertex > rank) {
    throw DomainError("fundamental weight index " + std::to_string(vertex) + " out of range 1.." +
                      std::to_string(rank));
  }
  Weight w = zero_weight(rank);
  w(vertex - 1) = 1;
  return w;
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

bool is_integral(const Weight& w) {
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (!is_integer(w(i))) return false;
  return true;
}

bool is_dominant(const Weight& w) {
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) < 0) return false;
  return true;
}

bool is_regular_dominant(const Weight& w) {
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) <= 0) return false;
  return true;
}

IntWeight to_int_weight(const Weight& w) {
  IntWeight out(w.size());
  constexpr long long bound = std::numeric_limits<int>::max();
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (!is_integer(w(i))) throw DomainError("weight " + bracket_string(w) + " is not integral");
    const auto num = boost::multiprecision::numerator(w(i));
    if (num > bound || num < -bound) throw DomainError("weight coordinate too large: " + bracket_string(w));
    out(i) = num.convert_to<long long>();
  }
  return out;
}

Weight to_weight(const IntWeight& w) {
  Weight out(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) out(i) = Rational(w(i));
  return out;
}

bool WeightLess::operator()(const Weight& a, const Weight& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

std::size_t IntWeightHash::operator()(const IntWeight& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    h ^= std::hash<long long>{}(w(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (!is_integer(q)) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw ParseError("not an exact rational: '" + text + "'");
  }
}

std::string bracket_string(const Weight& w) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += format_rational(w(i));
  }
  return out + "]";
}

std::string weight_key(const Weight& w) {
  std::string out;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += format_rational(w(i));
  }
  return out;
}

WeightMultiset WeightMultiset::single(const Weight& w, std::uint64_t mult) {
  WeightMultiset m;
  m.add(w, mult);
  return m;
}

void WeightMultiset::add(const Weight& w, std::uint64_t mult) {
  if (mult == 0) return;
  terms_[w] += mult;
}

void WeightMultiset::merge(const WeightMultiset& other, std::uint64_t scale) {
  for (const auto& [w, m] : other.terms_) add(w, m * scale);
}

std::uint64_t WeightMultiset::total_multiplicity() const {
  std::uint64_t n = 0;
  for (const auto& [w, m] : terms_) n += m;
  return n;
}

WeightMultiset WeightMultiset::transformed(const std::function<Weight(const Weight&)>& f) const {
  WeightMultiset out;
  for (const auto& [w, m] : terms_) out.add(f(w), m);
  return out;
}

}  // namespace bwbverify
