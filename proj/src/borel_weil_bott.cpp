#include "bwbverify/borel_weil_bott.hpp"

#include "bwbverify/memo.hpp"

#include <fstream>
#include <sstream>

namespace bwbverify {

namespace {

MemoTable<CohomologyResult>& bwb_memo() {
  static MemoTable<CohomologyResult> table;
  return table;
}

std::string memo_key(const ParabolicData& parab, const Weight& mu) { return parab.signature() + "|" + weight_key(mu); }

int lowest(const std::vector<int>& negatives) { return negatives.front(); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(' ');
  return s.substr(b, e - b + 1);
}

Weight parse_coords(const std::vector<std::string>& tokens, std::size_t from, std::size_t count) {
  if (tokens.size() < from + count) throw ParseError("cache line has too few coordinates");
  Weight w(static_cast<Eigen::Index>(count));
  for (std::size_t i = 0; i < count; ++i) w(static_cast<Eigen::Index>(i)) = parse_rational(tokens[from + i]);
  return w;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

}  // namespace

std::string WeylWord::to_string() const {
  if (reflections.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < reflections.size(); ++i) {
    if (i) out += ' ';
    out += 's' + std::to_string(reflections[i]);
  }
  return out;
}

CohomologyResult CohomologyResult::make_acyclic(int vertex, WeylWord word) {
  CohomologyResult r;
  r.acyclic = true;
  r.singular_vertex = vertex;
  r.word = std::move(word);
  return r;
}

CohomologyResult CohomologyResult::make_concentrated(int degree, Weight g_weight, WeylWord word) {
  CohomologyResult r;
  r.degree = degree;
  r.g_weight = std::move(g_weight);
  r.word = std::move(word);
  return r;
}

bool same_cohomology(const CohomologyResult& a, const CohomologyResult& b) {
  if (a.acyclic || b.acyclic) return a.acyclic == b.acyclic;
  return a.degree == b.degree && a.g_weight == b.g_weight;
}

void GradedVector::add(int degree, const Weight& g_weight, std::uint64_t mult) {
  if (mult == 0) return;
  entries_[{degree, g_weight}] += mult;
}

void GradedVector::merge(const GradedVector& other, std::uint64_t scale) {
  for (const auto& [key, m] : other.entries_) add(key.first, key.second, m * scale);
}

bool GradedVector::has_degree(int degree) const {
  for (const auto& [key, m] : entries_)
    if (key.first == degree) return true;
  return false;
}

GradedVector GradedVector::degree_slice(int degree) const {
  GradedVector out;
  for (const auto& [key, m] : entries_)
    if (key.first == degree) out.add(key.first, key.second, m);
  return out;
}

std::uint64_t GradedVector::dimension(const RootSystem& g) const {
  std::uint64_t d = 0;
  for (const auto& [key, m] : entries_) d += m * weyl_dim(g, key.second);
  return d;
}

bool GradedVector::cancellation_free() const {
  for (const auto& [key, m] : entries_) {
    if (entries_.count({key.first + 1, key.second})) return false;
  }
  return true;
}

CohomologyResult bwb_cohomology_with(const ParabolicData& parab, const Weight& mu, const ReflectionStrategy& choose) {
  parab.require_bundle_weight(mu, "bwb_cohomology");
  const RootSystem& g = parab.ambient();
  const std::size_t bound = g.positive_roots().size();
  Weight lambda = mu + g.rho();
  WeylWord word;
  std::vector<int> negatives;
  for (std::size_t steps = 0;; ++steps) {
    negatives.clear();
    for (int v = 1; v <= g.rank(); ++v) {
      if (lambda(v - 1) == 0) return CohomologyResult::make_acyclic(v, std::move(word));
      if (lambda(v - 1) < 0) negatives.push_back(v);
    }
    if (negatives.empty())
      return CohomologyResult::make_concentrated(static_cast<int>(steps), Weight(lambda - g.rho()), std::move(word));
    if (steps >= bound) throw InvariantViolation("BWB descent exceeded |Phi+| reflections for " + bracket_string(mu));
    const int j = choose(negatives);
    if (std::find(negatives.begin(), negatives.end(), j) == negatives.end())
      throw InvariantViolation("reflection strategy picked a non-negative coordinate");
    reflect_in_place(g, j, lambda);
    word.reflections.push_back(j);
  }
}

CohomologyResult bwb_cohomology(const ParabolicData& parab, const Weight& mu) {
  parab.require_bundle_weight(mu, "bwb_cohomology");
  return bwb_memo().get_or_compute(memo_key(parab, mu), [&] { return bwb_cohomology_with(parab, mu, lowest); });
}

bool is_acyclic(const ParabolicData& parab, const Weight& mu) { return bwb_cohomology(parab, mu).acyclic; }

GradedVector cohomology_of_sum(const ParabolicData& parab,
                               const std::vector<std::pair<Weight, std::uint64_t>>& summands) {
  GradedVector out;
  for (const auto& [mu, mult] : summands) {
    const CohomologyResult r = bwb_cohomology(parab, mu);
    if (!r.acyclic) out.add(r.degree, r.g_weight, mult);
  }
  return out;
}

GradedVector cohomology_of_sum(const ParabolicData& parab, const WeightMultiset& summands) {
  GradedVector out;
  for (const auto& [mu, mult] : summands) {
    const CohomologyResult r = bwb_cohomology(parab, mu);
    if (!r.acyclic) out.add(r.degree, r.g_weight, mult);
  }
  return out;
}

bool verify_lemma_3_4(const ParabolicData& parab, const Weight& mu, int m) {
  const int k = parab.marked_vertex();
  if (parab.rank() < 4 || k == 4) throw DomainError("verify_lemma_3_4 needs an unmarked vertex 4");
  if (m <= 0) throw DomainError("verify_lemma_3_4 needs m > 0");
  if (mu.size() != parab.rank() || !is_integral(mu)) throw DomainError("verify_lemma_3_4: bad weight");
  if (mu(k - 1) != 0) throw DomainError("verify_lemma_3_4: mu must not involve w_k");
  for (int v = 1; v <= parab.rank(); ++v)
    if (v != k && mu(v - 1) <= 0) throw DomainError("verify_lemma_3_4: every a_i must be positive");
  if (mu(3) != m) throw DomainError("verify_lemma_3_4: a_4 must equal m");
  return is_acyclic(parab, Weight(mu - Rational(m) * parab.line_generator()));
}

void save_bwb_cache(const ParabolicData& parab, const std::string& path) {
  const std::string prefix = parab.signature() + "|";
  auto entries = bwb_memo().snapshot();
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write cache file " + path);
  for (const auto& [key, r] : entries) {
    if (key.rfind(prefix, 0) != 0) continue;
    out << key.substr(prefix.size()) << " | ";
    if (r.acyclic) {
      out << "A " << r.singular_vertex;
    } else {
      out << "C " << r.degree << ' ' << weight_key(r.g_weight);
    }
    out << " |";
    for (int v : r.word.reflections) out << ' ' << v;
    out << '\n';
  }
}

std::size_t load_bwb_cache(const ParabolicData& parab, const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  const std::size_t n = static_cast<std::size_t>(parab.rank());
  std::size_t loaded = 0;
  for (std::string line; std::getline(in, line);) {
    if (trim(line).empty()) continue;
    auto fields = split(line, '|');
    if (fields.size() == 2 && line.back() == '|') fields.emplace_back();  // empty Weyl word
    if (fields.size() != 3) throw ParseError("malformed cache line: " + line);
    const Weight mu = parse_coords(words(fields[0]), 0, n);
    const auto body = words(fields[1]);
    WeylWord word;
    for (const auto& t : words(fields[2])) word.reflections.push_back(std::stoi(t));
    if (body.size() == 2 && body[0] == "A") {
      bwb_memo().insert(memo_key(parab, mu), CohomologyResult::make_acyclic(std::stoi(body[1]), word));
    } else if (body.size() == 2 + n && body[0] == "C") {
      bwb_memo().insert(memo_key(parab, mu),
                        CohomologyResult::make_concentrated(std::stoi(body[1]), parse_coords(body, 2, n), word));
    } else {
      throw ParseError("malformed cache line: " + line);
    }
    ++loaded;
  }
  return loaded;
}

std::size_t bwb_cache_size() { return bwb_memo().size(); }

}  // namespace bwbverify
