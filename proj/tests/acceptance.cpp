// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
// (integers and rationals); the only tolerance is the wall-clock budget.
//
// Usage: acceptance [--expect-fail 5,6]
// Exit status is 0 when the set of failing criteria equals the expected set,
// so known disagreements stay visible as FAIL lines without hiding new ones.

#include "acyclic_list.hpp"
#include "support.hpp"

#include "bwbverify/levi.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace bwbverify;
using namespace testing;

namespace {

constexpr double kRuntimeBudgetSeconds = 60.0;

struct Result {
  bool pass;
  std::string detail;
};

GradedVector graded(const std::vector<std::string>& items) { return parse_graded(items, 6); }
Decomposition dec(const std::vector<std::string>& items) { return parse_decomposition(e6p2(), items); }
FilteredBundle named(const std::string& s) { return ctx().library.resolve(e6p2(), s); }

std::string S(std::map<int, int> coeffs, int twist) { return format_bundle(e6p2(), bw(std::move(coeffs), twist)); }

Result canonical() {
  const int r = canonical_index(e6p2());
  return {r == 11, "canonical index " + std::to_string(r)};
}

Result k_rank() {
  const auto g = weyl_group_order(RootSystem::E6()), l = weyl_group_order(RootSystem::A(5));
  const auto k = k_theory_rank(e6p2());
  std::ostringstream os;
  os << "|W(E6)| = " << g << ", |W(A5)| = " << l << ", ratio " << k;
  return {g == 51840 && l == 720 && k == 72 && g == 72 * l, os.str()};
}

Result dimensions() {
  const auto d1 = weyl_dim(RootSystem::E6(), fundamental(6, 2));
  const auto d2 = weyl_dim(RootSystem::A(5), fundamental(5, 3));
  const auto d3 = weyl_dim(RootSystem::A(5), make_weight({1, 0, 0, 0, 1}));
  const auto rk = bundle_rank(e6p2(), named("T~"));
  const ComplexRankCheck c = complex_rank_check(e6p2(), named("T~"), W("S^{w1+w6}(-1)"));
  std::ostringstream os;
  os << "dim V^w2 = " << d1 << ", dim pi3 = " << d2 << ", dim pi1+pi5 = " << d3 << ", rk T~ = " << rk
     << ", complex " << c.global_sections_dim << " - " << c.left_rank << " - " << c.right_rank << " = "
     << c.kernel_rank;
  return {d1 == 78 && d2 == 20 && d3 == 35 && rk == 22 && c.ok && c.global_sections_dim == 79 &&
              c.kernel_rank == 35 && complex_rank_check(e6p2(), ctx().library),
          os.str()};
}

Result bwb_fixtures() {
  const ParabolicData& p = e6p2();
  const CohomologyResult o = bwb_cohomology(p, W("O"));
  const CohomologyResult s4 = bwb_cohomology(p, W("S^{w4}(-2)"));
  const CohomologyResult a = bwb_cohomology(p, W("w1+w6-4w2"));
  const CohomologyResult v = bwb_cohomology(p, W("w1+w3+w5-3w2"));
  const bool ok = !o.acyclic && o.degree == 0 && o.g_weight == zero_weight(6) && !s4.acyclic && s4.degree == 1 &&
                  s4.g_weight == zero_weight(6) && a.acyclic && !v.acyclic && v.degree == 2 &&
                  v.g_weight == fundamental(6, 1) && v.word.reflections == std::vector<int>{2, 4};
  return {ok, "C[0]; C[-1]; Acyclic; V^{w1}[-2] with w = " + v.word.to_string()};
}

struct Identity {
  std::string lhs_a, lhs_b;
  std::vector<std::string> rhs;
};

// The tensor table as printed, families instantiated for 1 <= t, u <= 5.
// At t = 1 the summand S^{w5 + (t-2) w6}(1) has a negative coefficient and is
// not a bundle; it is dropped.
std::vector<std::pair<std::string, Identity>> tensor_table() {
  std::vector<std::pair<std::string, Identity>> out;
  for (int u = 1; u <= 5; ++u)
    for (int t = 1; t <= 5; ++t) {
      Identity id{S({{6, u}}, 0), S({{1, t}}, 0), {}};
      for (int j = 0; j <= std::min(u, t); ++j) id.rhs.push_back(S({{6, u - j}, {1, t - j}}, j));
      out.push_back({"S^(u w6) x S^(t w1)", id});
    }
  out.push_back({"S^w4 x S^w4", {"S^{w4}", "S^{w4}", {"O(3)", "S^{w1+w6}(2)", "S^{w3+w5}(1)", "S^{2w4}"}}});
  for (int t = 1; t <= 5; ++t)
    out.push_back({"S^w4 x S^(t w1)", {"S^{w4}", S({{1, t}}, 0), {S({{4, 1}, {1, t}}, 0), S({{5, 1}, {1, t - 1}}, 1)}}});
  for (int t = 1; t <= 5; ++t)
    out.push_back({"S^w4 x S^(t w6)", {"S^{w4}", S({{6, t}}, 0), {S({{4, 1}, {6, t}}, 0), S({{3, 1}, {6, t - 1}}, 1)}}});
  out.push_back({"S^w4 x S^w3", {"S^{w4}", "S^{w3}", {"S^{w3+w4}", "S^{w1+w5}(1)", "S^{w6}(2)"}}});
  out.push_back({"S^w4 x S^w5", {"S^{w4}", "S^{w5}", {"S^{w4+w5}", "S^{w3+w6}(1)", "S^{w1}(2)"}}});
  out.push_back({"S^w4 x S^(w1+w6)",
                 {"S^{w4}", "S^{w1+w6}", {"S^{w1+w4+w6}", "S^{w5+w6}(1)", "S^{w4}(1)", "S^{w1+w6}(1)"}}});
  for (int t = 1; t <= 5; ++t) {
    Identity id{S({{6, t}}, 0), "S^{w1+w6}", {S({{1, 1}, {6, t + 1}}, 0), S({{1, 1}, {5, 1}, {6, t - 1}}, 0), S({{6, t}}, 1)}};
    if (t >= 2) id.rhs.push_back(S({{5, 1}, {6, t - 2}}, 1));
    out.push_back({"S^(t w6) x S^(w1+w6)", id});
  }
  for (int t = 1; t <= 5; ++t)
    out.push_back({"S^(t w6) x S^w3", {S({{6, t}}, 0), "S^{w3}", {S({{3, 1}, {6, t}}, 0), S({{1, 1}, {6, t - 1}}, 1)}}});
  for (int t = 1; t <= 5; ++t)
    out.push_back({"S^w5 x S^(t w1)", {"S^{w5}", S({{1, t}}, 0), {S({{5, 1}, {1, t}}, 0), S({{6, 1}, {1, t - 1}}, 1)}}});
  out.push_back({"S^w5 x S^(w1+w6)",
                 {"S^{w5}", "S^{w1+w6}", {"S^{w1+w5+w6}", "S^{w5}(1)", "S^{2w6}(1)", "S^{w1+w4}"}}});
  out.push_back({"S^w6 x S^w3", {"S^{w6}", "S^{w3}", {"S^{w3+w6}", "S^{w1}(1)"}}});
  out.push_back({"worked example", {"S^{w6}(-1)", "S^{w1}", {"O", "S^{w1+w6}(-1)"}}});
  return out;
}

Result tensor_fixtures() {
  std::set<std::string> families, failed;
  std::size_t instances = 0, rank_ok = 0, rank_fail = 0;
  for (const auto& [family, id] : tensor_table()) {
    families.insert(family);
    ++instances;
    const Weight a = W(id.lhs_a), b = W(id.lhs_b);
    const Decomposition got = tensor_bundles(e6p2(), a, b);
    const Decomposition printed = dec(id.rhs);
    if (got != printed) failed.insert(family + ": printed " + format_decomposition(e6p2(), printed) +
                                      ", computed " + format_decomposition(e6p2(), got));
    // Rank multiplicativity, checked on the printed right-hand side with the hook-content oracle.
    std::uint64_t r = 0;
    for (const auto& [w, m] : printed) r += m * rank_oracle(w);
    (r == rank_oracle(a) * rank_oracle(b) ? rank_ok : rank_fail)++;
  }
  std::ostringstream os;
  os << families.size() - 1 << " identities + worked example, " << instances << " instances; "
     << rank_ok << " rank-multiplicative, " << rank_fail << " not";
  for (const auto& f : failed) os << "; mismatch " << f;
  return {failed.empty() && rank_fail == 0 && families.size() == 13, os.str()};
}

Result acyclicity() {
  std::size_t proven = 0, agree = 0;
  std::vector<std::string> failures;
  const auto list = acyclic_list();
  for (const auto& b : list) {
    const bool tool = is_acyclic(e6p2(), b.mu);
    const bool oracle = bwb_oracle(b.mu).acyclic;
    agree += tool == oracle;
    proven += tool;
    if (!tool) {
      GradedVector h = cohomology_of_sum(e6p2(), WeightMultiset::single(b.mu));
      failures.push_back(format_bundle(e6p2(), b.mu) + " = " + format_graded(h));
    }
  }
  std::ostringstream os;
  os << list.size() << " instances, " << proven << " acyclic, " << failures.size() << " not; descent and root-product "
     << (agree == list.size() ? "agree on all" : "DISAGREE");
  if (!failures.empty()) {
    os << "; e.g.";
    for (std::size_t i = 0; i < failures.size() && i < 4; ++i) os << ' ' << failures[i] << ';';
  }
  return {failures.empty() && agree == list.size() && list.size() == 468, os.str()};
}

Result exceptionality() {
  bool ok = ext_groups(e6p2(), named("O"), named("O")) == graded({"C[0]"});
  for (int t = 1; t <= 5; ++t) {
    const std::string s = S({{1, t}}, 0);
    ok = ok && ext_groups(e6p2(), named(s), named(s)) == graded({"C[0]"});
  }
  return {ok, "Ext(O,O) and Ext(S^{t w1}, S^{t w1}), t = 1..5"};
}

Result nilradical() {
  const NilradicalGrading g = nilradical_grading(e6p2());
  std::set<std::string> dom;
  for (const auto& w : g.dominant_roots()) dom.insert(format_weight(w));
  const bool split = g.degrees.size() == 2 && g.degrees.count(1) && g.degrees.count(2) &&
                     g.degrees.at(1).roots.size() == 20 && g.degrees.at(2).roots.size() == 1;
  std::ostringstream os;
  os << g.total_roots() << " roots, split " << (split ? "20+1" : "other") << ", dominant";
  for (const auto& d : dom) os << ' ' << d;
  return {g.total_roots() == 21 && split && dom == std::set<std::string>{"w2", "-w2+w4"}, os.str()};
}

// Vanishings whose stated argument is "replace by the semisimplification
// and quote the acyclicity list", together with the bundles it names.
struct StatedSs {
  std::string key;
  std::vector<std::string> witnesses;
};

std::vector<StatedSs> first4_ss() {
  std::vector<StatedSs> out;
  for (int i = 1; i <= 10; ++i) {
    const std::string s = "(" + std::to_string(-i) + ")";
    out.push_back({"ExtVanishes(O, S^{w1}" + s + ")", {S({{1, 1}}, -i)}});
    out.push_back({"ExtVanishes(O, S^{2w1}" + s + ")", {S({{1, 2}}, -i)}});
    out.push_back({"ExtVanishes(O, O" + s + ")", {S({}, -i)}});
    for (int t = 1; t <= 2; ++t)
      out.push_back({"ExtVanishes(T~, " + S({{1, t}}, -i) + ")",
                     {S({{1, t}, {4, 1}}, -i - 2), S({{1, t - 1}, {5, 1}}, -i - 1), S({{1, t}}, -i - 1)}});
    out.push_back({"ExtVanishes(S^{w1}, S^{2w1}" + s + ")", {S({{1, 2}, {6, 1}}, -i - 1), S({{1, 1}}, -i)}});
    out.push_back({"ExtVanishes(S^{2w1}, S^{w1}" + s + ")", {S({{1, 1}, {6, 2}}, -i - 2), S({{6, 1}}, -i - 1)}});
  }
  out.push_back({"ExtVanishes(S^{2w1}, S^{w1})", {S({{1, 1}, {6, 2}}, -2), S({{6, 1}}, -1)}});
  return out;
}

// The two extension blocks against S^{t w1}(-i), and E~ against F~(-i).
std::vector<std::string> first6_ss() {
  std::vector<std::string> out{"ExtVanishes(E~, O)", "ExtVanishes(F~, O)"};
  for (int i = 0; i <= 10; ++i)
    for (int t = 1; t <= 2; ++t)
      for (const char* x : {"E~", "F~"}) out.push_back("ExtVanishes(" + std::string(x) + ", " + S({{1, t}}, -i) + ")");
  for (int i = 1; i <= 10; ++i) out.push_back("ExtVanishes(E~, F~(" + std::to_string(-i) + "))");
  return out;
}

Result ledgers() {
  std::ostringstream os;
  bool ok = true;

  const ProofScript s44 = load_builtin_or_path(ctx(), "lemma-4.4");
  const Report r44 = run_script(ctx(), s44);
  std::size_t matched = 0;
  const auto stated44 = first4_ss();
  for (const auto& c : stated44) {
    const ReportEntry* e = r44.find(c.key);
    bool m = e && e->outcome.status == Status::Proven;
    for (const auto& w : c.witnesses) m = m && e->outcome.witness.find(w) != std::string::npos;
    matched += m;
  }
  const bool ok44 = s44.collections.at(0).object_count() == 44 && r44.verified() && matched == stated44.size();
  os << "length 44: " << r44.verdict() << ", " << matched << "/" << stated44.size() << " witnesses match";
  ok = ok && ok44;

  const ProofScript s45 = load_builtin_or_path(ctx(), "lemma-4.5");
  const Report r45 = run_script(ctx(), s45);
  std::size_t first4_inside = 0;
  for (const auto& c : stated44) {
    const ReportEntry* e = r45.find(c.key);
    first4_inside += e && e->outcome.status == Status::Proven;
  }
  std::vector<std::string> missed;
  const auto stated45 = first6_ss();
  for (const auto& k : stated45) {
    const ReportEntry* e = r45.find(k);
    if (!e || e->outcome.status != Status::Proven)
      missed.push_back(k + (e ? " [" + e->outcome.witness + "]" : " [absent]"));
  }
  const bool ok45 = s45.collections.at(0).object_count() == 66 && first4_inside == stated44.size() && missed.empty();
  os << "; length 66: " << stated45.size() - missed.size() << "/" << stated45.size()
     << " semisimplification claims on E~, F~ proven";
  for (const auto& m : missed) os << ", not " << m;
  ok = ok && ok45;

  const ProofScript sm = load_builtin_or_path(ctx(), "main-theorem");
  const Report r1 = run_script(ctx(), sm, 1), r4 = run_script(ctx(), sm, 4);
  const auto generated = enumerate_obligations(ctx(), sm.collections.at(0));
  std::size_t classified = 0;
  for (const auto& g : generated) {
    const ReportEntry* e = r1.find(g.key());
    classified += e && e->obligation.required && !e->outcome.witness.empty();
  }
  const bool deterministic = r1.to_json().dump() == r4.to_json().dump();
  const bool okm = sm.collections.at(0).object_count() == 72 &&
                   sm.collections.at(0).partition == std::vector<int>{9, 8, 7, 6, 6, 6, 6, 6, 6, 6, 6} &&
                   classified == generated.size() && deterministic;
  os << "; length 72: " << classified << "/" << generated.size() << " classified (" << r1.count(Status::Proven)
     << " proven, " << r1.count(Status::Refuted) << " refuted, " << r1.count(Status::Unknown) << " unknown), "
     << (deterministic ? "deterministic" : "NOT deterministic") << " across jobs";
  ok = ok && okm;
  return {ok, os.str()};
}

Result properties() {
  std::size_t lr_small = 0, lr_random = 0, dual = 0, strategy = 0, serre = 0;
  bool ok = true;
  const RootSystem a5 = RootSystem::A(5);
  std::vector<Weight> small;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c)
        for (int d = 0; a + b + c + d <= 4; ++d)
          for (int e = 0; a + b + c + d + e <= 4; ++e) small.push_back(make_weight({a, b, c, d, e}));
  auto sum = [](const Weight& w) {
    Rational s = 0;
    for (int i = 0; i < w.size(); ++i) s += w(i);
    return s;
  };
  for (const auto& l : small)
    for (const auto& m : small) {
      if (sum(l) + sum(m) > 4) continue;
      ok = ok && lr_decompose(l, m) == lr_oracle(a5, l, m);
      ++lr_small;
    }
  std::mt19937 rng(20240229);
  std::uniform_int_distribution<int> c3(0, 3);
  while (lr_random < 200) {
    const Weight l = make_weight({c3(rng), c3(rng), c3(rng), c3(rng), c3(rng)});
    const Weight m = make_weight({c3(rng), c3(rng), c3(rng), c3(rng), c3(rng)});
    if (weyl_dim(a5, l) * weyl_dim(a5, m) > 200'000) continue;
    ok = ok && lr_decompose(l, m) == lr_oracle(a5, l, m);
    ++lr_random;
  }
  for (int n = 0; n < 500; ++n) {
    const Weight mu = random_bundle_weight(rng, 4, -10, 10);
    const Weight d = dual_weight(e6p2(), mu);
    ok = ok && dual_weight(e6p2(), d) == mu && restrict_levi(e6p2(), d).charge == -restrict_levi(e6p2(), mu).charge;
    ++dual;
  }
  const ReflectionStrategy last = [](const std::vector<int>& v) { return v.back(); };
  for (int n = 0; n < 1000; ++n) {
    const Weight mu = random_bundle_weight(rng, 5, -20, 5);
    ok = ok && same_cohomology(bwb_cohomology(e6p2(), mu), bwb_cohomology_with(e6p2(), mu, last));
    ++strategy;
  }
  for (int n = 0; n < 120; ++n) {
    const Weight a = random_bundle_weight(rng, 2, -6, 6), b = random_bundle_weight(rng, 2, -6, 6);
    const GradedVector lhs = ext_groups(e6p2(), BundleExpr::single(a), BundleExpr::single(b));
    const GradedVector rhs = ext_groups(e6p2(), BundleExpr::single(b),
                                        BundleExpr::single(Weight(a - Rational(11) * e6p2().line_generator())));
    GradedVector reflected;
    for (const auto& [key, m] : rhs.entries())
      reflected.add(21 - key.first, dual_dominant(e6p2().ambient(), key.second), m);
    ok = ok && lhs == reflected;
    ++serre;
  }
  std::ostringstream os;
  os << "LR = oracle on " << lr_small << " small + " << lr_random << " random pairs; dual involution x" << dual
     << "; strategy independence x" << strategy << "; Serre reflection x" << serre;
  return {ok && lr_small == 1001, os.str()};
}

std::set<int> parse_expected(int argc, char** argv) {
  std::set<int> out;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) != "--expect-fail" || i + 1 >= argc) continue;
    std::stringstream ss(argv[++i]);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::set<int> expected = parse_expected(argc, argv);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::function<Result()>> criteria{canonical,   k_rank,         dimensions, bwb_fixtures,
                                                      tensor_fixtures, acyclicity, exceptionality, nilradical,
                                                      ledgers,     properties};
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i]();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) failed.insert(static_cast<int>(i + 1));
    std::cout << "criterion " << i + 1 << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << std::endl;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "passed " << criteria.size() - failed.size() << " of " << criteria.size() << " in " << seconds
            << " s (budget " << kRuntimeBudgetSeconds << " s)\n";
  if (seconds > kRuntimeBudgetSeconds) {
    std::cout << "over the runtime budget\n";
    return 1;
  }
  if (failed != expected) {
    std::cout << "failing set differs from the expected set\n";
    return 1;
  }
  return 0;
}
