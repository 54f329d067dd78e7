#include "bwbverify/collections.hpp"

#include "bwbverify/literal.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace bwbverify {

namespace {

const std::vector<std::pair<ClaimKind, std::string>>& kind_names() {
  static const std::vector<std::pair<ClaimKind, std::string>> names = {
      {ClaimKind::Acyclic, "Acyclic"},
      {ClaimKind::ExtVanishes, "ExtVanishes"},
      {ClaimKind::ExtEquals, "ExtEquals"},
      {ClaimKind::TensorEquals, "TensorEquals"},
      {ClaimKind::ExceptionalIrreducible, "ExceptionalIrreducible"},
      {ClaimKind::ExceptionalExtension, "ExceptionalExtension"},
      {ClaimKind::RankEquals, "RankEquals"},
      {ClaimKind::KRankEquals, "KRankEquals"},
  };
  return names;
}

// Canonical sums are joined by " + "; weights never contain spaces.
std::vector<std::string> split_sum(const std::string& s) {
  std::vector<std::string> out;
  if (s == "0") return out;
  std::size_t start = 0;
  for (std::size_t pos; (pos = s.find(" + ", start)) != std::string::npos; start = pos + 3)
    out.push_back(s.substr(start, pos - start));
  out.push_back(s.substr(start));
  return out;
}

std::vector<std::string> string_list(const nlohmann::json& j, const char* what) {
  if (j.is_string()) return split_sum(j.get<std::string>());
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a list of terms");
  std::vector<std::string> out;
  for (const auto& item : j) out.push_back(item.get<std::string>());
  return out;
}

std::string canonical_bundle(const VerificationContext& ctx, const nlohmann::json& j) {
  if (!j.is_string()) throw ParseError("bundle argument must be a string");
  return ctx.library.resolve(ctx.parab, j.get<std::string>()).label(ctx.parab);
}

long long integer_arg(const nlohmann::json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer argument");
  return j.get<long long>();
}

void expect_arity(ClaimKind kind, const nlohmann::json& args, std::size_t lo, std::size_t hi) {
  if (!args.is_array() || args.size() < lo || args.size() > hi)
    throw ParseError(to_string(kind) + " takes " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                     " arguments");
}

FilteredBundle bundle_arg(const VerificationContext& ctx, const nlohmann::json& j) {
  return ctx.library.resolve(ctx.parab, j.get<std::string>());
}

std::string graded_text(const GradedVector& v) { return format_graded(v); }

// Ext computed on semisimplifications, with the summands of Hom for witnesses.
struct ExtComputation {
  BundleExpr hom;
  GradedVector ext;
  bool exact = false;
  bool filtered = false;
};

ExtComputation compute_ext(const VerificationContext& ctx, const FilteredBundle& a, const FilteredBundle& b) {
  ExtComputation c;
  c.hom = hom_bundle(ctx.parab, a.semisimplify(), b.semisimplify());
  c.ext = cohomology_of_sum(ctx.parab, c.hom);
  c.exact = ext_is_exact(a, b, c.ext);
  c.filtered = a.pieces().size() > 1 || b.pieces().size() > 1;
  return c;
}

std::string acyclic_witness(const VerificationContext& ctx, const ExtComputation& c) {
  std::string prefix = c.filtered ? "semisimplified; " : "";
  if (c.hom.empty()) return prefix + "Hom bundle is 0";
  return prefix + "acyclic: " + format_decomposition(ctx.parab, c.hom);
}

std::string cohomology_witness(const CohomologyResult& r) {
  if (r.acyclic) return "singular at vertex " + std::to_string(r.singular_vertex) + " after " + r.word.to_string();
  GradedVector v;
  v.add(r.degree, r.g_weight);
  return "H = " + format_graded(v) + " (w = " + r.word.to_string() + ")";
}

// True Ext is bounded by the semisimplified one: a demanded term beyond it is impossible.
bool exceeds(const GradedVector& expected, const GradedVector& bound) {
  for (const auto& [key, m] : expected.entries()) {
    const auto it = bound.entries().find(key);
    if (it == bound.entries().end() || it->second < m) return true;
  }
  return false;
}

Outcome discharge_unchecked(const VerificationContext& ctx, const Obligation& ob) {
  const ParabolicData& parab = ctx.parab;
  const auto& args = ob.args;
  switch (ob.kind) {
    case ClaimKind::Acyclic: {
      const FilteredBundle e = bundle_arg(ctx, args[0]);
      if (e.is_irreducible()) {
        const CohomologyResult r = bwb_cohomology(parab, e.weight());
        return {r.acyclic ? Status::Proven : Status::Refuted, cohomology_witness(r)};
      }
      const GradedVector h = cohomology_of_sum(parab, e.semisimplify());
      if (h.empty()) return {Status::Proven, "semisimplification acyclic"};
      if (e.pieces().size() == 1 || h.cancellation_free()) return {Status::Refuted, "H = " + graded_text(h)};
      return {Status::Unknown, "semisimplified H = " + graded_text(h) + "; cancellation not excluded"};
    }
    case ClaimKind::ExtVanishes: {
      const ExtComputation c = compute_ext(ctx, bundle_arg(ctx, args[0]), bundle_arg(ctx, args[1]));
      if (c.ext.empty()) return {Status::Proven, acyclic_witness(ctx, c)};
      if (c.exact) return {Status::Refuted, "Ext = " + graded_text(c.ext)};
      return {Status::Unknown, "semisimplified Ext = " + graded_text(c.ext) + "; cancellation not excluded"};
    }
    case ClaimKind::ExtEquals: {
      const ExtComputation c = compute_ext(ctx, bundle_arg(ctx, args[0]), bundle_arg(ctx, args[1]));
      const GradedVector expected = parse_graded(split_sum(args[2].get<std::string>()), parab.rank());
      const std::string got = "Ext = " + graded_text(c.ext);
      if (c.exact) return {c.ext == expected ? Status::Proven : Status::Refuted, got};
      if (exceeds(expected, c.ext)) return {Status::Refuted, "semisimplified " + got + " cannot contain the claim"};
      return {Status::Unknown, "semisimplified " + got + "; cancellation not excluded"};
    }
    case ClaimKind::TensorEquals: {
      const FilteredBundle a = bundle_arg(ctx, args[0]), b = bundle_arg(ctx, args[1]);
      const Decomposition expected = parse_decomposition(parab, split_sum(args[2].get<std::string>()));
      const Decomposition got = tensor_bundles(parab, a.weight(), b.weight());
      return {got == expected ? Status::Proven : Status::Refuted, format_decomposition(parab, got)};
    }
    case ClaimKind::ExceptionalIrreducible: {
      const FilteredBundle e = bundle_arg(ctx, args[0]);
      const GradedVector ext = ext_groups(parab, e, e);
      GradedVector c0;
      c0.add(0, parab.zero());
      const bool exact = ext_is_exact(e, e, ext);
      if (ext == c0 && exact) return {Status::Proven, "Ext = C[0]"};
      if (exact) return {Status::Refuted, "Ext = " + graded_text(ext)};
      return {Status::Unknown, "semisimplified Ext = " + graded_text(ext) + "; cancellation not excluded"};
    }
    case ClaimKind::ExceptionalExtension: {
      FilteredBundle sub, quot;
      if (args.size() == 1) {
        std::tie(sub, quot) = ctx.library.extension_of(parab, bundle_arg(ctx, args[0]));
      } else {
        sub = bundle_arg(ctx, args[0]);
        quot = bundle_arg(ctx, args[1]);
      }
      const ExtensionCheck chk = check_extension_exceptional(parab, sub, quot);
      std::string w = to_string(chk.verdict) + ": sub = " + sub.label(parab) + ", quot = " + quot.label(parab) +
                      "; Ext(sub,sub) = " + graded_text(chk.sub_sub) + "; Ext(quot,quot) = " +
                      graded_text(chk.quot_quot) + "; Ext(sub,quot) = " + graded_text(chk.sub_quot) +
                      "; Ext(quot,sub) = " + graded_text(chk.quot_sub);
      switch (chk.verdict) {
        case ExtensionVerdict::Exceptional:
          return {Status::Proven, w};
        case ExtensionVerdict::NoNontrivialExtension:
          return {Status::Refuted, w};
        case ExtensionVerdict::Inconclusive:
          return {Status::Unknown, w};
      }
      return {Status::Unknown, w};
    }
    case ClaimKind::RankEquals: {
      const std::uint64_t r = bundle_rank(parab, bundle_arg(ctx, args[0]));
      return {static_cast<long long>(r) == args[1].get<long long>() ? Status::Proven : Status::Refuted,
              "rank = " + std::to_string(r)};
    }
    case ClaimKind::KRankEquals: {
      const std::uint64_t r = k_theory_rank(parab);
      return {static_cast<long long>(r) == args[0].get<long long>() ? Status::Proven : Status::Refuted,
              "|W_G|/|W_L| = " + std::to_string(r)};
    }
  }
  return {Status::Unknown, "unhandled claim kind"};
}

std::string json_arg_text(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

VerificationContext VerificationContext::standard() {
  ParabolicData parab = ParabolicData::E6_P2();
  BundleLibrary lib = BundleLibrary::load_default(parab);
  return {std::move(parab), std::move(lib)};
}

std::uint64_t k_theory_rank(const ParabolicData& parab) {
  const std::uint64_t g = weyl_group_order(parab.ambient());
  const std::uint64_t l = weyl_group_order(parab.levi());
  if (l == 0 || g % l != 0) throw InvariantViolation("|W_L| does not divide |W_G|");
  return g / l;
}

std::size_t LefschetzSpec::object_count() const {
  std::size_t n = 0;
  for (int p : partition) n += static_cast<std::size_t>(p);
  return n;
}

void LefschetzSpec::validate(const VerificationContext& ctx) const {
  if (block.empty()) throw DomainError("Lefschetz spec '" + name + "' has an empty starting block");
  if (partition.empty()) throw DomainError("Lefschetz spec '" + name + "' has an empty partition");
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] <= 0) throw DomainError("partition entries must be positive");
    if (i && partition[i] > partition[i - 1]) throw DomainError("partition must be weakly decreasing");
  }
  if (static_cast<std::size_t>(partition.front()) > block.size())
    throw DomainError("partition entry exceeds the starting block");
  const int r = canonical_index(ctx.parab);
  if (static_cast<int>(partition.size()) > r)
    throw DomainError("a Lefschetz collection has at most " + std::to_string(r) + " blocks");
  std::set<std::string> seen;
  for (const auto& e : block)
    if (!seen.insert(ctx.library.resolve(ctx.parab, e).label(ctx.parab)).second)
      throw DomainError("starting block repeats '" + e + "'");
}

LefschetzSpec LefschetzSpec::rectangular(std::string name, std::vector<std::string> block, int blocks) {
  const int b = static_cast<int>(block.size());
  return {std::move(name), std::move(block), std::vector<int>(static_cast<std::size_t>(blocks), b)};
}

std::string to_string(ClaimKind k) {
  for (const auto& [kind, name] : kind_names())
    if (kind == k) return name;
  return "?";
}

ClaimKind parse_claim_kind(const std::string& s) {
  for (const auto& [kind, name] : kind_names())
    if (name == s) return kind;
  throw ParseError("unknown obligation kind '" + s + "'");
}

std::string Obligation::key() const {
  std::string out = to_string(kind) + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += json_arg_text(args[i]);
  }
  return out + ")";
}

Obligation make_obligation(const VerificationContext& ctx, ClaimKind kind, const nlohmann::json& raw,
                           std::string provenance) {
  Obligation ob;
  ob.kind = kind;
  ob.provenance = std::move(provenance);
  auto& a = ob.args;
  switch (kind) {
    case ClaimKind::Acyclic:
    case ClaimKind::ExceptionalIrreducible:
      expect_arity(kind, raw, 1, 1);
      a.push_back(canonical_bundle(ctx, raw[0]));
      break;
    case ClaimKind::ExtVanishes:
      expect_arity(kind, raw, 2, 2);
      a.push_back(canonical_bundle(ctx, raw[0]));
      a.push_back(canonical_bundle(ctx, raw[1]));
      break;
    case ClaimKind::ExtEquals:
      expect_arity(kind, raw, 3, 3);
      a.push_back(canonical_bundle(ctx, raw[0]));
      a.push_back(canonical_bundle(ctx, raw[1]));
      a.push_back(format_graded(parse_graded(string_list(raw[2], "expected Ext"), ctx.parab.rank())));
      break;
    case ClaimKind::TensorEquals: {
      expect_arity(kind, raw, 3, 3);
      for (int i = 0; i < 2; ++i) {
        if (!ctx.library.resolve(ctx.parab, raw[i].get<std::string>()).is_irreducible())
          throw DomainError("TensorEquals takes irreducible bundles");
        a.push_back(canonical_bundle(ctx, raw[i]));
      }
      const Decomposition d = parse_decomposition(ctx.parab, string_list(raw[2], "expected decomposition"));
      validate_bundle(ctx.parab, d);
      a.push_back(format_decomposition(ctx.parab, d));
      break;
    }
    case ClaimKind::ExceptionalExtension:
      expect_arity(kind, raw, 1, 2);
      if (raw.size() == 1) {
        const FilteredBundle named = ctx.library.resolve(ctx.parab, raw[0].get<std::string>());
        if (named.name().empty()) throw DomainError("ExceptionalExtension needs a named bundle or (sub, quot)");
      }
      for (const auto& item : raw) a.push_back(canonical_bundle(ctx, item));
      break;
    case ClaimKind::RankEquals:
      expect_arity(kind, raw, 2, 2);
      a.push_back(canonical_bundle(ctx, raw[0]));
      a.push_back(integer_arg(raw[1]));
      break;
    case ClaimKind::KRankEquals:
      expect_arity(kind, raw, 1, 1);
      a.push_back(integer_arg(raw[0]));
      break;
  }
  return ob;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Proven:
      return "Proven";
    case Status::Refuted:
      return "Refuted";
    case Status::Unknown:
      return "Unknown";
  }
  return "?";
}

std::vector<Obligation> enumerate_obligations(const VerificationContext& ctx, const LefschetzSpec& spec) {
  spec.validate(ctx);
  const ParabolicData& parab = ctx.parab;
  std::vector<FilteredBundle> objects;
  for (const auto& e : spec.block) objects.push_back(ctx.library.resolve(parab, e));

  std::vector<Obligation> out;
  std::set<std::string> keys;
  auto emit = [&](ClaimKind kind, std::vector<std::string> args, std::string provenance) {
    Obligation ob;
    ob.kind = kind;
    for (auto& s : args) ob.args.push_back(std::move(s));
    ob.provenance = std::move(provenance);
    if (keys.insert(ob.key()).second) out.push_back(std::move(ob));
  };

  const std::string tag = spec.name.empty() ? std::string() : spec.name + ": ";
  for (const auto& e : objects) {
    if (e.is_irreducible())
      emit(ClaimKind::ExceptionalIrreducible, {e.label(parab)}, tag + "starting block object is exceptional");
    else
      emit(ClaimKind::ExceptionalExtension, {e.label(parab)}, tag + "starting block object is exceptional");
  }
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      emit(ClaimKind::ExtVanishes, {objects[i].label(parab), objects[j].label(parab)},
           tag + "starting block is an exceptional sequence");
  const int p0 = spec.partition.front();
  for (std::size_t i = 1; i < spec.partition.size(); ++i) {
    const int shift = static_cast<int>(i);
    for (int m = 0; m < spec.partition[i]; ++m)
      for (int n = 0; n < p0; ++n)
        emit(ClaimKind::ExtVanishes, {objects[m].label(parab), objects[n].twisted(parab, -shift).label(parab)},
             tag + "Lefschetz vanishing for twist " + std::to_string(shift));
  }
  return out;
}

Outcome discharge(const VerificationContext& ctx, const Obligation& ob) {
  try {
    return discharge_unchecked(ctx, ob);
  } catch (const std::exception& e) {
    return {Status::Refuted, std::string("error: ") + e.what()};
  }
}

// ---------------------------------------------------------------------------

ProofScript load_script(const VerificationContext& ctx, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open proof script '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("proof script '" + path + "': " + e.what());
  }
  ProofScript script;
  try {
    script.lemma = doc.at("lemma").get<std::string>();
    if (doc.contains("notes")) script.notes = doc.at("notes").get<std::vector<std::string>>();
    if (doc.contains("collections")) {
      for (const auto& c : doc.at("collections")) {
        LefschetzSpec spec{c.value("name", std::string()), c.at("block").get<std::vector<std::string>>(),
                           c.at("partition").get<std::vector<int>>()};
        spec.validate(ctx);
        script.collections.push_back(std::move(spec));
      }
    }
    for (const auto& item : doc.at("obligations")) {
      Obligation ob = make_obligation(ctx, parse_claim_kind(item.at("kind").get<std::string>()), item.at("args"),
                                      item.value("provenance", std::string()));
      if (item.contains("covers")) {
        const auto& cov = item.at("covers");
        ob.covers = make_obligation(ctx, parse_claim_kind(cov.at("kind").get<std::string>()), cov.at("args")).key();
        ob.required = false;
      }
      script.obligations.push_back(std::move(ob));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("proof script '" + path + "': " + e.what());
  }
  return script;
}

std::vector<std::string> builtin_script_names() {
  std::vector<std::string> out;
  const std::filesystem::path dir = std::filesystem::path(data_directory()) / "scripts";
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

ProofScript load_builtin_or_path(const VerificationContext& ctx, const std::string& name_or_path) {
  const std::filesystem::path builtin = std::filesystem::path(data_directory()) / "scripts" / (name_or_path + ".json");
  if (std::filesystem::exists(builtin)) return load_script(ctx, builtin.string());
  if (std::filesystem::exists(name_or_path)) return load_script(ctx, name_or_path);
  throw ParseError("no built-in script or file named '" + name_or_path + "'");
}

std::size_t Report::count(Status s, bool required_only) const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.outcome.status == s && (e.obligation.required || !required_only)) ++n;
  return n;
}

std::string Report::verdict() const {
  if (count(Status::Refuted) > 0) return "refuted";
  if (count(Status::Unknown) > 0) return "unknown";
  return "verified";
}

const ReportEntry* Report::find(const std::string& key) const {
  for (const auto& e : entries)
    if (e.obligation.key() == key) return &e;
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json obligations = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json o = {{"kind", to_string(e.obligation.kind)},
                        {"args", e.obligation.args},
                        {"status", to_string(e.outcome.status)},
                        {"witness", e.outcome.witness},
                        {"provenance", e.obligation.provenance},
                        {"required", e.obligation.required}};
    if (e.obligation.covers) o["covers"] = *e.obligation.covers;
    obligations.push_back(std::move(o));
  }
  return {{"lemma", lemma},
          {"obligations", std::move(obligations)},
          {"verdict", verdict()},
          {"counts",
           {{"required", count(Status::Proven) + count(Status::Refuted) + count(Status::Unknown)},
            {"proven", count(Status::Proven)},
            {"refuted", count(Status::Refuted)},
            {"unknown", count(Status::Unknown)},
            {"supporting_steps", entries.size() - count(Status::Proven) - count(Status::Refuted) -
                                     count(Status::Unknown)}}},
          {"notes", notes}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "lemma: " << lemma << '\n';
  for (const auto& n : notes) os << "note: " << n << '\n';
  for (const auto& e : entries) {
    std::string status = to_string(e.outcome.status);
    status.resize(8, ' ');
    os << status << (e.obligation.required ? "  " : "~ ") << e.obligation.key() << "  [" << e.outcome.witness << "]\n";
  }
  const std::size_t required = count(Status::Proven) + count(Status::Refuted) + count(Status::Unknown);
  os << "verdict: " << verdict() << " (" << count(Status::Proven) << " proven, " << count(Status::Refuted)
     << " refuted, " << count(Status::Unknown) << " unknown of " << required << " required; "
     << entries.size() - required << " supporting steps)\n";
  return os.str();
}

Report run_script(const VerificationContext& ctx, const ProofScript& script, unsigned jobs) {
  Report report;
  report.lemma = script.lemma;
  report.notes = script.notes;
  std::vector<Obligation> all;
  std::set<std::string> keys;
  for (const auto& spec : script.collections) {
    for (auto& ob : enumerate_obligations(ctx, spec))
      if (keys.insert(ob.key()).second) all.push_back(std::move(ob));
  }
  if (!script.collections.empty())
    report.notes.push_back("partition entries are block cardinalities: block i holds the first p_i objects");
  for (const auto& ob : script.obligations) {
    if (!ob.covers && !keys.insert(ob.key()).second) continue;
    keys.insert(ob.key());
    all.push_back(ob);
  }
  // Steps may cover generated obligations or other steps (chained reductions).
  for (const auto& ob : all)
    if (ob.covers && !keys.count(*ob.covers))
      throw ParseError("script step " + ob.key() + " covers unknown obligation " + *ob.covers);

  std::vector<Outcome> outcomes(all.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(all.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < all.size();) outcomes[i] = discharge(ctx, all[i]);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Resolve reductions to a fixpoint: a key is established once any entry with
  // that key is Proven, or once every step covering it is established.
  std::set<std::string> established;
  std::map<std::string, std::vector<std::string>> reductions;  // target key -> step keys
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (outcomes[i].status == Status::Proven) established.insert(all[i].key());
    if (all[i].covers) reductions[*all[i].covers].push_back(all[i].key());
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [target, steps] : reductions) {
      if (established.count(target)) continue;
      if (std::all_of(steps.begin(), steps.end(), [&](const std::string& k) { return established.count(k) > 0; }))
        changed = established.insert(target).second || changed;
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (outcomes[i].status != Status::Unknown) continue;
    const auto it = reductions.find(all[i].key());
    if (it == reductions.end()) continue;
    const std::size_t steps = it->second.size();
    if (established.count(all[i].key())) {
      outcomes[i] = {Status::Proven, "by reduction: " + std::to_string(steps) + " supporting steps established; " +
                                         outcomes[i].witness};
    } else {
      const auto open = std::count_if(it->second.begin(), it->second.end(),
                                      [&](const std::string& k) { return !established.count(k); });
      outcomes[i].witness += "; reduction incomplete: " + std::to_string(open) + " of " + std::to_string(steps) +
                             " supporting steps not established";
    }
  }

  report.entries.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) report.entries.push_back({std::move(all[i]), std::move(outcomes[i])});
  return report;
}

Report verify_collection(const VerificationContext& ctx, const LefschetzSpec& spec, unsigned jobs) {
  ProofScript script;
  script.lemma = spec.name;
  script.collections.push_back(spec);
  return run_script(ctx, script, jobs);
}

}  // namespace bwbverify
