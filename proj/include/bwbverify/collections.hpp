#pragma once

#include "bwbverify/bundles.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bwbverify {

/// Everything a discharge needs: the variety and its named bundles.
struct VerificationContext {
  ParabolicData parab;
  BundleLibrary library;

  /// E6/P2 with the shipped bundle library.
  static VerificationContext standard();
};

/// Number of Schubert cells: |W_G| / |W_L|.
std::uint64_t k_theory_rank(const ParabolicData& parab);

/// Starting block plus support partition. Entry p_i is the number of objects
/// of block i: B_i holds the first p_i objects of the starting block, twisted by i.
struct LefschetzSpec {
  std::string name;
  std::vector<std::string> block;
  std::vector<int> partition;

  std::size_t object_count() const;
  /// Throws DomainError on a non-decreasing partition, an entry larger than
  /// the block, or more blocks than the canonical index allows.
  void validate(const VerificationContext& ctx) const;

  static LefschetzSpec rectangular(std::string name, std::vector<std::string> block, int blocks);
};

enum class ClaimKind {
  Acyclic,
  ExtVanishes,
  ExtEquals,
  TensorEquals,
  ExceptionalIrreducible,
  ExceptionalExtension,
  RankEquals,
  KRankEquals
};

std::string to_string(ClaimKind k);
ClaimKind parse_claim_kind(const std::string& s);

/// One machine-checkable claim. Arguments are kept in canonical textual form
/// (bundle labels, graded vectors, decompositions, integers).
struct Obligation {
  ClaimKind kind = ClaimKind::Acyclic;
  nlohmann::json args = nlohmann::json::array();
  std::string provenance;
  std::optional<std::string> covers;  // key of the obligation this step helps reduce
  bool required = true;

  /// "ExtVanishes(T~, S^{w1}(-1))".
  std::string key() const;
};

/// Canonicalizes raw arguments; throws ParseError/DomainError on malformed input.
Obligation make_obligation(const VerificationContext& ctx, ClaimKind kind, const nlohmann::json& args,
                           std::string provenance = {});

enum class Status { Proven, Refuted, Unknown };
std::string to_string(Status s);

struct Outcome {
  Status status = Status::Unknown;
  std::string witness;
};

/// Lefschetz conditions: exceptionality and Ext(E_i, E_j) = 0 for i > j inside
/// the starting block, then Ext(E_m, E_n(-i)) = 0 for E_m in block i and E_n
/// in block 0, 1 <= i <= l-1. Deterministic and duplicate-free.
std::vector<Obligation> enumerate_obligations(const VerificationContext& ctx, const LefschetzSpec& spec);

/// Never throws: kernel errors become Refuted with the diagnostic as witness.
Outcome discharge(const VerificationContext& ctx, const Obligation& ob);

/// A proof script: Lefschetz specs whose generated obligations are checked,
/// plus explicit steps. A step with `covers` is part of a reduction of an
/// otherwise undecided generated obligation.
struct ProofScript {
  std::string lemma;
  std::vector<LefschetzSpec> collections;
  std::vector<Obligation> obligations;
  std::vector<std::string> notes;
};

ProofScript load_script(const VerificationContext& ctx, const std::string& path);
/// Built-in name ("lemma-3.7", "main-theorem") or a path to a JSON script.
ProofScript load_builtin_or_path(const VerificationContext& ctx, const std::string& name_or_path);
std::vector<std::string> builtin_script_names();

struct ReportEntry {
  Obligation obligation;
  Outcome outcome;
};

struct Report {
  std::string lemma;
  std::vector<ReportEntry> entries;
  std::vector<std::string> notes;

  std::size_t count(Status s, bool required_only = true) const;
  /// "verified" iff no required obligation is Refuted or Unknown; otherwise
  /// "refuted" when something is Refuted, else "unknown".
  std::string verdict() const;
  bool verified() const { return verdict() == "verified"; }
  const ReportEntry* find(const std::string& key) const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Discharges everything (in parallel when jobs > 1), then resolves covered
/// obligations. The result does not depend on `jobs`.
Report run_script(const VerificationContext& ctx, const ProofScript& script, unsigned jobs = 1);

/// Generated obligations of one spec, without script steps.
Report verify_collection(const VerificationContext& ctx, const LefschetzSpec& spec, unsigned jobs = 1);

}  // namespace bwbverify
