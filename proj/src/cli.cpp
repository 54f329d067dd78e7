#include "bwbverify/cli.hpp"

#include "bwbverify/literal.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

namespace bwbverify {

namespace {

Weight bundle_weight(const VerificationContext& ctx, const std::string& text) {
  const Weight mu = parse_bundle_weight(ctx.parab, text);
  ctx.parab.require_bundle_weight(mu, "weight");
  return mu;
}

std::string cache_file() {
  const char* dir = std::getenv("BWBVERIFY_CACHE_DIR");
  if (!dir || !*dir) return {};
  return (std::filesystem::path(dir) / "bwb-e6-p2.cache").string();
}

}  // namespace

std::string cmd_bwb(const VerificationContext& ctx, const std::string& weight) {
  const CohomologyResult r = bwb_cohomology(ctx.parab, bundle_weight(ctx, weight));
  if (r.acyclic) {
    std::string out = "Acyclic (singular at vertex " + std::to_string(r.singular_vertex);
    if (r.word.length()) out += " after " + r.word.to_string();
    return out + ")";
  }
  GradedVector v;
  v.add(r.degree, r.g_weight);
  std::string out = format_graded(v);
  if (r.word.length()) out += " (w = " + r.word.to_string() + ")";
  return out;
}

std::string cmd_tensor(const VerificationContext& ctx, const std::string& a, const std::string& b) {
  return format_decomposition(ctx.parab, tensor_bundles(ctx.parab, bundle_weight(ctx, a), bundle_weight(ctx, b)));
}

std::string cmd_ext(const VerificationContext& ctx, const std::string& a, const std::string& b) {
  const FilteredBundle fa = ctx.library.resolve(ctx.parab, a);
  const FilteredBundle fb = ctx.library.resolve(ctx.parab, b);
  const GradedVector ext = ext_groups(ctx.parab, fa, fb);
  std::string out = format_graded(ext);
  if (fa.pieces().size() > 1 || fb.pieces().size() > 1)
    out += ext_is_exact(fa, fb, ext) ? " (semisimplified, exact)" : " (semisimplified, upper bound)";
  return out;
}

std::string cmd_dual(const VerificationContext& ctx, const std::string& bundle) {
  const FilteredBundle e = ctx.library.resolve(ctx.parab, bundle);
  return format_decomposition(ctx.parab, dualize(ctx.parab, e.semisimplify()));
}

std::string cmd_rank(const VerificationContext& ctx, const std::string& bundle) {
  return std::to_string(bundle_rank(ctx.parab, ctx.library.resolve(ctx.parab, bundle)));
}

std::string cmd_roots(const VerificationContext& ctx) {
  const NilradicalGrading g = nilradical_grading(ctx.parab);
  std::ostringstream os;
  os << "positive roots: " << ctx.parab.ambient().label() << ' ' << ctx.parab.ambient().positive_roots().size()
     << ", " << ctx.parab.levi().label() << ' ' << ctx.parab.levi().positive_roots().size() << '\n';
  os << "non-parabolic roots: " << g.total_roots() << '\n';
  for (const auto& [c, d] : g.degrees) {
    os << "  degree " << c << ": " << d.roots.size() << " roots, highest";
    for (const auto& w : d.levi_highest) os << ' ' << format_weight(w);
    os << '\n';
  }
  os << "tangent bundle: " << g.tangent_bundle().label(ctx.parab);
  return os.str();
}

std::string cmd_korder(const VerificationContext& ctx) {
  std::ostringstream os;
  os << "|W(" << ctx.parab.ambient().label() << ")| = " << weyl_group_order(ctx.parab.ambient()) << ", |W("
     << ctx.parab.levi().label() << ")| = " << weyl_group_order(ctx.parab.levi())
     << ", rank K_0 = " << k_theory_rank(ctx.parab) << ", canonical index = " << canonical_index(ctx.parab);
  return os.str();
}

int cmd_verify(const VerificationContext& ctx, const std::string& script, ReportFormat format, unsigned jobs,
               std::ostream& out) {
  const Report report = run_script(ctx, load_builtin_or_path(ctx, script), jobs);
  if (format == ReportFormat::Json)
    out << report.to_json().dump(2) << '\n';
  else
    out << report.to_text();
  return report.verified() ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borel-Weil-Bott and exceptional-collection verifier for E6/P2", "bwbverify"};
  app.require_subcommand(1);

  std::string a, b, script, format = "text";
  unsigned jobs = 1;

  auto* bwb = app.add_subcommand("bwb", "cohomology of S^mu");
  bwb->add_option("weight", a, "weight literal, e.g. w1+w6-4w2 or [1,-4,0,0,0,1]")->required();
  auto* tensor = app.add_subcommand("tensor", "decompose S^a (x) S^b");
  tensor->add_option("a", a)->required();
  tensor->add_option("b", b)->required();
  auto* ext = app.add_subcommand("ext", "Ext^*(a, b); named bundles (T~, E~(1), ...) allowed");
  ext->add_option("a", a)->required();
  ext->add_option("b", b)->required();
  auto* dual = app.add_subcommand("dual", "highest weights of the dual bundle");
  dual->add_option("bundle", a)->required();
  auto* rank = app.add_subcommand("rank", "rank of a bundle");
  rank->add_option("bundle", a)->required();
  auto* roots = app.add_subcommand("roots", "positive roots and the nilradical grading");
  auto* korder = app.add_subcommand("korder", "Weyl group orders and the rank of K_0");
  auto* verify = app.add_subcommand("verify", "discharge a proof script");
  verify->add_option("script", script, "built-in name (e.g. main-theorem) or path")->required();
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  const std::string cache = cache_file();
  try {
    const VerificationContext ctx = VerificationContext::standard();
    if (!cache.empty() && std::filesystem::exists(cache)) load_bwb_cache(ctx.parab, cache);
    int code = 0;
    if (*bwb)
      out << cmd_bwb(ctx, a) << '\n';
    else if (*tensor)
      out << cmd_tensor(ctx, a, b) << '\n';
    else if (*ext)
      out << cmd_ext(ctx, a, b) << '\n';
    else if (*dual)
      out << cmd_dual(ctx, a) << '\n';
    else if (*rank)
      out << cmd_rank(ctx, a) << '\n';
    else if (*roots)
      out << cmd_roots(ctx) << '\n';
    else if (*korder)
      out << cmd_korder(ctx) << '\n';
    else if (*verify)
      code = cmd_verify(ctx, script, format == "json" ? ReportFormat::Json : ReportFormat::Text, jobs, out);
    if (!cache.empty()) save_bwb_cache(ctx.parab, cache);
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace bwbverify
