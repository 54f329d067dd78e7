#pragma once

#include "bwbverify/collections.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bwbverify {

// One-line answers of the query subcommands. They throw ParseError/DomainError
// on bad input.
std::string cmd_bwb(const VerificationContext& ctx, const std::string& weight);
std::string cmd_tensor(const VerificationContext& ctx, const std::string& a, const std::string& b);
std::string cmd_ext(const VerificationContext& ctx, const std::string& a, const std::string& b);
std::string cmd_dual(const VerificationContext& ctx, const std::string& bundle);
std::string cmd_rank(const VerificationContext& ctx, const std::string& bundle);
std::string cmd_roots(const VerificationContext& ctx);
std::string cmd_korder(const VerificationContext& ctx);

enum class ReportFormat { Text, Json };
/// Prints the report; returns 0 when verified, 1 otherwise.
int cmd_verify(const VerificationContext& ctx, const std::string& script, ReportFormat format, unsigned jobs,
               std::ostream& out);

/// Full command line (argv[0] excluded). Exit codes: 0 verified/success,
/// 1 refuted or unknown, 2 usage, parse or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bwbverify
