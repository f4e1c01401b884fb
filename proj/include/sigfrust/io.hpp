#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigfrust/petersen.hpp"
#include "sigfrust/signed_graph.hpp"
#include "sigfrust/solvers.hpp"
#include "sigfrust/verify.hpp"

namespace sigfrust {

// Text format:
//   sg <n> <m>
//   e <u> <v> <+|->      (m lines, file order = edge index)
// '#' starts a comment; blank lines are ignored.
// Malformed lines throw ParseError; loops and repeated edges throw InvalidInput.
SignedGraph parse_signed_graph(std::string_view text);
std::string serialize_signed_graph(const SignedGraph& sg);

// Role sidecar: one `role <edge> outer|spoke|inner` line per edge.
std::string serialize_roles(const std::vector<EdgeRole>& roles);
std::vector<EdgeRole> parse_roles(std::string_view text, std::size_t edge_count);

enum class OutputFormat { kHuman, kJson, kCsv, kMarkdown };

OutputFormat parse_output_format(std::string_view text);

std::string format_result(const SolveResult& result, OutputFormat format);
std::string format_reports(const std::vector<TheoremReport>& reports, OutputFormat format);

// key = value lines; '#' comments. Keys:
//   petersen_max_n, petersen (n:k list), p3kk, restricted_n (list or a..b),
//   restricted_samples, fi_fn (n:k list), fi_fn_samples, seed,
//   budget_states, budget_classes, workers, symmetry (on|off).
// Starts from default_suite_config(); lists replace the default entirely.
SuiteConfig parse_suite_config(std::string_view text);

}  // namespace sigfrust
