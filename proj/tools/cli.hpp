#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "actcond/activation.hpp"
#include "actcond/engine.hpp"

namespace actcond::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Renderers shared by the subcommands and the tests.

/// One row per conditional: id, Z, B, W, S, A and the selection mark at
/// `theta`. `tsv` prints exact rationals everywhere; the table prints S and
/// A rounded to two decimals unless `exact`.
std::string render_activation(const KnowledgeBase& kb, const ActivationProfile& profile, const Rational& theta,
                              bool tsv, bool exact);

/// Graphviz text of the network, vertices and edges sorted; with labels,
/// each vertex carries its triggering value and step.
std::string render_dot(const SpreadingNetwork& net, const TriggeringLabels* labels);

std::string render_trace(const QueryTrace& trace);

/// Writes `text` to a sibling temporary file and renames it over `path`.
void write_atomically(const std::string& path, const std::string& text);

}  // namespace actcond::cli
