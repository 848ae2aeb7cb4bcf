#pragma once

#include <iosfwd>
#include <string>

#include "centrality/score.hpp"

namespace centrality {

// Shortest decimal form that round-trips a double (up to 17 significant digits).
std::string format_score(double v);

// '#'-prefixed parameter echo, then one "node<TAB>score" line per node.
void write_scores_tsv(std::ostream& out, const ScoreVector& s, bool with_header = true);

// '#'-prefixed echo, then node ids ordered by descending score (ties by id).
void write_ranking_tsv(std::ostream& out, const ScoreVector& s, bool with_header = true);

// Writes to path + ".tmp" and renames over path, so readers never observe a
// partial file.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace centrality
