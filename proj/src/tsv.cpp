#include "centrality/tsv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace centrality {

std::string format_score(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void write_header(std::ostream& out, const ScoreVector& s) {
    out << "# measure: " << s.measure << "\n";
    for (const auto& [name, value] : s.params)
        out << "# " << name << ": " << format_score(value) << "\n";
    if (s.normalized) out << "# normalized: true\n";
    if (s.degenerate) out << "# degenerate: true\n";
}

}  // namespace

void write_scores_tsv(std::ostream& out, const ScoreVector& s, bool with_header) {
    if (with_header) write_header(out, s);
    for (std::size_t i = 0; i < s.scores.size(); ++i)
        out << i << '\t' << format_score(s.scores[i]) << "\n";
}

void write_ranking_tsv(std::ostream& out, const ScoreVector& s, bool with_header) {
    if (with_header) write_header(out, s);
    for (NodeId id : rank_by(s)) out << id << '\t' << format_score(s.scores[id]) << "\n";
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("write to " + tmp + " failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace centrality
