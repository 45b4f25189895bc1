#include "bibrank/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <system_error>
#include <tuple>

namespace bibrank {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

std::string csv_escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

namespace {

double parse_double(const std::string& s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("not a number: \"" + s + "\"");
    }
    return v;
}

// Vertex ids sorted by canonical key, the export order of every per-author file.
std::vector<VertexId> ids_by_key(const AuthorIndex& authors) {
    std::vector<VertexId> ids(authors.size());
    for (VertexId v = 0; v < authors.size(); ++v) ids[v] = v;
    std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
        return authors.key(a).canonical() < authors.key(b).canonical();
    });
    return ids;
}

}  // namespace

void write_edges_csv(const AuthorGraph& graph, std::ostream& out) {
    out << "citing,cited,w\n";
    struct Row {
        std::string citing, cited;
        std::uint32_t w;
    };
    std::vector<Row> rows;
    rows.reserve(graph.edge_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        for (const OutEdge& e : graph.out(v)) {
            rows.push_back({graph.authors().key(v).canonical(),
                            graph.authors().key(e.to).canonical(), e.weight});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.citing, a.cited) < std::tie(b.citing, b.cited);
    });
    for (const Row& r : rows) {
        out << csv_escape(r.citing) << ',' << csv_escape(r.cited) << ',' << r.w << '\n';
    }
}

void write_collab_csv(const CollabStats& collab, std::ostream& out) {
    out << "author,pubs,all_coauthors,all_dist_coauthors,all_collaborations\n";
    for (VertexId v : ids_by_key(collab.authors())) {
        out << csv_escape(collab.authors().key(v).canonical()) << ',' << collab.pubs(v) << ','
            << collab.all_coauthors(v) << ',' << collab.all_dist_coauthors(v) << ','
            << collab.all_collaborations(v) << '\n';
    }
}

void write_collab_pairs_csv(const CollabStats& collab, std::ostream& out) {
    out << "a,b,common_pubs,joint_slots,joint_distinct\n";
    struct Row {
        std::string a, b;
        std::uint32_t common, slots, distinct;
    };
    std::vector<Row> rows;
    for (auto [u, v] : collab.collaborating_pairs()) {
        Row r{collab.authors().key(u).canonical(), collab.authors().key(v).canonical(),
              collab.common_pubs(u, v), collab.joint_coauthor_slots(u, v),
              collab.joint_dist_coauthors(u, v)};
        if (r.b < r.a) std::swap(r.a, r.b);
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    for (const Row& r : rows) {
        out << csv_escape(r.a) << ',' << csv_escape(r.b) << ',' << r.common << ',' << r.slots
            << ',' << r.distinct << '\n';
    }
}

void write_scores_csv(const AuthorIndex& authors, const ScoreVector& scores,
                      const Ranking& ranking, std::ostream& out) {
    out << "author,score,rank\n";
    std::vector<VertexId> ids(authors.size());
    for (VertexId v = 0; v < authors.size(); ++v) ids[v] = v;
    std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
        if (ranking.ranks[a] != ranking.ranks[b]) return ranking.ranks[a] < ranking.ranks[b];
        return authors.key(a).canonical() < authors.key(b).canonical();
    });
    for (VertexId v : ids) {
        out << csv_escape(authors.key(v).canonical()) << ',' << format_double(scores.scores[v])
            << ',' << format_double(ranking.ranks[v]) << '\n';
    }
}

void write_rank_matrix_csv(const AuthorIndex& authors, const std::vector<MethodRun>& runs,
                           std::ostream& out) {
    out << "author";
    for (const MethodRun& run : runs) out << ',' << method_name(run.ranking.method);
    out << '\n';
    for (VertexId v : ids_by_key(authors)) {
        out << csv_escape(authors.key(v).canonical());
        for (const MethodRun& run : runs) out << ',' << format_double(run.ranking.ranks[v]);
        out << '\n';
    }
}

LabeledRanking read_rank_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open rank file: " + path.string());
    std::string label = path.stem().string();
    if (label.starts_with("rank_")) label = label.substr(5);

    std::vector<std::string> authors;
    std::vector<double> ranks;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.starts_with("author,")) continue;  // header
        auto fields = split_csv_line(line);
        if (fields.size() != 3) {
            throw std::invalid_argument(path.string() + " line " + std::to_string(line_no) +
                                        ": expected author,score,rank");
        }
        authors.push_back(fields[0]);
        ranks.push_back(parse_double(fields[2]));
    }
    return LabeledRanking(std::move(label), std::move(authors), std::move(ranks));
}

void write_members_csv(const EvalReport::Entry& entry, std::ostream& out) {
    out << "member,rank,relative_rank\n";
    for (const auto& [member, rank, relative] : entry.member_ranks) {
        out << csv_escape(member.canonical()) << ',' << format_double(rank) << ','
            << format_double(relative) << '\n';
    }
}

void write_aggregate_csv(const EvalReport& report, std::string_view refset_label, bool relative,
                         std::ostream& out) {
    out << "method,mean,median,min,max,std,p25,p75,n_found,n_missing\n";
    for (const EvalReport::Entry& entry : report.entries) {
        if (entry.refset != refset_label) continue;
        const SummaryStats& st = relative ? entry.relative : entry.absolute;
        out << csv_escape(entry.method) << ',';
        if (st.n_found == 0) {
            out << ",,,,,,";  // no members found: stats cells left empty
        } else {
            out << format_double(st.mean) << ',' << format_double(st.median) << ','
                << format_double(st.min) << ',' << format_double(st.max) << ','
                << format_double(st.std_dev) << ',' << format_double(st.p25) << ','
                << format_double(st.p75);
        }
        out << ',' << st.n_found << ',' << st.n_missing << '\n';
    }
}

void write_correlations_csv(const std::vector<std::string>& labels,
                            const std::vector<std::vector<double>>& matrix, std::ostream& out) {
    out << "method";
    for (const std::string& label : labels) out << ',' << csv_escape(label);
    out << '\n';
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << csv_escape(labels[i]);
        for (std::size_t j = 0; j < labels.size(); ++j) out << ',' << format_double(matrix[i][j]);
        out << '\n';
    }
}

}  // namespace bibrank
