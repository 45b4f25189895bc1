#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bibrank/eval.hpp"
#include "bibrank/graph.hpp"
#include "bibrank/rank.hpp"

namespace bibrank {

/// Shortest round-trip decimal rendering (std::to_chars).
std::string format_double(double v);

/// Quotes the field if it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

/// Splits one CSV line honoring double-quote escaping.
std::vector<std::string> split_csv_line(std::string_view line);

/// Edge list `citing,cited,w`, sorted by citing then cited key.
void write_edges_csv(const AuthorGraph& graph, std::ostream& out);

/// Per-author collaboration statistics, sorted by author key.
void write_collab_csv(const CollabStats& collab, std::ostream& out);

/// Pair statistics `a,b,common_pubs,joint_slots,joint_distinct`.
void write_collab_pairs_csv(const CollabStats& collab, std::ostream& out);

/// Per-method `author,score,rank`, best rank first.
void write_scores_csv(const AuthorIndex& authors, const ScoreVector& scores,
                      const Ranking& ranking, std::ostream& out);

/// Combined matrix `author,<method...>` of ranks, authors sorted by key.
void write_rank_matrix_csv(const AuthorIndex& authors, const std::vector<MethodRun>& runs,
                           std::ostream& out);

/// Reads a `author,score,rank` file back into a labeled ranking; the label is
/// the file stem with any `rank_` prefix stripped.
LabeledRanking read_rank_csv(const std::filesystem::path& path);

void write_members_csv(const EvalReport::Entry& entry, std::ostream& out);

/// One row per method: `method,mean,median,min,max,std,p25,p75,n_found,n_missing`.
/// Stats cells are left empty when n_found is zero.
void write_aggregate_csv(const EvalReport& report, std::string_view refset_label,
                         bool relative, std::ostream& out);

void write_correlations_csv(const std::vector<std::string>& labels,
                            const std::vector<std::vector<double>>& matrix, std::ostream& out);

}  // namespace bibrank
