#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "bibrank/author_key.hpp"
#include "bibrank/graph.hpp"
#include "bibrank/rank.hpp"

namespace bibrank {

/// Externally supplied list of outstanding authors used to score rankings.
struct ReferenceSet {
    std::string label;
    std::vector<AuthorKey> members;  // non-empty, no duplicates
};

/// Reads one canonical AuthorKey per line; '#' lines and blanks are skipped.
/// Throws std::invalid_argument on duplicates or an empty member list.
ReferenceSet load_reference_set(std::istream& in, std::string label);
ReferenceSet load_reference_set_file(const std::filesystem::path& path);

/// Boxplot-style aggregates over a rank sample. std_dev is the population
/// standard deviation; quartiles interpolate linearly between closest ranks.
struct SummaryStats {
    double mean = 0, median = 0, min = 0, max = 0, std_dev = 0, p25 = 0, p75 = 0;
    std::size_t n_found = 0;
    std::size_t n_missing = 0;
};

/// Throws std::invalid_argument on empty input.
SummaryStats summary_stats(std::span<const double> values);

/// A ranking bound to canonical author names, the common currency of the
/// evaluation layer; built from an in-memory run or read back from a CSV.
class LabeledRanking {
public:
    LabeledRanking() = default;
    LabeledRanking(std::string label, std::vector<std::string> authors,
                   std::vector<double> ranks);

    const std::string& label() const { return label_; }
    std::size_t size() const { return authors_.size(); }
    const std::vector<std::string>& authors() const { return authors_; }
    const std::vector<double>& ranks() const { return ranks_; }
    std::optional<double> rank_of(std::string_view author) const;

private:
    std::string label_;
    std::vector<std::string> authors_;
    std::vector<double> ranks_;
    std::unordered_map<std::string, std::size_t> pos_;
};

LabeledRanking label_ranking(const AuthorIndex& authors, const Ranking& ranking);

/// Relative rank = rank / number of ranked authors, in (0, 1]. Members absent
/// from the ranking are omitted (see missing_members).
std::vector<std::pair<AuthorKey, double>> relative_ranks(const LabeledRanking& ranking,
                                                         const ReferenceSet& refset);

std::vector<AuthorKey> missing_members(const ReferenceSet& refset,
                                       const LabeledRanking& ranking);

/// Spearman correlation of two labeled rankings over the identical author
/// set; throws std::invalid_argument when the sets differ.
double spearman_rho(const LabeledRanking& x, const LabeledRanking& y);

/// Pairwise Spearman matrix; symmetric with an exactly-unit diagonal.
std::vector<std::vector<double>> correlation_matrix(const std::vector<LabeledRanking>& rankings);

/// Full evaluation product: per (method, refset) member ranks and aggregates
/// plus the pairwise correlation matrix of the supplied rankings.
struct EvalReport {
    struct Entry {
        std::string method;
        std::string refset;
        /// (member, absolute rank, relative rank), in refset order.
        std::vector<std::tuple<AuthorKey, double, double>> member_ranks;
        SummaryStats absolute;  // over absolute ranks
        SummaryStats relative;  // over relative ranks
        std::vector<AuthorKey> missing;
    };

    std::vector<std::string> method_labels;
    std::vector<std::vector<double>> correlations;
    std::vector<Entry> entries;
};

EvalReport evaluate(const std::vector<LabeledRanking>& rankings,
                    const std::vector<ReferenceSet>& refsets);

}  // namespace bibrank
