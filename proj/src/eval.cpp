#include "bibrank/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace bibrank {

ReferenceSet load_reference_set(std::istream& in, std::string label) {
    ReferenceSet rs;
    rs.label = std::move(label);
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        AuthorKey key = parse_author_key(line);
        if (!seen.insert(key.canonical()).second) {
            throw std::invalid_argument("reference set \"" + rs.label + "\" line " +
                                        std::to_string(line_no) + ": duplicate member " +
                                        key.canonical());
        }
        rs.members.push_back(std::move(key));
    }
    if (rs.members.empty()) {
        throw std::invalid_argument("reference set \"" + rs.label + "\" has no members");
    }
    return rs;
}

ReferenceSet load_reference_set_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open reference set file: " + path.string());
    return load_reference_set(in, path.stem().string());
}

namespace {

// Linear interpolation between closest ranks on the sorted sample.
double percentile_sorted(const std::vector<double>& sorted, double q) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = q * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

SummaryStats summary_stats(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("summary_stats: empty input");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    SummaryStats st;
    st.n_found = values.size();
    const double n = static_cast<double>(values.size());
    // Accumulate over the sorted copy so the result is permutation-invariant.
    double sum = 0.0;
    for (double v : sorted) sum += v;
    st.mean = sum / n;
    double sq = 0.0;
    for (double v : sorted) sq += (v - st.mean) * (v - st.mean);
    st.std_dev = std::sqrt(sq / n);  // population
    st.min = sorted.front();
    st.max = sorted.back();
    st.median = percentile_sorted(sorted, 0.5);
    st.p25 = percentile_sorted(sorted, 0.25);
    st.p75 = percentile_sorted(sorted, 0.75);
    return st;
}

LabeledRanking::LabeledRanking(std::string label, std::vector<std::string> authors,
                               std::vector<double> ranks)
    : label_(std::move(label)), authors_(std::move(authors)), ranks_(std::move(ranks)) {
    if (authors_.size() != ranks_.size()) {
        throw std::invalid_argument("LabeledRanking: author/rank length mismatch");
    }
    pos_.reserve(authors_.size());
    for (std::size_t i = 0; i < authors_.size(); ++i) {
        if (!pos_.emplace(authors_[i], i).second) {
            throw std::invalid_argument("LabeledRanking \"" + label_ + "\": duplicate author " +
                                        authors_[i]);
        }
    }
}

std::optional<double> LabeledRanking::rank_of(std::string_view author) const {
    auto it = pos_.find(std::string(author));
    if (it == pos_.end()) return std::nullopt;
    return ranks_[it->second];
}

LabeledRanking label_ranking(const AuthorIndex& authors, const Ranking& ranking) {
    std::vector<std::string> names;
    names.reserve(authors.size());
    for (const AuthorKey& k : authors.keys()) names.push_back(k.canonical());
    return LabeledRanking(std::string(method_name(ranking.method)), std::move(names),
                          ranking.ranks);
}

std::vector<std::pair<AuthorKey, double>> relative_ranks(const LabeledRanking& ranking,
                                                         const ReferenceSet& refset) {
    std::vector<std::pair<AuthorKey, double>> out;
    const double n = static_cast<double>(ranking.size());
    for (const AuthorKey& member : refset.members) {
        if (auto rank = ranking.rank_of(member.canonical())) {
            out.emplace_back(member, *rank / n);
        }
    }
    return out;
}

std::vector<AuthorKey> missing_members(const ReferenceSet& refset, const LabeledRanking& ranking) {
    std::vector<AuthorKey> out;
    for (const AuthorKey& member : refset.members) {
        if (!ranking.rank_of(member.canonical())) out.push_back(member);
    }
    return out;
}

namespace {

// Ranks of `other` aligned to `reference`'s author order; throws when the
// author sets differ.
std::vector<double> aligned_ranks(const LabeledRanking& reference, const LabeledRanking& other) {
    if (reference.size() != other.size()) {
        throw std::invalid_argument("rankings \"" + reference.label() + "\" and \"" +
                                    other.label() + "\" cover different author sets");
    }
    std::vector<double> out;
    out.reserve(reference.size());
    for (const std::string& author : reference.authors()) {
        auto rank = other.rank_of(author);
        if (!rank) {
            throw std::invalid_argument("rankings \"" + reference.label() + "\" and \"" +
                                        other.label() + "\" cover different author sets (" +
                                        author + " missing)");
        }
        out.push_back(*rank);
    }
    return out;
}

}  // namespace

double spearman_rho(const LabeledRanking& x, const LabeledRanking& y) {
    const std::vector<double> aligned = aligned_ranks(x, y);
    return spearman_rho(std::span<const double>(x.ranks()), std::span<const double>(aligned));
}

std::vector<std::vector<double>> correlation_matrix(const std::vector<LabeledRanking>& rankings) {
    const std::size_t m = rankings.size();
    std::vector<std::vector<double>> matrix(m, std::vector<double>(m, 1.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double rho = spearman_rho(rankings[i], rankings[j]);
            matrix[i][j] = rho;
            matrix[j][i] = rho;
        }
    }
    return matrix;
}

EvalReport evaluate(const std::vector<LabeledRanking>& rankings,
                    const std::vector<ReferenceSet>& refsets) {
    EvalReport report;
    for (const LabeledRanking& r : rankings) report.method_labels.push_back(r.label());
    report.correlations = correlation_matrix(rankings);

    for (const ReferenceSet& refset : refsets) {
        for (const LabeledRanking& ranking : rankings) {
            EvalReport::Entry entry;
            entry.method = ranking.label();
            entry.refset = refset.label;
            entry.missing = missing_members(refset, ranking);

            std::vector<double> absolute;
            std::vector<double> relative;
            const double n = static_cast<double>(ranking.size());
            for (const AuthorKey& member : refset.members) {
                if (auto rank = ranking.rank_of(member.canonical())) {
                    entry.member_ranks.emplace_back(member, *rank, *rank / n);
                    absolute.push_back(*rank);
                    relative.push_back(*rank / n);
                }
            }
            if (!absolute.empty()) {
                entry.absolute = summary_stats(absolute);
                entry.relative = summary_stats(relative);
            }
            entry.absolute.n_missing = entry.missing.size();
            entry.relative.n_missing = entry.missing.size();
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

}  // namespace bibrank
