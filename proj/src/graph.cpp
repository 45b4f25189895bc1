#include "bibrank/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bibrank {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

VertexId AuthorIndex::intern(const AuthorKey& key) {
    auto [it, inserted] = ids_.emplace(key.canonical(), static_cast<VertexId>(keys_.size()));
    if (inserted) keys_.push_back(key);
    return it->second;
}

std::optional<VertexId> AuthorIndex::find(const AuthorKey& key) const {
    return find_canonical(key.canonical());
}

std::optional<VertexId> AuthorIndex::find_canonical(std::string_view canonical) const {
    auto it = ids_.find(std::string(canonical));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

AuthorIndex AuthorIndex::from_papers(const PaperSet& papers) {
    AuthorIndex index;
    for (const PaperRecord& p : papers) {
        for (const AuthorKey& a : p.authors) index.intern(a);
    }
    return index;
}

std::uint32_t AuthorGraph::weight(VertexId from, VertexId to) const {
    for (const OutEdge& e : out_[from]) {
        if (e.to == to) return e.weight;
    }
    return 0;
}

AuthorGraph build_author_graph(const PaperSet& papers) {
    AuthorGraph g;
    g.authors_ = AuthorIndex::from_papers(papers);
    const std::size_t n = g.authors_.size();
    g.out_.resize(n);
    g.in_.resize(n);

    // Edge slot lookup keeps out lists deduplicated in first-touch order.
    std::unordered_map<std::uint64_t, std::uint32_t> slot;

    // Author lists as vertex ids, in paper order.
    std::vector<std::vector<VertexId>> paper_authors;
    paper_authors.reserve(papers.size());
    for (const PaperRecord& p : papers) {
        std::vector<VertexId> ids;
        ids.reserve(p.authors.size());
        for (const AuthorKey& a : p.authors) ids.push_back(*g.authors_.find(a));
        paper_authors.push_back(std::move(ids));
    }

    std::size_t paper_idx = 0;
    for (const PaperRecord& citing : papers) {
        const auto& citing_ids = paper_authors[paper_idx++];
        for (const std::string& ref : citing.refs) {
            const PaperRecord* cited = papers.find(ref);
            if (cited == nullptr) {
                ++g.unresolved_refs_;
                continue;
            }
            // One citation between the papers adds one unit of weight per
            // (citing author, cited author) pair, self-citations dropped.
            const auto& cited_ids =
                paper_authors[static_cast<std::size_t>(cited - papers.papers().data())];
            for (VertexId a : citing_ids) {
                for (VertexId b : cited_ids) {
                    if (a == b) continue;
                    const std::uint64_t key =
                        (static_cast<std::uint64_t>(a) << 32) | b;
                    auto [it, inserted] =
                        slot.emplace(key, static_cast<std::uint32_t>(g.out_[a].size()));
                    if (inserted) {
                        g.out_[a].push_back({b, 1});
                        ++g.edge_count_;
                    } else {
                        ++g.out_[a][it->second].weight;
                    }
                    ++g.total_weight_;
                }
            }
        }
    }

    // In lists in (source id, out position) order: deterministic.
    for (VertexId v = 0; v < n; ++v) {
        for (std::uint32_t pos = 0; pos < g.out_[v].size(); ++pos) {
            g.in_[g.out_[v][pos].to].push_back({v, pos});
        }
    }
    return g;
}

std::uint32_t CollabStats::common_pubs(VertexId u, VertexId v) const {
    const PairCounts* p = pair(u, v);
    return p ? p->common_pubs : 0;
}

std::uint32_t CollabStats::joint_coauthor_slots(VertexId u, VertexId v) const {
    const PairCounts* p = pair(u, v);
    return p ? p->joint_slots : 0;
}

std::uint32_t CollabStats::joint_dist_coauthors(VertexId u, VertexId v) const {
    const PairCounts* p = pair(u, v);
    return p ? p->joint_distinct : 0;
}

const CollabStats::PairCounts* CollabStats::pair(VertexId u, VertexId v) const {
    auto it = pairs_.find(pair_key(u, v));
    return it == pairs_.end() ? nullptr : &it->second;
}

std::vector<std::pair<VertexId, VertexId>> CollabStats::collaborating_pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(pairs_.size());
    for (const auto& [key, counts] : pairs_) {
        out.emplace_back(static_cast<VertexId>(key >> 32),
                         static_cast<VertexId>(key & 0xffffffffu));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CollabStats build_collab_stats(const PaperSet& papers) {
    CollabStats cs;
    cs.authors_ = AuthorIndex::from_papers(papers);
    const std::size_t n = cs.authors_.size();
    cs.pubs_.assign(n, 0);
    cs.all_coauthors_.assign(n, 0);
    cs.all_dist_coauthors_.assign(n, 0);
    cs.all_collaborations_.assign(n, 0);

    std::vector<std::vector<VertexId>> coauthors_of(n);          // with multiplicity
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> pair_papers;

    std::vector<std::vector<VertexId>> paper_authors;
    paper_authors.reserve(papers.size());
    for (const PaperRecord& p : papers) {
        std::vector<VertexId> ids;
        ids.reserve(p.authors.size());
        for (const AuthorKey& a : p.authors) ids.push_back(*cs.authors_.find(a));
        paper_authors.push_back(std::move(ids));
    }

    for (std::size_t pi = 0; pi < paper_authors.size(); ++pi) {
        const auto& ids = paper_authors[pi];
        const std::uint32_t k = static_cast<std::uint32_t>(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            ++cs.pubs_[ids[i]];
            if (k >= 2) ++cs.all_collaborations_[ids[i]];
            for (std::size_t j = 0; j < ids.size(); ++j) {
                if (i != j) coauthors_of[ids[i]].push_back(ids[j]);
            }
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                auto& counts = cs.pairs_[pair_key(ids[i], ids[j])];
                ++counts.common_pubs;
                counts.joint_slots += k;
                pair_papers[pair_key(ids[i], ids[j])].push_back(pi);
            }
        }
    }

    for (VertexId u = 0; u < n; ++u) {
        auto& co = coauthors_of[u];
        cs.all_coauthors_[u] = static_cast<std::uint32_t>(co.size());
        std::sort(co.begin(), co.end());
        co.erase(std::unique(co.begin(), co.end()), co.end());
        cs.all_dist_coauthors_[u] = static_cast<std::uint32_t>(co.size());
    }

    // Distinct authors across each pair's common papers (u and v included).
    for (auto& [key, paper_list] : pair_papers) {
        std::vector<VertexId> authors;
        for (std::size_t pi : paper_list) {
            authors.insert(authors.end(), paper_authors[pi].begin(), paper_authors[pi].end());
        }
        std::sort(authors.begin(), authors.end());
        authors.erase(std::unique(authors.begin(), authors.end()), authors.end());
        cs.pairs_[key].joint_distinct = static_cast<std::uint32_t>(authors.size());
    }
    return cs;
}

namespace detail {

EdgeCoefficients variant_coefficients(MethodId variant, VertexId citing, VertexId cited,
                                      std::uint32_t w, const CollabStats& collab) {
    EdgeCoefficients out;
    switch (variant) {
        case MethodId::PR:
            return {1, 0, 0};
        case MethodId::PRWeighted:
            return {w, 0, 0};
        case MethodId::PRCollaboration:
            return {w, 0, collab.common_pubs(citing, cited)};
        case MethodId::PRPublications:
            out.b = static_cast<std::uint64_t>(collab.pubs(citing)) + collab.pubs(cited);
            break;
        case MethodId::PRAllCoauthors:
            out.b = static_cast<std::uint64_t>(collab.all_coauthors(citing)) +
                    collab.all_coauthors(cited);
            break;
        case MethodId::PRAllDistCoauthors:
            out.b = static_cast<std::uint64_t>(collab.all_dist_coauthors(citing)) +
                    collab.all_dist_coauthors(cited);
            break;
        case MethodId::PRAllCollaborations:
            out.b = static_cast<std::uint64_t>(collab.all_collaborations(citing)) +
                    collab.all_collaborations(cited);
            break;
        case MethodId::PRCoauthors:
            out.b = collab.joint_coauthor_slots(citing, cited);
            break;
        case MethodId::PRDistCoauthors:
            out.b = collab.joint_dist_coauthors(citing, cited);
            break;
        default:
            throw std::invalid_argument("edge coefficients: not a PageRank-family method: " +
                                        std::string(method_name(variant)));
    }
    out.w = w;
    out.c = collab.common_pubs(citing, cited);
    return out;
}

}  // namespace detail

EdgeCoefficients edge_coefficients(MethodId variant, VertexId citing, VertexId cited,
                                   const AuthorGraph& graph, const CollabStats& collab) {
    const std::uint32_t w = graph.weight(citing, cited);
    if (w == 0) {
        throw std::invalid_argument("edge_coefficients: no edge " +
                                    graph.authors().key(citing).canonical() + " -> " +
                                    graph.authors().key(cited).canonical());
    }
    return detail::variant_coefficients(variant, citing, cited, w, collab);
}

}  // namespace bibrank
