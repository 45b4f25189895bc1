#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bibrank/author_key.hpp"
#include "bibrank/corpus.hpp"
#include "bibrank/methods.hpp"

namespace bibrank {

using VertexId = std::uint32_t;

/// Interning table mapping author keys to dense vertex ids, in first-seen
/// order over the paper list. Graph and collaboration statistics built from
/// the same PaperSet therefore agree on ids.
class AuthorIndex {
public:
    VertexId intern(const AuthorKey& key);
    std::optional<VertexId> find(const AuthorKey& key) const;
    std::optional<VertexId> find_canonical(std::string_view canonical) const;

    const AuthorKey& key(VertexId id) const { return keys_[id]; }
    std::size_t size() const { return keys_.size(); }
    const std::vector<AuthorKey>& keys() const { return keys_; }

    static AuthorIndex from_papers(const PaperSet& papers);

private:
    std::vector<AuthorKey> keys_;
    std::unordered_map<std::string, VertexId> ids_;  // canonical -> id
};

struct OutEdge {
    VertexId to;
    std::uint32_t weight;  // citation multiplicity, >= 1
};

/// In-edge stored as a reference into the source vertex's out list, so the
/// weight is held once.
struct InEdgeRef {
    VertexId from;
    std::uint32_t out_pos;
};

/// Directed author citation graph. Self-loops (author-level self-citations)
/// are removed at construction; parallel citations accumulate into the edge
/// weight. Adjacency order is deterministic (first-touch for out edges,
/// source-id order for in edges).
class AuthorGraph {
public:
    const AuthorIndex& authors() const { return authors_; }
    std::size_t vertex_count() const { return authors_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::uint64_t total_weight() const { return total_weight_; }
    /// Citations to paper ids absent from the corpus, dropped during build.
    std::size_t unresolved_refs() const { return unresolved_refs_; }

    std::span<const OutEdge> out(VertexId v) const { return out_[v]; }
    std::span<const InEdgeRef> in(VertexId u) const { return in_[u]; }
    std::size_t out_degree(VertexId v) const { return out_[v].size(); }
    std::size_t in_degree(VertexId u) const { return in_[u].size(); }
    bool is_dangling(VertexId v) const { return out_[v].empty(); }

    bool has_edge(VertexId from, VertexId to) const { return weight(from, to) != 0; }
    std::uint32_t weight(VertexId from, VertexId to) const;
    std::uint32_t weight_of(const InEdgeRef& e) const { return out_[e.from][e.out_pos].weight; }

private:
    friend AuthorGraph build_author_graph(const PaperSet& papers);

    AuthorIndex authors_;
    std::vector<std::vector<OutEdge>> out_;
    std::vector<std::vector<InEdgeRef>> in_;
    std::size_t edge_count_ = 0;
    std::uint64_t total_weight_ = 0;
    std::size_t unresolved_refs_ = 0;
};

/// Links the authors of each citing paper to the authors of each cited paper,
/// dropping author self-citations. Unresolvable refs are skipped and tallied.
AuthorGraph build_author_graph(const PaperSet& papers);

/// Per-author and per-pair collaboration statistics feeding the b and c
/// coefficients of the bibliographic PageRank variants.
class CollabStats {
public:
    const AuthorIndex& authors() const { return authors_; }
    std::size_t author_count() const { return authors_.size(); }

    std::uint32_t pubs(VertexId u) const { return pubs_[u]; }
    /// Coauthor slots over u's papers (others only, with multiplicity).
    std::uint32_t all_coauthors(VertexId u) const { return all_coauthors_[u]; }
    std::uint32_t all_dist_coauthors(VertexId u) const { return all_dist_coauthors_[u]; }
    /// Number of u's papers having at least two authors.
    std::uint32_t all_collaborations(VertexId u) const { return all_collaborations_[u]; }

    /// Papers coauthored by both u and v (the c coefficient). 0 when none.
    std::uint32_t common_pubs(VertexId u, VertexId v) const;
    /// Total author-list length summed over the common papers (u and v included).
    std::uint32_t joint_coauthor_slots(VertexId u, VertexId v) const;
    /// Distinct authors appearing across the common papers (u and v included).
    std::uint32_t joint_dist_coauthors(VertexId u, VertexId v) const;

    /// Collaborating pairs (common_pubs >= 1), sorted by id for deterministic export.
    std::vector<std::pair<VertexId, VertexId>> collaborating_pairs() const;

private:
    friend CollabStats build_collab_stats(const PaperSet& papers);

    struct PairCounts {
        std::uint32_t common_pubs = 0;
        std::uint32_t joint_slots = 0;
        std::uint32_t joint_distinct = 0;
    };

    const PairCounts* pair(VertexId u, VertexId v) const;

    AuthorIndex authors_;
    std::vector<std::uint32_t> pubs_;
    std::vector<std::uint32_t> all_coauthors_;
    std::vector<std::uint32_t> all_dist_coauthors_;
    std::vector<std::uint32_t> all_collaborations_;
    std::unordered_map<std::uint64_t, PairCounts> pairs_;
};

CollabStats build_collab_stats(const PaperSet& papers);

/// The (w, b, c) coefficient triple of one citation edge under one variant.
struct EdgeCoefficients {
    std::uint64_t w = 1;
    std::uint64_t b = 0;
    std::uint64_t c = 0;

    friend bool operator==(const EdgeCoefficients&, const EdgeCoefficients&) = default;
};

/// Coefficients for the edge (citing, cited). Throws std::invalid_argument
/// if the edge is absent or the variant is not in the PageRank family.
EdgeCoefficients edge_coefficients(MethodId variant, VertexId citing, VertexId cited,
                                   const AuthorGraph& graph, const CollabStats& collab);

namespace detail {
/// Coefficient table shared by the engines; `w` is the known edge weight.
EdgeCoefficients variant_coefficients(MethodId variant, VertexId citing, VertexId cited,
                                      std::uint32_t w, const CollabStats& collab);
}  // namespace detail

}  // namespace bibrank
