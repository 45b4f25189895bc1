#pragma once

#include <cstdint>
#include <string_view>

#include "bibrank/corpus.hpp"
#include "bibrank/graph.hpp"
#include "bibrank/rank.hpp"

namespace bibrank {

/// Generator identifier; corpora are reproducible from (params, seed) in any
/// implementation of this algorithm.
inline constexpr std::string_view kSynthRngAlgorithm = "splitmix64";

/// splitmix64 (Steele/Lea/Flood); tiny, seedable, stable across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

struct SynthParams {
    std::uint32_t n_papers = 0;
    std::uint32_t max_authors_per_paper = 3;  // >= 1
    std::uint32_t max_refs_per_paper = 4;
    std::uint32_t author_pool = 10;  // >= 1
    std::uint64_t seed = 0;
};

/// Deterministic pseudo-random corpus: paper i draws 1..max authors from the
/// pool (duplicates collapse) and up to max refs uniformly among earlier
/// papers. Identical (params, seed) yields a byte-identical serialization.
PaperSet gen_synthetic_corpus(const SynthParams& params);

/// Exact PageRank fixed point by dense Gaussian elimination of
/// (I - d*M^T) p = ((1-d)/|V|) * 1, with M built edge by edge through the
/// literal sigma expression (independent of the iterated engine's cancelled
/// form). Throws std::invalid_argument above max_vertices.
ScoreVector dense_pagerank_solve(const AuthorGraph& graph, const CollabStats& collab,
                                 MethodId variant, double damping, DanglingPolicy dangling,
                                 std::size_t max_vertices = 200);

/// HITS authority limit via a Jacobi eigendecomposition of the co-citation
/// matrix E^T E: the in-degree start vector projected onto the dominant
/// eigenspace, unit Euclidean norm, non-negative. Zero when the graph has no
/// edges. Throws std::invalid_argument above max_vertices.
ScoreVector dense_hits_solve(const AuthorGraph& graph, std::size_t max_vertices = 200);

}  // namespace bibrank
