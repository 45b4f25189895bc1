#pragma once

#include <span>
#include <vector>

#include "bibrank/graph.hpp"
#include "bibrank/methods.hpp"

namespace bibrank {

enum class ConvergenceMode { Spearman, L1Delta };
enum class DanglingPolicy { Literal, Redistribute };
enum class TiePolicy { Competition, Average };

/// Iteration controls shared by the recursive methods. Defaults follow the
/// reference study: damping 0.9, at most 50 iterations, convergence declared
/// when the Spearman rho of successive rank vectors reaches 1 - epsilon.
struct RankOptions {
    double damping = 0.9;
    int max_iters = 50;
    double epsilon = 1e-6;
    ConvergenceMode convergence = ConvergenceMode::Spearman;
    DanglingPolicy dangling = DanglingPolicy::Literal;
    TiePolicy ties = TiePolicy::Competition;
};

/// Scores per vertex id plus the iteration diagnostics of the producing run.
struct ScoreVector {
    MethodId method;
    std::vector<double> scores;
    int iterations_run = 0;
    bool converged = true;
};

/// Rank per vertex id; best score gets rank 1. Competition ranks are
/// integral, average ranks may be half-integral.
struct Ranking {
    MethodId method;
    std::vector<double> ranks;
};

struct HitsResult {
    ScoreVector authority;
    ScoreVector hub;
};

/// Weighted citation count: sum of in-edge multiplicities.
ScoreVector rank_citations(const AuthorGraph& graph);

/// Number of distinct citing authors (in-degree, multiplicities ignored).
ScoreVector rank_indegree(const AuthorGraph& graph);

/// Authority/hub iteration from an all-ones hub start, each vector normalized
/// to unit Euclidean length per round. If an update collapses to the zero
/// vector the run stops and zeros are reported. Authorities are the ranking
/// basis; the hub vector is returned for inspection only.
HitsResult hits(const AuthorGraph& graph, const RankOptions& opts = {});
HitsResult hits(const AuthorGraph& graph, const RankOptions& opts,
                std::span<const double> initial_hub);

/// Power iteration for the PageRank family from the uniform start vector.
/// The transition of edge (v,u) is the variant's effective weight
/// w*(b+1)/(c+1) normalized over v's out-edges. Under the literal dangling
/// policy dangling vertices contribute nothing (total mass may drop below 1);
/// under redistribute their mass is spread uniformly before damping.
ScoreVector pagerank(const AuthorGraph& graph, const CollabStats& collab, MethodId variant,
                     const RankOptions& opts = {});

/// Standard PageRank with uniform 1/out-degree transitions; kept as a
/// separate engine so the variant-PR reduction can be cross-checked.
ScoreVector pagerank_standard(const AuthorGraph& graph, const RankOptions& opts = {});

/// Normalized out-transition row of vertex v under a variant, aligned with
/// graph.out(v); entries sum to 1. Throws std::invalid_argument for dangling
/// vertices or non-PageRank-family variants.
std::vector<double> omega_row(MethodId variant, VertexId v, const AuthorGraph& graph,
                              const CollabStats& collab);

/// Ranks of `values` (descending=true ranks the largest value 1). Competition
/// assigns 1 + the count of strictly better values; average assigns tied
/// entries the mean of their occupied positions.
std::vector<double> rank_values(std::span<const double> values, bool descending,
                                TiePolicy policy);

Ranking scores_to_ranks(const ScoreVector& scores, TiePolicy policy = TiePolicy::Competition);

/// Spearman's rank correlation of two paired samples, computed as the Pearson
/// correlation of average-tie ranks. Throws std::invalid_argument on size
/// mismatch or fewer than two observations, std::domain_error when either
/// side has zero rank variance. Identical inputs return exactly 1.
double spearman_rho(std::span<const double> x, std::span<const double> y);
double spearman_rho(const Ranking& x, const Ranking& y);
double spearman_rho(const ScoreVector& x, const ScoreVector& y);

struct MethodRun {
    ScoreVector scores;
    Ranking ranking;
};

/// Runs every method on the graph and returns the 12 results in canonical
/// order. HITS contributes its authority scores.
std::vector<MethodRun> run_all(const AuthorGraph& graph, const CollabStats& collab,
                               const RankOptions& opts = {});

/// Single-method dispatch used by run_all and the CLI.
MethodRun run_method(const AuthorGraph& graph, const CollabStats& collab, MethodId method,
                     const RankOptions& opts = {});

}  // namespace bibrank
