#include "bibrank/rank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bibrank {

namespace {

void validate_options(const RankOptions& opts) {
    if (!(opts.damping > 0.0 && opts.damping < 1.0)) {
        throw std::invalid_argument("damping must lie in (0, 1)");
    }
    if (opts.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (!(opts.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

void validate_pair(const AuthorGraph& graph, const CollabStats& collab) {
    if (collab.author_count() != graph.vertex_count()) {
        throw std::invalid_argument(
            "collaboration statistics were built from a different corpus than the graph");
    }
}

double l1_delta(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
    return sum;
}

// Pearson correlation on two equally sized vectors; NaN when either side has
// zero variance.
double pearson(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

// Successive-iterate convergence test. The Spearman criterion compares the
// average-tie rank vectors of the two iterates; all-tied (zero variance)
// iterates count as converged iff the rank vectors are identical.
bool iterates_converged(std::span<const double> prev, std::span<const double> next,
                        const RankOptions& opts) {
    if (opts.convergence == ConvergenceMode::L1Delta) {
        return l1_delta(prev, next) < opts.epsilon;
    }
    const std::vector<double> rp = rank_values(prev, false, TiePolicy::Average);
    const std::vector<double> rn = rank_values(next, false, TiePolicy::Average);
    const double rho = pearson(rp, rn);
    if (std::isnan(rho)) return rp == rn;
    return rho >= 1.0 - opts.epsilon;
}

double l2_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

ScoreVector rank_citations(const AuthorGraph& graph) {
    ScoreVector sv{MethodId::Citations, std::vector<double>(graph.vertex_count(), 0.0), 0, true};
    for (VertexId u = 0; u < graph.vertex_count(); ++u) {
        double sum = 0.0;
        for (const InEdgeRef& e : graph.in(u)) sum += graph.weight_of(e);
        sv.scores[u] = sum;
    }
    return sv;
}

ScoreVector rank_indegree(const AuthorGraph& graph) {
    ScoreVector sv{MethodId::InDegree, std::vector<double>(graph.vertex_count(), 0.0), 0, true};
    for (VertexId u = 0; u < graph.vertex_count(); ++u) {
        sv.scores[u] = static_cast<double>(graph.in_degree(u));
    }
    return sv;
}

HitsResult hits(const AuthorGraph& graph, const RankOptions& opts) {
    const std::vector<double> ones(graph.vertex_count(), 1.0);
    return hits(graph, opts, ones);
}

HitsResult hits(const AuthorGraph& graph, const RankOptions& opts,
                std::span<const double> initial_hub) {
    validate_options(opts);
    const std::size_t n = graph.vertex_count();
    if (initial_hub.size() != n) throw std::invalid_argument("hits: initial vector size mismatch");

    HitsResult res{{MethodId::Hits, std::vector<double>(n, 0.0), 0, true},
                   {MethodId::Hits, std::vector<double>(n, 0.0), 0, true}};
    if (n == 0) return res;

    std::vector<double> hub(initial_hub.begin(), initial_hub.end());
    std::vector<double> auth(n, 0.0);
    std::vector<double> auth_next(n, 0.0);
    std::vector<double> hub_next(n, 0.0);
    int iterations = 0;
    bool converged = false;

    for (int iter = 1; iter <= opts.max_iters; ++iter) {
        iterations = iter;
        for (VertexId u = 0; u < n; ++u) {
            double s = 0.0;
            for (const InEdgeRef& e : graph.in(u)) s += hub[e.from];
            auth_next[u] = s;
        }
        const double na = l2_norm(auth_next);
        if (na == 0.0) {
            // Edgeless (or otherwise degenerate) graph: report zeros.
            std::fill(auth.begin(), auth.end(), 0.0);
            std::fill(hub.begin(), hub.end(), 0.0);
            converged = true;
            break;
        }
        for (double& x : auth_next) x /= na;

        for (VertexId u = 0; u < n; ++u) {
            double s = 0.0;
            for (const OutEdge& e : graph.out(u)) s += auth_next[e.to];
            hub_next[u] = s;
        }
        const double nh = l2_norm(hub_next);
        if (nh != 0.0) {
            for (double& x : hub_next) x /= nh;
        }

        if (iter >= 2 && iterates_converged(auth, auth_next, opts)) converged = true;
        auth = auth_next;
        hub = hub_next;
        if (converged) break;
    }

    res.authority.scores = std::move(auth);
    res.authority.iterations_run = iterations;
    res.authority.converged = converged;
    res.hub.scores = std::move(hub);
    res.hub.iterations_run = iterations;
    res.hub.converged = converged;
    return res;
}

std::vector<double> omega_row(MethodId variant, VertexId v, const AuthorGraph& graph,
                              const CollabStats& collab) {
    validate_pair(graph, collab);
    if (!is_pagerank_family(variant)) {
        throw std::invalid_argument("omega_row: not a PageRank-family method: " +
                                    std::string(method_name(variant)));
    }
    const auto edges = graph.out(v);
    if (edges.empty()) {
        throw std::invalid_argument("omega_row: vertex " + graph.authors().key(v).canonical() +
                                    " has no outgoing edges");
    }
    // Effective weight w*(b+1)/(c+1); the sigma formula's sum-of-w factor
    // cancels in the normalized row.
    std::vector<double> row(edges.size());
    double total = 0.0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const EdgeCoefficients co =
            detail::variant_coefficients(variant, v, edges[i].to, edges[i].weight, collab);
        row[i] = static_cast<double>(co.w) * (static_cast<double>(co.b) + 1.0) /
                 (static_cast<double>(co.c) + 1.0);
        total += row[i];
    }
    for (double& x : row) x /= total;
    return row;
}

namespace {

// Shared power iteration; `omega[v]` is aligned with graph.out(v).
ScoreVector power_iterate(const AuthorGraph& graph, MethodId method,
                          const std::vector<std::vector<double>>& omega,
                          const RankOptions& opts) {
    const std::size_t n = graph.vertex_count();
    ScoreVector sv{method, std::vector<double>(n, 0.0), 0, true};
    if (n == 0) return sv;

    const double d = opts.damping;
    const double base = (1.0 - d) / static_cast<double>(n);
    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);
    bool converged = false;
    int iterations = 0;

    std::vector<VertexId> dangling;
    for (VertexId v = 0; v < n; ++v) {
        if (graph.is_dangling(v)) dangling.push_back(v);
    }

    for (int iter = 1; iter <= opts.max_iters; ++iter) {
        iterations = iter;
        double extra = 0.0;
        if (opts.dangling == DanglingPolicy::Redistribute && !dangling.empty()) {
            double mass = 0.0;
            for (VertexId v : dangling) mass += p[v];
            extra = d * mass / static_cast<double>(n);
        }
        for (VertexId u = 0; u < n; ++u) {
            double s = 0.0;
            for (const InEdgeRef& e : graph.in(u)) s += p[e.from] * omega[e.from][e.out_pos];
            next[u] = base + extra + d * s;
        }
        if (iter >= 2 && iterates_converged(p, next, opts)) converged = true;
        std::swap(p, next);
        if (converged) break;
    }

    sv.scores = std::move(p);
    sv.iterations_run = iterations;
    sv.converged = converged;
    return sv;
}

}  // namespace

ScoreVector pagerank(const AuthorGraph& graph, const CollabStats& collab, MethodId variant,
                     const RankOptions& opts) {
    validate_options(opts);
    validate_pair(graph, collab);
    if (!is_pagerank_family(variant)) {
        throw std::invalid_argument("pagerank: not a PageRank-family method: " +
                                    std::string(method_name(variant)));
    }
    std::vector<std::vector<double>> omega(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        if (!graph.is_dangling(v)) omega[v] = omega_row(variant, v, graph, collab);
    }
    return power_iterate(graph, variant, omega, opts);
}

ScoreVector pagerank_standard(const AuthorGraph& graph, const RankOptions& opts) {
    validate_options(opts);
    std::vector<std::vector<double>> omega(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        const std::size_t deg = graph.out_degree(v);
        if (deg > 0) omega[v].assign(deg, 1.0 / static_cast<double>(deg));
    }
    return power_iterate(graph, MethodId::PR, omega, opts);
}

std::vector<double> rank_values(std::span<const double> values, bool descending,
                                TiePolicy policy) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return descending ? values[a] > values[b] : values[a] < values[b];
    });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // Tied block occupies 1-based positions i+1 .. j+1.
        const double rank = policy == TiePolicy::Competition
                                ? static_cast<double>(i + 1)
                                : (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

Ranking scores_to_ranks(const ScoreVector& scores, TiePolicy policy) {
    return Ranking{scores.method, rank_values(scores.scores, true, policy)};
}

double spearman_rho(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("spearman_rho: size mismatch");
    if (x.size() < 2) throw std::invalid_argument("spearman_rho: need at least 2 observations");
    const std::vector<double> rx = rank_values(x, false, TiePolicy::Average);
    const std::vector<double> ry = rank_values(y, false, TiePolicy::Average);
    if (rx == ry) return 1.0;
    const double rho = pearson(rx, ry);
    if (std::isnan(rho)) throw std::domain_error("spearman_rho: zero rank variance");
    return std::clamp(rho, -1.0, 1.0);
}

double spearman_rho(const Ranking& x, const Ranking& y) {
    return spearman_rho(std::span<const double>(x.ranks), std::span<const double>(y.ranks));
}

double spearman_rho(const ScoreVector& x, const ScoreVector& y) {
    return spearman_rho(std::span<const double>(x.scores), std::span<const double>(y.scores));
}

MethodRun run_method(const AuthorGraph& graph, const CollabStats& collab, MethodId method,
                     const RankOptions& opts) {
    ScoreVector scores;
    switch (method) {
        case MethodId::Citations: scores = rank_citations(graph); break;
        case MethodId::InDegree: scores = rank_indegree(graph); break;
        case MethodId::Hits: scores = hits(graph, opts).authority; break;
        default: scores = pagerank(graph, collab, method, opts); break;
    }
    Ranking ranking = scores_to_ranks(scores, opts.ties);
    return MethodRun{std::move(scores), std::move(ranking)};
}

std::vector<MethodRun> run_all(const AuthorGraph& graph, const CollabStats& collab,
                               const RankOptions& opts) {
    std::vector<MethodRun> runs;
    runs.reserve(kMethodCount);
    for (MethodId m : all_methods()) runs.push_back(run_method(graph, collab, m, opts));
    return runs;
}

}  // namespace bibrank
