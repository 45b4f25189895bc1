#include "bibrank/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bibrank {

PaperSet gen_synthetic_corpus(const SynthParams& params) {
    if (params.max_authors_per_paper < 1) {
        throw std::invalid_argument("gen_synthetic_corpus: max_authors_per_paper must be >= 1");
    }
    if (params.author_pool < 1) {
        throw std::invalid_argument("gen_synthetic_corpus: author_pool must be >= 1");
    }
    SplitMix64 rng(params.seed);
    PaperSet set;

    auto paper_id = [](std::uint32_t i) {
        std::string num = std::to_string(i + 1);
        return "P" + std::string(6 - std::min<std::size_t>(6, num.size()), '0') + num;
    };
    auto pool_author = [](std::uint64_t idx) {
        std::string num = std::to_string(idx + 1);
        AuthorKey key;
        key.surname = "A" + std::string(4 - std::min<std::size_t>(4, num.size()), '0') + num;
        key.initials = std::string(1, static_cast<char>('A' + idx % 26));
        return key;
    };

    for (std::uint32_t i = 0; i < params.n_papers; ++i) {
        PaperRecord rec;
        rec.id = paper_id(i);
        const std::uint64_t n_authors = 1 + rng.below(params.max_authors_per_paper);
        for (std::uint64_t a = 0; a < n_authors; ++a) {
            AuthorKey key = pool_author(rng.below(params.author_pool));
            const bool dup = std::any_of(rec.authors.begin(), rec.authors.end(),
                                         [&](const AuthorKey& k) { return k == key; });
            if (!dup) rec.authors.push_back(std::move(key));
        }
        rec.year = 1990 + static_cast<int>(rng.below(30));
        if (i > 0 && params.max_refs_per_paper > 0) {
            const std::uint64_t n_refs = rng.below(params.max_refs_per_paper + 1ull);
            for (std::uint64_t r = 0; r < n_refs; ++r) {
                rec.refs.push_back(paper_id(static_cast<std::uint32_t>(rng.below(i))));
            }
        }
        set.add(std::move(rec));
    }
    return set;
}

namespace {

// Gaussian elimination with partial pivoting; A is row-major n x n.
std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        }
        if (a[pivot * n + col] == 0.0) throw std::runtime_error("singular linear system");
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[pivot * n + k]);
            std::swap(b[col], b[pivot]);
        }
        const double diag = a[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r * n + col] / diag;
            if (factor == 0.0) continue;
            for (std::size_t k = col; k < n; ++k) a[r * n + k] -= factor * a[col * n + k];
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * x[k];
        x[i] = s / a[i * n + i];
    }
    return x;
}

// Cyclic Jacobi diagonalization of a symmetric matrix. On return `a` holds
// the eigenvalues on its diagonal and `vecs` the eigenvectors as columns.
void jacobi_eigen(std::vector<double>& a, std::vector<double>& vecs, std::size_t n) {
    vecs.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vecs[i * n + i] = 1.0;
    double frob2 = 0.0;
    for (double x : a) frob2 += x * x;
    if (frob2 == 0.0) return;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
        }
        if (off <= frob2 * 1e-26) return;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double theta = 0.5 * std::atan2(2.0 * apq, a[q * n + q] - a[p * n + p]);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = vecs[k * n + p];
                    const double vkq = vecs[k * n + q];
                    vecs[k * n + p] = c * vkp - s * vkq;
                    vecs[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
}

}  // namespace

ScoreVector dense_pagerank_solve(const AuthorGraph& graph, const CollabStats& collab,
                                 MethodId variant, double damping, DanglingPolicy dangling,
                                 std::size_t max_vertices) {
    const std::size_t n = graph.vertex_count();
    if (n > max_vertices) {
        throw std::invalid_argument("dense_pagerank_solve: graph exceeds the " +
                                    std::to_string(max_vertices) + "-vertex cap");
    }
    if (!(damping > 0.0 && damping < 1.0)) {
        throw std::invalid_argument("dense_pagerank_solve: damping must lie in (0, 1)");
    }
    if (collab.author_count() != graph.vertex_count()) {
        throw std::invalid_argument(
            "dense_pagerank_solve: collaboration statistics do not match the graph");
    }
    ScoreVector sv{variant, {}, 0, true};
    if (n == 0) return sv;

    // Transition matrix row by row through the literal sigma expression
    // sigma(v,k) = w / (((c+1)/(b+1)) * sum_j w(v,j)), then normalized.
    std::vector<double> m(n * n, 0.0);
    for (VertexId v = 0; v < n; ++v) {
        const auto edges = graph.out(v);
        if (edges.empty()) {
            if (dangling == DanglingPolicy::Redistribute) {
                for (std::size_t u = 0; u < n; ++u) m[v * n + u] = 1.0 / static_cast<double>(n);
            }
            continue;
        }
        double weight_sum = 0.0;
        for (const OutEdge& e : edges) weight_sum += e.weight;
        std::vector<double> sigma(edges.size());
        double sigma_sum = 0.0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const EdgeCoefficients co =
                detail::variant_coefficients(variant, v, edges[i].to, edges[i].weight, collab);
            sigma[i] = static_cast<double>(co.w) /
                       (((static_cast<double>(co.c) + 1.0) / (static_cast<double>(co.b) + 1.0)) *
                        weight_sum);
            sigma_sum += sigma[i];
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            m[v * n + edges[i].to] = sigma[i] / sigma_sum;
        }
    }

    // (I - d*M^T) p = ((1-d)/n) * 1
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = (i == j ? 1.0 : 0.0) - damping * m[j * n + i];
        }
    }
    std::vector<double> b(n, (1.0 - damping) / static_cast<double>(n));
    sv.scores = solve_linear(std::move(a), std::move(b));
    return sv;
}

ScoreVector dense_hits_solve(const AuthorGraph& graph, std::size_t max_vertices) {
    const std::size_t n = graph.vertex_count();
    if (n > max_vertices) {
        throw std::invalid_argument("dense_hits_solve: graph exceeds the " +
                                    std::to_string(max_vertices) + "-vertex cap");
    }
    ScoreVector sv{MethodId::Hits, std::vector<double>(n, 0.0), 0, true};
    if (n == 0) return sv;

    // Co-citation matrix C = E^T E (unweighted edges).
    std::vector<double> c(n * n, 0.0);
    for (VertexId v = 0; v < n; ++v) {
        const auto edges = graph.out(v);
        for (const OutEdge& e1 : edges) {
            for (const OutEdge& e2 : edges) {
                c[static_cast<std::size_t>(e1.to) * n + e2.to] += 1.0;
            }
        }
    }

    std::vector<double> vecs;
    jacobi_eigen(c, vecs, n);
    double lambda_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) lambda_max = std::max(lambda_max, c[i * n + i]);
    if (lambda_max <= 0.0) return sv;  // no co-citations at all

    // The iteration's limit is the projection of its start direction
    // (E^T * ones = in-degrees) onto the dominant eigenspace; eigenvalues
    // within 1e-9 relative of the maximum count as dominant so exact
    // structural ties (isomorphic components) resolve the same way.
    std::vector<double> start(n, 0.0);
    for (VertexId u = 0; u < n; ++u) start[u] = static_cast<double>(graph.in_degree(u));

    std::vector<double> proj(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i * n + i] < lambda_max * (1.0 - 1e-9)) continue;
        double dot = 0.0;
        for (std::size_t k = 0; k < n; ++k) dot += vecs[k * n + i] * start[k];
        for (std::size_t k = 0; k < n; ++k) proj[k] += dot * vecs[k * n + i];
    }
    double norm = 0.0;
    for (double x : proj) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return sv;
    for (double& x : proj) {
        x /= norm;
        if (x < 0.0 && x > -1e-9) x = 0.0;  // rounding noise on exact zeros
    }
    sv.scores = std::move(proj);
    return sv;
}

}  // namespace bibrank
