#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "bibrank/corpus.hpp"
#include "bibrank/eval.hpp"
#include "bibrank/graph.hpp"
#include "bibrank/rank.hpp"
#include "bibrank/testkit.hpp"

namespace py = pybind11;
using namespace bibrank;

namespace {

RankOptions make_options(double damping, int max_iters, double epsilon,
                         const std::string& convergence, const std::string& dangling,
                         const std::string& ties) {
    RankOptions opts;
    opts.damping = damping;
    opts.max_iters = max_iters;
    opts.epsilon = epsilon;
    if (convergence == "spearman") opts.convergence = ConvergenceMode::Spearman;
    else if (convergence == "l1") opts.convergence = ConvergenceMode::L1Delta;
    else throw std::invalid_argument("convergence must be 'spearman' or 'l1'");
    if (dangling == "literal") opts.dangling = DanglingPolicy::Literal;
    else if (dangling == "redistribute") opts.dangling = DanglingPolicy::Redistribute;
    else throw std::invalid_argument("dangling must be 'literal' or 'redistribute'");
    if (ties == "competition") opts.ties = TiePolicy::Competition;
    else if (ties == "average") opts.ties = TiePolicy::Average;
    else throw std::invalid_argument("ties must be 'competition' or 'average'");
    return opts;
}

MethodId method_or_throw(const std::string& name) {
    if (auto m = method_from_name(name)) return *m;
    std::string valid;
    for (MethodId v : all_methods()) {
        if (!valid.empty()) valid += ", ";
        valid += method_name(v);
    }
    throw std::invalid_argument("unknown method \"" + name + "\"; valid methods: " + valid);
}

py::dict run_to_dict(const AuthorIndex& authors, const MethodRun& run) {
    py::dict scores, ranks;
    for (VertexId v = 0; v < authors.size(); ++v) {
        const py::str key(authors.key(v).canonical());
        scores[key] = run.scores.scores[v];
        ranks[key] = run.ranking.ranks[v];
    }
    py::dict out;
    out["method"] = std::string(method_name(run.scores.method));
    out["scores"] = scores;
    out["ranks"] = ranks;
    out["iterations"] = run.scores.iterations_run;
    out["converged"] = run.scores.converged;
    return out;
}

py::dict scores_to_dict(const AuthorIndex& authors, const ScoreVector& sv) {
    py::dict out;
    for (VertexId v = 0; v < authors.size(); ++v) {
        out[py::str(authors.key(v).canonical())] = sv.scores[v];
    }
    return out;
}

LabeledRanking ranking_from_dict(const std::map<std::string, double>& ranks, std::string label) {
    std::vector<std::string> authors;
    std::vector<double> values;
    authors.reserve(ranks.size());
    for (const auto& [author, rank] : ranks) {
        authors.push_back(author);
        values.push_back(rank);
    }
    return LabeledRanking(std::move(label), std::move(authors), std::move(values));
}

ReferenceSet refset_from_list(const std::vector<std::string>& members) {
    ReferenceSet rs;
    rs.label = "refset";
    for (const std::string& m : members) rs.members.push_back(parse_author_key(m));
    return rs;
}

py::dict stats_to_dict(const SummaryStats& st) {
    py::dict out;
    out["mean"] = st.mean;
    out["median"] = st.median;
    out["min"] = st.min;
    out["max"] = st.max;
    out["std"] = st.std_dev;
    out["p25"] = st.p25;
    out["p75"] = st.p75;
    out["n_found"] = st.n_found;
    out["n_missing"] = st.n_missing;
    return out;
}

constexpr const char* kRankOptionDoc = R"(damping: teleport-complement probability in (0,1), default 0.9.
max_iters: iteration cap, default 50.
epsilon: convergence threshold (1-rho for spearman, L1 score delta for l1).
convergence: 'spearman' (rank correlation of successive iterates) or 'l1'.
dangling: 'literal' (dangling vertices leak mass) or 'redistribute'.
ties: 'competition' or 'average' rank assignment.)";

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Author citation network ranking toolkit";
    m.attr("__version__") = "0.1.0";

    py::class_<PaperSet>(m, "PaperSet", "Parsed publication records, insertion-ordered")
        .def("__len__", &PaperSet::size)
        .def("to_jsonl", [](const PaperSet& ps) { return corpus_to_string(ps); },
             "Serialize to the line-delimited corpus format")
        .def("save", [](const PaperSet& ps, const std::string& path) {
            write_corpus_file(ps, path);
        }, py::arg("path"));

    py::class_<AuthorGraph>(m, "AuthorGraph", "Directed author citation graph")
        .def_property_readonly("vertex_count", &AuthorGraph::vertex_count)
        .def_property_readonly("edge_count", &AuthorGraph::edge_count)
        .def_property_readonly("total_weight", &AuthorGraph::total_weight)
        .def_property_readonly("unresolved_refs", &AuthorGraph::unresolved_refs)
        .def("authors", [](const AuthorGraph& g) {
            std::vector<std::string> out;
            for (const AuthorKey& k : g.authors().keys()) out.push_back(k.canonical());
            return out;
        }, "Canonical author keys in vertex order")
        .def("edges", [](const AuthorGraph& g) {
            std::vector<std::tuple<std::string, std::string, std::uint32_t>> out;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                for (const OutEdge& e : g.out(v)) {
                    out.emplace_back(g.authors().key(v).canonical(),
                                     g.authors().key(e.to).canonical(), e.weight);
                }
            }
            return out;
        }, "(citing, cited, multiplicity) triples");

    py::class_<CollabStats>(m, "CollabStats", "Collaboration statistics behind the b/c coefficients")
        .def_property_readonly("author_count", &CollabStats::author_count)
        .def("pubs", [](const CollabStats& cs, const std::string& author) {
            auto v = cs.authors().find_canonical(author);
            if (!v) throw std::invalid_argument("unknown author: " + author);
            return cs.pubs(*v);
        }, py::arg("author"))
        .def("common_pubs", [](const CollabStats& cs, const std::string& a, const std::string& b) {
            auto u = cs.authors().find_canonical(a);
            auto v = cs.authors().find_canonical(b);
            if (!u || !v) throw std::invalid_argument("unknown author");
            return cs.common_pubs(*u, *v);
        }, py::arg("a"), py::arg("b"));

    m.def("author_key", [](const std::string& surname, const std::string& given) {
        return author_key(surname, given).canonical();
    }, py::arg("surname"), py::arg("given") = "",
       "Canonical 'SURNAME, INITIALS' key for an author name");

    m.def("parse_corpus", [](const std::string& path) { return parse_corpus_file(path); },
          py::arg("path"), "Parse a line-delimited corpus file");
    m.def("parse_corpus_text", [](const std::string& text) { return parse_corpus(text); },
          py::arg("text"), "Parse corpus records from a string");

    m.def("synth_corpus", [](std::uint32_t n_papers, std::uint32_t max_authors,
                             std::uint32_t max_refs, std::uint32_t pool, std::uint64_t seed) {
        return gen_synthetic_corpus({n_papers, max_authors, max_refs, pool, seed});
    }, py::arg("n_papers"), py::arg("max_authors") = 3, py::arg("max_refs") = 4,
       py::arg("pool") = 10, py::arg("seed") = 0,
       "Deterministic pseudo-random corpus (splitmix64)");

    m.def("build_graph", &build_author_graph, py::arg("papers"));
    m.def("build_collab", &build_collab_stats, py::arg("papers"));

    m.def("method_names", []() {
        std::vector<std::string> out;
        for (MethodId v : all_methods()) out.emplace_back(method_name(v));
        return out;
    }, "The 12 canonical method names");

    m.def("rank", [](const AuthorGraph& graph, const CollabStats& collab,
                     const std::string& method, double damping, int max_iters, double epsilon,
                     const std::string& convergence, const std::string& dangling,
                     const std::string& ties) {
        const RankOptions opts =
            make_options(damping, max_iters, epsilon, convergence, dangling, ties);
        return run_to_dict(graph.authors(), run_method(graph, collab, method_or_throw(method), opts));
    }, py::arg("graph"), py::arg("collab"), py::arg("method"), py::arg("damping") = 0.9,
       py::arg("max_iters") = 50, py::arg("epsilon") = 1e-6, py::arg("convergence") = "spearman",
       py::arg("dangling") = "literal", py::arg("ties") = "competition", kRankOptionDoc);

    m.def("run_all", [](const AuthorGraph& graph, const CollabStats& collab, double damping,
                        int max_iters, double epsilon, const std::string& convergence,
                        const std::string& dangling, const std::string& ties) {
        const RankOptions opts =
            make_options(damping, max_iters, epsilon, convergence, dangling, ties);
        py::dict out;
        for (const MethodRun& run : run_all(graph, collab, opts)) {
            out[py::str(std::string(method_name(run.scores.method)))] =
                run_to_dict(graph.authors(), run);
        }
        return out;
    }, py::arg("graph"), py::arg("collab"), py::arg("damping") = 0.9, py::arg("max_iters") = 50,
       py::arg("epsilon") = 1e-6, py::arg("convergence") = "spearman",
       py::arg("dangling") = "literal", py::arg("ties") = "competition",
       "All 12 rankings keyed by method name");

    m.def("dense_pagerank_solve", [](const AuthorGraph& graph, const CollabStats& collab,
                                     const std::string& method, double damping,
                                     const std::string& dangling) {
        const DanglingPolicy policy = dangling == "redistribute" ? DanglingPolicy::Redistribute
                                                                 : DanglingPolicy::Literal;
        return scores_to_dict(graph.authors(),
                              dense_pagerank_solve(graph, collab, method_or_throw(method),
                                                   damping, policy));
    }, py::arg("graph"), py::arg("collab"), py::arg("method") = "PR", py::arg("damping") = 0.9,
       py::arg("dangling") = "literal", "Exact fixed point by dense elimination (<=200 vertices)");

    m.def("dense_hits_solve", [](const AuthorGraph& graph) {
        return scores_to_dict(graph.authors(), dense_hits_solve(graph));
    }, py::arg("graph"), "HITS authority limit via the co-citation eigenproblem");

    m.def("spearman", [](const std::vector<double>& x, const std::vector<double>& y) {
        return spearman_rho(std::span<const double>(x), std::span<const double>(y));
    }, py::arg("x"), py::arg("y"), "Spearman's rho with average-tie ranks");

    m.def("summary_stats", [](const std::vector<double>& values) {
        return stats_to_dict(summary_stats(values));
    }, py::arg("values"), "Boxplot aggregates (population std, linear-interpolation quartiles)");

    m.def("correlation_matrix", [](const std::vector<std::map<std::string, double>>& rankings) {
        std::vector<LabeledRanking> labeled;
        for (std::size_t i = 0; i < rankings.size(); ++i) {
            labeled.push_back(ranking_from_dict(rankings[i], "r" + std::to_string(i)));
        }
        return correlation_matrix(labeled);
    }, py::arg("rankings"), "Pairwise Spearman matrix of author->rank mappings");

    m.def("relative_ranks", [](const std::map<std::string, double>& ranks,
                               const std::vector<std::string>& members) {
        py::dict out;
        const LabeledRanking ranking = ranking_from_dict(ranks, "ranking");
        for (const auto& [key, rel] : relative_ranks(ranking, refset_from_list(members))) {
            out[py::str(key.canonical())] = rel;
        }
        return out;
    }, py::arg("ranks"), py::arg("members"), "Member rank divided by the author count");

    m.def("missing_members", [](const std::map<std::string, double>& ranks,
                                const std::vector<std::string>& members) {
        std::vector<std::string> out;
        const LabeledRanking ranking = ranking_from_dict(ranks, "ranking");
        for (const AuthorKey& key : missing_members(refset_from_list(members), ranking)) {
            out.push_back(key.canonical());
        }
        return out;
    }, py::arg("ranks"), py::arg("members"), "Reference-set members absent from the ranking");
}
