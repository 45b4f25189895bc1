// Acceptance suite: runs the project's pinned correctness gate and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
// Usage: bibrank_acceptance <path-to-cli-binary> <scratch-dir>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bibrank/eval.hpp"
#include "bibrank/graph.hpp"
#include "bibrank/io.hpp"
#include "bibrank/rank.hpp"
#include "bibrank/testkit.hpp"

namespace fs = std::filesystem;
using namespace bibrank;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int num, const std::string& title, bool pass, const std::string& detail = "") {
    std::printf("%s %2d. %s%s%s\n", pass ? "PASS" : "FAIL", num, title.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

PaperRecord paper(std::string id, std::vector<std::string> surnames,
                  std::vector<std::string> refs = {}) {
    PaperRecord rec;
    rec.id = std::move(id);
    for (const std::string& s : surnames) rec.authors.push_back(author_key(s, ""));
    rec.refs = std::move(refs);
    return rec;
}

struct Built {
    AuthorGraph graph;
    CollabStats collab;
};

Built from_records(std::vector<PaperRecord> records) {
    PaperSet papers;
    for (PaperRecord& rec : records) papers.add(std::move(rec));
    return {build_author_graph(papers), build_collab_stats(papers)};
}

Built citation_graph(std::vector<std::string> names,
                     std::vector<std::pair<std::string, std::string>> cites) {
    std::vector<PaperRecord> records;
    for (const std::string& n : names) records.push_back(paper("base_" + n, {n}));
    std::size_t i = 0;
    for (const auto& [from, to] : cites) {
        records.push_back(paper("c" + std::to_string(i++), {from}, {"base_" + to}));
    }
    return from_records(std::move(records));
}

VertexId vid(const Built& b, const std::string& surname) {
    return *b.graph.authors().find(author_key(surname, ""));
}

// The seeded 100-graph family all oracle criteria run against: <= 50
// vertices and <= 300 edges each, mixing pools, densities, single-author
// corpora and edgeless corpora.
std::vector<Built> synthetic_family() {
    std::vector<Built> family;
    family.reserve(100);
    for (std::uint64_t s = 1; s <= 100; ++s) {
        SynthParams params;
        params.author_pool = static_cast<std::uint32_t>(std::vector<int>{5, 8, 12, 20, 35, 50}[s % 6]);
        params.n_papers = static_cast<std::uint32_t>(8 + (s * 7) % 24);
        params.max_authors_per_paper = static_cast<std::uint32_t>(1 + s % 3);
        params.max_refs_per_paper = static_cast<std::uint32_t>(s % 4);
        params.seed = s;
        const PaperSet papers = gen_synthetic_corpus(params);
        family.push_back({build_author_graph(papers), build_collab_stats(papers)});
    }
    return family;
}

RankOptions tight(double damping, DanglingPolicy dangling = DanglingPolicy::Literal) {
    RankOptions opts;
    opts.damping = damping;
    opts.max_iters = 5000;
    opts.epsilon = 1e-13;
    opts.convergence = ConvergenceMode::L1Delta;
    opts.dangling = dangling;
    return opts;
}

// Standard PageRank plus its 8 bibliographic variants.
constexpr std::array<MethodId, 9> kAllPagerank{
    MethodId::PR,           MethodId::PRWeighted,          MethodId::PRCollaboration,
    MethodId::PRPublications, MethodId::PRAllCoauthors,    MethodId::PRAllDistCoauthors,
    MethodId::PRAllCollaborations, MethodId::PRCoauthors,  MethodId::PRDistCoauthors};

// ---- criterion 1 -----------------------------------------------------------

struct GoldenColumn {
    const char* table;
    std::vector<double> ranks;
    long long mean, median, min, max, std_dev;
};

bool check_column(const GoldenColumn& col, std::string& detail) {
    const SummaryStats st = summary_stats(col.ranks);
    const bool ok = std::llround(st.mean) == col.mean && std::llround(st.median) == col.median &&
                    std::llround(st.min) == col.min && std::llround(st.max) == col.max &&
                    std::llround(st.std_dev) == col.std_dev;
    if (!ok) {
        detail += std::string(col.table) + " got mean=" + std::to_string(std::llround(st.mean)) +
                  " median=" + std::to_string(std::llround(st.median)) +
                  " std=" + std::to_string(std::llround(st.std_dev)) + "; ";
    }
    return ok;
}

void criterion_1() {
    const auto start = Clock::now();
    const std::vector<GoldenColumn> columns{
        {"A.2 Citations",
         {839, 8130, 10861, 2707, 2390, 387, 413, 896, 9322, 511, 68, 4209},
         3394, 1643, 68, 10861, 3714},
        {"A.2 InDegree",
         {652, 9806, 11226, 2928, 2028, 532, 246, 944, 8419, 663, 38, 4122},
         3467, 1486, 38, 11226, 3879},
        {"A.2 HITS",
         {3463, 19472, 16476, 8537, 5830, 303, 2566, 6262, 18865, 4462, 2096, 9503},
         8153, 6046, 303, 19472, 6379},
        {"A.2 PR",
         {2941, 26215, 27857, 7008, 6552, 1446, 822, 1817, 14183, 1557, 140, 1285},
         7652, 2379, 140, 27857, 9454},
        {"A.1 Citations",
         {2511, 1248, 5621, 2238, 1021, 519,  20,   196,  2612, 240, 10287,
          108,  968,  283,  9374, 3402, 4639, 257,  47,   13653, 122, 1369,
          1972, 3161, 2668, 7506, 17064, 453, 329,  5245, 363,  7181},
         3334, 1671, 20, 17064, 4188},
        {"A.3 Citations",
         {417, 453, 233, 9879, 14, 5990, 145, 524, 1920, 192, 2777, 2657, 7037, 1354, 1950, 1561,
          572},
         2216, 1354, 14, 9879, 2735},
        {"A.3 HITS",
         {964, 528, 309, 11399, 21, 3878, 872, 1606, 4696, 722, 6428, 4412, 2612, 2521, 1150,
          4212, 802},
         2772, 1606, 21, 11399, 2820},
    };
    std::string detail;
    bool pass = true;
    for (const GoldenColumn& col : columns) pass = check_column(col, detail) && pass;
    const double elapsed = seconds_since(start);
    if (elapsed >= 1.0) {
        pass = false;
        detail += "took " + std::to_string(elapsed) + "s; ";
    }
    report(1, "published aggregate rows reproduce exactly (7 columns)", pass, detail);
}

// ---- criteria 2-4, 6, 7 over the synthetic family --------------------------

void criterion_2(const std::vector<Built>& family) {
    const auto start = Clock::now();
    double worst = 0.0;
    bool pass = true;
    for (const Built& b : family) {
        for (MethodId m : kAllPagerank) {
            for (double d : {0.5, 0.85, 0.9}) {
                for (DanglingPolicy policy :
                     {DanglingPolicy::Literal, DanglingPolicy::Redistribute}) {
                    const ScoreVector iterated = pagerank(b.graph, b.collab, m, tight(d, policy));
                    const ScoreVector exact =
                        dense_pagerank_solve(b.graph, b.collab, m, d, policy);
                    for (std::size_t i = 0; i < exact.scores.size(); ++i) {
                        worst = std::max(worst, std::abs(iterated.scores[i] - exact.scores[i]));
                    }
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (worst > 1e-8) pass = false;
    if (elapsed >= 60.0) pass = false;
    std::ostringstream detail;
    detail << "max |iterated - solved| = " << worst << " over 100x9x3x2 runs in " << elapsed
           << "s";
    report(2, "iterated scores match the dense solve within 1e-8", pass, detail.str());
}

void criterion_3(const std::vector<Built>& family) {
    double worst = 0.0;
    for (const Built& b : family) {
        for (DanglingPolicy policy : {DanglingPolicy::Literal, DanglingPolicy::Redistribute}) {
            const ScoreVector biblio = pagerank(b.graph, b.collab, MethodId::PR, tight(0.9, policy));
            const ScoreVector standard = pagerank_standard(b.graph, tight(0.9, policy));
            for (std::size_t i = 0; i < biblio.scores.size(); ++i) {
                worst = std::max(worst, std::abs(biblio.scores[i] - standard.scores[i]));
            }
        }
    }
    std::ostringstream detail;
    detail << "max deviation " << worst;
    report(3, "coefficients (1,0,0) reduce to standard PageRank within 1e-12", worst <= 1e-12,
           detail.str());
}

void criterion_4(const std::vector<Built>& family) {
    bool pass = true;
    std::string detail;

    // Every non-dangling transition row is stochastic.
    double worst_row = 0.0;
    for (const Built& b : family) {
        for (MethodId m : kAllPagerank) {
            for (VertexId v = 0; v < b.graph.vertex_count(); ++v) {
                if (b.graph.is_dangling(v)) continue;
                double sum = 0.0;
                for (double x : omega_row(m, v, b.graph, b.collab)) sum += x;
                worst_row = std::max(worst_row, std::abs(sum - 1.0));
            }
        }
    }
    if (worst_row > 1e-12) {
        pass = false;
        detail += "omega row sum off by " + std::to_string(worst_row) + "; ";
    }

    // Mass conservation: redistribute everywhere, literal on dangling-free
    // graphs (family members without dangling vertices plus a hand cycle).
    double worst_mass = 0.0;
    std::size_t danglingless = 0;
    auto check_mass = [&](const Built& b, DanglingPolicy policy) {
        const ScoreVector sv = pagerank(b.graph, b.collab, MethodId::PR, tight(0.9, policy));
        double total = 0.0;
        for (double s : sv.scores) total += s;
        worst_mass = std::max(worst_mass, std::abs(total - 1.0));
    };
    const Built cycle = citation_graph({"A", "B", "C", "D"},
                                       {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "A"}});
    check_mass(cycle, DanglingPolicy::Literal);
    for (const Built& b : family) {
        if (b.graph.vertex_count() == 0) continue;
        check_mass(b, DanglingPolicy::Redistribute);
        bool has_dangling = false;
        for (VertexId v = 0; v < b.graph.vertex_count(); ++v) {
            if (b.graph.is_dangling(v)) has_dangling = true;
        }
        if (!has_dangling) {
            ++danglingless;
            check_mass(b, DanglingPolicy::Literal);
        }
    }
    if (worst_mass > 1e-9) {
        pass = false;
        detail += "mass off by " + std::to_string(worst_mass) + "; ";
    }

    // Source floor: uncited vertices sit exactly at (1-d)/|V| under literal.
    double worst_floor = 0.0;
    for (const Built& b : family) {
        const std::size_t n = b.graph.vertex_count();
        if (n == 0) continue;
        const ScoreVector sv = pagerank(b.graph, b.collab, MethodId::PR, tight(0.9));
        const double floor = (1.0 - 0.9) / static_cast<double>(n);
        for (VertexId v = 0; v < n; ++v) {
            if (b.graph.in_degree(v) == 0) {
                worst_floor = std::max(worst_floor, std::abs(sv.scores[v] - floor));
            }
        }
    }
    if (worst_floor > 1e-15) {
        pass = false;
        detail += "source floor off by " + std::to_string(worst_floor) + "; ";
    }

    std::ostringstream summary;
    summary << "row sum err " << worst_row << ", mass err " << worst_mass << " ("
            << danglingless << " dangling-free graphs), floor err " << worst_floor;
    report(4, "stochastic rows, conserved mass, exact source floor", pass,
           detail.empty() ? summary.str() : detail);
}

void criterion_5() {
    bool pass = true;
    std::string detail;

    const Built chain = citation_graph({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}});
    const ScoreVector sv = pagerank(chain.graph, chain.collab, MethodId::PR, tight(0.5));
    if (std::abs(sv.scores[vid(chain, "A")] - 1.0 / 6.0) > 1e-12 ||
        std::abs(sv.scores[vid(chain, "B")] - 1.0 / 4.0) > 1e-12 ||
        std::abs(sv.scores[vid(chain, "C")] - 7.0 / 24.0) > 1e-12) {
        pass = false;
        detail += "chain fixed point off; ";
    }

    const Built cycle2 = citation_graph({"u", "v"}, {{"u", "v"}, {"v", "u"}});
    for (double d : {0.5, 0.85, 0.9}) {
        const ScoreVector c = pagerank(cycle2.graph, cycle2.collab, MethodId::PR, tight(d));
        if (std::abs(c.scores[0] - 0.5) > 1e-12 || std::abs(c.scores[1] - 0.5) > 1e-12) {
            pass = false;
            detail += "two-cycle off at d=" + std::to_string(d) + "; ";
        }
    }

    const Built edgeless = citation_graph({"A", "B", "C", "D"}, {});
    const ScoreVector e = pagerank(edgeless.graph, edgeless.collab, MethodId::PR, tight(0.9));
    for (double s : e.scores) {
        if (std::abs(s - 0.025) > 1e-15) {
            pass = false;
            detail += "edgeless floor off; ";
            break;
        }
    }
    report(5, "hand-computed fixed points (chain, two-cycle, edgeless)", pass, detail);
}

void criterion_6(const std::vector<Built>& family) {
    bool pass = true;
    std::string detail;

    RankOptions hits_opts = tight(0.9);
    hits_opts.max_iters = 20000;

    const Built fixture = citation_graph({"h1", "h2", "a1", "a2"},
                                         {{"h1", "a1"}, {"h1", "a2"}, {"h2", "a1"}});
    const HitsResult res = hits(fixture.graph, hits_opts);
    const double ratio =
        res.authority.scores[vid(fixture, "a1")] / res.authority.scores[vid(fixture, "a2")];
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    if (std::abs(ratio - golden) > 1e-6) {
        pass = false;
        detail += "golden ratio off by " + std::to_string(std::abs(ratio - golden)) + "; ";
    }

    // Rank order must match the eigensolve; oracle ties (closer than 1e-6
    // after unit normalization) cannot be ordered by floating point and are
    // exempt.
    double worst_score = 0.0;
    std::size_t order_breaks = 0;
    for (const Built& b : family) {
        if (b.graph.vertex_count() == 0) continue;
        const ScoreVector iterated = hits(b.graph, hits_opts).authority;
        const ScoreVector oracle = dense_hits_solve(b.graph);
        const std::size_t n = oracle.scores.size();
        for (std::size_t i = 0; i < n; ++i) {
            worst_score = std::max(worst_score, std::abs(iterated.scores[i] - oracle.scores[i]));
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double od = oracle.scores[i] - oracle.scores[j];
                if (std::abs(od) <= 3e-6) continue;
                const double id = iterated.scores[i] - iterated.scores[j];
                if ((od > 0) != (id > 0)) ++order_breaks;
            }
        }
    }
    if (worst_score > 1e-6) {
        pass = false;
        detail += "authority scores off by " + std::to_string(worst_score) + "; ";
    }
    if (order_breaks > 0) {
        pass = false;
        detail += std::to_string(order_breaks) + " rank-order disagreements; ";
    }
    std::ostringstream summary;
    summary << "ratio err " << std::abs(ratio - golden) << ", max score err " << worst_score;
    report(6, "HITS golden ratio and eigensolve rank order", pass,
           detail.empty() ? summary.str() : detail);
}

void criterion_7(const std::vector<Built>& family) {
    // The paper's own regime: damping 0.9, Spearman convergence, 50 rounds.
    std::size_t unconverged = 0;
    int worst_iters = 0;
    for (const Built& b : family) {
        if (b.graph.vertex_count() == 0) continue;
        for (MethodId m : kAllPagerank) {
            const ScoreVector sv = pagerank(b.graph, b.collab, m, RankOptions{});
            worst_iters = std::max(worst_iters, sv.iterations_run);
            if (!sv.converged) ++unconverged;
        }
    }
    std::ostringstream detail;
    detail << "worst case " << worst_iters << " iterations, " << unconverged
           << " non-convergent runs";
    report(7, "all runs converge within 50 iterations at d=0.9", unconverged == 0, detail.str());
}

void criterion_8() {
    const PaperSet papers = gen_synthetic_corpus({3000, 4, 6, 1000, 2024});
    const AuthorGraph g = build_author_graph(papers);
    const CollabStats cs = build_collab_stats(papers);
    const std::vector<MethodRun> runs = run_all(g, cs, RankOptions{});

    std::vector<LabeledRanking> rankings;
    for (const MethodRun& run : runs) rankings.push_back(label_ranking(g.authors(), run.ranking));
    const auto matrix = correlation_matrix(rankings);

    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < 12; ++i) {
        if (matrix[i][i] != 1.0) pass = false;
        for (std::size_t j = 0; j < 12; ++j) {
            if (matrix[i][j] != matrix[j][i]) pass = false;
        }
    }
    if (!pass) detail += "matrix not symmetric/unit-diagonal; ";

    // PageRank variants should hang together more tightly than with HITS.
    const std::size_t hits_idx = 2;
    double intra = 0.0, versus_hits = 0.0;
    std::size_t intra_n = 0;
    for (std::size_t i = 3; i < 12; ++i) {
        versus_hits += matrix[i][hits_idx];
        for (std::size_t j = i + 1; j < 12; ++j) {
            intra += matrix[i][j];
            ++intra_n;
        }
    }
    intra /= static_cast<double>(intra_n);
    versus_hits /= 9.0;
    if (!(intra > versus_hits)) {
        pass = false;
        detail += "intra-family " + std::to_string(intra) + " <= vs-HITS " +
                  std::to_string(versus_hits) + "; ";
    }
    std::ostringstream summary;
    summary << "|V|=" << g.vertex_count() << ", intra-family mean rho " << intra
            << " vs HITS mean rho " << versus_hits;
    report(8, "correlation matrix structure on a 1000-author corpus", pass,
           detail.empty() ? summary.str() : detail);
}

void criterion_9() {
    bool pass = true;
    std::string detail;
    const std::vector<double> x{1, 2, 3, 4};
    const std::vector<double> reversed{4, 3, 2, 1};
    if (spearman_rho(x, x) != 1.0) {
        pass = false;
        detail += "self-correlation not exactly 1; ";
    }
    if (std::abs(spearman_rho(x, reversed) + 1.0) > 1e-15) {
        pass = false;
        detail += "reversal not -1; ";
    }
    const std::vector<double> a{1, 2, 3};
    const std::vector<double> b{1, 3, 2};
    if (std::abs(spearman_rho(a, b) - 0.5) > 1e-15) {
        pass = false;
        detail += "[1,2,3] vs [1,3,2] not 0.5; ";
    }
    report(9, "Spearman unit checks", pass, detail);
}

// ---- criterion 10: end-to-end CLI determinism ------------------------------

int run_cli(const std::string& cli, const std::string& args, const fs::path& log) {
    const std::string cmd = cli + " " + args + " >" + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_10(const std::string& cli, const fs::path& scratch) {
    bool pass = true;
    std::string detail;

    fs::remove_all(scratch);
    fs::create_directories(scratch);
    const fs::path corpus = scratch / "corpus.jsonl";
    const fs::path refset = scratch / "board.txt";
    const fs::path log = scratch / "cli.log";
    {
        std::ofstream rs(refset);
        rs << "A0001, A\nA0002, B\nA0003, C\nNOBODY, X\n";
    }
    if (run_cli(cli, "synth --out " + corpus.string() + " --papers 60 --pool 25 --seed 11",
                log) != 0) {
        report(10, "end-to-end CLI determinism", false, "synth failed: " + slurp(log));
        return;
    }

    for (const char* run : {"a", "b"}) {
        const fs::path out = scratch / run;
        const std::string common = " --input " + corpus.string() + " --out ";
        if (run_cli(cli, "build" + common + (out / "graph").string(), log) != 0 ||
            run_cli(cli, "rank" + common + (out / "ranks").string() + " --methods all", log) != 0 ||
            run_cli(cli,
                    "eval" + common + (out / "eval").string() + " --refset " + refset.string(),
                    log) != 0) {
            report(10, "end-to-end CLI determinism", false, "pipeline failed: " + slurp(log));
            return;
        }
    }

    std::size_t compared = 0;
    for (const auto& entry : fs::recursive_directory_iterator(scratch / "a")) {
        if (!entry.is_regular_file()) continue;
        const fs::path rel = fs::relative(entry.path(), scratch / "a");
        const fs::path other = scratch / "b" / rel;
        ++compared;
        if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
            pass = false;
            detail += rel.string() + " differs; ";
        }
    }
    if (compared == 0) {
        pass = false;
        detail = "no outputs produced";
    }
    std::ostringstream summary;
    summary << compared << " files byte-identical across two runs";
    report(10, "end-to-end CLI determinism", pass, detail.empty() ? summary.str() : detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <cli-binary> <scratch-dir>\n", argv[0]);
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path scratch = argv[2];

    const std::vector<Built> family = synthetic_family();
    std::size_t max_vertices = 0, max_edges = 0;
    for (const Built& b : family) {
        max_vertices = std::max(max_vertices, b.graph.vertex_count());
        max_edges = std::max(max_edges, b.graph.edge_count());
    }
    std::printf("synthetic family: 100 graphs, max |V|=%zu, max |E|=%zu\n", max_vertices,
                max_edges);
    if (max_vertices > 50 || max_edges > 300) {
        std::printf("FAIL  0. family exceeds the 50-vertex/300-edge bounds\n");
        return 1;
    }

    criterion_1();
    criterion_2(family);
    criterion_3(family);
    criterion_4(family);
    criterion_5();
    criterion_6(family);
    criterion_7(family);
    criterion_8();
    criterion_9();
    criterion_10(cli, scratch);

    if (g_failures == 0) {
        std::printf("all 10 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
