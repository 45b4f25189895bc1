// bibrank: build author citation graphs from paper records and rank authors
// with citation counts, HITS and the PageRank family, then evaluate the
// rankings against reference sets of known-good authors.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bibrank/corpus.hpp"
#include "bibrank/eval.hpp"
#include "bibrank/graph.hpp"
#include "bibrank/io.hpp"
#include "bibrank/rank.hpp"
#include "bibrank/testkit.hpp"

namespace fs = std::filesystem;
using namespace bibrank;

namespace {

struct RunConfig {
    std::string input;
    std::string out_dir;
    std::vector<std::string> methods{"all"};
    std::vector<std::string> refsets;
    std::vector<std::string> rank_files;
    std::string ranks_dir;
    RankOptions rank_opts;
};

void add_rank_flags(CLI::App* cmd, RunConfig& cfg) {
    static const std::map<std::string, ConvergenceMode> conv_modes{
        {"spearman", ConvergenceMode::Spearman}, {"l1", ConvergenceMode::L1Delta}};
    static const std::map<std::string, DanglingPolicy> dangling_policies{
        {"literal", DanglingPolicy::Literal}, {"redistribute", DanglingPolicy::Redistribute}};
    static const std::map<std::string, TiePolicy> tie_policies{
        {"competition", TiePolicy::Competition}, {"average", TiePolicy::Average}};

    cmd->add_option("--damping", cfg.rank_opts.damping, "Damping factor in (0,1)")
        ->default_val(0.9);
    cmd->add_option("--max-iters", cfg.rank_opts.max_iters, "Iteration cap")->default_val(50);
    cmd->add_option("--epsilon", cfg.rank_opts.epsilon,
                    "Convergence threshold (1-rho for spearman, score delta for l1)")
        ->default_val(1e-6);
    cmd->add_option("--convergence", cfg.rank_opts.convergence, "Convergence test: spearman|l1")
        ->transform(CLI::CheckedTransformer(conv_modes))
        ->default_str("spearman");
    cmd->add_option("--dangling", cfg.rank_opts.dangling,
                    "Dangling vertices: literal|redistribute")
        ->transform(CLI::CheckedTransformer(dangling_policies))
        ->default_str("literal");
    cmd->add_option("--ties", cfg.rank_opts.ties,
                    "Tie policy for reported ranks: competition|average")
        ->transform(CLI::CheckedTransformer(tie_policies))
        ->default_str("competition");
}

std::vector<MethodId> parse_methods(const std::vector<std::string>& names) {
    std::vector<MethodId> methods;
    for (const std::string& name : names) {
        if (name == "all") {
            for (MethodId m : all_methods()) methods.push_back(m);
            continue;
        }
        auto m = method_from_name(name);
        if (!m) {
            std::string valid;
            for (MethodId v : all_methods()) {
                if (!valid.empty()) valid += ", ";
                valid += method_name(v);
            }
            throw std::invalid_argument("unknown method \"" + name + "\"; valid methods: " + valid);
        }
        methods.push_back(*m);
    }
    return methods;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

int cmd_build(const RunConfig& cfg) {
    const PaperSet papers = parse_corpus_file(cfg.input);
    const AuthorGraph graph = build_author_graph(papers);
    const CollabStats collab = build_collab_stats(papers);

    fs::create_directories(cfg.out_dir);
    {
        auto out = open_out(fs::path(cfg.out_dir) / "edges.csv");
        write_edges_csv(graph, out);
    }
    {
        auto out = open_out(fs::path(cfg.out_dir) / "collab.csv");
        write_collab_csv(collab, out);
    }
    {
        auto out = open_out(fs::path(cfg.out_dir) / "collab_pairs.csv");
        write_collab_pairs_csv(collab, out);
    }
    std::cout << "|V|=" << graph.vertex_count() << " |E|=" << graph.edge_count()
              << " total_w=" << graph.total_weight()
              << " dropped_refs=" << graph.unresolved_refs() << '\n';
    return 0;
}

int cmd_rank(const RunConfig& cfg) {
    const std::vector<MethodId> methods = parse_methods(cfg.methods);
    if (methods.empty()) throw std::invalid_argument("no methods selected");

    const PaperSet papers = parse_corpus_file(cfg.input);
    const AuthorGraph graph = build_author_graph(papers);
    const CollabStats collab = build_collab_stats(papers);

    fs::create_directories(cfg.out_dir);
    std::vector<MethodRun> runs;
    for (MethodId m : methods) {
        MethodRun run = run_method(graph, collab, m, cfg.rank_opts);
        const std::string name(method_name(m));
        auto out = open_out(fs::path(cfg.out_dir) / ("rank_" + name + ".csv"));
        write_scores_csv(graph.authors(), run.scores, run.ranking, out);
        std::cout << name << ": iterations=" << run.scores.iterations_run
                  << " converged=" << (run.scores.converged ? "yes" : "no") << '\n';
        runs.push_back(std::move(run));
    }
    auto out = open_out(fs::path(cfg.out_dir) / "ranks_matrix.csv");
    write_rank_matrix_csv(graph.authors(), runs, out);
    return 0;
}

std::vector<LabeledRanking> collect_rankings(const RunConfig& cfg) {
    std::vector<LabeledRanking> rankings;
    if (!cfg.input.empty()) {
        const PaperSet papers = parse_corpus_file(cfg.input);
        const AuthorGraph graph = build_author_graph(papers);
        const CollabStats collab = build_collab_stats(papers);
        for (const MethodRun& run : run_all(graph, collab, cfg.rank_opts)) {
            rankings.push_back(label_ranking(graph.authors(), run.ranking));
        }
    } else if (!cfg.ranks_dir.empty()) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(cfg.ranks_dir)) {
            const std::string name = entry.path().filename().string();
            if (name.starts_with("rank_") && name.ends_with(".csv")) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const fs::path& f : files) rankings.push_back(read_rank_csv(f));
        if (rankings.empty()) {
            throw std::invalid_argument("no rank_*.csv files in " + cfg.ranks_dir);
        }
    } else {
        for (const std::string& f : cfg.rank_files) rankings.push_back(read_rank_csv(f));
        if (rankings.empty()) {
            throw std::invalid_argument("supply --input, --ranks-dir or --ranks");
        }
    }
    return rankings;
}

int cmd_eval(const RunConfig& cfg) {
    std::vector<ReferenceSet> refsets;
    for (const std::string& path : cfg.refsets) refsets.push_back(load_reference_set_file(path));
    if (refsets.empty()) throw std::invalid_argument("at least one --refset is required");

    const std::vector<LabeledRanking> rankings = collect_rankings(cfg);
    const EvalReport report = evaluate(rankings, refsets);

    fs::create_directories(cfg.out_dir);
    for (const EvalReport::Entry& entry : report.entries) {
        auto out = open_out(fs::path(cfg.out_dir) /
                            ("members_" + entry.refset + "_" + entry.method + ".csv"));
        write_members_csv(entry, out);
    }
    for (const ReferenceSet& refset : refsets) {
        {
            auto out = open_out(fs::path(cfg.out_dir) / ("aggregate_" + refset.label + ".csv"));
            write_aggregate_csv(report, refset.label, false, out);
        }
        {
            auto out = open_out(fs::path(cfg.out_dir) /
                                ("aggregate_relative_" + refset.label + ".csv"));
            write_aggregate_csv(report, refset.label, true, out);
        }
        // Missing members are a property of the shared author set; take them
        // from the first method's entry.
        for (const EvalReport::Entry& entry : report.entries) {
            if (entry.refset != refset.label) continue;
            auto out = open_out(fs::path(cfg.out_dir) / ("missing_" + refset.label + ".txt"));
            for (const AuthorKey& key : entry.missing) out << key.canonical() << '\n';
            std::cout << "refset " << refset.label << ": found=" << entry.member_ranks.size()
                      << " missing=" << entry.missing.size() << '\n';
            break;
        }
    }
    auto out = open_out(fs::path(cfg.out_dir) / "correlations.csv");
    write_correlations_csv(report.method_labels, report.correlations, out);
    return 0;
}

int cmd_correlate(const RunConfig& cfg) {
    const std::vector<LabeledRanking> rankings = collect_rankings(cfg);
    if (rankings.size() < 2) throw std::invalid_argument("correlate needs at least two rankings");
    const auto matrix = correlation_matrix(rankings);
    std::vector<std::string> labels;
    for (const LabeledRanking& r : rankings) labels.push_back(r.label());

    fs::create_directories(cfg.out_dir);
    auto out = open_out(fs::path(cfg.out_dir) / "correlations.csv");
    write_correlations_csv(labels, matrix, out);
    std::cout << "correlated " << rankings.size() << " rankings over " << rankings.front().size()
              << " authors\n";
    return 0;
}

int cmd_synth(const std::string& out_file, const SynthParams& params) {
    const PaperSet papers = gen_synthetic_corpus(params);
    write_corpus_file(papers, out_file);
    std::cout << "wrote " << papers.size() << " papers to " << out_file << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Author citation network ranking toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    SynthParams synth_params;
    std::string synth_out;

    CLI::App* build = app.add_subcommand("build", "Build graph and collaboration CSVs");
    build->add_option("--input", cfg.input, "Corpus file (JSON lines)")->required();
    build->add_option("--out", cfg.out_dir, "Output directory")->required();

    CLI::App* rank = app.add_subcommand("rank", "Compute ranking CSVs");
    rank->add_option("--input", cfg.input, "Corpus file (JSON lines)")->required();
    rank->add_option("--out", cfg.out_dir, "Output directory")->required();
    rank->add_option("--methods", cfg.methods, "Method names or 'all'")->delimiter(',');
    add_rank_flags(rank, cfg);

    CLI::App* eval = app.add_subcommand("eval", "Evaluate rankings against reference sets");
    CLI::Option* eval_input =
        eval->add_option("--input", cfg.input, "Corpus file (computes all 12 methods)");
    eval->add_option("--ranks-dir", cfg.ranks_dir, "Directory of rank_*.csv files")
        ->excludes(eval_input);
    eval->add_option("--refset", cfg.refsets, "Reference set file (repeatable)")->required();
    eval->add_option("--out", cfg.out_dir, "Output directory")->required();
    add_rank_flags(eval, cfg);

    CLI::App* correlate = app.add_subcommand("correlate", "Pairwise Spearman correlation matrix");
    CLI::Option* corr_input =
        correlate->add_option("--input", cfg.input, "Corpus file (computes all 12 methods)");
    CLI::Option* corr_files =
        correlate->add_option("--ranks", cfg.rank_files, "Rank CSV file (repeatable)")
            ->excludes(corr_input);
    correlate->add_option("--ranks-dir", cfg.ranks_dir, "Directory of rank_*.csv files")
        ->excludes(corr_input)
        ->excludes(corr_files);
    correlate->add_option("--out", cfg.out_dir, "Output directory")->required();
    add_rank_flags(correlate, cfg);

    CLI::App* synth = app.add_subcommand("synth", "Generate a deterministic synthetic corpus");
    synth->add_option("--out", synth_out, "Corpus file to write")->required();
    synth->add_option("--papers", synth_params.n_papers, "Number of papers")->required();
    synth->add_option("--max-authors", synth_params.max_authors_per_paper,
                      "Max authors per paper")->default_val(3);
    synth->add_option("--max-refs", synth_params.max_refs_per_paper, "Max refs per paper")
        ->default_val(4);
    synth->add_option("--pool", synth_params.author_pool, "Author pool size")->default_val(10);
    synth->add_option("--seed", synth_params.seed, "Generator seed")->default_val(0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(cfg);
        if (rank->parsed()) return cmd_rank(cfg);
        if (eval->parsed()) return cmd_eval(cfg);
        if (correlate->parsed()) return cmd_correlate(cfg);
        if (synth->parsed()) return cmd_synth(synth_out, synth_params);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
