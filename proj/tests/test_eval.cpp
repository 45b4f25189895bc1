#include <algorithm>
#include <cmath>
#include <sstream>

#include "bibrank/eval.hpp"
#include "bibrank/graph.hpp"
#include "bibrank/rank.hpp"
#include "doctest.h"

using namespace bibrank;

namespace {

LabeledRanking identity_ranking(std::string label, std::size_t n) {
    std::vector<std::string> authors;
    std::vector<double> ranks;
    for (std::size_t i = 0; i < n; ++i) {
        authors.push_back("A" + std::to_string(i + 1) + ", ");
        ranks.push_back(static_cast<double>(i + 1));
    }
    return LabeledRanking(std::move(label), std::move(authors), std::move(ranks));
}

ReferenceSet refset_of(std::vector<std::string> canonicals, std::string label = "rs") {
    ReferenceSet rs;
    rs.label = std::move(label);
    for (const std::string& c : canonicals) rs.members.push_back(parse_author_key(c));
    return rs;
}

}  // namespace

TEST_CASE("reference sets load from canonical key lines") {
    std::istringstream in("# top authors\nHerrera, F\nOng, YS\n\nTARJAN, \n");
    const ReferenceSet rs = load_reference_set(in, "ai");
    REQUIRE(rs.members.size() == 3);
    CHECK(rs.members[0].canonical() == "HERRERA, F");
    CHECK(rs.members[1].canonical() == "ONG, YS");
    CHECK(rs.members[2].canonical() == "TARJAN, ");

    SUBCASE("duplicates are rejected") {
        std::istringstream dup("Wing, J\nWING, J\n");
        CHECK_THROWS_AS(load_reference_set(dup, "x"), std::invalid_argument);
    }
    SUBCASE("an empty file is rejected") {
        std::istringstream empty("# nothing here\n");
        CHECK_THROWS_AS(load_reference_set(empty, "x"), std::invalid_argument);
    }
}

TEST_CASE("relative ranks divide by the author count") {
    SUBCASE("rank 20 of 119430") {
        const LabeledRanking ranking = identity_ranking("Citations", 119430);
        const ReferenceSet rs = refset_of({"A20, "});
        const auto rel = relative_ranks(ranking, rs);
        REQUIRE(rel.size() == 1);
        CHECK(rel[0].second == doctest::Approx(20.0 / 119430.0).epsilon(1e-12));
        CHECK(rel[0].second == doctest::Approx(1.6746e-4).epsilon(1e-3));
    }
    SUBCASE("rank 1 of 1 is exactly 1") {
        const LabeledRanking ranking = identity_ranking("x", 1);
        const auto rel = relative_ranks(ranking, refset_of({"A1, "}));
        REQUIRE(rel.size() == 1);
        CHECK(rel[0].second == 1.0);
    }
    SUBCASE("absent members are omitted and reported missing") {
        const LabeledRanking ranking = identity_ranking("x", 5);
        const ReferenceSet rs = refset_of({"A2, ", "NOBODY, X"});
        CHECK(relative_ranks(ranking, rs).size() == 1);
        const auto missing = missing_members(rs, ranking);
        REQUIRE(missing.size() == 1);
        CHECK(missing[0].canonical() == "NOBODY, X");
    }
}

TEST_CASE("a full-coverage refset with distinct ranks spans (0,1] up to 1") {
    const LabeledRanking ranking = identity_ranking("x", 4);
    ReferenceSet rs = refset_of({"A1, ", "A2, ", "A3, ", "A4, "});
    const auto rel = relative_ranks(ranking, rs);
    REQUIRE(rel.size() == 4);
    double max_rel = 0.0;
    for (const auto& [key, r] : rel) {
        CHECK(r > 0.0);
        CHECK(r <= 1.0);
        max_rel = std::max(max_rel, r);
    }
    CHECK(max_rel == 1.0);
}

TEST_CASE("summary quartiles are ordered") {
    const std::vector<std::vector<double>> samples{
        {3, 1, 4, 1, 5, 9, 2, 6}, {7}, {2, 2, 2}, {10, -3, 0.5, 8, 8, 1}};
    for (const auto& values : samples) {
        const SummaryStats st = summary_stats(values);
        CHECK(st.min <= st.p25);
        CHECK(st.p25 <= st.median);
        CHECK(st.median <= st.p75);
        CHECK(st.p75 <= st.max);
        CHECK(st.std_dev >= 0.0);
    }
}

TEST_CASE("missing_members corner cases") {
    const LabeledRanking ranking = identity_ranking("x", 3);
    CHECK(missing_members(refset_of({"A1, ", "A3, "}), ranking).empty());
    const LabeledRanking empty("e", {}, {});
    CHECK(missing_members(refset_of({"A1, ", "A2, "}), empty).size() == 2);
}

TEST_CASE("summary_stats reproduces the published aggregate rows") {
    // The 12 Citations ranks of the software-engineering board members.
    const std::vector<double> ranks{839, 8130, 10861, 2707, 2390, 387,
                                    413, 896,  9322,  511,  68,  4209};
    const SummaryStats st = summary_stats(ranks);
    CHECK(std::llround(st.mean) == 3394);
    CHECK(std::llround(st.median) == 1643);
    CHECK(st.min == 68);
    CHECK(st.max == 10861);
    CHECK(std::llround(st.std_dev) == 3714);  // population, not sample (3879)
    CHECK(st.n_found == 12);
}

TEST_CASE("summary_stats basics") {
    SUBCASE("single value") {
        const SummaryStats st = summary_stats(std::vector<double>{7.0});
        CHECK(st.mean == 7.0);
        CHECK(st.median == 7.0);
        CHECK(st.min == 7.0);
        CHECK(st.max == 7.0);
        CHECK(st.std_dev == 0.0);
    }
    SUBCASE("linear interpolation between closest ranks") {
        const SummaryStats st = summary_stats(std::vector<double>{1, 2, 3, 4});
        CHECK(st.p25 == doctest::Approx(1.75).epsilon(1e-15));
        CHECK(st.p75 == doctest::Approx(3.25).epsilon(1e-15));
        CHECK(st.median == doctest::Approx(2.5).epsilon(1e-15));
    }
    SUBCASE("empty input is rejected") {
        CHECK_THROWS_AS(summary_stats(std::vector<double>{}), std::invalid_argument);
    }
    SUBCASE("permutation invariant") {
        const SummaryStats a = summary_stats(std::vector<double>{5, 1, 9, 2, 2});
        const SummaryStats b = summary_stats(std::vector<double>{2, 9, 1, 2, 5});
        CHECK(a.mean == b.mean);
        CHECK(a.median == b.median);
        CHECK(a.std_dev == b.std_dev);
        CHECK(a.p25 == b.p25);
        CHECK(a.p75 == b.p75);
    }
}

TEST_CASE("correlation matrix structure") {
    const LabeledRanking r1("m1", {"A, ", "B, ", "C, "}, {1, 2, 3});
    const LabeledRanking r2("m2", {"A, ", "B, ", "C, "}, {1, 3, 2});
    const LabeledRanking r1_copy("m3", {"A, ", "B, ", "C, "}, {1, 2, 3});
    const auto matrix = correlation_matrix({r1, r2, r1_copy});

    for (std::size_t i = 0; i < 3; ++i) CHECK(matrix[i][i] == 1.0);
    CHECK(matrix[0][1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(matrix[1][0] == matrix[0][1]);
    CHECK(matrix[0][2] == 1.0);  // identical rankings

    SUBCASE("author order does not matter, membership does") {
        const LabeledRanking shuffled("m4", {"C, ", "A, ", "B, "}, {3, 1, 2});
        CHECK(spearman_rho(r1, shuffled) == 1.0);
        const LabeledRanking other_set("m5", {"A, ", "B, ", "X, "}, {1, 2, 3});
        CHECK_THROWS_AS(correlation_matrix({r1, other_set}), std::invalid_argument);
    }
    SUBCASE("all-identical rankings give the all-ones matrix") {
        const auto ones = correlation_matrix({r1, r1_copy});
        for (const auto& row : ones) {
            for (double v : row) CHECK(v == 1.0);
        }
    }
}

TEST_CASE("citations and in-degree coincide when every author cites once") {
    // Distinct single-author citing papers, one citation each: w == 1 on
    // every edge, so the two scores agree and correlate at exactly 1.
    PaperSet papers;
    auto add = [&papers](std::string id, std::string surname, std::vector<std::string> refs = {}) {
        PaperRecord rec;
        rec.id = std::move(id);
        rec.authors.push_back(author_key(surname, ""));
        rec.refs = std::move(refs);
        papers.add(std::move(rec));
    };
    add("T1", "X");
    add("T2", "Y");
    add("C1", "A", {"T1"});
    add("C2", "B", {"T1", "T2"});
    add("C3", "C", {"T2"});
    const AuthorGraph g = build_author_graph(papers);
    const CollabStats cs = build_collab_stats(papers);

    const Ranking cit = scores_to_ranks(rank_citations(g));
    const Ranking ind = scores_to_ranks(rank_indegree(g));
    const auto matrix =
        correlation_matrix({label_ranking(g.authors(), cit), label_ranking(g.authors(), ind)});
    CHECK(matrix[0][1] == 1.0);
}

TEST_CASE("evaluate assembles a full report") {
    PaperSet papers;
    PaperRecord p1;
    p1.id = "P1";
    p1.authors = {author_key("A", ""), author_key("B", "")};
    p1.refs = {"P2"};
    PaperRecord p2;
    p2.id = "P2";
    p2.authors = {author_key("B", ""), author_key("C", "")};
    papers.add(std::move(p1));
    papers.add(std::move(p2));
    const AuthorGraph g = build_author_graph(papers);
    const CollabStats cs = build_collab_stats(papers);

    std::vector<LabeledRanking> rankings;
    for (const MethodRun& run : run_all(g, cs)) {
        rankings.push_back(label_ranking(g.authors(), run.ranking));
    }
    const ReferenceSet rs = refset_of({"C, ", "GHOST, Z"}, "board");
    const EvalReport report = evaluate(rankings, {rs});

    REQUIRE(report.method_labels.size() == 12);
    REQUIRE(report.correlations.size() == 12);
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(report.correlations[i][i] == 1.0);
        for (std::size_t j = 0; j < 12; ++j) {
            CHECK(report.correlations[i][j] == report.correlations[j][i]);
        }
    }
    REQUIRE(report.entries.size() == 12);
    for (const EvalReport::Entry& entry : report.entries) {
        CHECK(entry.refset == "board");
        CHECK(entry.member_ranks.size() == 1);
        CHECK(entry.absolute.n_found == 1);
        CHECK(entry.absolute.n_missing == 1);
        REQUIRE(entry.missing.size() == 1);
        CHECK(entry.missing[0].canonical() == "GHOST, Z");
        // Relative ranks stay in (0, 1] and ordering survives the division.
        for (const auto& [key, rank, rel] : entry.member_ranks) {
            CHECK(rel > 0.0);
            CHECK(rel <= 1.0);
            CHECK(rel == doctest::Approx(rank / 3.0).epsilon(1e-15));
        }
    }
}
