"""Author citation network ranking toolkit.

Builds directed author citation graphs from paper-level records and ranks
authors with citation counts, in-degree, HITS and the PageRank family
(standard, weighted and seven bibliographic variants), plus reference-set
evaluation helpers.
"""

from bibrank._core import (
    AuthorGraph,
    CollabStats,
    PaperSet,
    __version__,
    author_key,
    build_collab,
    build_graph,
    correlation_matrix,
    dense_hits_solve,
    dense_pagerank_solve,
    method_names,
    missing_members,
    parse_corpus,
    parse_corpus_text,
    rank,
    relative_ranks,
    run_all,
    spearman,
    summary_stats,
    synth_corpus,
)

__all__ = [
    "AuthorGraph",
    "CollabStats",
    "PaperSet",
    "__version__",
    "author_key",
    "build_collab",
    "build_graph",
    "correlation_matrix",
    "dense_hits_solve",
    "dense_pagerank_solve",
    "method_names",
    "missing_members",
    "parse_corpus",
    "parse_corpus_text",
    "rank",
    "relative_ranks",
    "run_all",
    "spearman",
    "summary_stats",
    "synth_corpus",
]
