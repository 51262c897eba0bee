"""Extractive summarization steered by user keyword signals.

A document is modeled as a binary term-sentence matrix. User keywords,
expanded through the term co-occurrence graph, set per-entry weights for a
weighted nonnegative matrix factorization; sentence scores read off the
factor masses. Negative signals push the summary away from the keywords'
topics, positive signals pull it toward them. The evaluation layer compares
personal against generic summaries at the sentence, term, and latent-topic
level, and an experiment runner sweeps keyword strengths and summary
lengths over a corpus.
"""

from .corpus import (
    NormalizerConfig,
    RawDocument,
    SentenceRecord,
    TermSentenceMatrix,
    Vocabulary,
    build_matrix,
    normalize_terms,
    segment_sentences,
)
from .errors import (
    DegenerateFactors,
    DifferentDocuments,
    EmptyCohort,
    EmptyDocument,
    EmptyVocabulary,
    InsufficientKeywords,
    InvalidRank,
    NoEdges,
    NonConvergenceWarning,
    ShapeMismatch,
    SignalNotInDocument,
    SigsummError,
)
from .evaluation import (
    EvalReport,
    ExperimentResult,
    TermDistribution,
    evaluate_pair,
    export_similarity_density,
    jaccard_index,
    jensen_shannon_distance,
    run_experiment,
    semantic_similarity,
    similarity_ratio,
    term_distribution,
    write_results_csv,
    write_table_csvs,
)
from .factorization import (
    FactorizationConfig,
    FactorPair,
    objective_value,
    standard_nmf,
    weighted_nmf,
)
from .graph import (
    CoocGraph,
    InducedSubgraph,
    build_cooccurrence_graph,
    detect_topic_count,
    eigenvector_centrality,
    induce_subgraph,
)
from .signal import (
    Cohort,
    KnowledgeSignal,
    Polarity,
    build_weight_matrix,
    expand_cohort,
    fragment_signal,
    load_keywords,
)
from .stemming import porter_stem
from .summarizer import (
    DocumentModel,
    SentenceScore,
    Summary,
    score_sentences,
    select_sentences,
    summarize,
    term_contributions,
)

__version__ = "0.1.0"

__all__ = [
    "NormalizerConfig",
    "RawDocument",
    "SentenceRecord",
    "TermSentenceMatrix",
    "Vocabulary",
    "build_matrix",
    "normalize_terms",
    "segment_sentences",
    "porter_stem",
    "CoocGraph",
    "InducedSubgraph",
    "build_cooccurrence_graph",
    "detect_topic_count",
    "eigenvector_centrality",
    "induce_subgraph",
    "KnowledgeSignal",
    "Cohort",
    "Polarity",
    "fragment_signal",
    "expand_cohort",
    "build_weight_matrix",
    "load_keywords",
    "FactorizationConfig",
    "FactorPair",
    "objective_value",
    "weighted_nmf",
    "standard_nmf",
    "DocumentModel",
    "SentenceScore",
    "Summary",
    "term_contributions",
    "score_sentences",
    "select_sentences",
    "summarize",
    "TermDistribution",
    "EvalReport",
    "ExperimentResult",
    "term_distribution",
    "jaccard_index",
    "jensen_shannon_distance",
    "semantic_similarity",
    "similarity_ratio",
    "evaluate_pair",
    "run_experiment",
    "write_results_csv",
    "write_table_csvs",
    "export_similarity_density",
    "SigsummError",
    "EmptyDocument",
    "EmptyVocabulary",
    "SignalNotInDocument",
    "NoEdges",
    "EmptyCohort",
    "ShapeMismatch",
    "InvalidRank",
    "DegenerateFactors",
    "DifferentDocuments",
    "InsufficientKeywords",
    "NonConvergenceWarning",
]
