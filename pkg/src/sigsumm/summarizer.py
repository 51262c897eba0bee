"""Sentence scoring and budgeted extractive selection.

Sentences are scored in the latent space of the factorized term-sentence
matrix: each term i contributes its share phi_i of the total mass of U, and
a sentence's score is the sum of contributions of the terms it contains.
Scores therefore live in [0, 1] and sum to 1 only for a sentence containing
every vocabulary term.

Selection is greedy over descending scores with a word budget derived from
the requested length percentage. A candidate that would overflow the budget
is skipped and selection continues down the ranking; if no sentence fits,
the single top-scoring sentence is forced so the summary is never empty.

A DocumentModel caches everything derivable from the document alone (the
incidence matrix, co-occurrence graph, centralities, topic count, and the
unweighted factorization) plus one weighted factorization per distinct
signal, so sweeping summary lengths or keyword sets stays cheap.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .corpus import (
    NormalizerConfig,
    RawDocument,
    SentenceRecord,
    TermSentenceMatrix,
    Vocabulary,
    build_matrix,
    segment_sentences,
)
from .errors import DegenerateFactors
from .factorization import (
    DEFAULT_MAX_ITER,
    DEFAULT_REL_TOL,
    DEFAULT_SEED,
    DEFAULT_STABILIZER,
    FactorizationConfig,
    FactorPair,
    standard_nmf,
    weighted_nmf,
)
from .graph import (
    CoocGraph,
    build_cooccurrence_graph,
    detect_topic_count,
    eigenvector_centrality,
)
from .signal import (
    DEFAULT_EXPONENT_CAP,
    Cohort,
    KnowledgeSignal,
    Polarity,
    build_weight_matrix,
    expand_cohort,
    fragment_signal,
)


@dataclass(frozen=True)
class SentenceScore:
    index: int
    score: float


@dataclass(frozen=True)
class Summary:
    doc_id: str
    kind: str  # "generic" or "personal"
    polarity: Polarity | None
    length_pct: float
    selected: tuple[int, ...]
    total_words: int
    budget_words: int
    scores: tuple[float, ...]
    provenance: dict


def signal_fingerprint(sig: KnowledgeSignal) -> str:
    payload = sig.polarity + "\x1f" + "\x1f".join(sig.phrases)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def term_contributions(U: np.ndarray) -> np.ndarray:
    """Per-term share of the factor mass: row sums of U over the grand sum.
    Entries are nonnegative and sum to 1."""
    total = float(U.sum())
    if total <= 0:
        raise DegenerateFactors("term factor matrix sums to zero")
    return np.asarray(U.sum(axis=1) / total, dtype=np.float64)


def score_sentences(tsm: TermSentenceMatrix, phi: np.ndarray) -> list[SentenceScore]:
    """Score each sentence as the summed contributions of the terms present
    in it: the matrix-vector product A'phi."""
    if phi.shape != (tsm.m,):
        raise ValueError(f"contribution vector has shape {phi.shape}, expected ({tsm.m},)")
    raw = tsm.matrix.T @ phi
    return [SentenceScore(index=j, score=float(v)) for j, v in enumerate(raw)]


def select_sentences(
    scores: list[SentenceScore],
    sentences: tuple[SentenceRecord, ...],
    budget_words: int,
) -> tuple[tuple[int, ...], int]:
    """Greedy pick by descending score (ties broken toward earlier
    sentences), skipping any candidate that would overflow the budget. When
    nothing fits, the top-ranked sentence is forced. Returns document-order
    indices and their total word count."""
    if budget_words < 1:
        raise ValueError("budget_words must be >= 1")
    ranking = sorted(scores, key=lambda s: (-s.score, s.index))
    chosen: list[int] = []
    used = 0
    for cand in ranking:
        wc = sentences[cand.index].word_count
        if used + wc <= budget_words:
            chosen.append(cand.index)
            used += wc
    if not chosen:
        top = ranking[0].index
        chosen = [top]
        used = sentences[top].word_count
    chosen.sort()
    return tuple(chosen), used


class DocumentModel:
    """All per-document artifacts, built lazily and reused across signals
    and summary lengths. Instances are cheap to construct; heavy work runs
    on first access and is cached."""

    def __init__(
        self,
        doc: RawDocument,
        normalizer: NormalizerConfig = NormalizerConfig(),
        seed: int = DEFAULT_SEED,
        max_iter: int = DEFAULT_MAX_ITER,
        rel_tol: float = DEFAULT_REL_TOL,
        stabilizer: float = DEFAULT_STABILIZER,
        exponent_cap: float = DEFAULT_EXPONENT_CAP,
    ):
        self.doc = doc
        self.normalizer = normalizer
        self.seed = seed
        self.max_iter = max_iter
        self.rel_tol = rel_tol
        self.stabilizer = stabilizer
        self.exponent_cap = exponent_cap
        self._personal_cache: dict[tuple, FactorPair] = {}

    @cached_property
    def _built(self) -> tuple[TermSentenceMatrix, Vocabulary]:
        return build_matrix(segment_sentences(self.doc), self.normalizer)

    @property
    def tsm(self) -> TermSentenceMatrix:
        return self._built[0]

    @property
    def vocab(self) -> Vocabulary:
        return self._built[1]

    @property
    def sentences(self) -> tuple[SentenceRecord, ...]:
        return self.tsm.sentences

    @cached_property
    def graph(self) -> CoocGraph:
        return build_cooccurrence_graph(self.tsm)

    @cached_property
    def centrality(self) -> np.ndarray:
        return eigenvector_centrality(self.graph)

    @cached_property
    def rank(self) -> int:
        return detect_topic_count(self.graph, seed=self.seed)

    def _config(self) -> FactorizationConfig:
        return FactorizationConfig(
            r=self.rank,
            max_iter=self.max_iter,
            rel_tol=self.rel_tol,
            seed=self.seed,
            stabilizer=self.stabilizer,
        )

    @cached_property
    def generic_factors(self) -> FactorPair:
        return standard_nmf(self.tsm.matrix, self._config())

    def cohort(self, sig: KnowledgeSignal) -> Cohort:
        return expand_cohort(sig, self.graph, self.centrality)

    def personal_factors(self, sig: KnowledgeSignal) -> FactorPair:
        key = (sig.unigrams, sig.polarity)
        if key not in self._personal_cache:
            weights = build_weight_matrix(
                self.tsm, self.cohort(sig), sig.polarity, self.exponent_cap
            )
            self._personal_cache[key] = weighted_nmf(
                self.tsm.matrix, weights, self._config()
            )
        return self._personal_cache[key]

    def budget(self, length_pct: float) -> int:
        if not 0 < length_pct <= 100:
            raise ValueError(f"length_pct must be in (0, 100], got {length_pct}")
        return max(1, round(self.tsm.total_words * length_pct / 100))

    def summarize(self, sig: KnowledgeSignal | None, length_pct: float) -> Summary:
        factors = self.generic_factors if sig is None else self.personal_factors(sig)
        phi = term_contributions(factors.U)
        scores = score_sentences(self.tsm, phi)
        budget = self.budget(length_pct)
        selected, used = select_sentences(scores, self.sentences, budget)
        return Summary(
            doc_id=self.doc.doc_id,
            kind="generic" if sig is None else "personal",
            polarity=None if sig is None else sig.polarity,
            length_pct=length_pct,
            selected=selected,
            total_words=used,
            budget_words=budget,
            scores=tuple(s.score for s in scores),
            provenance=self.provenance(sig, length_pct),
        )

    def provenance(self, sig: KnowledgeSignal | None, length_pct: float) -> dict:
        return {
            "doc_id": self.doc.doc_id,
            "seed": self.seed,
            "rank": self.rank,
            "max_iter": self.max_iter,
            "rel_tol": self.rel_tol,
            "stabilizer": self.stabilizer,
            "exponent_cap": self.exponent_cap,
            "stem": self.normalizer.stem,
            "stopwords": "custom" if self.normalizer.stopwords is not None else "builtin",
            "length_pct": length_pct,
            "signal": None if sig is None else signal_fingerprint(sig),
        }


def summarize(
    doc: RawDocument,
    phrases: list[str] | None = None,
    polarity: Polarity = "negative",
    length_pct: float = 25.0,
    **model_options,
) -> Summary:
    """One-shot convenience wrapper: build the model, resolve the phrases
    against its vocabulary (None means a generic summary), and summarize."""
    model = DocumentModel(doc, **model_options)
    sig = None
    if phrases is not None:
        sig = fragment_signal(phrases, model.vocab, polarity, model.normalizer)
    return model.summarize(sig, length_pct)
