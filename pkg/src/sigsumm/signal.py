"""User keyword signals and the weight matrix they induce.

A signal is a set of phrases the user wants emphasized (positive polarity)
or suppressed (negative). Phrases are fragmented into normalized unigrams,
expanded to a cohort: the unigrams plus their one-hop neighbors in the
co-occurrence graph. Each cohort term i gets an exponent

    x_i = delta_i * eps_i

where delta_i is its degree inside the cohort-induced subgraph (local
context) and eps_i its eigenvector centrality in the full graph (global
context). The weight matrix entry for term i in sentence j is exp(-x_i)
under negative polarity, exp(+x_i) under positive, and 1 everywhere the
term is absent or outside the cohort. Exponents are rescaled to at most
exponent_cap when the maximum exceeds it, which preserves their ordering.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np

from .corpus import NormalizerConfig, TermSentenceMatrix, Vocabulary, normalize_terms
from .errors import SignalNotInDocument
from .graph import CoocGraph, eigenvector_centrality, induce_subgraph

Polarity = Literal["negative", "positive"]

DEFAULT_EXPONENT_CAP = 5.0


@dataclass(frozen=True)
class KnowledgeSignal:
    """A user signal resolved against one document's vocabulary. unigrams
    are vocabulary ids, deduplicated and sorted; dropped records phrase
    fragments that did not survive normalization or were out of vocabulary."""

    polarity: Polarity
    phrases: tuple[str, ...]
    unigrams: tuple[int, ...]
    dropped: tuple[str, ...]


@dataclass(frozen=True)
class Cohort:
    """The signal's unigrams plus their one-hop co-occurrence neighbors,
    with the local degree and global centrality of every member. Arrays are
    aligned with term_ids."""

    term_ids: tuple[int, ...]
    deltas: np.ndarray
    epsilons: np.ndarray

    def exponents(self) -> np.ndarray:
        return self.deltas * self.epsilons


def fragment_signal(
    phrases: list[str] | tuple[str, ...],
    vocab: Vocabulary,
    polarity: Polarity,
    config: NormalizerConfig = NormalizerConfig(),
) -> KnowledgeSignal:
    """Normalize each phrase with the corpus normalizer and collect the
    in-vocabulary unigrams. Out-of-vocabulary fragments are dropped with a
    warning; if nothing survives, the signal cannot steer this document and
    SignalNotInDocument is raised."""
    if not phrases:
        raise ValueError("signal needs at least one phrase")
    if polarity not in ("negative", "positive"):
        raise ValueError(f"polarity must be 'negative' or 'positive', got {polarity!r}")

    ids: set[int] = set()
    dropped: list[str] = []
    for phrase in phrases:
        terms = normalize_terms(phrase, config)
        if not terms:
            dropped.append(phrase)
            continue
        for term in terms:
            term_id = vocab.id_of(term)
            if term_id is None:
                dropped.append(term)
            else:
                ids.add(term_id)

    if not ids:
        raise SignalNotInDocument(
            f"no signal unigram from {list(phrases)!r} occurs in the document"
        )
    if dropped:
        warnings.warn(f"signal fragments not found in document: {sorted(set(dropped))}")
    return KnowledgeSignal(
        polarity=polarity,
        phrases=tuple(phrases),
        unigrams=tuple(sorted(ids)),
        dropped=tuple(dropped),
    )


def expand_cohort(
    sig: KnowledgeSignal,
    graph: CoocGraph,
    centrality: np.ndarray | None = None,
) -> Cohort:
    """One-hop expansion of the signal in the co-occurrence graph. Degrees
    come from the subgraph induced on the expanded set; centralities from
    the full graph (precomputed values can be passed to avoid recomputing)."""
    members = set(sig.unigrams)
    for term_id in sig.unigrams:
        members.update(int(v) for v in graph.neighbors(term_id))
    if centrality is None:
        centrality = eigenvector_centrality(graph)

    induced = induce_subgraph(graph, members)
    order = tuple(sorted(members))
    deltas = np.array([induced.degree_of[i] for i in order], dtype=np.float64)
    epsilons = np.array([centrality[i] for i in order], dtype=np.float64)
    return Cohort(term_ids=order, deltas=deltas, epsilons=epsilons)


def build_weight_matrix(
    tsm: TermSentenceMatrix,
    cohort: Cohort,
    polarity: Polarity,
    exponent_cap: float = DEFAULT_EXPONENT_CAP,
) -> np.ndarray:
    """Dense m x n weight matrix: 1 everywhere except at (i, j) where cohort
    term i occurs in sentence j, which gets exp(-x_i) for negative polarity
    or exp(+x_i) for positive. Exponents above the cap are rescaled by
    exponent_cap / max(x), keeping e^x inside [e^-cap, e^cap]."""
    if exponent_cap <= 0:
        raise ValueError("exponent_cap must be positive")
    ids = np.array(cohort.term_ids, dtype=np.intp)
    if ids.size and (ids.min() < 0 or ids.max() >= tsm.m):
        raise IndexError("cohort term ids exceed matrix rows")

    x = cohort.exponents()
    max_x = x.max(initial=0.0)
    if max_x > exponent_cap:
        x = x * (exponent_cap / max_x)
    sign = -1.0 if polarity == "negative" else 1.0

    weights = np.ones((tsm.m, tsm.n))
    occurrence = tsm.matrix[ids].toarray()
    weights[ids] = np.exp(sign * x[:, None] * occurrence)
    return weights


def load_keywords(path: str | Path) -> list[str]:
    """Read a keyword file: a JSON array of strings, or plain text with one
    keyword per line (auto-detected; blank lines ignored)."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.strip()
    if stripped.startswith("["):
        loaded = json.loads(stripped)
        if not isinstance(loaded, list) or not all(isinstance(k, str) for k in loaded):
            raise ValueError(f"{path}: JSON keyword file must be an array of strings")
        keywords = [k.strip() for k in loaded]
    else:
        keywords = [line.strip() for line in stripped.splitlines()]
    keywords = [k for k in keywords if k]
    if not keywords:
        raise ValueError(f"{path}: no keywords found")
    return keywords
