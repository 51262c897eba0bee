"""Three-level comparison of a personal summary against the generic one.

- sentence level: Jaccard index of the selected sentence index sets. Low
  overlap means the signal actually changed the summary.
- term level: Jensen-Shannon distance between the term distributions of the
  two summaries (occurrence counts with multiplicity, union support,
  base-2 logarithm, so the distance lives in [0, 1]).
- semantic level: the signal's latent vector is the mean of the unweighted
  factorization's U rows over the signal unigrams; sigma averages its
  cosine similarity to the V columns of a summary's sentences. The ratio
  sigma(personal) / sigma(generic) is below 1 when the summary moved away
  from the signal's topics and above 1 when it moved toward them.

The experiment runner sweeps keyword subsets of every size (signal
strength), summary lengths, and polarities over a document corpus,
averaging metrics per document over all keyword combinations and then
macro-averaging across documents.
"""

from __future__ import annotations

import csv
import itertools
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.spatial.distance import jensenshannon

from .corpus import RawDocument, normalize_terms
from .errors import DifferentDocuments, SignalNotInDocument
from .factorization import FactorPair
from .signal import KnowledgeSignal, Polarity, fragment_signal
from .summarizer import DocumentModel, Summary

EXPERIMENT_LENGTHS = (10.0, 15.0, 20.0, 25.0)
EXPERIMENT_STRENGTHS = (1, 2, 3, 4, 5)
RATIO_DENOMINATOR_FLOOR = 1e-9


@dataclass(frozen=True)
class TermDistribution:
    """Term frequencies over a summary's sentences, normalized to sum to 1.
    support holds vocabulary ids aligned with probabilities."""

    support: tuple[int, ...]
    probabilities: np.ndarray


def term_distribution(model: DocumentModel, summary: Summary) -> TermDistribution:
    """Count in-vocabulary term occurrences (with multiplicity) across the
    summary's sentences and normalize."""
    counts: dict[int, int] = {}
    for j in summary.selected:
        for term in normalize_terms(model.sentences[j].text, model.normalizer):
            term_id = model.vocab.id_of(term)
            if term_id is not None:
                counts[term_id] = counts.get(term_id, 0) + 1
    total = sum(counts.values())
    if total == 0:
        raise ValueError(f"summary of {summary.doc_id!r} contains no vocabulary terms")
    support = tuple(sorted(counts))
    probs = np.array([counts[i] for i in support], dtype=np.float64) / total
    return TermDistribution(support=support, probabilities=probs)


def jaccard_index(sp: Summary, sg: Summary) -> float:
    """Overlap of the two selections: |intersection| / |union| of sentence
    indices. Both summaries must come from the same document."""
    if sp.doc_id != sg.doc_id:
        raise DifferentDocuments(f"{sp.doc_id!r} vs {sg.doc_id!r}")
    a, b = set(sp.selected), set(sg.selected)
    union = a | b
    if not union:
        return 1.0
    return len(a & b) / len(union)


def jensen_shannon_distance(p: TermDistribution, q: TermDistribution) -> float:
    """Base-2 Jensen-Shannon distance (square root of the divergence) over
    the union support, zero-filling where a term is absent. Symmetric,
    bounded by [0, 1], and 0 exactly when the distributions coincide."""
    union = sorted(set(p.support) | set(q.support))
    index = {term_id: k for k, term_id in enumerate(union)}
    pv = np.zeros(len(union))
    qv = np.zeros(len(union))
    pv[[index[t] for t in p.support]] = p.probabilities
    qv[[index[t] for t in q.support]] = q.probabilities
    return float(jensenshannon(pv, qv, base=2))


def _cosine(a: np.ndarray, b: np.ndarray) -> float:
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0 or nb == 0:
        return 0.0
    return float(a @ b / (na * nb))


def semantic_similarity(summary: Summary, sig: KnowledgeSignal, factors: FactorPair) -> float:
    """Mean cosine similarity between the signal's latent vector (average of
    U rows over the signal unigrams, a length-r vector) and the V columns of
    the summary's sentences. Zero-norm columns contribute 0."""
    if not sig.unigrams:
        raise SignalNotInDocument("signal has no in-vocabulary unigrams")
    if not summary.selected:
        raise ValueError("summary has no sentences")
    k_hat = factors.U[list(sig.unigrams)].mean(axis=0)
    sims = [_cosine(k_hat, factors.V[:, j]) for j in summary.selected]
    return float(np.mean(sims))


@dataclass(frozen=True)
class RatioResult:
    """ratio is None when the generic similarity is too close to zero to
    divide by; such results are excluded from averages."""

    ratio: float | None
    sigma_personal: float
    sigma_generic: float


def similarity_ratio(
    sp: Summary, sg: Summary, sig: KnowledgeSignal, factors: FactorPair
) -> RatioResult:
    sigma_p = semantic_similarity(sp, sig, factors)
    sigma_g = semantic_similarity(sg, sig, factors)
    if sigma_g < RATIO_DENOMINATOR_FLOOR:
        return RatioResult(ratio=None, sigma_personal=sigma_p, sigma_generic=sigma_g)
    return RatioResult(ratio=sigma_p / sigma_g, sigma_personal=sigma_p, sigma_generic=sigma_g)


@dataclass(frozen=True)
class EvalReport:
    doc_id: str
    polarity: Polarity
    phrases: tuple[str, ...]
    length_pct: float
    jaccard: float
    jsd: float
    ratio: float | None
    sigma_personal: float
    sigma_generic: float


def evaluate_pair(model: DocumentModel, sig: KnowledgeSignal, length_pct: float) -> EvalReport:
    """Generate the personal and generic summaries at one length and compute
    all three metric levels."""
    sp = model.summarize(sig, length_pct)
    sg = model.summarize(None, length_pct)
    rr = similarity_ratio(sp, sg, sig, model.generic_factors)
    return EvalReport(
        doc_id=model.doc.doc_id,
        polarity=sig.polarity,
        phrases=sig.phrases,
        length_pct=length_pct,
        jaccard=jaccard_index(sp, sg),
        jsd=jensen_shannon_distance(
            term_distribution(model, sp), term_distribution(model, sg)
        ),
        ratio=rr.ratio,
        sigma_personal=rr.sigma_personal,
        sigma_generic=rr.sigma_generic,
    )


@dataclass(frozen=True)
class CellResult:
    """Per-document averages over every keyword combination of one strength
    at one length and polarity."""

    doc_id: str
    polarity: Polarity
    strength: int
    length_pct: float
    n_combinations: int
    jaccard: float
    jsd: float
    ratio: float | None
    sigma_personal: float
    sigma_generic: float


@dataclass(frozen=True)
class ExperimentResult:
    dataset: str
    cells: tuple[CellResult, ...]
    skipped: tuple[tuple[str, str], ...]  # (doc_id, reason)

    def macro(
        self, metric: str, polarity: Polarity, strength: int, length_pct: float
    ) -> float | None:
        """Mean of the per-document cell values for one table cell; None
        when no document contributed a defined value."""
        values = [
            getattr(c, metric)
            for c in self.cells
            if c.polarity == polarity
            and c.strength == strength
            and c.length_pct == length_pct
            and getattr(c, metric) is not None
        ]
        if not values:
            return None
        return float(np.mean(values))


def _mean_or_none(values: list[float | None]) -> float | None:
    defined = [v for v in values if v is not None]
    return float(np.mean(defined)) if defined else None


def run_experiment(
    docs: list[RawDocument],
    keywords: dict[str, list[str]],
    lengths: tuple[float, ...] = EXPERIMENT_LENGTHS,
    strengths: tuple[int, ...] = EXPERIMENT_STRENGTHS,
    polarities: tuple[Polarity, ...] = ("negative", "positive"),
    dataset: str = "corpus",
    **model_options,
) -> ExperimentResult:
    """Sweep the full grid. For each document and polarity, every keyword
    combination of each strength is evaluated at each length against the
    document's generic summary; metrics are averaged per document and cell.
    Documents lacking enough usable keywords are skipped with a warning and
    listed in the result's skip manifest."""
    max_strength = max(strengths)
    cells: list[CellResult] = []
    skipped: list[tuple[str, str]] = []

    for doc in sorted(docs, key=lambda d: d.doc_id):
        kws = keywords.get(doc.doc_id)
        if kws is None:
            skipped.append((doc.doc_id, "no keyword file"))
            warnings.warn(f"{doc.doc_id}: no keyword file, skipped")
            continue
        if len(kws) < max_strength:
            reason = f"{len(kws)} keywords < max strength {max_strength}"
            skipped.append((doc.doc_id, reason))
            warnings.warn(f"{doc.doc_id}: {reason}, skipped")
            continue

        model = DocumentModel(doc, **model_options)
        missing = []
        for kw in kws:
            try:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    fragment_signal([kw], model.vocab, "negative", model.normalizer)
            except SignalNotInDocument:
                missing.append(kw)
        if missing:
            reason = f"keywords not in document: {missing}"
            skipped.append((doc.doc_id, reason))
            warnings.warn(f"{doc.doc_id}: {reason}, skipped")
            continue

        for polarity in polarities:
            for strength in strengths:
                combos = list(itertools.combinations(kws, strength))
                per_length: dict[float, dict[str, list]] = {
                    lp: {"jaccard": [], "jsd": [], "ratio": [], "sp": [], "sg": []}
                    for lp in lengths
                }
                for combo in combos:
                    sig = fragment_signal(list(combo), model.vocab, polarity, model.normalizer)
                    for lp in lengths:
                        report = evaluate_pair(model, sig, lp)
                        bucket = per_length[lp]
                        bucket["jaccard"].append(report.jaccard)
                        bucket["jsd"].append(report.jsd)
                        bucket["ratio"].append(report.ratio)
                        bucket["sp"].append(report.sigma_personal)
                        bucket["sg"].append(report.sigma_generic)
                for lp in lengths:
                    bucket = per_length[lp]
                    cells.append(
                        CellResult(
                            doc_id=doc.doc_id,
                            polarity=polarity,
                            strength=strength,
                            length_pct=lp,
                            n_combinations=len(combos),
                            jaccard=float(np.mean(bucket["jaccard"])),
                            jsd=float(np.mean(bucket["jsd"])),
                            ratio=_mean_or_none(bucket["ratio"]),
                            sigma_personal=float(np.mean(bucket["sp"])),
                            sigma_generic=float(np.mean(bucket["sg"])),
                        )
                    )
    return ExperimentResult(dataset=dataset, cells=tuple(cells), skipped=tuple(skipped))


def _fmt(value: float | None) -> str:
    return "" if value is None else repr(value)


def write_results_csv(result: ExperimentResult, path: str | Path) -> None:
    """Long-format results, one row per (document, cell, metric). Row order
    and float formatting are canonical, so identical runs produce identical
    bytes."""
    rows = []
    for c in sorted(
        result.cells, key=lambda c: (c.doc_id, c.polarity, c.strength, c.length_pct)
    ):
        for metric in ("jaccard", "jsd", "ratio"):
            rows.append(
                (
                    result.dataset,
                    c.doc_id,
                    c.polarity,
                    c.strength,
                    _fmt(c.length_pct),
                    metric,
                    _fmt(getattr(c, metric)),
                    c.n_combinations,
                )
            )
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "dataset",
                "doc_id",
                "polarity",
                "strength",
                "length_pct",
                "metric",
                "value",
                "n_combinations",
            ]
        )
        writer.writerows(rows)


def write_table_csvs(result: ExperimentResult, out_dir: str | Path) -> list[Path]:
    """Macro-averaged tables, one CSV per metric and polarity: strength rows
    by length columns."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    polarities = sorted({c.polarity for c in result.cells})
    strengths = sorted({c.strength for c in result.cells})
    lengths = sorted({c.length_pct for c in result.cells})
    written = []
    for metric in ("jaccard", "jsd", "ratio"):
        for polarity in polarities:
            path = out_dir / f"{metric}_{polarity}.csv"
            with open(path, "w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh)
                writer.writerow(["strength"] + [_fmt(lp) for lp in lengths])
                for s in strengths:
                    row = [str(s)] + [
                        _fmt(result.macro(metric, polarity, s, lp)) for lp in lengths
                    ]
                    writer.writerow(row)
            written.append(path)
    return written


def export_similarity_density(result: ExperimentResult, path: str | Path) -> None:
    """Per-document mean semantic similarities for both summary kinds, one
    row per (document, polarity), for density plotting elsewhere."""
    keys = sorted({(c.doc_id, c.polarity) for c in result.cells})
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["dataset", "doc_id", "polarity", "sigma_personal", "sigma_generic"])
        for doc_id, polarity in keys:
            sp = [c.sigma_personal for c in result.cells if (c.doc_id, c.polarity) == (doc_id, polarity)]
            sg = [c.sigma_generic for c in result.cells if (c.doc_id, c.polarity) == (doc_id, polarity)]
            writer.writerow(
                [result.dataset, doc_id, polarity, repr(float(np.mean(sp))), repr(float(np.mean(sg)))]
            )


def write_skip_manifest(result: ExperimentResult, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for doc_id, reason in sorted(result.skipped):
            fh.write(f"{doc_id}\t{reason}\n")
