"""Plain-text ingestion: sentence segmentation, term normalization, and the
binary term-sentence incidence matrix.

All outputs are immutable after construction; every function here is pure, so
documents can be processed concurrently without shared state.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

import numpy as np
from scipy import sparse

from .errors import EmptyDocument, EmptyVocabulary
from .stemming import porter_stem
from .stopwords import DEFAULT_STOPWORDS

# Tokens immediately preceding a period that do not end a sentence.
ABBREVIATIONS = frozenset(
    """
    e.g i.e cf vs etc al fig figs eq eqs sec secs no nos ch chs pp vol
    dr mr mrs ms prof st jr sr inc ltd co approx resp
    """.split()
)

_TOKEN = re.compile(r"[a-z0-9]+")
_DIGITS = re.compile(r"^[0-9]+$")
_PARAGRAPH = re.compile(r"\n\s*\n")
_BOUNDARY = re.compile(r"[.!?]+[)\]\"']*\s+(?=[A-Z])")

_MIN_TERM_LENGTH = 2


@dataclass(frozen=True)
class RawDocument:
    doc_id: str
    text: str


@dataclass(frozen=True)
class SentenceRecord:
    """One segmented sentence: position, surface form, raw word count, and
    (once the matrix is built) the vocabulary ids occurring in it."""

    index: int
    text: str
    word_count: int
    term_ids: frozenset[int] = field(default_factory=frozenset)


@dataclass(frozen=True)
class NormalizerConfig:
    """Term normalization switches: optional Porter stemming and a stopword
    override (None means the built-in list)."""

    stem: bool = False
    stopwords: frozenset[str] | None = None

    @property
    def effective_stopwords(self) -> frozenset[str]:
        return self.stopwords if self.stopwords is not None else DEFAULT_STOPWORDS


class Vocabulary:
    """Ordered, unique normalized terms with id lookup."""

    def __init__(self, terms: tuple[str, ...]):
        self.terms = terms
        self._index = {t: i for i, t in enumerate(terms)}
        if len(self._index) != len(terms):
            raise ValueError("vocabulary terms must be unique")

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self._index

    def id_of(self, term: str) -> int | None:
        return self._index.get(term)

    def term(self, term_id: int) -> str:
        return self.terms[term_id]


@dataclass(frozen=True)
class TermSentenceMatrix:
    """Binary incidence of terms (rows) in sentences (columns), sparse by
    term, together with the sentence registry it was built from."""

    matrix: sparse.csr_matrix
    sentences: tuple[SentenceRecord, ...]

    @property
    def m(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    @property
    def total_words(self) -> int:
        return sum(s.word_count for s in self.sentences)

    def sentence_columns(self, term_id: int) -> np.ndarray:
        """Indices of sentences containing the given term."""
        lo, hi = self.matrix.indptr[term_id], self.matrix.indptr[term_id + 1]
        return self.matrix.indices[lo:hi]


def segment_sentences(doc: RawDocument) -> list[SentenceRecord]:
    """Split a document into ordered sentences.

    Rule-based: a sentence ends at ., ! or ? followed by whitespace and a
    capital letter, unless the preceding token is a known abbreviation.
    Blank lines always separate sentences, so headings become records of
    their own. Raises EmptyDocument when nothing remains after trimming.
    """
    chunks: list[str] = []
    for paragraph in _PARAGRAPH.split(doc.text):
        if not paragraph.strip():
            continue
        start = 0
        for match in _BOUNDARY.finditer(paragraph):
            before = paragraph[start : match.end()].rstrip()
            last_word = before.rsplit(None, 1)[-1] if before.split() else ""
            if last_word.rstrip(".!?)]\"'").lower() in ABBREVIATIONS:
                continue
            chunks.append(before)
            start = match.end()
        tail = paragraph[start:].strip()
        if tail:
            chunks.append(tail)

    records = []
    for chunk in chunks:
        words = chunk.split()
        if not words:
            continue
        records.append(
            SentenceRecord(index=len(records), text=" ".join(words), word_count=len(words))
        )
    if not records:
        raise EmptyDocument(f"document {doc.doc_id!r} contains no sentences")
    return records


def normalize_terms(sentence_text: str, config: NormalizerConfig = NormalizerConfig()) -> list[str]:
    """Lowercase unigrams of a sentence: punctuation split away, stopwords,
    single characters and pure digits dropped, optional stemming applied.
    Order is preserved and duplicates are retained."""
    stopwords = config.effective_stopwords
    terms = []
    for token in _TOKEN.findall(sentence_text.lower()):
        if len(token) < _MIN_TERM_LENGTH or _DIGITS.match(token) or token in stopwords:
            continue
        if config.stem:
            token = porter_stem(token)
            if len(token) < _MIN_TERM_LENGTH or token in stopwords:
                continue
        terms.append(token)
    return terms


def build_matrix(
    sentences: list[SentenceRecord],
    config: NormalizerConfig = NormalizerConfig(),
) -> tuple[TermSentenceMatrix, Vocabulary]:
    """Build the binary term-sentence matrix over the given sentences.

    Vocabulary ids follow first occurrence in document order. Entries are 1
    whenever the term occurs in the sentence, regardless of multiplicity.
    """
    if not sentences:
        raise EmptyVocabulary("no sentences to build a matrix from")

    order: dict[str, int] = {}
    per_sentence: list[set[int]] = []
    for record in sentences:
        ids = set()
        for term in normalize_terms(record.text, config):
            if term not in order:
                order[term] = len(order)
            ids.add(order[term])
        per_sentence.append(ids)

    if not order:
        raise EmptyVocabulary("no term survived normalization")

    vocab = Vocabulary(tuple(order))
    rows, cols = [], []
    for j, ids in enumerate(per_sentence):
        for i in ids:
            rows.append(i)
            cols.append(j)
    matrix = sparse.csr_matrix(
        (np.ones(len(rows)), (rows, cols)),
        shape=(len(vocab), len(sentences)),
        dtype=np.float64,
    )
    registry = tuple(
        replace(record, term_ids=frozenset(ids))
        for record, ids in zip(sentences, per_sentence)
    )
    return TermSentenceMatrix(matrix=matrix, sentences=registry), vocab
