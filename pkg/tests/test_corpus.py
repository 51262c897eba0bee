"""Segmentation, normalization, and incidence-matrix construction."""

from __future__ import annotations

import numpy as np
import pytest

from sigsumm.corpus import (
    NormalizerConfig,
    RawDocument,
    build_matrix,
    normalize_terms,
    segment_sentences,
)
from sigsumm.errors import EmptyDocument, EmptyVocabulary

# 18 sentences with abbreviation hazards: "e.g.", "Dr.", "i.e.", "cf." and
# "vs." are each followed by a capitalized word and must not split.
EIGHTEEN = (
    "Selecting sentences from a technical report is harder than it first appears. "
    "Front matter carries metadata, e.g. Author lists, grant codes, and page numbers. "
    "Dr. Imai's survey catalogued forty systems without endorsing any of them. "
    "Most systems score sentences independently, i.e. They ignore discourse links. "
    "Frequency counts remain the workhorse, cf. Table reproductions in older reviews. "
    "Position cues help in news but mislead in methods sections. "
    "A paragraph's opening sentence is not always its topic sentence. "
    "Redundancy control matters once two sources repeat the same finding. "
    "Compression rates near 10 percent keep only one sentence in ten. "
    "Readers tolerate gaps better than contradictions. "
    "Evaluation vs. Human judgment remains the costliest step. "
    "Annotator agreement rarely exceeds chance by a wide margin. "
    "Automatic proxies reward overlap with a reference text. "
    "A single reference underdetermines what counts as salient. "
    "Multiple references shift the problem to aggregation. "
    "Sec. 4 of many papers hides the preprocessing that drives the numbers. "
    "Small preprocessing changes move rankings more than model changes. "
    "Careful reporting of both would make comparisons meaningful."
)


class TestSegmentation:
    def test_single_letter_chain_splits(self):
        records = segment_sentences(RawDocument("x", "A. B. C."))
        assert [r.text for r in records] == ["A.", "B.", "C."]
        assert [r.index for r in records] == [0, 1, 2]

    def test_single_sentence(self):
        records = segment_sentences(RawDocument("x", "One sentence"))
        assert len(records) == 1
        assert records[0].word_count == 2

    def test_scholarly_paragraph_sentence_count(self):
        records = segment_sentences(RawDocument("x", EIGHTEEN))
        assert len(records) == 18

    def test_abbreviations_do_not_split(self):
        records = segment_sentences(
            RawDocument("x", "See Dr. Óh for details. The visit is at 2.30 p.m. tomorrow.")
        )
        assert len(records) == 2

    def test_blank_line_is_hard_break(self):
        records = segment_sentences(RawDocument("x", "A heading\n\nBody text follows here."))
        assert [r.text for r in records] == ["A heading", "Body text follows here."]

    def test_question_and_exclamation_delimiters(self):
        records = segment_sentences(RawDocument("x", "Really? Yes! Quite so."))
        assert len(records) == 3

    def test_closing_quotes_and_parens(self):
        records = segment_sentences(
            RawDocument("x", 'He said "stop." Then (quietly.) Everyone left.')
        )
        assert len(records) == 3

    def test_covers_all_nonwhitespace_text(self):
        for text in (EIGHTEEN, "A. B. C.", "One two.\n\nThree four. Five."):
            records = segment_sentences(RawDocument("x", text))
            joined = "".join("".join(r.text.split()) for r in records)
            assert joined == "".join(text.split())

    def test_indices_contiguous_and_word_counts_positive(self):
        records = segment_sentences(RawDocument("x", EIGHTEEN))
        assert [r.index for r in records] == list(range(len(records)))
        assert all(r.word_count >= 1 for r in records)

    def test_empty_document_rejected(self):
        with pytest.raises(EmptyDocument):
            segment_sentences(RawDocument("x", "   \n\n  "))


class TestNormalization:
    def test_punctuation_and_stopwords(self):
        assert normalize_terms("The Weighted Matrices!") == ["weighted", "matrices"]

    def test_all_stopwords_empty(self):
        assert normalize_terms("the of and") == []

    def test_stemming_collapses_singular_plural(self):
        config = NormalizerConfig(stem=True)
        a = normalize_terms("summaries", config)
        b = normalize_terms("summary", config)
        assert a == b and len(a) == 1

    def test_duplicates_retained_in_order(self):
        assert normalize_terms("graph graph matrix graph") == [
            "graph",
            "graph",
            "matrix",
            "graph",
        ]

    def test_short_tokens_and_digits_dropped(self):
        assert normalize_terms("a 42 x9 2026 ab") == ["x9", "ab"]

    def test_custom_stopwords_override(self):
        config = NormalizerConfig(stopwords=frozenset({"graph"}))
        assert normalize_terms("the graph matrix", config) == ["the", "matrix"]


def _records(texts):
    doc = RawDocument("x", " ".join(texts))
    return segment_sentences(doc)


class TestMatrix:
    def test_hand_construction(self):
        tsm, vocab = build_matrix(_records(["Matrix graph.", "Graph topic."]))
        assert vocab.terms == ("matrix", "graph", "topic")
        assert tsm.matrix.toarray().tolist() == [[1, 0], [1, 1], [0, 1]]

    def test_binary_not_counts(self):
        tsm, vocab = build_matrix(_records(["Matrix matrix graph."]))
        assert tsm.matrix.toarray().tolist() == [[1], [1]]

    def test_cells_match_set_membership(self):
        texts = [
            "Graphs encode term adjacency.",
            "Terms form topics.",
            "Topics summarize graphs and terms.",
        ]
        records = _records(texts)
        tsm, vocab = build_matrix(records)
        dense = tsm.matrix.toarray()
        for j, record in enumerate(records):
            contained = set(normalize_terms(record.text))
            for i, term in enumerate(vocab.terms):
                assert dense[i, j] == (1 if term in contained else 0)

    def test_every_term_row_has_support(self):
        tsm, _ = build_matrix(_records(["Matrix graph.", "Graph topic.", "Latent topic."]))
        assert (tsm.matrix.sum(axis=1) >= 1).all()

    def test_term_ids_attached_to_sentences(self):
        tsm, vocab = build_matrix(_records(["Matrix graph.", "Graph topic."]))
        assert tsm.sentences[0].term_ids == {0, 1}
        assert tsm.sentences[1].term_ids == {1, 2}

    def test_repeat_runs_bit_identical(self):
        records = _records(["Matrix graph.", "Graph topic."])
        a = build_matrix(records)[0].matrix.toarray()
        b = build_matrix(records)[0].matrix.toarray()
        assert a.tobytes() == b.tobytes()

    def test_vocabulary_lookup(self):
        _, vocab = build_matrix(_records(["Matrix graph."]))
        assert vocab.id_of("matrix") == 0
        assert vocab.id_of("absent") is None
        assert "graph" in vocab and len(vocab) == 2

    def test_no_surviving_terms_rejected(self):
        with pytest.raises(EmptyVocabulary):
            build_matrix(_records(["Of the and."]))

    def test_total_words_is_raw_count(self):
        tsm, _ = build_matrix(_records(["The graph of terms.", "A topic."]))
        assert tsm.total_words == 6
