import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tweetpulse.topicmodel import (
    EmptyVocabulary,
    InvalidTopic,
    InvalidTopicCount,
    build_vocabulary,
    doc_term_matrix,
    export_topicvis,
    js_divergence,
    lda_fit,
    relevant_terms,
    tfidf,
)

DOCS = [
    ["cases", "rising", "cases"],
    ["testing", "sites", "open"],
    ["cases", "testing"],
    ["vaccine", "trials", "cases"],
]


def fit_small(k=2, iterations=40, seed=7, docs=DOCS):
    vocab = build_vocabulary(docs)
    return lda_fit(doc_term_matrix(docs, vocab), k=k, iterations=iterations, seed=seed)


class TestVocabulary:
    def test_sorted_terms_and_doc_freq(self):
        vocab = build_vocabulary(DOCS)
        assert list(vocab.terms) == sorted(vocab.terms)
        assert vocab.doc_freq[vocab.index["cases"]] == 3
        assert vocab.n_docs == 4

    def test_min_df_prunes(self):
        vocab = build_vocabulary(DOCS, min_df=2)
        assert set(vocab.terms) == {"cases", "testing"}

    def test_max_df_prunes_ubiquitous(self):
        docs = [["stop", "alpha"], ["stop", "beta"], ["stop", "gamma"], ["stop", "delta"]]
        vocab = build_vocabulary(docs, max_df_fraction=0.5)
        assert "stop" not in vocab.terms
        assert len(vocab.terms) == 4

    def test_empty_vocabulary_diagnostics(self):
        with pytest.raises(EmptyVocabulary):
            build_vocabulary([["solo"], ["single"]], min_df=3)

    def test_mismatched_vocab_rejected(self):
        vocab = build_vocabulary(DOCS)
        other = build_vocabulary([["unrelated", "words"]])
        dtm = doc_term_matrix(DOCS, vocab)
        with pytest.raises(ValueError):
            tfidf(dtm, vocab=other)


class TestTfIdf:
    def test_smooth_weights(self):
        vocab = build_vocabulary(DOCS)
        dtm = doc_term_matrix(DOCS, vocab)
        mat = tfidf(dtm)
        idx = vocab.index
        row0 = dict(mat.rows[0])
        # tf=2, smooth idf = ln(5/4) + 1
        assert row0[idx["cases"]] == pytest.approx(2 * (math.log(5 / 4) + 1))

    def test_plain_variant(self):
        vocab = build_vocabulary(DOCS)
        mat = tfidf(doc_term_matrix(DOCS, vocab), variant="plain")
        idx = vocab.index
        row0 = dict(mat.rows[0])
        assert row0[idx["cases"]] == pytest.approx(2 * math.log(4 / 3))

    def test_entries_exactly_where_counts_are(self):
        vocab = build_vocabulary(DOCS)
        dtm = doc_term_matrix(DOCS, vocab)
        mat = tfidf(dtm)
        for counts, weights in zip(dtm.rows, mat.rows):
            assert [t for t, _ in counts] == [t for t, _ in weights]

    def test_unknown_variant(self):
        vocab = build_vocabulary(DOCS)
        with pytest.raises(ValueError):
            tfidf(doc_term_matrix(DOCS, vocab), variant="bm25")


class TestLdaFit:
    def test_row_sums(self):
        model = fit_small()
        for row in model.phi:
            assert math.fsum(row) == pytest.approx(1.0, abs=1e-12)
        for row in model.theta:
            assert math.fsum(row) == pytest.approx(1.0, abs=1e-12)

    def test_seed_determinism(self):
        a, b = fit_small(seed=11), fit_small(seed=11)
        assert a.phi == b.phi and a.theta == b.theta
        assert a.log_likelihood == b.log_likelihood

    def test_different_seeds_differ(self):
        assert fit_small(seed=1).phi != fit_small(seed=2).phi

    def test_alpha_defaults_to_50_over_k(self):
        model = fit_small(k=5, iterations=5)
        assert model.alpha == pytest.approx(10.0)

    def test_k_bounds(self):
        vocab = build_vocabulary(DOCS)
        dtm = doc_term_matrix(DOCS, vocab)
        with pytest.raises(InvalidTopicCount):
            lda_fit(dtm, k=0)
        with pytest.raises(InvalidTopicCount):
            lda_fit(dtm, k=1000)  # more topics than tokens

    def test_k_one_degenerates(self):
        model = fit_small(k=1, iterations=5)
        assert all(row == (1.0,) for row in model.theta)
        assert model.prevalence == (1.0,)

    def test_checkpoint_schedule(self):
        model = fit_small(iterations=120)
        assert [sweep for sweep, _ in model.log_likelihood] == [50, 100, 120]
        model2 = fit_small(iterations=100)
        assert [sweep for sweep, _ in model2.log_likelihood] == [50, 100]

    def test_prevalence_sums_to_one(self):
        model = fit_small(k=3, iterations=20)
        assert math.fsum(model.prevalence) == pytest.approx(1.0, abs=1e-12)


class TestRelevance:
    def test_topic_and_lambda_validation(self):
        model = fit_small()
        with pytest.raises(InvalidTopic):
            relevant_terms(model, 5)
        with pytest.raises(ValueError):
            relevant_terms(model, 0, lambda_=1.5)
        with pytest.raises(ValueError):
            relevant_terms(model, 0, n=0)

    def test_descending_relevance_with_term_tiebreak(self):
        model = fit_small()
        ranking = relevant_terms(model, 0, 0.6, n=len(model.vocab))
        values = [r for _, r in ranking.terms]
        assert values == sorted(values, reverse=True)

    def test_lambda_one_is_within_topic_probability_order(self):
        model = fit_small()
        ranking = relevant_terms(model, 0, 1.0, n=len(model.vocab))
        by_phi = sorted(
            zip(model.vocab.terms, model.phi[0]), key=lambda item: (-item[1], item[0])
        )
        assert [t for t, _ in ranking.terms] == [t for t, _ in by_phi]


class TestJsDivergence:
    def test_identical_is_zero(self):
        assert js_divergence([0.5, 0.5], [0.5, 0.5]) == 0.0

    def test_disjoint_is_ln2(self):
        assert js_divergence([1.0, 0.0], [0.0, 1.0]) == pytest.approx(math.log(2))

    @given(
        st.lists(st.floats(0.01, 10.0), min_size=2, max_size=12),
        st.lists(st.floats(0.01, 10.0), min_size=2, max_size=12),
    )
    @settings(max_examples=100)
    def test_symmetric_and_bounded(self, a, b):
        n = min(len(a), len(b))
        p = np.array(a[:n]) / sum(a[:n])
        q = np.array(b[:n]) / sum(b[:n])
        d1, d2 = js_divergence(p, q), js_divergence(q, p)
        assert d1 == pytest.approx(d2, abs=1e-12)
        assert 0.0 <= d1 <= math.log(2) + 1e-12


class TestExport:
    def test_payload_shape(self):
        model = fit_small()
        payload = export_topicvis(model)
        assert payload["schema"] == "topicvis/1"
        assert payload["k"] == 2
        assert len(payload["topics"]) == 2
        total = sum(t["prevalence"] for t in payload["topics"])
        assert total == pytest.approx(1.0)
        for t in payload["topics"]:
            assert {"topic", "prevalence", "x", "y", "terms", "lambda"} <= set(t)

    def test_two_topics_mirror_layout(self):
        model = fit_small()
        payload = export_topicvis(model)
        xs = [t["x"] for t in payload["topics"]]
        assert xs[0] == pytest.approx(-xs[1], abs=1e-9)
