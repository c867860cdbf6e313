"""Vocabulary construction, bag-of-words counts, and TF-IDF weighting."""
from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from ..textproc import StopwordPolicy, remove_stopwords

IDF_VARIANTS = ("smooth", "plain")


class EmptyVocabulary(ValueError):
    """Raised when pruning removes every term."""


@dataclass(frozen=True)
class Vocabulary:
    """Dense lexicographic term index with per-term document frequency."""

    terms: tuple[str, ...]  # index -> term, sorted
    doc_freq: tuple[int, ...]
    n_docs: int

    @cached_property
    def index(self) -> dict[str, int]:
        return {term: i for i, term in enumerate(self.terms)}

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index


@dataclass(frozen=True)
class DocTermMatrix:
    """Sparse per-document term counts, in corpus document order."""

    vocab: Vocabulary
    rows: tuple[tuple[tuple[int, int], ...], ...]  # per doc: ((term_idx, count), ...)

    @property
    def n_docs(self) -> int:
        return len(self.rows)

    @property
    def total_tokens(self) -> int:
        return sum(count for row in self.rows for _, count in row)


@dataclass(frozen=True)
class TfIdfMatrix:
    vocab: Vocabulary
    rows: tuple[tuple[tuple[int, float], ...], ...]
    variant: str


def build_vocabulary(
    token_lists: Iterable[Sequence[str]],
    policy: StopwordPolicy | None = None,
    min_df: int = 1,
    max_df_fraction: float = 1.0,
) -> Vocabulary:
    """Index the terms worth modeling.

    Drops stopwords and domain noise via the policy, terms in fewer than
    min_df documents, and terms in more than max_df_fraction of documents
    (boundary kept). Index order is lexicographic for determinism.
    """
    if min_df < 1:
        raise ValueError(f"min_df must be >= 1, got {min_df}")
    if not 0.0 < max_df_fraction <= 1.0:
        raise ValueError(f"max_df_fraction must be in (0, 1], got {max_df_fraction}")
    policy = policy or StopwordPolicy()

    df: Counter[str] = Counter()
    n_docs = 0
    for tokens in token_lists:
        n_docs += 1
        df.update(set(remove_stopwords(list(tokens), policy)))

    ceiling = max_df_fraction * n_docs
    kept = sorted(term for term, freq in df.items() if min_df <= freq <= ceiling)
    if not kept:
        raise EmptyVocabulary(
            f"no terms survive pruning (docs={n_docs}, min_df={min_df}, "
            f"max_df_fraction={max_df_fraction})"
        )
    return Vocabulary(
        terms=tuple(kept),
        doc_freq=tuple(df[term] for term in kept),
        n_docs=n_docs,
    )


def doc_term_matrix(
    token_lists: Iterable[Sequence[str]],
    vocab: Vocabulary,
) -> DocTermMatrix:
    """Count in-vocabulary tokens per document; out-of-vocabulary drops."""
    index = vocab.index
    rows = []
    for tokens in token_lists:
        counts: Counter[int] = Counter(index[t] for t in tokens if t in index)
        rows.append(tuple(sorted(counts.items())))
    return DocTermMatrix(vocab=vocab, rows=tuple(rows))


def _idf(variant: str, n_docs: int, df: int) -> float:
    if variant == "smooth":
        return math.log((1 + n_docs) / (1 + df)) + 1.0
    if variant == "plain":
        return math.log(n_docs / df)
    raise ValueError(f"unknown idf variant: {variant!r}")


def tfidf(
    dtm: DocTermMatrix,
    vocab: Vocabulary | None = None,
    variant: str = "smooth",
) -> TfIdfMatrix:
    """weight(d, t) = count(d, t) x idf(t).

    The default "smooth" idf is ln((1+D)/(1+df)) + 1, never zero; "plain"
    is ln(D/df), zero for terms present in every document. Entries exist
    exactly where counts do, even when the weight is 0.
    """
    vocab = vocab if vocab is not None else dtm.vocab
    if vocab != dtm.vocab:
        raise ValueError("vocabulary does not match the matrix")
    idf = [_idf(variant, vocab.n_docs, df) for df in vocab.doc_freq]
    rows = tuple(
        tuple((t, count * idf[t]) for t, count in row) for row in dtm.rows
    )
    return TfIdfMatrix(vocab=vocab, rows=rows, variant=variant)
