"""Relevance-ranked topic terms and the topic-map export payload.

Relevance blends a term's in-topic probability with its lift over the
corpus marginal: lambda * log p(w|t) + (1 - lambda) * log(p(w|t) / p(w)).
lambda = 1 ranks by probability alone, lambda = 0 by lift alone.
"""
from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .lda import LdaModel

DEFAULT_LAMBDA = 0.6
DEFAULT_TOP_TERMS = 30
TOPICVIS_SCHEMA = "topicvis/1"


class InvalidTopic(ValueError):
    """Raised for a topic index outside [0, K)."""


@dataclass(frozen=True)
class RelevanceRanking:
    topic: int
    lambda_: float
    terms: tuple[tuple[str, float], ...]  # (term, relevance) descending


def _marginal(model: LdaModel) -> list[float]:
    # p(w) = sum_k p(k) p(w|k); p(k) from final token assignments.
    prevalence = model.prevalence
    v = len(model.vocab)
    p_w = [0.0] * v
    for t in range(model.k):
        p_t = prevalence[t]
        row = model.phi[t]
        for w in range(v):
            p_w[w] += p_t * row[w]
    return p_w


def relevant_terms(
    model: LdaModel,
    topic: int,
    lambda_: float = DEFAULT_LAMBDA,
    n: int = DEFAULT_TOP_TERMS,
) -> RelevanceRanking:
    """Top-n terms of one topic by relevance, ties broken by term."""
    if not 0 <= topic < model.k:
        raise InvalidTopic(f"topic must be in [0, {model.k}), got {topic}")
    if not 0.0 <= lambda_ <= 1.0:
        raise ValueError(f"lambda must be in [0, 1], got {lambda_}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    p_w = _marginal(model)
    row = model.phi[topic]
    scored = []
    for w, term in enumerate(model.vocab.terms):
        log_p = math.log(row[w])
        relevance = lambda_ * log_p + (1.0 - lambda_) * (log_p - math.log(p_w[w]))
        scored.append((term, relevance))
    scored.sort(key=lambda item: (-item[1], item[0]))
    return RelevanceRanking(topic=topic, lambda_=lambda_, terms=tuple(scored[:n]))


def js_divergence(p: Sequence[float], q: Sequence[float]) -> float:
    """Jensen-Shannon divergence, natural log, in [0, ln 2]."""
    total = 0.0
    for a, b in zip(p, q):
        m = 0.5 * (a + b)
        if a > 0.0:
            total += 0.5 * a * math.log(a / m)
        if b > 0.0:
            total += 0.5 * b * math.log(b / m)
    # Rounding can push a hair past the closed bounds.
    return min(max(total, 0.0), math.log(2.0))


def _mds_coords(distances: np.ndarray) -> np.ndarray:
    """Classical (Torgerson) MDS to 2-D with a deterministic sign choice."""
    n = distances.shape[0]
    if n == 1:
        return np.zeros((1, 2))
    j = np.eye(n) - np.full((n, n), 1.0 / n)
    b = -0.5 * j @ (distances**2) @ j
    eigvals, eigvecs = np.linalg.eigh(b)
    order = np.argsort(eigvals)[::-1][:2]
    coords = np.zeros((n, 2))
    for axis, idx in enumerate(order):
        val = max(eigvals[idx], 0.0)
        column = eigvecs[:, idx] * math.sqrt(val)
        # Sign fix: the largest-magnitude entry points positive.
        pivot = int(np.argmax(np.abs(column)))
        if column[pivot] < 0:
            column = -column
        coords[:, axis] = column
    return coords


def export_topicvis(
    model: LdaModel,
    rankings: Sequence[RelevanceRanking] | None = None,
) -> dict:
    """JSON-ready topic-map payload: prevalence, 2-D layout, term rankings.

    Coordinates come from classical MDS over pairwise Jensen-Shannon
    divergences between topic-term distributions.
    """
    if rankings is None:
        rankings = [relevant_terms(model, t) for t in range(model.k)]
    by_topic = {r.topic: r for r in rankings}

    k = model.k
    distances = np.zeros((k, k))
    for a in range(k):
        for b in range(a + 1, k):
            d = js_divergence(model.phi[a], model.phi[b])
            distances[a, b] = d
            distances[b, a] = d
    coords = _mds_coords(distances)

    prevalence = model.prevalence
    topics = []
    for t in range(k):
        ranking = by_topic.get(t)
        topics.append(
            {
                "topic": t,
                "prevalence": prevalence[t],
                "x": float(coords[t, 0]),
                "y": float(coords[t, 1]),
                "terms": [
                    {"term": term, "relevance": rel}
                    for term, rel in (ranking.terms if ranking else ())
                ],
                "lambda": ranking.lambda_ if ranking else None,
            }
        )
    return {
        "schema": TOPICVIS_SCHEMA,
        "k": k,
        "alpha": model.alpha,
        "beta": model.beta,
        "iterations": model.iterations,
        "seed": model.seed,
        "topics": topics,
    }
