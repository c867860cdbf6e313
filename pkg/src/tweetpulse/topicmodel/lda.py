"""Latent topic mixtures via collapsed Gibbs sampling.

The sampler is deliberately pure Python driven by one seeded PRNG: runs
are bit-reproducible for a fixed seed, which matters more here than raw
speed (tweet corpora are small; fits are offline).
"""
from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .vocab import DocTermMatrix, Vocabulary

DEFAULT_TOPICS = 25
DEFAULT_BETA = 0.01
DEFAULT_ITERATIONS = 1000
CHECKPOINT_EVERY = 50


class InvalidTopicCount(ValueError):
    """Raised when the topic count is non-positive or exceeds the tokens."""


@dataclass(frozen=True)
class LdaModel:
    k: int
    alpha: float
    beta: float
    iterations: int
    seed: int
    vocab: Vocabulary
    phi: tuple[tuple[float, ...], ...]  # K x V, rows sum to 1
    theta: tuple[tuple[float, ...], ...]  # D x K, rows sum to 1
    topic_tokens: tuple[int, ...]  # final token-assignment count per topic
    # (iteration, training log-likelihood) checkpoints, last one final.
    log_likelihood: tuple[tuple[int, float], ...]

    @property
    def total_tokens(self) -> int:
        return sum(self.topic_tokens)

    @property
    def prevalence(self) -> tuple[float, ...]:
        """Share of all token assignments per topic; sums to 1."""
        total = self.total_tokens
        return tuple(n / total for n in self.topic_tokens)


def _log_likelihood(
    k: int,
    v: int,
    alpha: float,
    beta: float,
    n_kw: list[list[int]],
    n_k: list[int],
    n_dk: list[list[int]],
    n_d: list[int],
) -> float:
    """Complete training log-likelihood of the collapsed state."""
    nkw = np.asarray(n_kw, dtype=float)
    nk = np.asarray(n_k, dtype=float)
    ndk = np.asarray(n_dk, dtype=float)
    nd = np.asarray(n_d, dtype=float)
    d = len(n_dk)
    ll = k * float(gammaln(v * beta)) - k * v * float(gammaln(beta))
    ll += float(gammaln(nkw + beta).sum()) - float(gammaln(nk + v * beta).sum())
    ll += d * float(gammaln(k * alpha)) - d * k * float(gammaln(alpha))
    ll += float(gammaln(ndk + alpha).sum()) - float(gammaln(nd + k * alpha).sum())
    return ll


def lda_fit(
    dtm: DocTermMatrix,
    k: int = DEFAULT_TOPICS,
    alpha: float | None = None,
    beta: float = DEFAULT_BETA,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = 0,
) -> LdaModel:
    """Fit a k-topic model on bag-of-words counts.

    alpha defaults to 50/k. phi/theta come from the final sweep's counts
    with Dirichlet smoothing, so every entry is positive. Identical
    arguments (seed included) give bit-identical models.
    """
    if k < 1:
        raise InvalidTopicCount(f"k must be >= 1, got {k}")
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    if alpha is None:
        alpha = 50.0 / k
    if alpha <= 0 or beta <= 0:
        raise ValueError("alpha and beta must be positive")

    v = len(dtm.vocab)
    # One flat entry per token instance; term order inside a doc follows
    # the sorted sparse row, so expansion is deterministic.
    doc_tokens: list[list[int]] = [
        [t for t, count in row for _ in range(count)] for row in dtm.rows
    ]
    n_tokens = sum(len(tokens) for tokens in doc_tokens)
    if k > n_tokens:
        raise InvalidTopicCount(f"k={k} exceeds total token count {n_tokens}")

    d = len(doc_tokens)
    rng = random.Random(seed)
    n_dk = [[0] * k for _ in range(d)]
    n_kw = [[0] * v for _ in range(k)]
    n_k = [0] * k
    n_d = [len(tokens) for tokens in doc_tokens]
    assignments: list[list[int]] = []
    for i, tokens in enumerate(doc_tokens):
        z_doc = []
        for w in tokens:
            z = rng.randrange(k)
            z_doc.append(z)
            n_dk[i][z] += 1
            n_kw[z][w] += 1
            n_k[z] += 1
        assignments.append(z_doc)

    v_beta = v * beta
    checkpoints: list[tuple[int, float]] = []
    weights = [0.0] * k
    for sweep in range(1, iterations + 1):
        for i, tokens in enumerate(doc_tokens):
            z_doc = assignments[i]
            row_dk = n_dk[i]
            for j, w in enumerate(tokens):
                z = z_doc[j]
                row_dk[z] -= 1
                n_kw[z][w] -= 1
                n_k[z] -= 1

                total = 0.0
                for t in range(k):
                    p = (row_dk[t] + alpha) * (n_kw[t][w] + beta) / (n_k[t] + v_beta)
                    weights[t] = p
                    total += p
                r = rng.random() * total
                acc = 0.0
                z = k - 1
                for t in range(k):
                    acc += weights[t]
                    if r < acc:
                        z = t
                        break

                z_doc[j] = z
                row_dk[z] += 1
                n_kw[z][w] += 1
                n_k[z] += 1
        if sweep % CHECKPOINT_EVERY == 0 or sweep == iterations:
            checkpoints.append(
                (sweep, _log_likelihood(k, v, alpha, beta, n_kw, n_k, n_dk, n_d))
            )

    phi = tuple(
        tuple((n_kw[t][w] + beta) / (n_k[t] + v_beta) for w in range(v)) for t in range(k)
    )
    k_alpha = k * alpha
    theta = tuple(
        tuple((n_dk[i][t] + alpha) / (n_d[i] + k_alpha) for t in range(k)) for i in range(d)
    )
    return LdaModel(
        k=k,
        alpha=alpha,
        beta=beta,
        iterations=iterations,
        seed=seed,
        vocab=dtm.vocab,
        phi=phi,
        theta=theta,
        topic_tokens=tuple(n_k),
        log_likelihood=tuple(checkpoints),
    )
