"""Topic modeling: vocabulary, TF-IDF, Gibbs-sampled LDA, relevance export."""
from .lda import (
    CHECKPOINT_EVERY,
    DEFAULT_BETA,
    DEFAULT_ITERATIONS,
    DEFAULT_TOPICS,
    InvalidTopicCount,
    LdaModel,
    lda_fit,
)
from .relevance import (
    DEFAULT_LAMBDA,
    DEFAULT_TOP_TERMS,
    TOPICVIS_SCHEMA,
    InvalidTopic,
    RelevanceRanking,
    export_topicvis,
    js_divergence,
    relevant_terms,
)
from .vocab import (
    IDF_VARIANTS,
    DocTermMatrix,
    EmptyVocabulary,
    TfIdfMatrix,
    Vocabulary,
    build_vocabulary,
    doc_term_matrix,
    tfidf,
)

__all__ = [
    "CHECKPOINT_EVERY",
    "DEFAULT_BETA",
    "DEFAULT_ITERATIONS",
    "DEFAULT_LAMBDA",
    "DEFAULT_TOPICS",
    "DEFAULT_TOP_TERMS",
    "IDF_VARIANTS",
    "TOPICVIS_SCHEMA",
    "DocTermMatrix",
    "EmptyVocabulary",
    "InvalidTopic",
    "InvalidTopicCount",
    "LdaModel",
    "RelevanceRanking",
    "TfIdfMatrix",
    "Vocabulary",
    "build_vocabulary",
    "doc_term_matrix",
    "export_topicvis",
    "js_divergence",
    "lda_fit",
    "relevant_terms",
    "tfidf",
]
