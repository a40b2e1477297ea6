"""All-prefixes LCS graphs: list or count every longest common subsequence
of any pair of prefixes in time proportional to the output."""
from .distinct import ApgDistinct, build_distinct
from .embeddings import ApgEmbeddings, build_embeddings
from .enumerate import (
    LcsResult, StepCounter, count_results, enumerate_distinct,
    enumerate_embeddings,
)
from .sequence import (
    MAX_LENGTH, InputSizeError, MatchClassification, MatchPoint, RankMatrix,
    as_sequence, classify_matches, compute_ranks,
)

__all__ = [
    "ApgDistinct", "ApgEmbeddings", "InputSizeError", "LcsResult",
    "MAX_LENGTH", "MatchClassification", "MatchPoint", "RankMatrix",
    "StepCounter", "as_sequence", "build_distinct", "build_embeddings",
    "classify_matches", "compute_ranks", "count_results",
    "enumerate_distinct", "enumerate_embeddings",
]
