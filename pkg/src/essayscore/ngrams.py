"""N-gram feature extraction over token sequences.

A token sequence of length L yields max(0, L - n + 1) n-grams; each gram
is n consecutive tokens joined by a single space. Only n in {1, 2, 3}
(unigram, bigram, trigram) is supported. No padding or boundary markers
are added, so a sequence shorter than n yields no grams at all.
"""

from __future__ import annotations

from .errors import InvalidN
from .preprocess import TokenSequence

VALID_NGRAM_SIZES = (1, 2, 3)

# An n-gram profile is a list of space-joined grams in text order.
NGramProfile = list[str]


def extract_ngrams(tokens: TokenSequence, n: int) -> NGramProfile:
    """Return the n-grams of a token sequence, in order.

    For four tokens this gives 4 unigrams, 3 bigrams, or 2 trigrams.
    """
    if n not in VALID_NGRAM_SIZES:
        raise InvalidN(f"n-gram size must be one of {VALID_NGRAM_SIZES}, got {n!r}")
    if n == 1:
        return list(tokens)
    return [" ".join(tokens[i:i + n]) for i in range(len(tokens) - n + 1)]
