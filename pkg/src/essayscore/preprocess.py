"""Text preprocessing: raw answer text to a normalized token sequence.

The pipeline runs five stages in a fixed order: clean, case-fold,
tokenize, normalize slang/typos, remove stopwords. Each stage is a pure
function, exposed individually so they can be tested and demonstrated in
isolation.
"""

from __future__ import annotations

from .ingest import Lexicons

# A token sequence is a plain list of lowercase tokens in text order.
TokenSequence = list[str]


def clean_text(raw: str) -> str:
    """Replace every non-letter character with a space and tidy whitespace.

    "Letter" means the Unicode letter property, so the rule is total over
    arbitrary UTF-8 input: digits, punctuation, and symbols all become
    spaces, runs of whitespace collapse to one space, and the result is
    trimmed.
    """
    kept = "".join(ch if ch.isalpha() else " " for ch in raw)
    return " ".join(kept.split())


def case_fold(s: str) -> str:
    """Lowercase every character."""
    return s.lower()


def tokenize(s: str) -> TokenSequence:
    """Split a cleaned, case-folded string on spaces."""
    return s.split()


def normalize_tokens(tokens: TokenSequence, lexicons: Lexicons) -> TokenSequence:
    """Replace slang/typo tokens with their formal form, one pass per token.

    Tokens without a dictionary entry pass through unchanged; length is
    preserved.
    """
    mapping = lexicons.normalization
    return [mapping.get(tok, tok) for tok in tokens]


def remove_stopwords(tokens: TokenSequence, lexicons: Lexicons) -> TokenSequence:
    """Drop stopword tokens, preserving the order of the survivors."""
    stopwords = lexicons.stopwords
    return [tok for tok in tokens if tok not in stopwords]


def preprocess_pipeline(raw: str, lexicons: Lexicons) -> TokenSequence:
    """Run the full five-stage pipeline on raw text.

    Cleaning happens before case folding, so in the rare case where
    lowercasing expands a character into letter-plus-combining-mark the
    mark survives; for alphabetic scripts this does not arise.
    """
    return remove_stopwords(
        normalize_tokens(tokenize(case_fold(clean_text(raw))), lexicons),
        lexicons,
    )
