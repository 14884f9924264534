"""Show how a token sequence expands into unigram/bigram/trigram features.

Run from the repository root:  python demos/02_ngram_features.py
"""

from essayscore import extract_ngrams

tokens = ["this", "is", "a", "sentence"]
print(f"tokens: {tokens}  (length {len(tokens)})\n")

for n, name in ((1, "unigrams"), (2, "bigrams"), (3, "trigrams")):
    grams = extract_ngrams(tokens, n)
    print(f"n={n} ({name}): {len(grams)} grams")
    for gram in grams:
        print(f"    {gram!r}")
    print()

print("a sequence shorter than n yields no grams at all:")
print(f"  extract_ngrams(['solo'], 3) -> {extract_ngrams(['solo'], 3)}")

print("\nthe count law: len(grams) == max(0, len(tokens) - n + 1)")
for length in range(6):
    toks = [f"t{i}" for i in range(length)]
    counts = [len(extract_ngrams(toks, n)) for n in (1, 2, 3)]
    print(f"  {length} tokens -> counts {counts}")
