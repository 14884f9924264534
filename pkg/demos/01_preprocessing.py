"""Walk one messy Indonesian answer through the five preprocessing stages.

Run from the repository root:  python demos/01_preprocessing.py
"""

from essayscore import (
    Lexicons,
    case_fold,
    clean_text,
    normalize_tokens,
    preprocess_pipeline,
    remove_stopwords,
    tokenize,
)

raw = "Gak tau pak!!  Mungkin UUD 1945, atau Pancasila??"
lexicons = Lexicons(
    stopwords=frozenset({"pak", "atau", "yang", "adalah"}),
    normalization={"gak": "tidak", "tau": "tahu"},
)

print("raw answer:")
print(f"  {raw!r}\n")

cleaned = clean_text(raw)
print("1. cleaning strips digits, punctuation, and extra spaces:")
print(f"  {cleaned!r}\n")

folded = case_fold(cleaned)
print("2. case folding lowercases everything:")
print(f"  {folded!r}\n")

tokens = tokenize(folded)
print("3. tokenization splits on spaces:")
print(f"  {tokens}\n")

normalized = normalize_tokens(tokens, lexicons)
print("4. normalization maps slang and typos to formal words:")
print(f"  {normalized}\n")

content = remove_stopwords(normalized, lexicons)
print("5. stopword removal keeps only content words:")
print(f"  {content}\n")

print("the pipeline helper runs all five stages at once:")
print(f"  {preprocess_pipeline(raw, lexicons)}")
assert preprocess_pipeline(raw, lexicons) == content
