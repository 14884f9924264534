"""Brute-force reference scorer used to cross-check the library.

Everything here is deliberately straight-line: plain loops and dicts,
no imports from ``essayscore``. Written and frozen before the library,
so the two sides cannot share a bug by construction.

Can also be run standalone:

    python tests/oracle.py --answers data/answers.csv --model data/model.csv \
        --stopwords data/stopwords.txt --normalization data/normalization.csv \
        --metric cosine --ngram 1
"""

import argparse
import csv
import math


# ---------------------------------------------------------------------------
# input parsing (kept minimal; validation lives in the library, not here)
# ---------------------------------------------------------------------------

def read_rows(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.reader(fh))


def read_answers(path):
    rows = read_rows(path)
    return [(r[0], r[1], r[2]) for r in rows[1:]]


def read_model(path):
    rows = read_rows(path)
    return [(r[0], r[1], float(r[2])) for r in rows[1:]]


def read_grades(path):
    rows = read_rows(path)
    return [(r[0], r[1], float(r[2])) for r in rows[1:]]


def read_stopwords(path):
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            entry = line.strip()
            if entry and not entry.startswith("#"):
                words.add(entry.lower())
    return words


def read_normalization(path):
    rows = read_rows(path)
    mapping = {}
    for r in rows[1:]:
        mapping[r[0].lower()] = r[1].lower()
    return mapping


# ---------------------------------------------------------------------------
# text pipeline: keep letters, lowercase, split, normalize, drop stopwords
# ---------------------------------------------------------------------------

def pipeline(text, stopwords, normalization):
    kept = ""
    for ch in text:
        if ch.isalpha():
            kept += ch
        else:
            kept += " "
    tokens = kept.lower().split()
    mapped = []
    for tok in tokens:
        if tok in normalization:
            mapped.append(normalization[tok])
        else:
            mapped.append(tok)
    out = []
    for tok in mapped:
        if tok not in stopwords:
            out.append(tok)
    return out


def grams_of(tokens, n):
    out = []
    for i in range(len(tokens) - n + 1):
        out.append(" ".join(tokens[i:i + n]))
    return out


# ---------------------------------------------------------------------------
# tf-idf and the two similarity measures
# ---------------------------------------------------------------------------

def tf_of(grams):
    tf = {}
    for g in grams:
        tf[g] = grams.count(g) / len(grams)
    return tf


def idf_of(documents, log_base):
    size = len(documents)
    terms = set()
    for doc in documents:
        for g in doc:
            terms.add(g)
    idf = {}
    for t in terms:
        df = 0
        for doc in documents:
            if t in doc:
                df += 1
        idf[t] = math.log(size / df, log_base)
    return idf


def weights_of(grams, idf):
    tf = tf_of(grams)
    w = {}
    for t in tf:
        if t in idf and idf[t] > 0.0:
            w[t] = tf[t] * idf[t]
    return w


def cosine(d, q):
    dot = 0.0
    for t in set(d) | set(q):
        dot += d.get(t, 0.0) * q.get(t, 0.0)
    nd = math.sqrt(sum(v * v for v in d.values()))
    nq = math.sqrt(sum(v * v for v in q.values()))
    if nd == 0.0 or nq == 0.0:
        return 0.0
    return dot / (nd * nq)


def jaccard(d, q):
    union = set(d) | set(q)
    if not union:
        return 0.0
    inter = set(d) & set(q)
    return len(inter) / len(union)


# ---------------------------------------------------------------------------
# end-to-end scoring
# ---------------------------------------------------------------------------

def score_corpus(answers, model, stopwords, normalization, metric, n,
                 log_base=math.e):
    """Return ({(student, question): (similarity, points)}, {student: total})."""
    records = {}
    totals = {}
    for (qid, model_text, weight) in model:
        these = [(sid, text) for (sid, q, text) in answers if q == qid]
        docs = [grams_of(pipeline(model_text, stopwords, normalization), n)]
        for (_, text) in these:
            docs.append(grams_of(pipeline(text, stopwords, normalization), n))
        idf = idf_of(docs, log_base)
        q_vec = weights_of(docs[0], idf)
        for i, (sid, _) in enumerate(these):
            d_vec = weights_of(docs[i + 1], idf)
            if metric == "cosine":
                sim = cosine(d_vec, q_vec)
            else:
                sim = jaccard(d_vec, q_vec)
            records[(sid, qid)] = (sim, sim * weight)
    for (sid, _, _) in answers:
        if sid not in totals:
            totals[sid] = 0.0
    for (sid, qid), (_, points) in records.items():
        totals[sid] += points
    return records, totals


def rmse(pairs):
    acc = 0.0
    for (y, u) in pairs:
        acc += (y - u) ** 2
    return math.sqrt(acc / len(pairs))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--answers", required=True)
    ap.add_argument("--model", required=True)
    ap.add_argument("--stopwords", required=True)
    ap.add_argument("--normalization", required=True)
    ap.add_argument("--metric", default="cosine", choices=["cosine", "jaccard"])
    ap.add_argument("--ngram", type=int, default=1, choices=[1, 2, 3])
    args = ap.parse_args()

    answers = read_answers(args.answers)
    model = read_model(args.model)
    stopwords = read_stopwords(args.stopwords)
    normalization = read_normalization(args.normalization)

    records, totals = score_corpus(answers, model, stopwords, normalization,
                                   args.metric, args.ngram)
    print("student_id,question_id,similarity,points")
    for (sid, qid) in sorted(records):
        sim, points = records[(sid, qid)]
        print(f"{sid},{qid},{sim!r},{points!r}")
    print("student_id,total")
    for sid in sorted(totals):
        print(f"{sid},{totals[sid]!r}")


if __name__ == "__main__":
    main()
