#!/usr/bin/env python3
"""Regenerate the bundled toy corpus (src/termmap/data/toy_corpus.tsv).

200 synthetic abstracts over four research areas, written from sentence
templates.  Scores mimic citation counts (higher in the bibliometrics
area) and the subset flag marks documents from one institute, which
publishes mostly in that same area.  The file is committed; this script
only exists so the corpus can be rebuilt or extended.
"""
from __future__ import annotations

import random
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "termmap" / "data" / "toy_corpus.tsv"

TOPICS = {
    "biblio": {
        "terms": [
            "citation analysis", "impact factor", "journal", "citation count",
            "research evaluation", "publication output", "citation network",
            "science mapping", "co-citation analysis", "bibliographic coupling",
            "research productivity", "peer review", "citation impact",
            "author collaboration", "collaboration network", "h-index",
            "research field", "scientific literature", "citation distribution",
            "journal ranking", "publication year", "reference list",
            "research group", "self-citation", "citation window",
        ],
        "titles": [
            "Measuring {a} with {b}",
            "{a} and {b} in the scientific literature",
            "A large-scale study of {a}",
            "On the relation between {a} and {b}",
            "{a} revisited",
        ],
        "sentences": [
            "We examine {a} in a large set of journals.",
            "The {a} of a journal correlates with its {b}.",
            "Our analysis shows that {a} differs strongly between research fields.",
            "We compute {a} for every publication in the sample.",
            "The results indicate that {a} depends on {b}.",
            "We compare {a} across research groups and countries.",
            "High {a} does not always reflect high research quality.",
            "The study relies on {a} to track the visibility of research.",
            "We normalize {a} by field and publication year.",
            "A skewed citation distribution affects the {a} of small journals.",
        ],
        "score": (8.0, 40.0),
        "subset_share": 0.6,
    },
    "retrieval": {
        "terms": [
            "search engine", "query expansion", "relevance feedback",
            "test collection", "ranking algorithm", "document retrieval",
            "inverted index", "retrieval effectiveness", "query term",
            "relevance judgment", "search result", "web search", "user query",
            "retrieval model", "term weighting", "precision", "recall",
            "document collection", "search task", "result list",
            "query log", "search behavior", "evaluation measure",
            "index structure", "natural language processing",
        ],
        "titles": [
            "Improving {a} with {b}",
            "{a} for effective {b}",
            "Evaluating {a} on a standard {b}",
            "A new approach to {a}",
            "{a} in web search",
        ],
        "sentences": [
            "We evaluate the {a} of several retrieval models.",
            "The {a} improves precision at the top of the result list.",
            "Experiments on a standard {a} show consistent gains.",
            "Users reformulate the {a} when the search result is poor.",
            "We propose a {a} that exploits {b}.",
            "The ranking algorithm combines {a} and {b}.",
            "Our system builds a compact {b} for the {a}.",
            "The evaluation measure rewards early relevant documents.",
            "We analyze a large {a} to understand search behavior.",
            "Relevance feedback helps the {a} for difficult queries.",
        ],
        "score": (2.0, 12.0),
        "subset_share": 0.08,
    },
    "library": {
        "terms": [
            "information literacy", "public library", "academic library",
            "librarian", "user study", "digital library", "library instruction",
            "reference service", "library user", "information seeking",
            "information need", "library collection", "user satisfaction",
            "information service", "survey data", "focus group",
            "undergraduate student", "library staff", "information behavior",
            "school library", "library program", "community", "interview",
            "reading habit", "service quality",
        ],
        "titles": [
            "{a} in the academic library",
            "A user study of {a}",
            "{a} and {b} among undergraduate students",
            "Assessing {a} with {b}",
            "The role of the librarian in {a}",
        ],
        "sentences": [
            "The survey asks library users about their {a}.",
            "The {a} supports students during their first year.",
            "Interviews with librarians reveal a growing demand for {a}.",
            "The study measures {a} with a standardized instrument.",
            "Participants in the focus group discuss {a} and {b}.",
            "The public library offers a new {a} for the community.",
            "Our findings suggest that {a} depends on {b}.",
            "The survey data show large differences in {a}.",
            "Library instruction improves the {a} of undergraduate students.",
            "We describe a {a} that connects the library with its community.",
        ],
        "score": (1.0, 8.0),
        "subset_share": 0.06,
    },
    "ml": {
        "terms": [
            "neural network", "language model", "text classification",
            "training data", "word embedding", "deep learning",
            "feature selection", "classification accuracy", "machine learning",
            "topic model", "text corpus", "sentiment analysis",
            "training set", "feature vector", "learning algorithm",
            "hidden layer", "model parameter", "label noise",
            "transfer learning", "evaluation benchmark", "error rate",
            "document representation", "semantic similarity", "text mining",
            "cluster analysis",
        ],
        "titles": [
            "{a} for {b}",
            "Learning {a} from noisy {b}",
            "{a} with deep neural networks",
            "Scaling {a} to large corpora",
            "A comparison of {a} and {b}",
        ],
        "sentences": [
            "We train a {a} on a large {b}.",
            "The {a} outperforms a strong baseline on the evaluation benchmark.",
            "Our model learns a {a} for every document.",
            "The classification accuracy improves when we add {a}.",
            "We compare several learning algorithms for {a}.",
            "The {a} reduces the error rate on the test set.",
            "Feature selection removes redundant dimensions from the {a}.",
            "The word embedding captures the semantic similarity of terms.",
            "Training data with label noise hurts the {a}.",
            "We apply {a} to a collection of scientific abstracts.",
        ],
        "score": (3.0, 20.0),
        "subset_share": 0.12,
    },
}

GENERIC_SENTENCES = [
    "This paper presents a new method and an interesting result.",
    "We discuss related work and outline future research.",
    "The approach is simple and the results are easy to interpret.",
    "We describe the data set and the experimental setup.",
    "The paper concludes with a discussion of open problems.",
    "Our method scales to large data sets.",
    "We summarize the main findings in the final section.",
    "The results of the experiment support our hypothesis.",
]


def _fill(template: str, rng: random.Random, pool: list[str]) -> str:
    a, b = rng.sample(pool, 2)
    return template.replace("{a}", a).replace("{b}", b)


# Neighboring research areas; a share of documents is interdisciplinary,
# which keeps the co-occurrence graph of the whole corpus connected.
NEIGHBOR = {"biblio": "retrieval", "retrieval": "ml", "ml": "library",
            "library": "biblio"}


def make_doc(rng: random.Random, topic_key: str, doc_no: int):
    topic = TOPICS[topic_key]
    # Each document talks about a coherent subset of the topic vocabulary,
    # so terms of one topic co-occur densely across the corpus.
    if rng.random() < 0.25:
        other = TOPICS[NEIGHBOR[topic_key]]
        pool = (rng.sample(topic["terms"], k=5)
                + rng.sample(other["terms"], k=4))
    else:
        pool = rng.sample(topic["terms"], k=rng.randint(7, 10))
    title = _fill(rng.choice(topic["titles"]), rng, pool)
    title = title[0].upper() + title[1:]
    n_sent = rng.randint(4, 6)
    sentences = [_fill(rng.choice(topic["sentences"]), rng, pool)
                 for _ in range(n_sent)]
    if rng.random() < 0.7:
        sentences.insert(rng.randrange(len(sentences)),
                         rng.choice(GENERIC_SENTENCES))
    abstract = " ".join(s[0].upper() + s[1:] for s in sentences)
    lo, hi = topic["score"]
    score = round(rng.uniform(lo, hi), 1)
    in_subset = rng.random() < topic["subset_share"]
    return {
        "id": f"{topic_key}-{doc_no:03d}",
        "title": title,
        "abstract": abstract,
        "score": score,
        "subset": "true" if in_subset else "false",
    }


def main():
    rng = random.Random(20110901)
    rows = []
    for topic_key in TOPICS:
        for doc_no in range(1, 51):
            rows.append(make_doc(rng, topic_key, doc_no))
    with open(OUT, "w", encoding="utf-8") as f:
        f.write("id\ttitle\tabstract\tscore\tsubset\n")
        for r in rows:
            f.write(f"{r['id']}\t{r['title']}\t{r['abstract']}\t{r['score']}\t{r['subset']}\n")
    print(f"wrote {len(rows)} documents to {OUT}")


if __name__ == "__main__":
    main()
