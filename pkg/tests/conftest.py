import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from termmap import build, load_tabular, phrases_per_document

DATA = Path(__file__).resolve().parents[1] / "src" / "termmap" / "data"

TOY_COLUMNS = {"id": "id", "title": "title", "abstract": "abstract",
               "score": "score", "subset": "subset"}


@pytest.fixture(scope="session")
def toy_corpus_path():
    return DATA / "toy_corpus.tsv"


@pytest.fixture(scope="session")
def toy_corpus(toy_corpus_path):
    return load_tabular(toy_corpus_path, TOY_COLUMNS)


@pytest.fixture(scope="session")
def toy_phrases(toy_corpus):
    return phrases_per_document(toy_corpus)


@pytest.fixture(scope="session")
def toy_network(toy_corpus, toy_phrases):
    return build(toy_corpus, toy_phrases, min_occ=2)


@pytest.fixture(scope="session")
def tagged_sample():
    """The bundled gold sample as a list of sentences of (token, tag)."""
    sentences, cur = [], []
    for line in (DATA / "tagged_sample.tsv").read_text(encoding="utf-8").splitlines():
        if not line:
            if cur:
                sentences.append(cur)
                cur = []
            continue
        tok, gold = line.split("\t")
        cur.append((tok, gold))
    if cur:
        sentences.append(cur)
    return sentences
