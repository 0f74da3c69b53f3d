"""Document ingestion: tabular (TSV) and plain-text corpora.

A corpus is an ordered collection of documents, each carrying an id, the
text to be mined, and optional metadata used by the score overlays: a
non-negative numeric score (e.g. a citation count) and a subset membership
flag (e.g. "published by institution X").
"""
from __future__ import annotations

import csv
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyCorpusError, FormatError, ParameterError, ValidationError

SPLIT_MODES = ("whole_file", "paragraph", "line")

_TRUE_WORDS = {"true", "t", "yes", "y", "1"}
_FALSE_WORDS = {"false", "f", "no", "n", "0"}


@dataclass(frozen=True)
class Document:
    """One unit of text plus optional per-document metadata."""

    id: str
    text: str
    score: float | None = None
    in_subset: bool | None = None

    def __post_init__(self):
        if not self.id:
            raise ValidationError("document id must be non-empty")
        if not self.text.strip():
            raise ValidationError(f"document {self.id!r} has empty text")
        if self.score is not None:
            if not math.isfinite(self.score) or self.score < 0:
                raise ValidationError(
                    f"document {self.id!r} has invalid score {self.score!r}; "
                    "scores must be finite and >= 0"
                )


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...] = field(default_factory=tuple)

    def __post_init__(self):
        seen: dict[str, int] = {}
        dups = []
        for d in self.documents:
            if d.id in seen:
                dups.append(d.id)
            seen[d.id] = seen.get(d.id, 0) + 1
        if dups:
            raise ValidationError(
                "duplicate document ids: " + ", ".join(sorted(set(dups)))
            )

    @property
    def n_docs(self) -> int:
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    def __len__(self) -> int:
        return len(self.documents)


def _parse_bool(raw: str, row_no: int) -> bool:
    w = raw.strip().lower()
    if w in _TRUE_WORDS:
        return True
    if w in _FALSE_WORDS:
        return False
    raise ValidationError(f"row {row_no}: cannot parse subset flag {raw!r}")


def load_tabular(path: str | Path, column_spec: dict[str, str]) -> Corpus:
    """Load a tab-separated file with a header row into a Corpus.

    ``column_spec`` maps the roles ``id``, ``title``, ``abstract``,
    ``score`` and ``subset`` to column names in the header.  ``id`` and
    ``title`` are required; the rest are optional.  Text is the title,
    or ``title + ". " + abstract`` when an abstract is present, so the
    tokenizer treats title and abstract as separate sentences.
    """
    path = Path(path)
    for role in ("id", "title"):
        if role not in column_spec:
            raise ParameterError(f"column_spec must map the {role!r} role")
    with open(path, encoding="utf-8-sig", newline="") as f:
        reader = csv.reader(f, delimiter="\t", quoting=csv.QUOTE_NONE)
        try:
            header = next(reader)
        except StopIteration:
            raise FormatError(f"{path}: empty file") from None
        col_index: dict[str, int] = {}
        for role, name in column_spec.items():
            if name not in header:
                raise FormatError(
                    f"{path}: mapped column {name!r} (role {role!r}) "
                    "not found in header"
                )
            col_index[role] = header.index(name)

        docs: list[Document] = []
        ids_seen: set[str] = set()
        dups: list[str] = []
        for row_no, row in enumerate(reader, start=2):
            if not any(cell.strip() for cell in row):
                continue
            if len(row) < len(header):
                row = row + [""] * (len(header) - len(row))

            def cell(role: str) -> str:
                idx = col_index.get(role)
                return row[idx].strip() if idx is not None else ""

            doc_id = cell("id")
            if not doc_id:
                raise ValidationError(f"row {row_no}: empty id")
            if doc_id in ids_seen:
                dups.append(doc_id)
            ids_seen.add(doc_id)

            title = cell("title")
            abstract = cell("abstract")
            text = f"{title}. {abstract}" if abstract else title
            if not text.strip():
                raise ValidationError(f"row {row_no}: document {doc_id!r} has no text")

            score: float | None = None
            raw_score = cell("score")
            if raw_score:
                try:
                    score = float(raw_score)
                except ValueError:
                    raise ValidationError(
                        f"row {row_no}: cannot parse score {raw_score!r}"
                    ) from None
                if not math.isfinite(score) or score < 0:
                    raise ValidationError(
                        f"row {row_no}: score {raw_score!r} must be finite and >= 0"
                    )

            in_subset: bool | None = None
            raw_subset = cell("subset")
            if raw_subset:
                in_subset = _parse_bool(raw_subset, row_no)

            docs.append(Document(id=doc_id, text=text, score=score, in_subset=in_subset))

    if dups:
        raise ValidationError(
            "duplicate document ids: " + ", ".join(sorted(set(dups)))
        )
    if not docs:
        raise EmptyCorpusError(f"{path}: no data rows")
    return Corpus(tuple(docs))


_PARAGRAPH_SPLIT = re.compile(r"\n\s*\n")


def _split_units(text: str, split_mode: str) -> list[str]:
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    if split_mode == "whole_file":
        units = [text]
    elif split_mode == "paragraph":
        units = _PARAGRAPH_SPLIT.split(text)
    elif split_mode == "line":
        units = text.split("\n")
    else:
        raise ParameterError(
            f"split_mode must be one of {SPLIT_MODES}, got {split_mode!r}"
        )
    return [u.strip() for u in units if u.strip()]


def load_plaintext(path: str | Path, split_mode: str = "paragraph") -> Corpus:
    """Load a plain-text file, or a directory of ``.txt`` files, into a Corpus.

    ``paragraph`` mode splits on one or more blank lines; each non-empty
    unit becomes a document with id ``<filename>#<ordinal>``.
    """
    path = Path(path)
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.suffix == ".txt")
        if not files:
            raise EmptyCorpusError(f"{path}: no .txt files")
    else:
        files = [path]

    docs: list[Document] = []
    for fp in files:
        text = fp.read_text(encoding="utf-8-sig")
        for ordinal, unit in enumerate(_split_units(text, split_mode), start=1):
            docs.append(Document(id=f"{fp.name}#{ordinal}", text=unit))
    if not docs:
        raise EmptyCorpusError(
            f"{path}: no non-empty units with split_mode={split_mode!r}"
        )
    return Corpus(tuple(docs))
