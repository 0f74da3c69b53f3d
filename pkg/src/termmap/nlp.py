"""Noun-phrase extraction: tokenization, part-of-speech tagging, chunking,
and plural-to-singular normalization.

The extraction rule: a candidate noun phrase is a maximal word sequence
consisting only of adjectives and nouns that ends with a noun.  Sequences
are found per sentence, never across sentence boundaries, and the head
(final) noun is normalized to its singular form.

The tagger is deliberately compact.  It resolves tokens in this order:
closed-class lexicon, open-class lexicon (shipped as a data file), suffix
heuristics, capitalized-mid-sentence -> proper noun, default -> noun.
The chunker only needs a reliable noun/adjective-vs-other split, so this
is enough; accuracy is gated by the test suite against an annotated
sample.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

# Fixed tag set.
NOUN = "noun"
PROPER_NOUN = "proper-noun"
ADJECTIVE = "adjective"
VERB = "verb"
DETERMINER = "determiner"
PREPOSITION = "preposition"
ADVERB = "adverb"
PRONOUN = "pronoun"
NUMBER = "number"
PUNCTUATION = "punctuation"
OTHER = "other"

TAG_SET = frozenset({
    NOUN, PROPER_NOUN, ADJECTIVE, VERB, DETERMINER, PREPOSITION,
    ADVERB, PRONOUN, NUMBER, PUNCTUATION, OTHER,
})

NOUN_TAGS = frozenset({NOUN, PROPER_NOUN})
CHUNKABLE_TAGS = frozenset({NOUN, PROPER_NOUN, ADJECTIVE})

MAX_PHRASE_WORDS = 6


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    lower: str
    tag: str
    sentence_index: int


@dataclass(frozen=True)
class NounPhrase:
    normalized: str
    word_count: int


# ---------------------------------------------------------------------------
# Tokenization

# Words before a period that do not end a sentence.
ABBREVIATIONS = {
    "e.g", "i.e", "etc", "cf", "vs", "al", "resp", "ca", "approx",
    "fig", "figs", "eq", "eqs", "sec", "secs", "ref", "refs", "no", "nos",
    "vol", "vols", "pp", "p", "ed", "eds", "rev",
    "dr", "prof", "mr", "mrs", "ms", "jr", "sr", "st",
    "inc", "ltd", "co", "dept", "univ",
}

_SENT_END = re.compile(r"[.!?]+")

_TOKEN = re.compile(
    r"[^\W\d_](?:\.[^\W\d_])+\.?"          # dotted abbreviations: e.g., U.S.
    r"|\d+(?:[.,]\d+)*[^\W\d_]*"           # numbers: 3.14, 10,000, 1990s
    r"|[^\W\d_](?:[\w'’]|-(?=\w))*"   # words, hyphens and apostrophes kept
    r"|\S",                                # anything else, one char at a time
    re.UNICODE,
)

_NUMBER_TOKEN = re.compile(r"\d+(?:[.,]\d+)*[^\W\d_]*\Z", re.UNICODE)
_HAS_WORD_CHAR = re.compile(r"\w", re.UNICODE)


def _sentence_texts(text: str) -> list[str]:
    """Split text into sentences.

    A sentence ends at . ! or ? followed by whitespace and an uppercase
    letter (or the end of the input), unless the preceding word is a known
    abbreviation or a single letter (an initial).
    """
    cuts = []
    for m in _SENT_END.finditer(text):
        rest = text[m.end():]
        stripped = rest.lstrip()
        if stripped:
            if not rest[0].isspace() or not stripped[0].isupper():
                continue
        if "." in m.group():
            before = re.search(r"(\S+)\Z", text[: m.start()])
            if before:
                w = before.group(1).lstrip("([{\"'“‘").lower()
                dotted = "." in w and any(c.isalpha() for c in w)
                if w in ABBREVIATIONS or dotted or (len(w) == 1 and w.isalpha()):
                    continue
        cuts.append(m.end())
    pieces = []
    prev = 0
    for c in cuts:
        pieces.append(text[prev:c])
        prev = c
    pieces.append(text[prev:])
    return [p.strip() for p in pieces if p.strip()]


def tokenize(text: str) -> list[list[str]]:
    """Split text into sentences of raw tokens.

    Hyphenated words stay single tokens; punctuation marks are tokens of
    their own.  Returns a list of sentences, each a list of token strings.
    """
    sentences = (_TOKEN.findall(s) for s in _sentence_texts(text))
    return [toks for toks in sentences if toks]


# ---------------------------------------------------------------------------
# Tagging

_CLOSED_CLASS: dict[str, str] = {}


def _add_closed(tag: str, words: str) -> None:
    for w in words.split():
        _CLOSED_CLASS[w] = tag


_add_closed(DETERMINER, """
    the a an this that these those each every either neither some any no all
    both another such my your his its our their her
""")
_add_closed(PREPOSITION, """
    of in on at by for with from to into onto over under between among amongst
    through during without within across against along around behind below
    beneath beside besides beyond despite down except inside near off outside
    past per since toward towards until up upon via about above after before
    amid unto versus vs as
""")
_add_closed(PRONOUN, """
    i you he it we they me him us them myself yourself himself herself itself
    ourselves yourselves themselves who whom whose which what she
    anyone everyone someone nobody everybody anybody everything something
    anything nothing
""")
_add_closed(OTHER, """
    and or but nor so yet if because although though whereas unless whether
    while when whenever where wherever why how than et al
""")
_add_closed(VERB, """
    be am is are was were been being have has had having do does did done
    doing can could may might must shall should will would cannot
    don't doesn't didn't can't won't wouldn't couldn't shouldn't isn't aren't
    wasn't weren't hasn't haven't hadn't
""")
_add_closed(ADVERB, """
    not also very only however thus therefore moreover furthermore
    nevertheless nonetheless often always never usually sometimes seldom more
    most less least well then too just even still already again once twice
    perhaps instead otherwise indeed hence thereby meanwhile together soon
    ever almost quite rather somewhat here there now later maybe
""")
_add_closed(NUMBER, """
    zero one two three four five six seven eight nine ten eleven twelve
    thirteen fourteen fifteen sixteen seventeen eighteen nineteen twenty
    thirty forty fifty sixty seventy eighty ninety hundred thousand million
    billion
""")

_ADJ_SUFFIXES = ("ous", "ive", "able", "ible", "al", "ic", "less", "ful")

# Hyphenated compounds with these heads are modifiers ("frequency-based",
# "data-driven"), unlike hyphenated nouns ("co-occurrence", "h-index").
_COMPOUND_ADJ_HEADS = ("based", "driven", "oriented", "aware", "free",
                       "specific", "dependent", "independent", "wise")


class TaggerModel:
    """Immutable lexicons for tagging and singularization."""

    def __init__(self, lexicon: dict[str, str], irregular: dict[str, str],
                 invariant: set[str]):
        for word, tag in lexicon.items():
            if tag not in TAG_SET:
                raise ValueError(f"lexicon entry {word!r} has unknown tag {tag!r}")
        self.lexicon = dict(lexicon)
        self.irregular = dict(irregular)
        # Singular forms produced by the irregular table must be fixed points.
        self.invariant = set(invariant) | set(irregular.values())


def _read_data_file(name: str) -> list[list[str]]:
    rows = []
    path = resources.files("termmap").joinpath("data").joinpath(name)
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line:
            rows.append(line.split("\t"))
    return rows


@lru_cache(maxsize=1)
def default_model() -> TaggerModel:
    lexicon = {w: t for w, t in _read_data_file("lexicon.tsv")}
    irregular = {p: s for p, s in _read_data_file("plural_irregular.tsv")}
    invariant = {row[0] for row in _read_data_file("singular_invariant.tsv")}
    return TaggerModel(lexicon, irregular, invariant)


def _tag_word(surface: str, lower: str, sentence_initial: bool,
              model: TaggerModel) -> str:
    if not _HAS_WORD_CHAR.search(surface):
        return PUNCTUATION
    if _NUMBER_TOKEN.fullmatch(surface):
        return NUMBER
    tag = _CLOSED_CLASS.get(lower)
    if tag is not None:
        return tag
    tag = model.lexicon.get(lower)
    if tag is not None:
        return tag
    if "-" in lower and lower.rsplit("-", 1)[-1] in _COMPOUND_ADJ_HEADS:
        return ADJECTIVE
    if lower.endswith("ly") and len(lower) > 3:
        return ADVERB
    if (lower.endswith("ing") and len(lower) > 4) or \
       (lower.endswith("ed") and len(lower) > 3):
        return VERB
    for suf in _ADJ_SUFFIXES:
        if lower.endswith(suf) and len(lower) > len(suf) + 1:
            return ADJECTIVE
    if surface[:1].isupper() and not sentence_initial:
        return PROPER_NOUN
    return NOUN


def tag(sentences: list[list[str]], model: TaggerModel | None = None) -> list[TaggedToken]:
    """Assign one tag from the fixed tag set to every token."""
    model = model or default_model()
    out = []
    for s_idx, sentence in enumerate(sentences):
        for t_idx, tok in enumerate(sentence):
            lower = tok.lower()
            out.append(TaggedToken(
                surface=tok,
                lower=lower,
                tag=_tag_word(tok, lower, t_idx == 0, model),
                sentence_index=s_idx,
            ))
    return out


# ---------------------------------------------------------------------------
# Singularization

_ES_DROP_SUFFIXES = ("sses", "xes", "zzes", "ches", "shes")


def _singular_head(word: str, model: TaggerModel) -> str:
    # Iterate to a fixed point so the operation is idempotent even for
    # inputs whose first reduction lands on another reducible form.
    for _ in range(4):
        new = _singular_step(word, model)
        if new == word:
            return word
        word = new
    return word


def _singular_step(w: str, model: TaggerModel) -> str:
    if w in model.invariant:
        return w
    if w in model.irregular:
        return model.irregular[w]
    if w.endswith("ies") and len(w) >= 5:
        return w[:-3] + "y"
    for suf in _ES_DROP_SUFFIXES:
        if w.endswith(suf) and len(w) > len(suf):
            return w[:-2]
    if w.endswith("s") and len(w) >= 3 and not w.endswith(("ss", "us", "is")):
        return w[:-1]
    return w


def singularize(words, model: TaggerModel | None = None) -> NounPhrase:
    """Build a normalized NounPhrase: lowercased, head noun singularized.

    Only the final word is touched; modifier plurals ("systems theory")
    are often lexicalized and stay as written.
    """
    model = model or default_model()
    lowered = [w.lower() for w in words]
    if not lowered:
        raise ValueError("cannot singularize an empty word sequence")
    lowered[-1] = _singular_head(lowered[-1], model)
    return NounPhrase(normalized=" ".join(lowered), word_count=len(lowered))


# ---------------------------------------------------------------------------
# Chunking

def _strip_possessive(word: str) -> str:
    if word.endswith(("'s", "’s")):
        return word[:-2]
    return word


def chunk(tagged: list[TaggedToken], model: TaggerModel | None = None,
          max_words: int = MAX_PHRASE_WORDS) -> list[NounPhrase]:
    """Extract noun-phrase occurrences from a tagged token sequence.

    Within each sentence, every maximal run of adjectives/nouns is trimmed
    to end at its last noun.  From that span the full sequence and every
    suffix starting at a word boundary are emitted, so nested sub-phrases
    ("text mining" inside "full text mining pipeline") are counted too.
    Spans longer than ``max_words`` are discarded as tagger noise.
    """
    model = model or default_model()
    phrases: list[NounPhrase] = []
    n = len(tagged)
    i = 0
    while i < n:
        t = tagged[i]
        if t.tag not in CHUNKABLE_TAGS:
            i += 1
            continue
        j = i
        while j < n and tagged[j].tag in CHUNKABLE_TAGS \
                and tagged[j].sentence_index == t.sentence_index:
            j += 1
        run = tagged[i:j]
        last_noun = None
        for k, tok in enumerate(run):
            if tok.tag in NOUN_TAGS:
                last_noun = k
        if last_noun is not None:
            words = [_strip_possessive(tok.lower) for tok in run[: last_noun + 1]]
            words = [w for w in words if w]
            for start in range(len(words)):
                sub = words[start:]
                if len(sub) <= max_words:
                    phrases.append(singularize(sub, model))
        i = j
    return phrases


def extract_phrases(text: str, model: TaggerModel | None = None) -> list[NounPhrase]:
    """Run the full pipeline on one text: tokenize, tag, chunk."""
    model = model or default_model()
    return chunk(tag(tokenize(text), model), model)


def phrases_per_document(corpus, model: TaggerModel | None = None) -> dict[str, list[str]]:
    """Map each document id to the sorted set of its normalized phrases."""
    model = model or default_model()
    return {
        doc.id: sorted({p.normalized for p in extract_phrases(doc.text, model)})
        for doc in corpus
    }
