"""
Noun phrase extraction
======================

Walks through the linguistic side of the pipeline: sentence splitting,
part-of-speech tagging, the adjective/noun filter, and plural
normalization.
"""
from termmap import chunk, extract_phrases, singularize, tag, tokenize

TEXT = ("We present an interesting result on text mining. "
        "The method has many degrees of freedom, and it is used in a "
        "highly cited publication about impact factors.")

print("input:", TEXT)
print()

###############################################################################
# Tokenization: sentences are split at sentence-final punctuation followed by
# an uppercase letter, with an abbreviation exception list; hyphenated words
# stay single tokens.

sentences = tokenize(TEXT)
for i, sent in enumerate(sentences):
    print(f"sentence {i}: {sent}")
print()

###############################################################################
# Tagging: every token gets one tag from a fixed 11-tag set.

tagged = tag(sentences)
print("tagged:")
for t in tagged:
    print(f"  {t.surface:<14} {t.tag}")
print()

###############################################################################
# Chunking: maximal runs of adjectives/nouns that end with a noun.  Note what
# does NOT come out: "degrees of freedom" (broken by the preposition) and
# "highly cited publication" (adverb and participle are not allowed inside).
# Nested sub-phrases ending at the same head noun are emitted too.

for p in chunk(tagged):
    print(f"  phrase: {p.normalized!r}  ({p.word_count} words)")
print()

###############################################################################
# Plural normalization touches only the head noun.

for words in (["impact", "factors"], ["queries"], ["analyses"],
              ["systems", "theory"], ["species"]):
    print(f"  {' '.join(words):<22} -> {singularize(words).normalized}")
print()

###############################################################################
# The one-call convenience wrapper.

print("extract_phrases:", [p.normalized for p in extract_phrases(TEXT)])
