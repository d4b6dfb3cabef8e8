"""Ordered corpus indexes.

Two indexes are kept, both ordered so they can be dumped and compared
deterministically: the set of words seen with a lower-case initial inside a
sentence, and a per-capitalized-word record of article use and preceding
words.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from sortedcontainers import SortedDict, SortedSet

from .corpus import WORD, Corpus, is_capitalized

ARTICLES = frozenset({"der", "die", "das", "des", "dem", "den",
                      "ein", "eine", "einer", "eines", "einem", "einen"})


class LowercaseIndex:
    def __init__(self, words=()):
        self.words = SortedSet(words)

    def __contains__(self, word) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def add(self, word: str) -> None:
        self.words.add(word)


def build_lowercase_index(corpus: Corpus, known=()) -> LowercaseIndex:
    """Collect every word seen with a lower-case initial at a non-initial position.

    ``known`` adds closed-class words that are lower case whether or not the
    corpus happens to show them mid-sentence.
    """
    index = LowercaseIndex(known)
    for tok in corpus.tokens():
        if tok.kind == WORD and not tok.sentence_initial and tok.surface[0].islower():
            index.add(tok.surface)
    return index


@dataclass
class CapWordEntry:
    word: str
    article_count: int = 0
    occurrences: int = 0
    preceding: list[str] = field(default_factory=list)

    def distinct_contexts(self) -> int:
        return len(set(self.preceding))


class CapIndex:
    def __init__(self):
        self.entries: SortedDict = SortedDict()

    def __contains__(self, word) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, word) -> CapWordEntry:
        return self.entries[word]

    def get(self, word):
        return self.entries.get(word)

    def values(self):
        return self.entries.values()

    def article_count(self, word: str) -> int:
        entry = self.entries.get(word)
        return entry.article_count if entry else 0

    def preceding_contexts(self, word: str) -> list[str]:
        entry = self.entries.get(word)
        return list(entry.preceding) if entry else []

    def to_tsv(self) -> str:
        return "".join(f"{e.word}\t{e.article_count}\t{';'.join(e.preceding)}\n"
                       for e in self.entries.values())


def build_cap_index(corpus: Corpus, prepositions, articles=ARTICLES) -> CapIndex:
    """Record, per capitalized word, article use and capitalized/prepositional predecessors.

    The predecessor is the previous token of the same document, so a
    document's first token has none.
    """
    index = CapIndex()
    entries = index.entries
    for doc in corpus.documents:
        prev = None
        for tok in doc.tokens():
            if is_capitalized(tok):
                word = tok.normalized
                entry = entries.get(word)
                if entry is None:
                    entry = entries[word] = CapWordEntry(word)
                entry.occurrences += 1
                if prev is not None:
                    if prev.normalized in articles:
                        entry.article_count += 1
                    if is_capitalized(prev) or prev.normalized in prepositions:
                        entry.preceding.append(prev.normalized)
            prev = tok
    return index


def article_count(index: CapIndex, word: str) -> int:
    return index.article_count(word)


def preceding_contexts(index: CapIndex, word: str) -> list[str]:
    return index.preceding_contexts(word)
