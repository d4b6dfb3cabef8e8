"""Tokenization, sentence segmentation and sentence-initial case handling.

A :class:`Corpus` is built in two steps.  :meth:`Corpus.from_texts` tokenizes
and segments the raw documents; :meth:`Corpus.normalized` then rewrites the
first word of every sentence to lower case when that word is also seen in
lower case somewhere inside a sentence.
"""
from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Sequence

WORD = "word"
PUNCTUATION = "punctuation"
NUMBER = "number"

# Characters that always form a token of their own.
SPLIT_CHARS = ".,;:!?\"'()[]—„“”«»‘’‚"
QUOTE_MARKS = frozenset('"„“”«»')
SENTENCE_FINAL = (".", "!", "?")
DEFAULT_ABBREVIATIONS = frozenset({"Dr.", "Prof."})

_piece_re = re.compile("[%s]|[^%s]+" % (re.escape(SPLIT_CHARS), re.escape(SPLIT_CHARS)))
_double_hyphen_re = re.compile(r"(?<=\w)-{2,}(?=\w)")


def _is_punct_char(ch: str) -> bool:
    return unicodedata.category(ch)[0] in "PS"


def classify(surface: str) -> str:
    if surface[0].isalpha():
        return WORD
    if all(_is_punct_char(ch) for ch in surface):
        return PUNCTUATION
    return NUMBER


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str = ""
    kind: str = WORD
    sentence_initial: bool = False

    def __post_init__(self):
        if not self.normalized:
            object.__setattr__(self, "normalized", self.surface)

    def __str__(self):
        return self.surface


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]


@dataclass(frozen=True)
class Document:
    doc_id: str
    sentences: tuple[Sentence, ...]

    def tokens(self) -> Iterator[Token]:
        for sentence in self.sentences:
            yield from sentence


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...] = ()
    _vocab: frozenset = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        ids = [d.doc_id for d in self.documents]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate document ids: {', '.join(dupes)}")

    @classmethod
    def from_texts(cls, texts: Iterable[tuple[str, str]],
                   abbreviations: Iterable[str] = DEFAULT_ABBREVIATIONS,
                   boundaries: Sequence[str] = SENTENCE_FINAL) -> "Corpus":
        """Tokenize and segment ``(doc_id, text)`` pairs, keeping input order."""
        abbreviations = frozenset(abbreviations)
        docs = []
        for doc_id, text in texts:
            tokens = tokenize(text, abbreviations)
            docs.append(Document(doc_id, tuple(segment_sentences(tokens, boundaries))))
        return cls(tuple(docs))

    def normalized(self, lowercase_index) -> "Corpus":
        """Return a copy whose sentence-initial words are case-disambiguated."""
        docs = []
        for doc in self.documents:
            sentences = []
            for sentence in doc.sentences:
                toks = tuple(
                    replace(t, normalized=normalize_initial(t.surface, lowercase_index))
                    if t.sentence_initial else t
                    for t in sentence)
                sentences.append(Sentence(toks))
            docs.append(Document(doc.doc_id, tuple(sentences)))
        return Corpus(tuple(docs))

    def tokens(self) -> Iterator[Token]:
        for doc in self.documents:
            yield from doc.tokens()

    def __len__(self) -> int:
        return sum(1 for _ in self.tokens())

    def vocabulary(self) -> frozenset:
        """Normalized surfaces of all word tokens."""
        if self._vocab is None:
            vocab = frozenset(t.normalized for t in self.tokens() if t.kind == WORD)
            object.__setattr__(self, "_vocab", vocab)
        return self._vocab


def tokenize(raw: str, abbreviations: Iterable[str] = DEFAULT_ABBREVIATIONS) -> list[Token]:
    """Split ``raw`` on whitespace and detach punctuation marks.

    A period stays attached when the word plus period is a known
    abbreviation, so ``"Prof. Maier kam."`` yields ``Prof.``, ``Maier``,
    ``kam``, ``.``.
    """
    if not isinstance(abbreviations, (set, frozenset)):
        abbreviations = frozenset(abbreviations)
    tokens = []
    for chunk in raw.split():
        chunk = _double_hyphen_re.sub("-", chunk)
        pieces = _piece_re.findall(chunk)
        i = 0
        while i < len(pieces):
            piece = pieces[i]
            if (i + 1 < len(pieces) and pieces[i + 1] == "."
                    and piece + "." in abbreviations):
                piece += "."
                i += 1
            tokens.append(Token(piece, kind=classify(piece)))
            i += 1
    return tokens


def segment_sentences(tokens: Sequence[Token],
                      boundaries: Sequence[str] = SENTENCE_FINAL) -> list[Sentence]:
    sentences = []
    current: list[Token] = []
    seen_word = False
    for tok in tokens:
        if tok.kind == WORD and not seen_word:
            tok = replace(tok, sentence_initial=True)
            seen_word = True
        current.append(tok)
        if tok.surface in boundaries:
            sentences.append(Sentence(tuple(current)))
            current, seen_word = [], False
    if current:
        sentences.append(Sentence(tuple(current)))
    return sentences


def lowercase_rendering(word: str) -> str:
    return word[:1].lower() + word[1:]


def normalize_initial(word: str, lowercase_index) -> str:
    """Lower-case a sentence-initial word if it also occurs in lower case."""
    lowered = lowercase_rendering(word)
    if lowered != word and lowered in lowercase_index:
        return lowered
    return word


def is_uppercase_initial(word: str) -> bool:
    return bool(word) and unicodedata.category(word[0]) in ("Lu", "Lt")


def is_capitalized(token: Token) -> bool:
    return (token.kind == WORD and len(token.normalized) >= 2
            and is_uppercase_initial(token.normalized))
