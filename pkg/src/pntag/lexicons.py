"""Growing word stores: minimal contexts, potential contexts, proper names.

All lexicons share one line format::

    surface<TAB>category[<TAB>frame_second]

Blank lines and lines starting with ``#`` are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

# minimal-context categories
TITLE = "title"
ADDRESS_FORM = "address_form"
APPOSITION_NOUN = "apposition_noun"
SPEECH_VERB = "speech_verb"
PREPOSITION = "preposition"
PREPOSITION_FRAME = "preposition_frame"
MC_CATEGORIES = frozenset({TITLE, ADDRESS_FORM, APPOSITION_NOUN, SPEECH_VERB,
                           PREPOSITION, PREPOSITION_FRAME})
PERSON_CONTEXTS = frozenset({TITLE, ADDRESS_FORM, APPOSITION_NOUN})

# proper-name subkinds
PERSON = "person"
PLACE = "place"
UNKNOWN = "unknown"
PN_CATEGORIES = frozenset({PERSON, PLACE, UNKNOWN})

MCPOT = "mcpot"
MCPOT_CATEGORIES = frozenset({MCPOT})

MONTH = "month"
QUANTITY = "quantity"
STOP_CATEGORIES = frozenset({MONTH, QUANTITY})

SEED = "seed"
HARVESTED = "harvested"


class LexiconError(ValueError):
    pass


@dataclass
class Entry:
    category: str
    frame_second: str | None = None
    origin: str = SEED
    first_seen_doc: str | None = None
    evidence: list[tuple[str, str]] = field(default_factory=list)


class Lexicon:
    """Insertion-ordered map from surface form to :class:`Entry`.

    Adding an existing surface is a no-op, so the size of a lexicon always
    equals the number of successful :meth:`add` calls.
    """

    def __init__(self, categories: Iterable[str] | None = None, name: str = ""):
        self.categories = frozenset(categories) if categories is not None else None
        self.name = name
        self._entries: dict[str, Entry] = {}
        self._lowered: dict[str, str] | None = None

    def __contains__(self, surface) -> bool:
        return surface in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __getitem__(self, surface: str) -> Entry:
        return self._entries[surface]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._signature() == other._signature()

    def __repr__(self):
        return f"Lexicon({self.name!r}, {len(self)} entries)"

    def _signature(self):
        return {s: (e.category, e.frame_second) for s, e in self._entries.items()}

    def get(self, surface: str, default=None):
        return self._entries.get(surface, default)

    def items(self):
        return self._entries.items()

    def with_category(self, *categories: str) -> list[str]:
        return [s for s, e in self._entries.items() if e.category in categories]

    def add(self, surface: str, category: str, *, frame_second: str | None = None,
            origin: str = HARVESTED, doc_id: str | None = None,
            rule: str | None = None) -> bool:
        """Add ``surface``; return True iff it was not present before."""
        if not surface or any(ch.isspace() for ch in surface):
            raise LexiconError(f"invalid surface {surface!r}")
        if self.categories is not None and category not in self.categories:
            raise LexiconError(f"unknown category {category!r} for {surface!r}")
        if (category == PREPOSITION_FRAME) != (frame_second is not None):
            raise LexiconError(f"frame slot given inconsistently for {surface!r}")
        if surface in self._entries:
            return False
        entry = Entry(category, frame_second, origin, doc_id)
        if rule is not None:
            entry.evidence.append((rule, doc_id or ""))
        self._entries[surface] = entry
        self._lowered = None
        return True

    def lowered(self) -> dict[str, str]:
        """Map lowercased surface -> surface (first inserted wins)."""
        if self._lowered is None:
            low: dict[str, str] = {}
            for s in self._entries:
                low.setdefault(s.lower(), s)
            self._lowered = low
        return self._lowered

    def copy(self) -> "Lexicon":
        new = Lexicon(self.categories, self.name)
        for s, e in self._entries.items():
            new._entries[s] = Entry(e.category, e.frame_second, e.origin,
                                    e.first_seen_doc, list(e.evidence))
        return new


def add_entry(lexicon: Lexicon, surface: str, meta) -> bool:
    """Functional form of :meth:`Lexicon.add`; ``meta`` is a category or a dict."""
    if isinstance(meta, str):
        return lexicon.add(surface, meta)
    return lexicon.add(surface, **meta)


def load_lexicon(source: TextIO | Iterable[str], categories: Iterable[str] | None = None,
                 name: str = "") -> Lexicon:
    lex = Lexicon(categories, name)
    for lineno, line in enumerate(source, 1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        where = f"{name or 'lexicon'} line {lineno}"
        if len(fields) not in (2, 3) or not all(f.strip() for f in fields):
            raise LexiconError(f"{where}: expected surface<TAB>category[<TAB>frame_second]")
        surface, category = fields[0].strip(), fields[1].strip()
        second = fields[2].strip() if len(fields) == 3 else None
        existing = lex.get(surface)
        if existing is not None:
            if (existing.category, existing.frame_second) != (category, second):
                raise LexiconError(f"{where}: {surface!r} already listed as {existing.category}")
            continue
        try:
            lex.add(surface, category, frame_second=second, origin=SEED)
        except LexiconError as e:
            raise LexiconError(f"{where}: {e}") from None
    return lex


def save_lexicon(lexicon: Lexicon) -> str:
    lines = []
    for surface in sorted(lexicon):
        e = lexicon[surface]
        fields = [surface, e.category] + ([e.frame_second] if e.frame_second else [])
        lines.append("\t".join(fields) + "\n")
    return "".join(lines)


def abbreviations(mc: Lexicon) -> frozenset:
    """MC entries ending in a period survive tokenization as one token."""
    return frozenset(s for s in mc if s.endswith(".") and len(s) > 1)


@dataclass
class Lexicons:
    """The stores one tagging run reads and grows."""
    mc: Lexicon
    pn: Lexicon = field(default_factory=lambda: Lexicon(PN_CATEGORIES, "pn"))
    mcpot: Lexicon = field(default_factory=lambda: Lexicon(MCPOT_CATEGORIES, "mcpot"))
    stoplist: Lexicon = field(default_factory=lambda: Lexicon(STOP_CATEGORIES, "stoplist"))

    def copy(self) -> "Lexicons":
        return Lexicons(self.mc.copy(), self.pn.copy(), self.mcpot.copy(), self.stoplist.copy())


def _data_path(name: str):
    from importlib.resources import files
    return files("pntag").joinpath("data", name)


def default_mc_lexicon() -> Lexicon:
    with _data_path("mc_lexicon.tsv").open(encoding="utf-8") as fh:
        return load_lexicon(fh, MC_CATEGORIES, "mc_lexicon.tsv")


def default_stoplist() -> Lexicon:
    with _data_path("stoplist.tsv").open(encoding="utf-8") as fh:
        return load_lexicon(fh, STOP_CATEGORIES, "stoplist.tsv")


def default_lexicons() -> Lexicons:
    return Lexicons(mc=default_mc_lexicon(), stoplist=default_stoplist())
