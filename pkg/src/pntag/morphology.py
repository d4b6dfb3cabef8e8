"""Suffix and prefix heuristics over German word forms.

Nothing here knows about a real German paradigm: every test either matches
a short affix list or strips an ending and looks the remainder up in the
corpus vocabulary.
"""
from __future__ import annotations

import configparser
from dataclasses import dataclass, fields
from typing import TextIO

MIN_STEM = 3
MIN_COMPOUND_HEAD = 4


@dataclass(frozen=True)
class AffixConfig:
    onomastic_suffixes: tuple[str, ...] = (
        "acker", "aich", "beuren", "hafen", "hausen", "stetten", "weiler",
        "ingen", "dorf")
    place_prefixes: tuple[str, ...] = ("mittel", "ost", "west", "zentral")
    adjectival_endings: tuple[str, ...] = ("aner", "er")
    impossible_pn_endings: tuple[str, ...] = ("en", "n", "e", "er")
    participle_prefixes: tuple[str, ...] = (
        "an", "auf", "aus", "be", "ein", "mit", "nach", "ver", "vor", "zer", "zu")

    def __post_init__(self):
        for f in fields(self):
            values = getattr(self, f.name)
            if any(not v or v != v.lower() for v in values):
                raise ValueError(f"{f.name}: affixes must be non-empty and lowercase")
        if not {"er", "aner"} <= set(self.adjectival_endings):
            raise ValueError("adjectival_endings must include 'er' and 'aner'")


DEFAULT_AFFIXES = AffixConfig()


def load_affix_config(source: TextIO) -> AffixConfig:
    """Read an INI file with one section per affix list and one affix per line.

    Sections that are absent keep their defaults.
    """
    parser = configparser.ConfigParser(allow_no_value=True, strict=False,
                                       delimiters=("\t",), comment_prefixes=("#", ";"))
    parser.optionxform = str
    parser.read_file(source)
    known = {f.name for f in fields(AffixConfig)}
    values = {}
    for section in parser.sections():
        if section not in known:
            raise ValueError(f"unknown affix section [{section}]")
        values[section] = tuple(k.strip().strip("-") for k in parser[section])
    return AffixConfig(**values)


def strip_genitive(word: str) -> str | None:
    """``Frankreichs`` -> ``Frankreich``; None when there is no -s to strip."""
    if word.endswith("s") and len(word) - 1 >= MIN_STEM:
        return word[:-1]
    return None


def impossible_pn_inflection(word: str, corpus_vocab, affixes: AffixConfig = DEFAULT_AFFIXES) -> bool:
    # True means the word is an inflected common noun whose base form is attested.
    for ending in affixes.impossible_pn_endings:
        if word.endswith(ending):
            rest = word[:-len(ending)]
            if len(rest) >= MIN_STEM and rest in corpus_vocab:
                return True
    return False


def has_onomastic_affix(word: str, affixes: AffixConfig = DEFAULT_AFFIXES) -> bool:
    low = word.lower()
    for suffix in affixes.onomastic_suffixes:
        if low.endswith(suffix) and len(low) - len(suffix) >= 2:
            return True
    for prefix in affixes.place_prefixes:
        if low.startswith(prefix) and len(low[len(prefix):].lstrip("-")) >= MIN_STEM:
            return True
    return False


def adjectival_base(word: str, corpus_vocab, affixes: AffixConfig = DEFAULT_AFFIXES) -> str | None:
    """``Mainzer`` -> ``Mainz`` if ``Mainz`` occurs in the corpus."""
    for ending in sorted(affixes.adjectival_endings, key=len, reverse=True):
        if word.endswith(ending):
            rest = word[:-len(ending)]
            if len(rest) >= MIN_STEM and rest in corpus_vocab:
                return rest
    return None


def is_past_participle(word: str, affixes: AffixConfig = DEFAULT_AFFIXES) -> bool:
    if not (word.endswith("t") or word.endswith("en")):
        return False
    if word.startswith("ge"):
        return True
    return any(word.startswith(p + "ge") for p in affixes.participle_prefixes)


def matches_mcpot_derived(word: str, mcpot) -> str | None:
    """Return the potential context ``word`` is, or ends with as a compound head.

    ``Senatspräsident`` matches ``Präsident``.  Heads shorter than four
    letters are ignored; the longest head wins.
    """
    if word in mcpot:
        return word
    if hasattr(mcpot, "lowered"):
        lowered = mcpot.lowered()
    else:
        lowered = {}
        for s in mcpot:
            lowered.setdefault(s.lower(), s)
    low = word.lower()
    for start in range(1, len(low) - MIN_COMPOUND_HEAD + 1):
        hit = lowered.get(low[start:])
        if hit is not None:
            return hit
    return None
