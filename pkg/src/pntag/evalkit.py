"""Token-level scoring against a hand-tagged gold file, and the unresolved report."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .morphology import strip_genitive

TAGS = ("NE", "O")


class AlignmentError(ValueError):
    pass


class TaggedToken(NamedTuple):
    surface: str
    tag: str
    line: int | None = None


@dataclass(frozen=True)
class EvalCounts:
    gold_pn_tokens: int
    missed: int
    wrong: int

    def __post_init__(self):
        if min(self.gold_pn_tokens, self.missed, self.wrong) < 0:
            raise ValueError("counts must be non-negative")
        if self.missed > self.gold_pn_tokens:
            raise ValueError("missed cannot exceed the number of gold names")

    @property
    def found(self) -> int:
        return self.gold_pn_tokens - self.missed

    @property
    def system_pn_tokens(self) -> int:
        return self.found + self.wrong


def read_tagged(lines: Iterable[str]) -> list[TaggedToken]:
    """Parse ``surface<TAB>tag`` lines; blank lines (sentence breaks) are skipped."""
    out = []
    for lineno, line in enumerate(lines, 1):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2 or parts[1] not in TAGS:
            raise ValueError(f"line {lineno}: expected surface<TAB>NE|O, got {line!r}")
        out.append(TaggedToken(parts[0], parts[1], lineno))
    return out


def _flat(stream) -> list[TaggedToken]:
    flat = []
    for item in stream:
        if isinstance(item, list) or (item and isinstance(item[0], tuple)):
            flat.extend(TaggedToken(*t) for t in item)
        else:
            flat.append(TaggedToken(*item))
    return flat


def _where(tok: TaggedToken | None, pos: int) -> str:
    if tok is None:
        return "end of input"
    if tok.line is not None:
        return f"line {tok.line} ({tok.surface!r})"
    return f"token {pos + 1} ({tok.surface!r})"


def compare_gold(tagged: Sequence, gold: Sequence) -> EvalCounts:
    """Count gold names, missed names and wrongly tagged words.

    Both streams must list the same surfaces in the same order; they may be
    flat or grouped by sentence.
    """
    system, reference = _flat(tagged), _flat(gold)
    for pos in range(max(len(system), len(reference))):
        s = system[pos] if pos < len(system) else None
        g = reference[pos] if pos < len(reference) else None
        if s is None or g is None or s.surface != g.surface:
            raise AlignmentError(
                f"token mismatch at token {pos + 1}: system {_where(s, pos)}, gold {_where(g, pos)}")
    gold_ne = missed = wrong = 0
    for s, g in zip(system, reference):
        if g.tag == "NE":
            gold_ne += 1
            missed += s.tag != "NE"
        elif s.tag == "NE":
            wrong += 1
    return EvalCounts(gold_ne, missed, wrong)


def recognition_rate(c: EvalCounts) -> float:
    """Share of gold name tokens the system tagged (token recall)."""
    if c.gold_pn_tokens == 0:
        raise ValueError("recognition rate undefined without gold proper names")
    return c.found / c.gold_pn_tokens


def precision(c: EvalCounts) -> float:
    if c.system_pn_tokens == 0:
        raise ValueError("precision undefined when nothing was tagged")
    return c.found / c.system_pn_tokens


def _known(word: str, known) -> bool:
    base = strip_genitive(word)
    return word in known or (base is not None and base in known)


def report_unresolved(hypotheses, known=()) -> str:
    """``doc_id<TAB>left right<TAB>count`` per unresolved pair and document.

    Pairs whose right word (or its genitive base) is in ``known`` are left
    out; they are already covered by the lexicon.  Documents keep corpus
    order; within a document, pairs are listed by first occurrence.
    """
    counts: Counter = Counter()
    first = {}
    for h in hypotheses:
        if h.status != "unresolved" or _known(h.right, known):
            continue
        for occ in h.occurrences:
            key = (occ.doc_id, h.left, h.right)
            counts[key] += 1
            if key not in first or occ.position < first[key]:
                first[key] = occ.position
    keys = sorted(counts, key=lambda k: first[k])
    return "".join(f"{doc}\t{left} {right}\t{counts[(doc, left, right)]}\n"
                   for doc, left, right in keys)
