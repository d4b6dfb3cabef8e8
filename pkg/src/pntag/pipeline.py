"""The proper-name passes and the fixpoint loop that drives them.

Preprocessing tags *definite* names, those directly next to a seed minimal
context.  Each fixpoint iteration then

1. harvests potential contexts (capitalized words in front of known names),
2. derives place names from adjectival forms and onomastic affixes,
3. reads names out of loose appositions,
4. generates adjacency hypotheses and evaluates them rule by rule.

Every pass of an iteration reads the lexicons as they were when the
iteration started; proposals are applied together afterwards, sorted by
corpus position, so the result does not depend on pass order.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .corpus import (QUOTE_MARKS, SENTENCE_FINAL, WORD, Corpus, Token,
                     is_capitalized, is_uppercase_initial)
from .index import ARTICLES, CapIndex, build_cap_index, build_lowercase_index
from .lexicons import (ADDRESS_FORM, APPOSITION_NOUN, MCPOT, PERSON, PLACE,
                       PREPOSITION, PREPOSITION_FRAME, SPEECH_VERB, TITLE, UNKNOWN,
                       Lexicon, Lexicons, abbreviations, default_lexicons)
from .morphology import (DEFAULT_AFFIXES, AffixConfig, adjectival_base,
                         has_onomastic_affix, impossible_pn_inflection,
                         is_past_participle, matches_mcpot_derived,
                         strip_genitive)

log = logging.getLogger(__name__)

CAP_PAIR = "cap_pair"
PREP_CAP = "prep_cap"

PENDING = "pending"
ACCEPTED = "accepted"
REJECTED = "rejected"
UNRESOLVED = "unresolved"

ACCEPT_PN = "accept_pn"
REJECT = "reject"

NE = "NE"
O = "O"

PREPOSITIONS = frozenset("""
    ab an auf aus außer bei bis durch für gegen gegenüber hinter in mit nach
    neben ohne seit trotz über um unter von vor während wegen zu zwischen
    am beim im ins vom zum zur
""".split())
PLACE_PREPOSITIONS = frozenset({"aus", "bei", "in", "nach", "von"})
GENITIVE_ARTICLES = frozenset({"des", "eines"})
APPOSITION_GENITIVES = frozenset({"des", "der", "eines", "einer"})
APPOSITION_CLOSERS = frozenset({",", "("}) | frozenset(SENTENCE_FINAL)

RULES = {
    "a": "left word already a proper name",
    "b": "right word has an inflection impossible for proper names",
    "c": "stop-listed word",
    "d": "left word is a potential context or derived from one",
    "e": "article-free genitive whose base occurs in the corpus",
    "f": "right word is a potential context",
    "g": "followed by a genitive article",
    "h": "followed by a past participle",
    "i": "genitive name before a capitalized noun",
    "j": "no article use and enough distinct capitalized/prepositional contexts",
}


@dataclass(frozen=True)
class PipelineConfig:
    max_iterations: int = 50
    min_evidence: int = 2
    mcpot_window: int = 2
    prepositions: frozenset = PREPOSITIONS
    place_prepositions: frozenset = PLACE_PREPOSITIONS
    articles: frozenset = ARTICLES
    genitive_articles: frozenset = GENITIVE_ARTICLES
    apposition_genitives: frozenset = APPOSITION_GENITIVES
    affixes: AffixConfig = DEFAULT_AFFIXES
    colon_boundary: bool = False

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.min_evidence < 1:
            raise ValueError("min_evidence must be >= 1")


DEFAULT_CONFIG = PipelineConfig()


class Position(NamedTuple):
    doc_index: int
    sentence_no: int
    token_no: int


class Proposal(NamedTuple):
    position: Position
    target: str  # "pn" or "mcpot"
    surface: str
    category: str
    doc_id: str
    rule: str


@dataclass
class Occurrence:
    position: Position
    doc_id: str
    next_token: Token | None
    in_quotes: bool


@dataclass
class Hypothesis:
    kind: str
    left: str
    right: str
    doc_id: str
    sentence_no: int
    status: str = PENDING
    rule_fired: str | None = None
    in_quotes: bool = False
    occurrences: list[Occurrence] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.occurrences)

    @property
    def position(self) -> Position:
        return self.occurrences[0].position


@dataclass(frozen=True)
class Decision:
    outcome: str
    new_pn: str | None = None
    new_mcpots: tuple[str, ...] = ()
    reason: str = ""
    rule: str | None = None

    def __post_init__(self):
        if (self.outcome == ACCEPT_PN) != (self.new_pn is not None):
            raise ValueError("an accepting decision names exactly one new proper name")


@dataclass(frozen=True)
class IterationStats:
    pn_new: int
    mcpot_new: int
    hypotheses_evaluated: int


@dataclass
class FixpointStats:
    iterations: list[IterationStats] = field(default_factory=list)
    warning: str | None = None
    hypotheses: list[Hypothesis] = field(default_factory=list)

    def to_tsv(self) -> str:
        return "".join(f"{n}\t{s.pn_new}\t{s.mcpot_new}\t{s.hypotheses_evaluated}\n"
                       for n, s in enumerate(self.iterations, 1))


# -- helpers -----------------------------------------------------------------

def _sentences(corpus: Corpus) -> Iterator[tuple[int, str, int, tuple[Token, ...]]]:
    for d, doc in enumerate(corpus.documents):
        for s, sentence in enumerate(doc.sentences):
            yield d, doc.doc_id, s, sentence.tokens


def _apply(proposals: Iterable[Proposal], lexicons: Lexicons) -> tuple[int, int]:
    """Add proposals in corpus order; return (new names, new contexts)."""
    pn_new = mcpot_new = 0
    for p in sorted(proposals, key=lambda p: p.position):
        if p.target == "pn":
            if p.surface in lexicons.stoplist or p.surface in lexicons.mc:
                continue
            pn_new += lexicons.pn.add(p.surface, p.category, doc_id=p.doc_id, rule=p.rule)
        else:
            mcpot_new += lexicons.mcpot.add(p.surface, MCPOT, doc_id=p.doc_id, rule=p.rule)
    return pn_new, mcpot_new


def all_prepositions(mc: Lexicon, config: PipelineConfig = DEFAULT_CONFIG) -> frozenset:
    return config.prepositions | frozenset(mc.with_category(PREPOSITION, PREPOSITION_FRAME))


# -- preprocessing -------------------------------------------------------------

def build_corpus(texts: Iterable[tuple[str, str]], mc: Lexicon,
                 config: PipelineConfig = DEFAULT_CONFIG) -> Corpus:
    """Tokenize, segment and case-normalize ``(doc_id, text)`` pairs."""
    boundaries = SENTENCE_FINAL + ((":",) if config.colon_boundary else ())
    raw = Corpus.from_texts(texts, abbreviations(mc), boundaries)
    return raw.normalized(build_lowercase_index(raw, function_words(mc, config)))


def function_words(mc: Lexicon, config: PipelineConfig = DEFAULT_CONFIG) -> frozenset:
    """Articles, prepositions and lower-case MC entries; never capitalized mid-sentence."""
    seeds = {s for s in mc if s[:1].islower()}
    return config.articles | all_prepositions(mc, config) | frozenset(seeds)


def _definite_proposals(corpus: Corpus, mc: Lexicon) -> Iterator[Proposal]:
    person_ctx = set(mc.with_category(TITLE, ADDRESS_FORM, APPOSITION_NOUN))
    speech = set(mc.with_category(SPEECH_VERB))
    place = set(mc.with_category(PREPOSITION))
    frames = {s: mc[s].frame_second for s in mc.with_category(PREPOSITION_FRAME)}
    for d, doc_id, s, toks in _sentences(corpus):
        for i, tok in enumerate(toks):
            if not is_capitalized(tok):
                continue
            prev = toks[i - 1].normalized if i > 0 else None
            prev2 = toks[i - 2].normalized if i > 1 else None
            nxt = toks[i + 1].normalized if i + 1 < len(toks) else None
            if prev in person_ctx:
                kind, rule = PERSON, "mc_context"
            elif nxt in speech:
                kind, rule = PERSON, "mc_speech_verb"
            elif prev in speech and prev2 is not None and prev2.lower() == "so":
                kind, rule = PERSON, "mc_so_speech_verb"
            elif prev in place:
                kind, rule = PLACE, "mc_preposition"
            elif prev2 is not None and frames.get(prev2) == prev:
                kind, rule = PLACE, "mc_frame"
            else:
                continue
            yield Proposal(Position(d, s, i), "pn", tok.normalized, kind, doc_id, rule)


def definite_pn_pass(corpus: Corpus, mc_lexicon: Lexicon, pn_lexicon: Lexicon,
                     stoplist: Lexicon | None = None) -> int:
    """Enter names found directly next to a seed minimal context."""
    lex = Lexicons(mc_lexicon, pn_lexicon, Lexicon(name="unused"),
                   stoplist if stoplist is not None else Lexicon())
    return _apply(_definite_proposals(corpus, mc_lexicon), lex)[0]


# -- iteration passes ----------------------------------------------------------

def _mcpot_proposals(corpus: Corpus, pn: Lexicon, window: int) -> Iterator[Proposal]:
    for d, doc_id, s, toks in _sentences(corpus):
        for i, tok in enumerate(toks):
            w = tok.normalized
            if w not in pn:
                continue
            base = strip_genitive(w)
            if base is not None and base in pn:
                continue
            j = i - 1
            while j >= 0 and i - j <= window and is_capitalized(toks[j]):
                ctx = toks[j].normalized
                if ctx not in pn:
                    yield Proposal(Position(d, s, j), "mcpot", ctx, MCPOT, doc_id, "preceding_pn")
                j -= 1


def collect_mcpot(corpus: Corpus, pn_lexicon: Lexicon, mcpot_lexicon: Lexicon,
                  config: PipelineConfig = DEFAULT_CONFIG) -> int:
    """Store capitalized words in front of known names as potential contexts.

    Genitive occurrences (``Aussage Wörners``) are skipped.
    """
    new = 0
    for p in sorted(_mcpot_proposals(corpus, pn_lexicon, config.mcpot_window)):
        new += mcpot_lexicon.add(p.surface, MCPOT, doc_id=p.doc_id, rule=p.rule)
    return new


def _place_proposals(corpus: Corpus, vocab, place_preps, affixes: AffixConfig) -> Iterator[Proposal]:
    for d, doc_id, s, toks in _sentences(corpus):
        for i, tok in enumerate(toks):
            if not is_capitalized(tok):
                continue
            if i + 1 < len(toks) and is_capitalized(toks[i + 1]):
                base = adjectival_base(tok.normalized, vocab, affixes)
                if base is not None and is_uppercase_initial(base):
                    yield Proposal(Position(d, s, i), "pn", base, PLACE, doc_id, "adjectival")
            if (i > 0 and toks[i - 1].normalized in place_preps
                    and has_onomastic_affix(tok.normalized, affixes)):
                yield Proposal(Position(d, s, i), "pn", tok.normalized, PLACE, doc_id, "onomastic")


def place_name_pass(corpus: Corpus, pn_lexicon: Lexicon, mc_lexicon: Lexicon | None = None,
                    config: PipelineConfig = DEFAULT_CONFIG, vocab=None,
                    stoplist: Lexicon | None = None) -> int:
    """Enter bases of adjectival place forms and onomastic words after place prepositions."""
    mc = mc_lexicon if mc_lexicon is not None else Lexicon()
    vocab = corpus.vocabulary() if vocab is None else vocab
    preps = config.place_prepositions | frozenset(mc.with_category(PREPOSITION))
    lex = Lexicons(mc, pn_lexicon, Lexicon(), stoplist if stoplist is not None else Lexicon())
    return _apply(_place_proposals(corpus, vocab, preps, config.affixes), lex)[0]


def _match_apposition(toks: tuple[Token, ...], i: int, config: PipelineConfig) -> tuple[int, int] | None:
    """Match ``article [adj] Noun [genitive NP] , Cap+ <closer>`` at ``i``.

    Returns the token span of the capitalized words after the comma.
    """
    n = len(toks)
    j = i + 1
    for _ in range(2):
        if j < n and toks[j].kind == WORD and toks[j].normalized[:1].islower():
            j += 1
    if j >= n or not is_capitalized(toks[j]):
        return None
    j += 1
    if j < n and toks[j].normalized in config.apposition_genitives:
        j += 1
        for m in range(3):
            k = j + m
            if (k + 1 < n and all(t.kind == WORD for t in toks[j:k])
                    and is_capitalized(toks[k]) and toks[k + 1].surface == ","):
                j = k + 1
                break
        else:
            return None
    if j >= n or toks[j].surface != ",":
        return None
    start = j = j + 1
    while j < n and is_capitalized(toks[j]):
        j += 1
    if j == start:
        return None
    if j < n and toks[j].surface not in APPOSITION_CLOSERS:
        return None
    return start, j


def _apposition_proposals(corpus: Corpus, mcpot: Lexicon, config: PipelineConfig) -> Iterator[Proposal]:
    for d, doc_id, s, toks in _sentences(corpus):
        for i, tok in enumerate(toks):
            if tok.normalized not in config.articles:
                continue
            span = _match_apposition(toks, i, config)
            if span is None:
                continue
            start, end = span
            name = toks[end - 1]
            yield Proposal(Position(d, s, end - 1), "pn", name.normalized, PERSON, doc_id, "apposition")
            for k in range(start, end - 1):
                w = toks[k].normalized
                if matches_mcpot_derived(w, mcpot) is not None:
                    yield Proposal(Position(d, s, k), "mcpot", w, MCPOT, doc_id, "apposition")


def apposition_pass(corpus: Corpus, pn_lexicon: Lexicon, mcpot_lexicon: Lexicon,
                    config: PipelineConfig = DEFAULT_CONFIG, stoplist: Lexicon | None = None) -> int:
    """Read names out of loose appositions such as ``der Chef des X, Bundesrat Koller,``."""
    lex = Lexicons(Lexicon(), pn_lexicon, mcpot_lexicon,
                   stoplist if stoplist is not None else Lexicon())
    return _apply(_apposition_proposals(corpus, mcpot_lexicon, config), lex)[0]


# -- hypotheses ----------------------------------------------------------------

def _scan_pairs(corpus: Corpus, prepositions) -> list[tuple[str, str, str, Occurrence]]:
    pairs = []
    for d, doc_id, s, toks in _sentences(corpus):
        quotes = 0
        for i, tok in enumerate(toks):
            if tok.surface in QUOTE_MARKS:
                quotes += 1
                continue
            if i == 0 or not is_capitalized(tok):
                continue
            left = toks[i - 1]
            if is_capitalized(left):
                kind = CAP_PAIR
            elif left.kind == WORD and left.normalized in prepositions:
                kind = PREP_CAP
            else:
                continue
            nxt = toks[i + 1] if i + 1 < len(toks) else None
            occ = Occurrence(Position(d, s, i - 1), doc_id, nxt, quotes % 2 == 1)
            pairs.append((kind, left.normalized, tok.normalized, occ))
    return pairs


def _merge(pairs, pn: Lexicon) -> list[Hypothesis]:
    merged: dict[tuple[str, str, str], Hypothesis] = {}
    for kind, left, right, occ in pairs:
        h = merged.get((kind, left, right))
        if h is None:
            h = merged[(kind, left, right)] = Hypothesis(
                kind, left, right, occ.doc_id, occ.position.sentence_no)
        h.occurrences.append(occ)
        h.in_quotes = h.in_quotes or occ.in_quotes
    hyps = list(merged.values())
    for h in hyps:
        if h.kind == CAP_PAIR and h.left in pn:
            h.status, h.rule_fired = REJECTED, "a"
    return hyps


def generate_hypotheses(corpus: Corpus, pn_lexicon: Lexicon, prepositions=PREPOSITIONS) -> list[Hypothesis]:
    """One hypothesis per distinct adjacent (Cap, Cap) or (preposition, Cap) pair.

    Pairs whose left word is already a name come back rejected.
    """
    return _merge(_scan_pairs(corpus, prepositions), pn_lexicon)


def _decide(h: Hypothesis, outcome: str, rule: str, new_pn: str | None = None,
            new_mcpots: tuple[str, ...] = ()) -> Decision:
    h.status = {ACCEPT_PN: ACCEPTED, REJECT: REJECTED}.get(outcome, UNRESOLVED)
    h.rule_fired = rule
    return Decision(outcome, new_pn, new_mcpots, f"{rule}: {RULES[rule]}" if rule else "no rule applies", rule)


def evaluate_hypothesis(h: Hypothesis, pn: Lexicon, mcpot: Lexicon, cap_index: CapIndex,
                        corpus_vocab, config: PipelineConfig = DEFAULT_CONFIG,
                        stoplist=()) -> Decision:
    """Apply the rejection and acceptance rules in fixed order; first match wins.

    Also records the outcome on ``h``.
    """
    affixes = config.affixes
    if h.kind == CAP_PAIR:
        if h.left in pn:
            return _decide(h, REJECT, "a")
        if impossible_pn_inflection(h.right, corpus_vocab, affixes):
            return _decide(h, REJECT, "b")
        if h.right in stoplist or h.left in stoplist:
            return _decide(h, REJECT, "c")
        if matches_mcpot_derived(h.left, mcpot) is not None:
            extra = () if h.left in mcpot else (h.left,)
            return _decide(h, ACCEPT_PN, "d", h.right, extra)
        base = strip_genitive(h.right)
        if base is not None and base in corpus_vocab:
            return _decide(h, ACCEPT_PN, "e", base)
        return _decide(h, UNRESOLVED, None)

    followers = [o.next_token for o in h.occurrences if o.next_token is not None]
    if h.right in mcpot:
        return _decide(h, REJECT, "f")
    if any(t.normalized in config.genitive_articles for t in followers):
        return _decide(h, REJECT, "g")
    if any(t.kind == WORD and t.normalized[:1].islower()
           and is_past_participle(t.normalized, affixes) for t in followers):
        return _decide(h, REJECT, "h")
    base = strip_genitive(h.right)
    if base is not None and any(is_capitalized(t) for t in followers):
        return _decide(h, ACCEPT_PN, "i", base)
    if (cap_index.article_count(h.right) == 0
            and len(set(cap_index.preceding_contexts(h.right))) >= config.min_evidence):
        return _decide(h, ACCEPT_PN, "j", h.right)
    return _decide(h, UNRESOLVED, None)


# -- fixpoint --------------------------------------------------------------------

def run_fixpoint(corpus: Corpus, lexicons: Lexicons, config: PipelineConfig = DEFAULT_CONFIG,
                 cap_index: CapIndex | None = None) -> FixpointStats:
    """Iterate the passes until an iteration adds neither names nor contexts.

    ``lexicons.pn`` and ``lexicons.mcpot`` are grown in place.
    """
    preps = all_prepositions(lexicons.mc, config)
    if cap_index is None:
        cap_index = build_cap_index(corpus, preps, config.articles)
    vocab = corpus.vocabulary()
    place_preps = config.place_prepositions | frozenset(lexicons.mc.with_category(PREPOSITION))
    pairs = _scan_pairs(corpus, preps)

    stats = FixpointStats()
    for _ in range(config.max_iterations):
        pn, mcpot = lexicons.pn, lexicons.mcpot
        proposals = list(_mcpot_proposals(corpus, pn, config.mcpot_window))
        proposals += _place_proposals(corpus, vocab, place_preps, config.affixes)
        proposals += _apposition_proposals(corpus, mcpot, config)
        hyps = _merge(pairs, pn)
        for h in hyps:
            dec = evaluate_hypothesis(h, pn, mcpot, cap_index, vocab, config, lexicons.stoplist)
            if dec.outcome == ACCEPT_PN:
                sub = {"d": PERSON, "j": PLACE if h.left in place_preps else UNKNOWN}.get(dec.rule, UNKNOWN)
                proposals.append(Proposal(h.position, "pn", dec.new_pn, sub, h.doc_id, dec.rule))
            for m in dec.new_mcpots:
                proposals.append(Proposal(h.position, "mcpot", m, MCPOT, h.doc_id, dec.rule))
        pn_new, mcpot_new = _apply(proposals, lexicons)
        stats.iterations.append(IterationStats(pn_new, mcpot_new, len(hyps)))
        stats.hypotheses = hyps
        if pn_new == 0 and mcpot_new == 0:
            break
    else:
        stats.warning = f"iteration cap of {config.max_iterations} reached before a fixpoint"
        log.warning(stats.warning)
    return stats


def tag_corpus(corpus: Corpus, pn_lexicon: Lexicon) -> list[list[tuple[str, str]]]:
    """Tag every token NE or O, one list per sentence.

    A genitive form is tagged when its base is a known name.
    """
    out = []
    for doc in corpus.documents:
        for sentence in doc.sentences:
            tagged = []
            for tok in sentence:
                w = tok.normalized
                hit = w in pn_lexicon
                if not hit and tok.kind == WORD:
                    base = strip_genitive(w)
                    hit = base is not None and base in pn_lexicon
                tagged.append((tok.surface, NE if hit else O))
            out.append(tagged)
    return out


def format_tagged(tagged: list[list[tuple[str, str]]]) -> str:
    return "\n".join("".join(f"{s}\t{t}\n" for s, t in sent) for sent in tagged)


@dataclass
class RunResult:
    corpus: Corpus
    lexicons: Lexicons
    cap_index: CapIndex
    definite_new: int
    stats: FixpointStats
    tagged: list[list[tuple[str, str]]]


def run(texts: Iterable[tuple[str, str]], lexicons: Lexicons | None = None,
        config: PipelineConfig = DEFAULT_CONFIG) -> RunResult:
    """Full tagging run over ``(doc_id, text)`` pairs."""
    lexicons = default_lexicons() if lexicons is None else lexicons
    corpus = build_corpus(texts, lexicons.mc, config)
    cap_index = build_cap_index(corpus, all_prepositions(lexicons.mc, config), config.articles)
    definite = definite_pn_pass(corpus, lexicons.mc, lexicons.pn, lexicons.stoplist)
    stats = run_fixpoint(corpus, lexicons, config, cap_index)
    return RunResult(corpus, lexicons, cap_index, definite, stats, tag_corpus(corpus, lexicons.pn))
