"""A from-scratch re-run of the whole procedure, for cross-checking run_fixpoint.

Every round rebuilds the corpus and both indexes from the raw text and
re-derives all candidate pairs by enumerating token index pairs.  Lexicons
are plain sets.  Only the per-hypothesis rule function and the apposition
matcher are shared with the code under test.
"""
from pntag.corpus import WORD, Corpus, is_capitalized
from pntag.index import build_cap_index, build_lowercase_index
from pntag.lexicons import (ADDRESS_FORM, APPOSITION_NOUN, PREPOSITION, PREPOSITION_FRAME,
                            SPEECH_VERB, TITLE, abbreviations)
from pntag.morphology import (adjectival_base, has_onomastic_affix, matches_mcpot_derived,
                              strip_genitive)
from pntag.pipeline import (ACCEPT_PN, function_words, CAP_PAIR, PREP_CAP, DEFAULT_CONFIG, Hypothesis,
                            Occurrence, Position, _match_apposition, evaluate_hypothesis)


def _fresh_corpus(texts, mc, config):
    boundaries = (".", "!", "?") + ((":",) if config.colon_boundary else ())
    raw = Corpus.from_texts(texts, abbreviations(mc), boundaries)
    return raw.normalized(build_lowercase_index(raw, function_words(mc, config)))


def _positions(corpus):
    for d, doc in enumerate(corpus.documents):
        for s, sent in enumerate(doc.sentences):
            toks = sent.tokens
            for i in range(len(toks)):
                yield d, doc.doc_id, s, toks, i


def _definite(corpus, mc):
    cat = {s: mc[s].category for s in mc}
    out = set()
    for _, _, _, toks, i in _positions(corpus):
        if not is_capitalized(toks[i]):
            continue
        w = toks[i].normalized
        before = [t.normalized for t in toks[max(0, i - 2):i]]
        after = toks[i + 1].normalized if i + 1 < len(toks) else None
        prev = before[-1] if before else None
        if cat.get(prev) in (TITLE, ADDRESS_FORM, APPOSITION_NOUN):
            out.add(w)
        elif cat.get(after) == SPEECH_VERB:
            out.add(w)
        elif len(before) == 2 and cat.get(prev) == SPEECH_VERB and before[0].lower() == "so":
            out.add(w)
        elif cat.get(prev) == PREPOSITION:
            out.add(w)
        elif len(before) == 2 and cat.get(before[0]) == PREPOSITION_FRAME and mc[before[0]].frame_second == prev:
            out.add(w)
    return out


def _round(texts, mc, pn, mcpot, stop, config):
    corpus = _fresh_corpus(texts, mc, config)
    preps = config.prepositions | {s for s in mc if mc[s].category in (PREPOSITION, PREPOSITION_FRAME)}
    place_preps = config.place_prepositions | {s for s in mc if mc[s].category == PREPOSITION}
    cap_index = build_cap_index(corpus, preps, config.articles)
    vocab = {t.normalized for t in corpus.tokens() if t.kind == WORD}
    new_pn, new_mcpot = set(), set()

    for _, _, _, toks, i in _positions(corpus):
        w = toks[i].normalized
        if w in pn and not (strip_genitive(w) and strip_genitive(w) in pn):
            for j in range(i - 1, max(-1, i - 1 - config.mcpot_window), -1):
                if not all(is_capitalized(t) for t in toks[j:i]):
                    break
                if toks[j].normalized not in pn:
                    new_mcpot.add(toks[j].normalized)
        if is_capitalized(toks[i]):
            if i + 1 < len(toks) and is_capitalized(toks[i + 1]):
                base = adjectival_base(w, vocab, config.affixes)
                if base and base[0].isupper():
                    new_pn.add(base)
            if i > 0 and toks[i - 1].normalized in place_preps and has_onomastic_affix(w, config.affixes):
                new_pn.add(w)
        if toks[i].normalized in config.articles:
            span = _match_apposition(toks, i, config)
            if span:
                new_pn.add(toks[span[1] - 1].normalized)
                for k in range(span[0], span[1] - 1):
                    if matches_mcpot_derived(toks[k].normalized, mcpot):
                        new_mcpot.add(toks[k].normalized)

    hyps = {}
    flat = list(_positions(corpus))
    for a, b in ((x, y) for x in flat for y in flat if x[:3] == y[:3] and y[4] == x[4] + 1):
        d, doc_id, s, toks, i = a
        left, right = toks[i], toks[i + 1]
        if not is_capitalized(right):
            continue
        if is_capitalized(left):
            kind = CAP_PAIR
        elif left.kind == WORD and left.normalized in preps:
            kind = PREP_CAP
        else:
            continue
        key = (kind, left.normalized, right.normalized)
        h = hyps.setdefault(key, Hypothesis(kind, key[1], key[2], doc_id, s))
        nxt = toks[i + 2] if i + 2 < len(toks) else None
        h.occurrences.append(Occurrence(Position(d, s, i), doc_id, nxt, False))
    for h in hyps.values():
        dec = evaluate_hypothesis(h, pn, mcpot, cap_index, vocab, config, stop)
        if dec.outcome == ACCEPT_PN:
            new_pn.add(dec.new_pn)
        new_mcpot.update(dec.new_mcpots)
    return new_pn, new_mcpot


def oracle_pn(texts, lexicons, config=DEFAULT_CONFIG):
    """Final proper-name set computed without any incremental state."""
    mc = lexicons.mc
    stop = set(lexicons.stoplist)
    blocked = stop | set(mc)
    pn, mcpot = set(lexicons.pn), set(lexicons.mcpot)
    pn |= _definite(_fresh_corpus(texts, mc, config), mc) - blocked
    for _ in range(config.max_iterations):
        new_pn, new_mcpot = _round(texts, mc, pn, mcpot, stop, config)
        new_pn -= blocked
        if new_pn <= pn and new_mcpot <= mcpot:
            break
        pn |= new_pn
        mcpot |= new_mcpot
    return pn
