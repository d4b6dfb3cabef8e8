from pntag.corpus import Corpus, is_capitalized
from pntag.index import (article_count, build_cap_index, build_lowercase_index,
                         preceding_contexts)
from pntag.pipeline import PREPOSITIONS


def corpus_of(*docs):
    raw = Corpus.from_texts([(str(i), t) for i, t in enumerate(docs)])
    return raw.normalized(build_lowercase_index(raw))


def cap_index(*docs):
    return build_cap_index(corpus_of(*docs), PREPOSITIONS)


class TestLowercaseIndex:
    def test_sentence_internal_only(self):
        raw = Corpus.from_texts([("a", "Er kam. Kam er?")])
        assert set(build_lowercase_index(raw)) == {"kam", "er"}

    def test_empty(self):
        assert len(build_lowercase_index(Corpus())) == 0

    def test_mixed_sentence(self):
        raw = Corpus.from_texts([("a", "Gerster forderte eine Mindestflughöhe von 300 Metern")])
        assert set(build_lowercase_index(raw)) == {"forderte", "eine", "von"}

    def test_ordered(self):
        raw = Corpus.from_texts([("a", "X zeta alpha mu.")])
        assert list(build_lowercase_index(raw)) == ["alpha", "mu", "zeta"]


class TestCapIndex:
    def test_preposition_context(self):
        idx = cap_index("Das geschah bei Frankfurt.")
        assert preceding_contexts(idx, "Frankfurt") == ["bei"]
        assert article_count(idx, "Frankfurt") == 0

    def test_article_counted(self):
        idx = cap_index("Das stand nach Angaben fest. Er las die Angaben.")
        assert preceding_contexts(idx, "Angaben") == ["nach"]
        assert article_count(idx, "Angaben") == 1

    def test_two_prepositions(self):
        idx = cap_index("Er kam aus Belgien. Sie lebt in Belgien.")
        assert preceding_contexts(idx, "Belgien") == ["aus", "in"]
        assert article_count(idx, "Belgien") == 0

    def test_absent_word(self):
        idx = cap_index("Er kam.")
        assert article_count(idx, "Nirgendwo") == 0
        assert preceding_contexts(idx, "Nirgendwo") == []

    def test_duplicates_kept(self):
        idx = cap_index("Er kam aus Belgien. Sie kam aus Belgien.")
        assert idx["Belgien"].preceding == ["aus", "aus"]
        assert idx["Belgien"].distinct_contexts() == 1

    def test_document_boundary_blocks_context(self):
        idx = cap_index("Er traf Minister", "Wörner kam.")
        assert preceding_contexts(idx, "Wörner") == []

    def test_lowercase_predecessor_ignored(self):
        idx = cap_index("Das sagte Wörner.")
        assert preceding_contexts(idx, "Wörner") == []

    def test_occurrences_sum_to_capitalized_tokens(self):
        corpus = corpus_of("Der Minister Wörner traf Biehle in Bonn.", "Bonn und Wörner.")
        idx = build_cap_index(corpus, PREPOSITIONS)
        assert sum(e.occurrences for e in idx.values()) == sum(
            is_capitalized(t) for t in corpus.tokens())
        assert all(e.article_count <= e.occurrences for e in idx.values())

    def test_keys_are_capitalized_words(self):
        corpus = corpus_of("Die Lage in Bonn ist ernst. Die Frage bleibt.")
        idx = build_cap_index(corpus, PREPOSITIONS)
        assert list(idx.entries) == sorted({t.normalized for t in corpus.tokens() if is_capitalized(t)})

    def test_deterministic(self):
        docs = ("Er kam aus Belgien nach Bonn.", "In Bonn sagte Biehle nichts.")
        assert cap_index(*docs).to_tsv() == cap_index(*docs).to_tsv()

    def test_tsv(self):
        assert cap_index("er kam aus Belgien. sie lebt in Belgien.").to_tsv() == "Belgien\t0\taus;in\n"
