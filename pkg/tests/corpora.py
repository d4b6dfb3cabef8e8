"""Random corpora for property tests and the timing run."""
import random

from hypothesis import strategies as st

NAMES = ["Wörner", "Biehle", "Kelly", "Gerster", "Apel", "Koller", "Mainz",
         "Söllingen", "Esslingen", "Frankreich", "Lafontaine", "Münster"]
GENITIVES = ["Wörners", "Lafontaines", "Frankreichs", "Hitlers"]
NOUNS = ["Strategie", "Minister", "Präsident", "Senatspräsident", "Verteidigungsminister",
         "Anlaß", "Kauf", "Worten", "Erwägung", "Erwägungen", "Mainzer", "Landtag",
         "Rücksicht", "Dienstag", "Abgeordnete", "Raum", "Partei", "Chef", "Dutzend", "April"]
CONTEXTS = ["Prof.", "Dr.", "Herr", "Frau"]
LOWER = ["die", "der", "des", "eine", "sagte", "fragte", "so", "bei", "aus", "in", "im",
         "ohne", "gegen", "an", "genommen", "gewohnt", "kam", "und", "hat"]
PUNCT = [",", ",", "(", ")", '"']

WORDS = NAMES + GENITIVES + NOUNS + CONTEXTS + LOWER + PUNCT


@st.composite
def mini_corpus(draw, max_tokens=100):
    """Two or three documents of short random sentences, at most ``max_tokens`` tokens."""
    n_docs = draw(st.integers(1, 3))
    budget = draw(st.integers(0, max_tokens))
    docs = []
    for d in range(n_docs):
        sentences = []
        while budget > 1 and draw(st.booleans()):
            n = draw(st.integers(1, min(12, budget - 1)))
            words = draw(st.lists(st.sampled_from(WORDS), min_size=n, max_size=n))
            sentences.append(" ".join(words) + " .")
            budget -= n + 1
        docs.append((f"d{d}", " ".join(sentences)))
    return docs


TEMPLATES = [
    "Der Vorsitzende des {N}ausschusses , {P} , hat {T} {P} gebeten , die Sache zu prüfen .",
    "Die Abgeordnete {P} sagte , die Lage in {L} sei ernst .",
    "{P} fügte hinzu , man werde bei {L} handeln .",
    "So fragte {P} nach den Plänen für {L} .",
    "Die Maschine stürzte bei {L} ab , wie {T} {P} erklärte .",
    "Im Raum {L} wurden am Dienstag {Q} Personen gezählt .",
    "Die Strategie {G} wurde von {P} kritisiert .",
    "In {G} Worten klang das anders als bei {T} {P} .",
    "Sie kamen aus Anlaß des Jubiläums nach {L} .",
    "Die Risiken wurden in Kauf genommen , betonte {P} .",
    "Der {A}er Landtag tagte , und {P} sprach ohne Rücksicht auf die Partei .",
    "Ein Dutzend Demonstranten zog durch die Straßen von {L} .",
    "Es war bekannt , daß im Kanzleramt Erwägungen stattfanden .",
]
TITLES = ["Minister", "Präsident", "Senatspräsident", "Herr", "Frau", "Dr.", "Prof."]


def synthetic_text(n_words, seed=0):
    """Newspaper-like German text of about ``n_words`` tokens, reproducible from ``seed``."""
    rng = random.Random(seed)
    syll = ["ber", "lin", "hau", "sen", "mar", "kel", "tor", "wei", "ler", "sto", "gen", "dorf"]
    people = ["".join(rng.choice(syll) for _ in range(rng.randint(2, 3))).capitalize()
              for _ in range(300)]
    places = [p[:-1] + "ingen" for p in people[:80]] + people[80:160]
    words, out = 0, []
    while words < n_words:
        person = rng.choice(people)
        sentence = rng.choice(TEMPLATES).format(
            P=person, G=person + "s", L=rng.choice(places), T=rng.choice(TITLES),
            N=rng.choice(["Verteidigungs", "Haushalts", "Innen"]),
            Q=str(rng.randint(2, 900)), A=rng.choice(places))
        out.append(sentence)
        words += len(sentence.split())
    return " ".join(out)
