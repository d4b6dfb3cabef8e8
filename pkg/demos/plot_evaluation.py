"""
Scoring a run against hand-tagged text
======================================

Tags a few sentences, builds a gold standard by hand, and computes the
recognition rate and precision.
"""

from pntag.evalkit import compare_gold, precision, recognition_rate
from pntag.pipeline import run

texts = [("1", "Der Vorsitzende des Verteidigungsausschusses, Biehle (CSU), "
               "hat Verteidigungsminister Wörner gebeten, die Flüge zu stoppen. "
               "In einem Fernschreiben an Wörner äußerte Biehle seine Sorge. "
               "Er handelte ohne Rücksicht. Sie schwieg aus Rücksicht. "
               "Das gefiel Oskar Lafontaine nicht.")]
result = run(texts)

# the gold file marks real names only; Rücksicht is a common noun
names = {"Biehle", "Wörner", "Oskar", "Lafontaine"}
gold = [[(s, "NE" if s in names else "O") for s, _ in sent] for sent in result.tagged]

counts = compare_gold(result.tagged, gold)
print(counts)
print(f"recognition rate {recognition_rate(counts):.3f}")
print(f"precision        {precision(counts):.3f}")

# the counts reported for the original 25,000-word sample
from pntag.evalkit import EvalCounts
print(f"{recognition_rate(EvalCounts(1300, 461, 30)):.4f}")
