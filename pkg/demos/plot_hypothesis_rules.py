"""
Why a hypothesis was accepted or rejected
=========================================

Every adjacent capitalized pair and every preposition + capitalized word
becomes a hypothesis.  The rule letter that decided it is kept on the
hypothesis, so the decisions can be listed afterwards.
"""

from collections import Counter

from pntag.pipeline import RULES, run

texts = [
    ("a", "Sie kamen aus Anlaß des Jubiläums. Die Risiken wurden in Kauf genommen."),
    ("b", "In Lafontaines Worten klang das anders. Senatspräsident Spadolini reiste ab."),
    ("c", "Präsident Biehle erklärte am Abend seine Sorge. Er handelte ohne Rücksicht."),
    ("d", "Sie schwieg aus Rücksicht. Die Frecce Tricolori flogen vorbei."),
]
result = run(texts)

for h in result.stats.hypotheses:
    why = RULES.get(h.rule_fired, "no rule applies")
    print(f"{h.left:>16} {h.right:<14} {h.status:<10} {h.rule_fired or '-':<2} {why}")

# how often each rule fired in the final round
print(Counter(h.rule_fired or "unresolved" for h in result.stats.hypotheses))

# "Rücksicht" is a known false positive: it never takes an article and
# follows two different prepositions, which is all the distributional rule asks
print("Rücksicht" in result.lexicons.pn)
