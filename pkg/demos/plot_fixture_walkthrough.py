"""
Tagging the bundled newspaper sentences
=======================================

Runs the whole procedure over the small fixture corpus that ships with the
package and shows what each iteration contributed.
"""

from importlib import resources

from pntag.lexicons import default_lexicons
from pntag.pipeline import run

# one document per file, the file stem is the document id
fixture = resources.files("pntag") / "data" / "news_fixture"
texts = [(p.name[:-4], p.read_text(encoding="utf-8"))
         for p in sorted(fixture.iterdir()) if p.name.endswith(".txt")]

lexicons = default_lexicons()
result = run(texts, lexicons)

# names found straight from the seed contexts, before any iteration
print("definite names:", result.definite_new)

# per iteration: new names, new potential contexts, hypotheses looked at
for n, it in enumerate(result.stats.iterations, 1):
    print(f"iteration {n}: +{it.pn_new} names, +{it.mcpot_new} contexts, "
          f"{it.hypotheses_evaluated} hypotheses")

for word in lexicons.pn:
    entry = lexicons.pn[word]
    rule, doc = entry.evidence[0]
    print(f"{word:<14} {entry.category:<8} {rule:<18} doc {doc}")

# harvested contexts, in the order they were learned
print("contexts:", ", ".join(lexicons.mcpot))
