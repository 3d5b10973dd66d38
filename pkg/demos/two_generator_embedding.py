"""Embed a many-generator presentation into a two-generator one.

The construction forms a free product with a free group on {a, b}, adds
one stable letter t conjugating each x_i b^-i a b^i to a^-i b a^i, and
then eliminates b and every x_i.  The result has generators (a, t) only,
with as many relators as we started with, plus a dictionary of images
that lets us push words of the original group into the new one.
"""

from torlen import adjoin_relators, build_pjkl, build_tgen, canonicalize
from torlen.words import Word, free_reduce, substitute

p = build_pjkl(2, 3, 4)
print("original:", len(p.generators), "generators,", len(p.relators), "relators")

result = build_tgen(p)
print("intermediate:", len(result.intermediate.generators), "generators,",
      len(result.intermediate.relators), "relators")
print("final:", result.presentation.generators)
for g, img in result.images.items():
    print(f"  {g} -> {img.to_text()}")
print("relator lengths:", sorted(len(r) for r in result.presentation.relators))

# Adjoining relators before or after embedding gives the same group, and
# in fact the same canonical presentation.
S = [Word.gen("x"), Word.from_text("y z")]
before = canonicalize(build_tgen(adjoin_relators(p, S)).presentation)
after = canonicalize(adjoin_relators(
    result.presentation,
    [free_reduce(substitute(s, result.images)) for s in S],
))
print("embedding commutes with adjoined relators:", before == after)
