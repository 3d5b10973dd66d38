"""Coset enumeration and abelian invariants for small quotients.

Enumeration certifies finiteness with an explicit action table; when the
group is infinite the bound trips and we learn nothing (never report
"infinite" from a budget failure).  Abelianization, computed by exact
Smith normal form, is a cheap invariant to compare against.
"""

from torlen import abelianization, build_pjkl, build_pn, todd_coxeter
from torlen.presentation import Presentation, adjoin_relators
from torlen.words import Word

p1 = build_pn(1)
t = todd_coxeter(p1)
print("tree family n=1 is cyclic of order", t.index, f"({t.status})")
print("  abelianization:", abelianization(p1))

for j, k, l in ((2, 3, 4), (3, 3, 3), (5, 2, 6)):
    p = build_pjkl(j, k, l)
    q = adjoin_relators(p, [Word.gen("x"), Word.gen("y")])
    t = todd_coxeter(q)
    print(f"P_{{{j},{k},{l}}} / <<x, y>> has order {t.index}  "
          f"(expected {l})")

# the infinite dihedral group blows straight through any coset budget
dih = Presentation(("x", "y"),
                   (Word.from_text("x x"), Word.from_text("y y")))
t = todd_coxeter(dih, max_cosets=1000)
print("infinite dihedral:", t.status, "at limit", t.limit)
print("  abelianization:", abelianization(dih))

# subgroup enumeration: <b> has index 3 in S_3
s3 = Presentation(("a", "b"),
                  tuple(Word.from_text(r) for r in ("a a a", "b b", "a b a b")))
t = todd_coxeter(s3, [Word.gen("b")])
print("index of <b> in S_3:", t.index)
print("table digest:", t.digest()[:16], "...")
