"""Normal forms and element searches in free products of cyclic groups.

C2 * C2 is the infinite dihedral group: every element is a power of xy
or such a power followed by x.  In C2 * C3 and C3 * C3 no element
conjugates one factor generator into the other, but in C2 * C2 the
generator x itself inverts xy.
"""

from torlen import (
    CyclicFactorSpec,
    SeparationWitness,
    conjugate_separation_search,
    is_torsion,
    normal_form,
    ping_pong_free_check,
)
from torlen.words import Word

c22 = CyclicFactorSpec.from_text("factors: x:2 y:2")

for text in ("x x", "x y x y", "y x y y", "x x y x"):
    nf = normal_form(c22, Word.from_text(text))
    print(f"{text:12s} -> {nf.to_word(c22).to_text() or '(empty)'}")

# torsion elements of the dihedral group are the reflections
for text in ("x", "y x y", "x y", "x y x y x"):
    torsion, witness = is_torsion(c22, Word.from_text(text))
    suffix = ""
    if torsion:
        suffix = (f"  (conjugate of {witness.factor_element.to_text()}"
                  f" by {witness.conjugator.to_text() or 'identity'})")
    print(f"is_torsion({text}): {torsion}{suffix}")

print()
for spec_text in ("factors: x:2 y:2", "factors: x:2 y:3", "factors: x:3 y:3"):
    spec = CyclicFactorSpec.from_text(spec_text)
    result = conjugate_separation_search(spec, Word.gen("x"), Word.gen("y"), 6, 4)
    if isinstance(result, SeparationWitness):
        print(spec_text, "-> witness", result.x.to_text(), result.i, result.j)
    else:
        print(spec_text, "-> no witness up to bounds", result.max_syllables,
              result.max_exponent)

# ping-pong: g x g and x g x g x generate a free subgroup of C3 * C2
print()
c32 = CyclicFactorSpec.from_text("factors: g:3 x:2")
u, v = Word.from_text("g x g"), Word.from_text("x g x g x")
print("free up to length 8:", ping_pong_free_check(c32, u, v, 8))
