import math
import random

import pytest

from torlen.constructions import build_pjkl, build_pn
from torlen.coset import todd_coxeter
from torlen.presentation import Presentation, abelianization, adjoin_relators
from torlen.words import Word


def P(gens, *relators):
    return Presentation(tuple(gens.split()), tuple(Word.from_text(r) for r in relators))


def trace(table, coset, word):
    """Follow a word through a completed action table."""
    index = {g: i for i, g in enumerate(table.generators)}
    for g, s in word.letters:
        x = index[g] * 2 + (0 if s == 1 else 1)
        coset = table.rows[coset][x]
    return coset


def test_cyclic_groups():
    for k in range(2, 51):
        t = todd_coxeter(P("x", " ".join(["x"] * k)))
        assert t.status == "complete" and t.index == k


def test_pn1_is_c3():
    t = todd_coxeter(build_pn(1))
    assert t.status == "complete" and t.index == 3


def test_pjkl_quotient():
    q = adjoin_relators(build_pjkl(2, 3, 4), [Word.gen("x"), Word.gen("y")])
    t = todd_coxeter(q)
    assert t.status == "complete" and t.index == 4


def test_infinite_dihedral_exceeds_bound():
    t = todd_coxeter(P("x y", "x x", "y y"), max_cosets=500)
    assert t.status == "bound_exceeded" and t.limit == 500


def test_complete_table_satisfies_relators():
    p = P("a b", "a a a", "b b", "a b a b")  # S_3
    t = todd_coxeter(p)
    assert t.status == "complete" and t.index == 6
    for coset in range(t.index):
        for r in p.relators:
            assert trace(t, coset, r) == coset


def test_subgroup_index():
    p = P("a b", "a a a", "b b", "a b a b")
    t = todd_coxeter(p, [Word.gen("b")])
    assert t.status == "complete" and t.index == 3
    assert trace(t, 0, Word.gen("b")) == 0


def test_invariance_under_relator_permutation_and_inversion():
    p = P("a b", "a a a a", "b b", "a b a^-1 b^-1")
    reference = todd_coxeter(p)
    assert reference.status == "complete" and reference.index == 8
    rng = random.Random(6)
    rels = list(p.relators)
    for _ in range(6):
        rng.shuffle(rels)
        variant = tuple(r.inverse() if rng.random() < 0.5 else r for r in rels)
        t = todd_coxeter(Presentation(p.generators, variant))
        assert t.status == "complete" and t.index == reference.index


def test_agrees_with_abelianization_on_power_presentations():
    for k in (2, 3, 7, 12, 30):
        p = P("x", " ".join(["x"] * k))
        t = todd_coxeter(p)
        inv = abelianization(p)
        assert t.index == math.prod(inv.torsion_coefficients)


def test_empty_presentation_is_trivial_group():
    t = todd_coxeter(Presentation((), ()))
    assert t.status == "complete" and t.index == 1


def test_free_generator_exceeds_bound():
    t = todd_coxeter(P("x"), max_cosets=100)
    assert t.status == "bound_exceeded"


def test_digest_is_reproducible():
    a = todd_coxeter(build_pn(1))
    b = todd_coxeter(build_pn(1))
    assert a.digest() == b.digest()
    assert a.to_json()["table_digest"] == a.digest()


def test_rejects_undeclared_subgroup_words():
    with pytest.raises(ValueError):
        todd_coxeter(P("x", "x x"), [Word.gen("y")])
