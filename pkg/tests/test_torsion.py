import random

import pytest

from torlen.consequences import closure_ball, verify_factors
from torlen.constructions import build_chain, build_pjkl, build_pn
from torlen.presentation import Presentation, canonicalize, free_product
from torlen.torsion import (
    certified_words,
    in_certified_class,
    torsion_certificate_search,
    torsion_length,
    torsion_quotient_step,
    visible_torsion_generators,
)
from torlen.words import Word


def P(gens, *relators):
    return Presentation(tuple(gens.split()), tuple(Word.from_text(r) for r in relators))


# -- closure ball ----------------------------------------------------------


def test_closure_ball_factors_verify():
    relators = [(1, 1), (2, 2), (1, 2, -3, -3)]  # x^2, y^2, x y z^-2
    ball = closure_ball(relators, 3, max_len=6, max_depth=8)
    for member in ball.parents:
        factors = ball.factors(member)
        assert verify_factors(member, factors, ball.relators)


def test_closure_ball_contains_relator_consequences():
    relators = [(1, 1)]
    ball = closure_ball(relators, 1, max_len=6, max_depth=6)
    assert (1, 1) in ball
    assert (1, 1, 1, 1) in ball
    assert (1,) not in ball


# -- certified class and quotient steps ------------------------------------


def test_certified_class_membership():
    assert in_certified_class(build_pn(4))
    assert in_certified_class(build_pjkl(3, 4, 5))
    assert in_certified_class(P("a b"))  # free group
    assert in_certified_class(Presentation((), ()))
    assert in_certified_class(P("x y", "x x", "y y y"))  # C2 * C3
    # a commutator relator is outside the class
    assert not in_certified_class(P("a b", "a b a^-1 b^-1"))
    # two power relators on the same generator: not a tree shape
    assert not in_certified_class(P("x", "x x", "x x x"))


def test_visible_torsion_generators():
    p = build_pjkl(2, 3, 4)
    assert visible_torsion_generators(p) == {"x", "y"}
    assert visible_torsion_generators(P("a b")) == frozenset()
    # power relator hidden behind a conjugation is still visible
    assert visible_torsion_generators(P("x y", "y^-1 x x y")) == {"x"}


def test_quotient_step_pjkl():
    step = torsion_quotient_step(build_pjkl(2, 3, 4))
    assert step.killed == {"x", "y"}
    assert step.sound
    assert step.presentation == P("z", "z^-1 z^-1 z^-1 z^-1")


def test_quotient_step_free_group_is_fixed_point():
    p = P("a b")
    step = torsion_quotient_step(p)
    assert step.presentation == p and step.killed == frozenset() and step.sound


def test_quotient_step_unsound_outside_class():
    step = torsion_quotient_step(P("a b", "a a", "a b a^-1 b^-1"))
    assert step.killed == {"a"}
    assert not step.sound


def test_quotient_ladder_pn():
    for n in range(1, 9):
        step = torsion_quotient_step(build_pn(n))
        assert canonicalize(step.presentation) == canonicalize(build_pn(n - 1))


def test_torsion_length_families():
    for n in range(7):
        report = torsion_length(build_pn(n))
        assert (report.value, report.exact, report.sound) == (n, True, True)
        assert len(report.trace) == n
    for j, k, l in ((2, 3, 4), (2, 2, 2), (5, 5, 5)):
        report = torsion_length(build_pjkl(j, k, l))
        assert report.value == 2 and report.exact


def test_torsion_length_trivial_cases():
    assert torsion_length(Presentation((), ())).value == 0
    report = torsion_length(P("a b"))
    assert report.value == 0 and report.exact


def test_torsion_length_inexact_flagged():
    report = torsion_length(P("a b", "a a", "a b a^-1 b^-1"))
    assert not report.exact
    assert report.value >= 1


def test_non_hopf_ladder():
    for m in range(1, 6):
        step = torsion_quotient_step(build_chain(m))
        assert step.sound
        assert canonicalize(step.presentation) == canonicalize(build_chain(m - 1))


def test_product_compatibility():
    rng = random.Random(11)
    family = [build_pn(n) for n in range(4)] + [
        build_pjkl(j, k, l) for j, k, l in ((2, 2, 2), (2, 3, 4), (3, 3, 3))
    ]
    for _ in range(20):
        p, q = rng.choice(family), rng.choice(family)
        combined = free_product(p, q).presentation
        left = torsion_quotient_step(combined).presentation
        right = free_product(
            torsion_quotient_step(p).presentation,
            torsion_quotient_step(q).presentation,
        ).presentation
        assert canonicalize(left) == canonicalize(right)
        assert torsion_length(combined).value == max(
            torsion_length(p).value, torsion_length(q).value
        )


# -- certificates ----------------------------------------------------------


def test_certificates_level_1():
    report = torsion_certificate_search(build_pjkl(2, 2, 2), level=1)
    words = {c.word.to_text(): c for c in report.certificates}
    assert words["x"].exponent == 2
    assert words["y"].exponent == 2
    assert "z" not in words
    for c in report.certificates:
        assert c.verify()


def test_certificates_level_2_reaches_z():
    report = torsion_certificate_search(build_pjkl(2, 2, 2), level=2)
    words = {c.word.to_text(): c for c in report.certificates}
    z = words["z"]
    assert z.exponent == 2 and z.level == 2
    assert z.adjoined  # carries the lower-level relator set
    assert z.supporting  # and the certificates backing it
    assert z.verify()


def test_certificates_free_group_empty():
    report = torsion_certificate_search(P("a b"), level=1)
    assert report.certificates == ()
    report2 = torsion_certificate_search(P("a b"), level=2)
    assert report2.certificates == ()


def test_certificate_verification_rejects_tampering():
    report = torsion_certificate_search(P("x", "x x"), level=1)
    cert = next(c for c in report.certificates if c.word == Word.gen("x"))
    from dataclasses import replace

    assert not replace(cert, exponent=cert.exponent + 1).verify()


def test_certified_words_helper():
    report = torsion_certificate_search(P("x", "x x x"), level=1)
    assert Word.gen("x") in certified_words(report)


def test_search_rejects_bad_level():
    with pytest.raises(ValueError):
        torsion_certificate_search(P("x", "x x"), level=0)
