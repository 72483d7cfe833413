import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coabelian.character import Character, CharacterSpace, dead_cliques
from coabelian.decider import (
    NO_CONCLUSION,
    Convention,
    GenerationWitness,
    LinkWitness,
    Verdict,
    cross_check_p1_p2,
    fg_corollaryE,
    fp_codim1,
    fp_ideal,
    thmG_sufficient,
    witness_betti,
)
from coabelian.errors import InvalidArgumentError
from coabelian.exactfield import FieldSpec
from coabelian.randomized import random_character, random_graph, random_space

from .helpers import C4, DISCRIMINATOR, EDGE, PATH3, TRIANGLE, TWO_POINTS, char

Q, GF5 = FieldSpec(), FieldSpec(5)
UNIFORM = Convention.UNIFORM


def test_verdict_witness_invariant():
    with pytest.raises(InvalidArgumentError):
        Verdict(True, 1, GenerationWitness("not connected"))
    with pytest.raises(InvalidArgumentError):
        Verdict(False, 1)


def test_two_points_not_fg():
    v = fp_codim1(TWO_POINTS, char([1, 1]), 1)
    assert not v.holds
    assert v.witness == LinkWitness((), 0, 1)


def test_four_cycle():
    ones = char([1, 1, 1, 1])
    assert fp_codim1(C4, ones, 1).holds
    v = fp_codim1(C4, ones, 2)
    assert not v.holds and v.witness == LinkWitness((), 1, 1)


def test_discriminator():
    chi = char([1, 1, 1, 0])
    assert fp_codim1(DISCRIMINATOR, chi, 1).holds
    v = fp_codim1(DISCRIMINATOR, chi, 1, UNIFORM)
    assert not v.holds and v.witness == LinkWitness((3,), 0, 1)
    assert not fp_codim1(DISCRIMINATOR, chi, 2).holds


def test_fp0_always_holds():
    assert fp_codim1(TWO_POINTS, char([1, 1]), 0).holds
    assert fp_codim1(PATH3, char([1, 0, 0]), 0, UNIFORM).holds


def test_corollary_e_examples():
    assert fg_corollaryE(EDGE, char([1, 1])).holds
    v = fg_corollaryE(PATH3, char([1, 0, 0]))
    assert not v.holds and v.witness == GenerationWitness("not dominant", 2)
    v = fg_corollaryE(TWO_POINTS, char([1, 1]))
    assert not v.holds and v.witness.reason == "not connected"
    with pytest.raises(InvalidArgumentError):
        fg_corollaryE(EDGE, char([0, 0]))


def full_space(order, field=Q):
    return CharacterSpace.of([[int(i == j) for j in range(order)] for i in range(order)], field)


@pytest.mark.parametrize("n", range(5))
def test_ideal_of_abelian_edge_algebra(n):
    assert fp_ideal(EDGE, full_space(2), n).holds


def test_ideal_of_free_algebra_derived_subalgebra():
    v = fp_ideal(TWO_POINTS, full_space(2), 1)
    assert not v.holds
    assert v.witness.inner.witness is not None


def test_ideal_rank_one_matches_codim1():
    rnd = random.Random(3)
    for _ in range(25):
        g = random_graph(rnd, rnd.randint(1, 6))
        chi = random_character(rnd, g.order, rnd.choice([Q, GF5]))
        for n in range(4):
            sp = CharacterSpace.spanned_by(chi)
            assert fp_ideal(g, sp, n).holds == fp_codim1(g, chi, n).holds


def test_theorem_g_examples():
    for n in range(5):
        assert thmG_sufficient(EDGE, full_space(2), n).holds
    v = thmG_sufficient(TWO_POINTS, full_space(2), 1)
    assert not v.holds and NO_CONCLUSION in v.notes
    assert v.witness.clique == () and v.witness.degree == -1
    assert thmG_sufficient(C4, CharacterSpace.spanned_by(char([1, 1, 1, 1])), 1).holds
    assert not thmG_sufficient(C4, CharacterSpace.spanned_by(char([1, 1, 1, 1])), 2).holds


def test_p1_p2_examples():
    assert cross_check_p1_p2(C4, char([1, 1, 1, 1]), ())
    assert cross_check_p1_p2(TRIANGLE, char([1, 0, 0]), (1,))
    assert cross_check_p1_p2(PATH3, char([1, 0, 0]), (2,))
    with pytest.raises(InvalidArgumentError):
        cross_check_p1_p2(PATH3, char([1, 0, 0]), (0,))


@st.composite
def instances(draw, max_order=6):
    rnd = random.Random(draw(st.integers(0, 10**9)))
    g = random_graph(rnd, draw(st.integers(1, max_order)))
    field = draw(st.sampled_from([Q, GF5, FieldSpec(2)]))
    return g, random_character(rnd, g.order, field), rnd


@settings(max_examples=80, deadline=None)
@given(instances())
def test_corollary_e_equals_link_criterion_at_one(inst):
    g, chi, _ = inst
    assert fg_corollaryE(g, chi).holds == fp_codim1(g, chi, 1).holds


@settings(max_examples=60, deadline=None)
@given(instances())
def test_monotone_in_n_and_uniform_implies_shifted(inst):
    g, chi, _ = inst
    shifted = [fp_codim1(g, chi, n).holds for n in range(5)]
    assert all(a >= b for a, b in zip(shifted, shifted[1:]))
    for n in range(5):
        if fp_codim1(g, chi, n, UNIFORM).holds:
            assert shifted[n]


@settings(max_examples=60, deadline=None)
@given(instances())
def test_verdict_depends_only_on_support(inst):
    g, chi, rnd = inst
    f = chi.field
    other = Character.of(
        [0 if a == 0 else (rnd.choice([1, -2, 3]) if f.is_rational else rnd.randrange(1, f.p)) for a in chi.values],
        f,
    )
    assert other.support == chi.support
    for n in range(4):
        assert fp_codim1(g, chi, n).holds == fp_codim1(g, other, n).holds


@settings(max_examples=60, deadline=None)
@given(instances())
def test_witnesses_reverify(inst):
    g, chi, _ = inst
    for conv in Convention:
        for n in range(1, 4):
            v = fp_codim1(g, chi, n, conv)
            if not v.holds:
                assert v.witness.betti == witness_betti(g, chi, v.witness) != 0
                assert all(chi[x] == 0 for x in v.witness.dead_clique)


@settings(max_examples=40, deadline=None)
@given(instances(5), st.integers(1, 2))
def test_theorem_g_is_sufficient(inst, k):
    g, chi, rnd = inst
    if g.order < k:
        return
    sp = CharacterSpace.spanned_by(chi) if k == 1 else random_space(rnd, g.order, chi.field, 2)
    for n in range(4):
        if thmG_sufficient(g, sp, n).holds:
            assert fp_ideal(g, sp, n).holds


@settings(max_examples=60, deadline=None)
@given(instances())
def test_p1_p2_every_dead_clique(inst):
    g, chi, _ = inst
    for z in dead_cliques(g, chi):
        assert cross_check_p1_p2(g, chi, z)
