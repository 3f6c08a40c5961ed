from __future__ import annotations

import random

import pytest

from afkit.core import AF, ArgSet, restrict
from afkit.resolution import (
    MutualPair,
    Resolution,
    grd_star,
    grd_star_naive,
    minimal_relevant,
    mutual_pairs,
    resolutions,
    verify_grd_star,
)
from afkit.semantics import SearchCapError

from conftest import name_sets


def test_mutual_pairs_demo(af6):
    assert mutual_pairs(af6) == [MutualPair(2, 3)]  # c <-> d


def test_resolutions_demo(af6):
    got = list(resolutions(af6))
    assert got == [Resolution(((2, 3),)), Resolution(((3, 2),))]


def test_resolutions_counter_order():
    af = AF(
        ["p", "q", "r", "s"],
        [("p", "q"), ("q", "p"), ("r", "s"), ("s", "r")],
    )
    got = list(resolutions(af))
    assert len(got) == 4
    # bit 0 flips the first pair fastest
    assert got[0] == Resolution(((0, 1), (2, 3)))
    assert got[1] == Resolution(((1, 0), (2, 3)))
    assert got[2] == Resolution(((0, 1), (3, 2)))
    assert got[3] == Resolution(((1, 0), (3, 2)))


def test_resolution_cap():
    names = [f"a{i}" for i in range(10)]
    attacks = []
    for i in range(0, 10, 2):
        attacks += [(names[i], names[i + 1]), (names[i + 1], names[i])]
    af = AF(names, attacks)
    assert len(list(resolutions(af))) == 32
    with pytest.raises(SearchCapError):
        resolutions(af, max_pairs=4)


def test_grd_star_demo_both_engines(af6):
    expected = {("a", "c", "f"), ("a", "d", "f")}
    assert name_sets(af6, grd_star_naive(af6)) == expected
    assert name_sets(af6, grd_star(af6)) == expected
    assert grd_star(af6) == grd_star_naive(af6)


def test_verify_grd_star_demo(af6):
    assert verify_grd_star(af6, af6.argset(["a", "d", "f"]))
    assert verify_grd_star(af6, af6.argset(["a", "c", "f"]))
    assert not verify_grd_star(af6, af6.argset(["a"]))
    assert not verify_grd_star(af6, af6.argset(["a", "c"]))
    assert not verify_grd_star(af6, af6.argset(["c", "d"]))  # not conflict-free


def test_verify_grd_star_trace(af6):
    trace = []
    assert verify_grd_star(af6, af6.argset(["a", "d", "f"]), trace=trace)
    assert [f.depth for f in trace] == [0, 1]
    top, leaf = trace
    assert top.af.n == 6
    assert af6.names(top.grounded_part) == ("a",)
    assert af6.names(top.remainder) == ("d", "f")
    assert af6.names(top.minimal_scc_union) == ("c", "d")
    assert leaf.af.n == 1 and leaf.af.args[0].name == "f"
    assert leaf.af.names(leaf.grounded_part) == ("f",)
    assert len(leaf.remainder) == 0 and len(leaf.minimal_scc_union) == 0


def test_minimal_relevant_demo(af6):
    sub, _ = restrict(af6, af6.argset(["c", "d", "e", "f"]))
    assert [sub.names(c) for c in minimal_relevant(sub)] == [("c", "d")]


def test_minimal_relevant_needs_symmetry():
    cycle = AF(["x", "y", "z"], [("x", "y"), ("y", "z"), ("z", "x")])
    assert minimal_relevant(cycle) == []


def test_minimal_relevant_rejects_mutual_cycle():
    # four mutual attacks arranged in a square: symmetric but not a tree
    names = ["w", "x", "y", "z"]
    attacks = []
    for a, b in [("w", "x"), ("x", "y"), ("y", "z"), ("z", "w")]:
        attacks += [(a, b), (b, a)]
    af = AF(names, attacks)
    assert minimal_relevant(af) == []


def test_minimal_relevant_rejects_self_attack():
    af = AF(["x", "y"], [("x", "x"), ("x", "y"), ("y", "x")])
    assert minimal_relevant(af) == []


def test_minimal_relevant_isolated_singleton():
    af = AF(["x"], [])
    assert [af.names(c) for c in minimal_relevant(af)] == [("x",)]


def test_mutual_pair_and_cycle_basics():
    pair = AF(["x", "y"], [("x", "y"), ("y", "x")])
    assert name_sets(pair, grd_star(pair)) == {("x",), ("y",)}
    assert name_sets(pair, grd_star_naive(pair)) == {("x",), ("y",)}
    cycle = AF(["x", "y", "z"], [("x", "y"), ("y", "z"), ("z", "x")])
    assert grd_star(cycle).masks() == (0,)
    assert grd_star_naive(cycle).masks() == (0,)


def _random_af(rng: random.Random, n: int, p: float) -> AF:
    names = [f"a{i}" for i in range(n)]
    attacks = [
        (names[a], names[b])
        for a in range(n)
        for b in range(n)
        if a != b and rng.random() < p
    ]
    return AF(names, attacks)


def test_engines_agree_on_random_afs():
    rng = random.Random(5150)
    for _ in range(80):
        af = _random_af(rng, rng.randint(0, 8), rng.choice([0.2, 0.35, 0.5]))
        assert grd_star(af) == grd_star_naive(af), af.attacks


def test_verify_agrees_with_naive_membership():
    rng = random.Random(77)
    for _ in range(25):
        af = _random_af(rng, rng.randint(1, 6), 0.35)
        members = set(grd_star_naive(af).masks())
        for bits in range(1 << af.n):
            got = verify_grd_star(af, ArgSet(bits, af.n))
            assert got == (bits in members), (af.attacks, bits)


def test_grd_star_cap():
    af = AF([f"a{i}" for i in range(30)], [])
    with pytest.raises(SearchCapError):
        grd_star(af)
    assert grd_star(af, max_args=None).masks() == (af.full_mask,)
