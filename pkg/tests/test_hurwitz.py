import json
import random

import pytest

from oracles import orbit_dfs, transposition_pair_orbits

from hurwitzorbits.hurwitz import (
    FORWARD,
    INVERSE,
    AtLeast,
    CappedOrbitError,
    Factorization,
    Finite,
    apply_braid,
    export_orbit_graph,
    hurwitz_move,
    orbit,
    orbit_size,
    product,
    same_orbit,
)


def fz(group, *factors):
    return Factorization(group, tuple(factors))


def test_forward_move_definition(s3):
    t12 = s3.key_of((1, 0, 2))
    t23 = s3.key_of((0, 2, 1))
    moved = hurwitz_move(fz(s3, t12, t23), 1, FORWARD)
    assert moved.factors == (t23, s3.conjugate(t12, t23))


def test_inverse_move_undoes_forward(s4):
    rng = random.Random(1)
    els = list(s4.elements())
    for _ in range(100):
        f = fz(s4, *(rng.choice(els) for _ in range(4)))
        for i in (1, 2, 3):
            assert hurwitz_move(hurwitz_move(f, i, FORWARD), i, INVERSE) == f
            assert hurwitz_move(hurwitz_move(f, i, INVERSE), i, FORWARD) == f


def test_moves_preserve_product(s4):
    rng = random.Random(2)
    els = list(s4.elements())
    for _ in range(100):
        f = fz(s4, *(rng.choice(els) for _ in range(3)))
        i = rng.choice((1, 2))
        d = rng.choice((FORWARD, INVERSE))
        assert product(hurwitz_move(f, i, d)) == product(f)


def test_move_position_bounds(s3):
    f = fz(s3, s3.identity, s3.identity)
    with pytest.raises(ValueError):
        hurwitz_move(f, 0)
    with pytest.raises(ValueError):
        hurwitz_move(f, 2)


def test_move_rejects_bad_direction(s3):
    with pytest.raises(ValueError):
        hurwitz_move(fz(s3, 0, 0), 1, "sideways")


def test_apply_braid_composes(s4):
    rng = random.Random(3)
    els = list(s4.elements())
    f = fz(s4, *(rng.choice(els) for _ in range(3)))
    moves = [(rng.choice((1, 2)), rng.choice((FORWARD, INVERSE))) for _ in range(6)]
    step = f
    for i, d in moves:
        step = hurwitz_move(step, i, d)
    assert apply_braid(f, moves) == step


def test_factorization_requires_a_factor(s3):
    with pytest.raises(ValueError):
        Factorization(s3, ())


def test_singleton_orbit(s3):
    assert orbit_size(fz(s3, s3.key_of((1, 0, 2)))) == Finite(1)


def test_s3_transposition_orbit_size(s3):
    t12 = s3.key_of((1, 0, 2))
    t23 = s3.key_of((0, 2, 1))
    assert orbit_size(fz(s3, t12, t23)) == Finite(3)


def test_orbit_matches_dfs_oracle(s4, g4_group):
    rng = random.Random(4)
    for group in (s4, g4_group):
        els = list(group.elements())
        for _ in range(20):
            f = fz(group, *(rng.choice(els) for _ in range(rng.choice((2, 3)))))
            members, capped = orbit_dfs(group, f.factors)
            assert not capped
            o = orbit(f)
            assert not o.capped
            assert o.members == frozenset(members)


def test_orbit_members_share_product(g6_group):
    rng = random.Random(5)
    els = list(g6_group.elements())
    f = fz(g6_group, *(rng.choice(els) for _ in range(3)))
    p = product(f)
    for t in orbit(f).members:
        assert product(Factorization(g6_group, t)) == p


def test_node_cap(s4):
    t = s4.key_of((1, 0, 2, 3))
    u = s4.key_of((0, 2, 1, 3))
    f = fz(s4, t, u, t)
    size = orbit_size(f)
    assert isinstance(size, Finite)
    capped = orbit_size(f, node_cap=3)
    assert capped == AtLeast(3)
    o = orbit(f, node_cap=3)
    assert o.capped and o.size == 3


def test_node_cap_validation(s3):
    with pytest.raises(ValueError):
        orbit_size(fz(s3, 0, 0), node_cap=0)


def test_same_orbit_yes(s3):
    t12 = s3.key_of((1, 0, 2))
    t23 = s3.key_of((0, 2, 1))
    f = fz(s3, t12, t23)
    assert same_orbit(f, hurwitz_move(f, 1, FORWARD)) == "yes"
    assert same_orbit(f, f) == "yes"


def test_same_orbit_no(s3):
    t12 = s3.key_of((1, 0, 2))
    t13 = s3.key_of((2, 1, 0))
    assert same_orbit(fz(s3, t12, t13), fz(s3, t13, t12)) == "no"


def test_same_orbit_unknown_when_capped(s4):
    t = s4.key_of((1, 0, 2, 3))
    u = s4.key_of((0, 2, 1, 3))
    f = fz(s4, t, u, t)
    unreachable = fz(s4, s4.identity, s4.identity, s4.identity)
    assert same_orbit(f, unreachable, node_cap=2) == "unknown"


def test_same_orbit_argument_validation(s3, s4):
    with pytest.raises(ValueError):
        same_orbit(fz(s3, 0, 0), fz(s4, 0, 0))
    with pytest.raises(ValueError):
        same_orbit(fz(s3, 0, 0), fz(s3, 0, 0, 0))


def test_brute_force_s3_pair_orbits(s3):
    # all ordered transposition pairs split into orbits; equal pairs are
    # fixed points, distinct pairs fall into two orbits of size 3
    orbits = sorted(len(o) for o in transposition_pair_orbits(s3))
    assert orbits == [1, 1, 1, 3, 3]


def test_export_dot(s3):
    t12 = s3.key_of((1, 0, 2))
    t23 = s3.key_of((0, 2, 1))
    dot = export_orbit_graph(orbit(fz(s3, t12, t23)), "dot")
    assert dot.startswith("digraph")
    assert dot.count("label=\"s1\"") == 3
    assert "(1 2), (2 3)" in dot


def test_export_suppresses_self_loops(s3):
    t12 = s3.key_of((1, 0, 2))
    o = orbit(fz(s3, t12, t12))
    assert "->" not in export_orbit_graph(o, "dot")
    assert "->" in export_orbit_graph(o, "dot", self_loops=True)


def test_export_json(s3):
    t12 = s3.key_of((1, 0, 2))
    t23 = s3.key_of((0, 2, 1))
    data = json.loads(export_orbit_graph(orbit(fz(s3, t12, t23)), "json"))
    assert len(data["vertices"]) == 3
    assert all(e["move"] == 1 for e in data["edges"])
    assert len(data["edges"]) == 3


def test_export_rejects_capped(s4):
    t = s4.key_of((1, 0, 2, 3))
    u = s4.key_of((0, 2, 1, 3))
    o = orbit(fz(s4, t, u, t), node_cap=2)
    with pytest.raises(CappedOrbitError):
        export_orbit_graph(o)


def test_export_rejects_unknown_format(s3):
    with pytest.raises(ValueError):
        export_orbit_graph(orbit(fz(s3, 0, 0)), "svg")


def test_orbit_deterministic(g4_group):
    els = list(g4_group.elements())
    f = fz(g4_group, els[1], els[2], els[3])
    assert orbit(f).members == orbit(f).members
    assert export_orbit_graph(orbit(f)) == export_orbit_graph(orbit(f))
