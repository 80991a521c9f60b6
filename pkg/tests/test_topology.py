"""Finite spaces: lattice operations, predicates, cellular families,
regular-open algebras, and the space/poset translation."""

import random

import pytest

import oracles
from bmgl.topology import (
    CellularFamily,
    FiniteSpace,
    SpaceError,
    check_translation,
    generate_topology,
    maximal_cellular,
    parse_space_text,
    regular_open_algebra,
    space_invariants,
)


def sierpinski() -> FiniteSpace:
    return generate_topology(["x", "y"], [["x"]])


def discrete(n: int) -> FiniteSpace:
    points = [f"p{i}" for i in range(n)]
    return generate_topology(points, [[p] for p in points])


def indiscrete(n: int) -> FiniteSpace:
    return generate_topology([f"p{i}" for i in range(n)], [])


def random_space(rng: random.Random, n: int) -> FiniteSpace:
    points = [f"p{i}" for i in range(n)]
    subbasis = [
        [p for p in points if rng.random() < 0.5]
        for _ in range(rng.randint(0, n + 1))
    ]
    return generate_topology(points, subbasis)


# ----------------------------------------------------------------------
# generation and lattice operations


def test_generate_topology_examples():
    s = sierpinski()
    assert sorted(s.ids(o) for o in s.opens) == [(), ("x",), ("x", "y")]
    d = discrete(3)
    assert len(d.opens) == 8
    i = indiscrete(2)
    assert sorted(i.ids(o) for o in i.opens) == [(), ("p0", "p1")]


def test_generate_rejects_bad_subbasis():
    with pytest.raises(SpaceError):
        generate_topology(["x"], [["z"]])


def test_space_constructor_checks_closure():
    with pytest.raises(SpaceError):
        FiniteSpace(["a", "b"], [0b00, 0b01, 0b10])  # missing union and full
    with pytest.raises(SpaceError):
        FiniteSpace(["a", "b"], [0b01, 0b11])  # missing empty set


def test_closure_interior_examples():
    d = discrete(2)
    assert d.closure_interior(["p0"]) == (("p0",), ("p0",))
    s = sierpinski()
    assert s.closure_interior(["x"]) == (("x", "y"), ("x",))
    i = indiscrete(2)
    assert i.closure_interior(["p0"]) == (("p0", "p1"), ())


def test_interior_closure_laws():
    rng = random.Random(7)
    for _ in range(30):
        space = random_space(rng, rng.randint(1, 5))
        full = (1 << len(space.points)) - 1
        for u in space.opens:
            # int(cl(.)) is idempotent on opens
            once = space.interior_mask(space.closure_mask(u))
            twice = space.interior_mask(space.closure_mask(once))
            assert once == twice
        for a in list(space.opens)[:8]:
            for b in list(space.opens)[:8]:
                if not (a & ~b):  # a subset of b: cl and int are monotone
                    assert not (space.closure_mask(a) & ~space.closure_mask(b))
                    assert not (space.interior_mask(a) & ~space.interior_mask(b))
        assert space.closure_mask(full) == full
        assert space.interior_mask(0) == 0


# ----------------------------------------------------------------------
# predicates


def test_space_predicates_examples():
    d = discrete(2).predicates()
    assert (d.hausdorff, d.quasi_regular, d.pi_regular) == (True, True, True)
    s = sierpinski().predicates()
    assert (s.hausdorff, s.quasi_regular, s.pi_regular) == (False, False, False)
    assert s.refinement_witness == ("x",)
    i = indiscrete(2).predicates()
    assert (i.hausdorff, i.quasi_regular, i.pi_regular) == (False, False, True)
    assert i.hausdorff_witness == ("p0", "p1")


def test_finite_hausdorff_is_discrete():
    rng = random.Random(13)
    for _ in range(40):
        space = random_space(rng, rng.randint(1, 5))
        if space.predicates().hausdorff:
            assert len(space.opens) == 1 << len(space.points)


# ----------------------------------------------------------------------
# regular opens


def test_regular_open_algebra_examples():
    ro, _ = regular_open_algebra(sierpinski())
    assert ro.elements == ("{x,y}",)
    ro, _ = regular_open_algebra(discrete(3))
    assert len(ro) == 7  # 2^3 minus empty set
    ro, _ = regular_open_algebra(indiscrete(3))
    assert len(ro) == 1


def test_regular_open_poset_always_separative():
    rng = random.Random(19)
    for _ in range(40):
        space = random_space(rng, rng.randint(1, 5))
        ro, _ = regular_open_algebra(space)
        assert ro.is_separative() == (True, None)


# ----------------------------------------------------------------------
# cellular families


def test_maximal_cellular_examples():
    d = discrete(3)
    family = maximal_cellular(d)
    assert family.members == (("p0",), ("p1",), ("p2",))
    assert maximal_cellular(d, seed=[["p0"], ["p1"], ["p2"]]).members == family.members
    s = maximal_cellular(sierpinski())
    assert s.members == (("x",),)


def test_maximal_cellular_rejects_bad_seed():
    with pytest.raises(SpaceError):
        maximal_cellular(discrete(2), seed=[["p0"], ["p0"]])
    with pytest.raises(SpaceError):
        maximal_cellular(sierpinski(), seed=[["y"]])  # {y} is not open


def test_maximal_cellular_is_maximal():
    rng = random.Random(37)
    for _ in range(40):
        space = random_space(rng, rng.randint(1, 5))
        family = maximal_cellular(space)
        masks = [space.mask(m) for m in family.members]
        assert all(m for m in masks)
        assert all(
            not (a & b) for i, a in enumerate(masks) for b in masks[i + 1 :]
        )
        union = 0
        for m in masks:
            union |= m
        # union dense, so no nonempty open can be added
        assert space.closure_mask(union) == (1 << len(space.points)) - 1
        assert all(o & union for o in space.opens if o)


# ----------------------------------------------------------------------
# invariants and the translation


def test_space_invariants_examples():
    for n in (1, 2, 3, 4):
        inv = space_invariants(discrete(n))
        assert inv.souslin == n + 1 and inv.pi_noetherian_type == 2
    assert space_invariants(indiscrete(2)).souslin == 2
    inv = space_invariants(sierpinski())
    assert (inv.souslin, inv.pi_noetherian_type) == (2, 2)
    assert inv.pi_base == (("x",),)


def test_every_finite_space_has_pnt_two():
    rng = random.Random(43)
    for _ in range(40):
        inv = space_invariants(random_space(rng, rng.randint(1, 5)))
        assert inv.pi_noetherian_type == 2


def test_check_translation_examples():
    r = check_translation(discrete(3))
    assert (r.space_souslin, r.ro_souslin) == (4, 4)
    assert (r.space_pnt, r.ro_pnt) == (2, 2)
    assert r.asserted and r.equal
    r = check_translation(sierpinski())
    assert not r.asserted
    r = check_translation(indiscrete(2))
    assert r.asserted and r.equal
    assert (r.space_souslin, r.space_pnt) == (2, 2)


def test_translation_on_random_pi_regular_spaces():
    rng = random.Random(47)
    checked = 0
    for _ in range(80):
        space = random_space(rng, rng.randint(1, 5))
        if space.predicates().pi_regular:
            report = check_translation(space)
            assert report.asserted and report.equal
            checked += 1
    assert checked > 10


def test_exhaustive_translation_small():
    for n in (1, 2, 3):
        spaces = list(oracles.enumerate_topologies(n))
        assert len(spaces) == {1: 1, 2: 4, 3: 29}[n]
        for space in spaces:
            if space.predicates().pi_regular:
                report = check_translation(space)
                assert report.equal


def test_parse_space_text():
    name, space = parse_space_text(
        "space demo\npoints x y\nsubbasis x\n"
    )
    assert name == "demo"
    assert sorted(space.ids(o) for o in space.opens) == [(), ("x",), ("x", "y")]
    with pytest.raises(SpaceError):
        parse_space_text("nonsense\n")
