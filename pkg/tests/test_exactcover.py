import itertools
import random

import pytest

from mobiset import CoverInstance, solve_all, solve_first, spherical_neighborhood, standard_partition
from mobiset.core import _sphere_bits


def inst(universe, cands):
    return CoverInstance(universe, [(lbl, frozenset(s)) for lbl, s in cands])


def test_spec_example_branch_order():
    i = inst([1, 2], [("a", {1}), ("b", {2}), ("c", {1, 2})])
    assert solve_first(i).chosen == ("a", "b")
    sols = solve_all(i, cap=10)
    assert [s.chosen for s in sols] == [("a", "b"), ("c",)]


def test_empty_universe_has_vacuous_cover():
    assert solve_first(inst([], [])).chosen == ()


def test_uncoverable():
    assert solve_first(inst([1], [])) is None
    assert solve_all(inst([1, 2], [("a", {1})]), cap=5) == []


def test_cap_limits_output():
    i = inst([1, 2], [("a", {1}), ("b", {2}), ("c", {1, 2})])
    assert len(solve_all(i, cap=1)) == 1
    with pytest.raises(ValueError):
        solve_all(i, cap=0)


def test_validation():
    with pytest.raises(ValueError):
        inst([1, 1], [])
    with pytest.raises(ValueError):
        inst([1], [("a", set())])
    with pytest.raises(ValueError):
        inst([1], [("a", {2})])
    with pytest.raises(ValueError):
        inst([1, 2], [("a", {1}), ("a", {2})])


def test_standard_class_cover_contains_other_classes():
    # spheres of one index class tile the common spherical neighborhood;
    # the other two classes appear among the exact covers
    s0, s1, s2 = standard_partition(2)
    omega = frozenset(b.bits for b in spherical_neighborhood(s0))
    cands = []
    for v in range(1 << 8):
        if v.bit_count() & 1 == 0 and v not in s0.bits:
            sph = _sphere_bits(8, v)
            if sph <= omega:
                cands.append((v, sph))
    sols = solve_all(inst(sorted(omega), cands), cap=100)
    found = {frozenset(s.chosen) for s in sols}
    assert s1.bits in found and s2.bits in found


def brute_force(universe, cands):
    sols = set()
    for r in range(len(cands) + 1):
        for combo in itertools.combinations(cands, r):
            total = [e for _, s in combo for e in s]
            if len(total) == len(set(total)) == len(universe) and set(total) == set(universe):
                sols.add(frozenset(lbl for lbl, _ in combo))
    return sols


def test_agrees_with_brute_force_on_random_instances():
    rng = random.Random(99)
    for _ in range(60):
        m = rng.randint(0, 7)
        universe = list(range(m))
        cands = []
        for lbl in range(rng.randint(0, 10)):
            size = rng.randint(1, max(1, m))
            if m == 0:
                break
            cands.append((lbl, frozenset(rng.sample(universe, min(size, m)))))
        i = inst(universe, cands)
        got = {frozenset(s.chosen) for s in solve_all(i, cap=10**6)}
        assert got == brute_force(universe, cands)


def test_solutions_are_exact_covers():
    rng = random.Random(5)
    for _ in range(40):
        universe = list(range(rng.randint(1, 8)))
        cands = [
            (lbl, frozenset(rng.sample(universe, rng.randint(1, len(universe)))))
            for lbl in range(rng.randint(1, 12))
        ]
        i = inst(universe, cands)
        by_label = dict(i.candidates)
        for sol in solve_all(i, cap=50):
            chosen = [by_label[lbl] for lbl in sol.chosen]
            assert sum(len(s) for s in chosen) == len(universe)
            assert frozenset().union(*chosen) == set(universe) if chosen else not universe


def test_deterministic_repetition():
    rng = random.Random(1)
    universe = list(range(8))
    cands = [
        (lbl, frozenset(rng.sample(universe, rng.randint(1, 4)))) for lbl in range(12)
    ]
    i = inst(universe, cands)
    first = [s.chosen for s in solve_all(i, cap=10**6)]
    for _ in range(3):
        assert [s.chosen for s in solve_all(i, cap=10**6)] == first
