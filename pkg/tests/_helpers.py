"""Shared brute-force oracles and random generators for the test suite.

The oracles deliberately avoid the library's search machinery: alternatives
come from subset enumeration over the full hypercube, isometries from
enumerating every permutation/mask combination.
"""

import itertools

from mobiset import Isometry, Word, WordSet


def popcount(x: int) -> int:
    return bin(x).count("1")


def hamming(a: int, b: int) -> int:
    return popcount(a ^ b)


def is_one_code_naive(vals) -> bool:
    vals = list(vals)
    return all(
        hamming(a, b) >= 3 for a, b in itertools.combinations(vals, 2)
    )


def ball_naive(n: int, w: int) -> set[int]:
    return {w} | {w ^ (1 << i) for i in range(n)}


def omega_naive(n: int, vals) -> set[int]:
    out = set()
    for w in vals:
        out |= ball_naive(n, w)
    return out


def brute_force_ms_alternatives(m: WordSet) -> set[frozenset[int]]:
    """All alternatives of m by enumerating every subset of E^n (n <= 4)."""
    n = m.n
    assert n <= 4, "oracle explodes beyond n=4"
    space = list(range(1 << n))
    target = omega_naive(n, m.bits)
    found = set()
    for r in range(len(space) + 1):
        for combo in itertools.combinations(space, r):
            cand = set(combo)
            if cand & set(m.bits):
                continue
            if not is_one_code_naive(cand):
                continue
            if omega_naive(n, cand) == target:
                found.add(frozenset(cand))
    return found


def brute_force_ems_alternatives(m: WordSet) -> set[frozenset[int]]:
    """All sphere-neighborhood alternatives of a uniform-parity m (n <= 4)."""
    n = m.n
    assert n <= 4
    par = {popcount(w) & 1 for w in m.bits}
    assert len(par) == 1
    par = par.pop()
    space = [w for w in range(1 << n) if popcount(w) & 1 == par]
    target = omega_naive(n, m.bits) - set(m.bits)
    found = set()
    for r in range(len(space) + 1):
        for combo in itertools.combinations(space, r):
            cand = set(combo)
            if cand & set(m.bits):
                continue
            if not is_one_code_naive(cand):
                continue
            if omega_naive(n, cand) - cand == target:
                found.add(frozenset(cand))
    return found


def all_isometries(n: int):
    for perm in itertools.permutations(range(n)):
        for mask in range(1 << n):
            yield Isometry(n, perm, mask)


def brute_force_stabilizer(m: WordSet) -> set[tuple]:
    from mobiset import apply_isometry

    return {
        (s.perm, s.mask) for s in all_isometries(m.n) if apply_isometry(s, m) == m
    }


def random_one_code(rng, n: int, max_size: int) -> WordSet:
    words = list(range(1 << n))
    rng.shuffle(words)
    out: list[int] = []
    for w in words:
        if len(out) >= max_size:
            break
        if all(hamming(w, v) >= 3 for v in out):
            out.append(w)
    return WordSet(n, out)


def random_word_set(rng, n: int, size: int) -> WordSet:
    return WordSet(n, rng.sample(range(1 << n), size))


def random_isometry(rng, n: int) -> Isometry:
    perm = list(range(n))
    rng.shuffle(perm)
    return Isometry(n, tuple(perm), rng.randrange(1 << n))


def words(*strings: str) -> WordSet:
    return WordSet.from_strings(list(strings))


def w(s: str) -> Word:
    return Word.from_string(s)
