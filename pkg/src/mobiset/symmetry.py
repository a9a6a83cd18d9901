"""The hypercube isometry group: every isometry is a coordinate permutation
followed by an inversion mask.  Stabilizers are found by backtracking over
coordinate images with multiset-projection pruning, the translation part
filtered by weight-multiset invariance."""

from typing import Iterator

from .budget import BudgetMeter
from .core import Isometry, WordSet

__all__ = [
    "identity",
    "compose",
    "invert",
    "stabilizer",
    "is_transitive",
    "find_coordinate_permutation",
]


def _permute_bits(perm: tuple[int, ...], b: int) -> int:
    out = 0
    while b:
        i = (b & -b).bit_length() - 1
        b &= b - 1
        out |= 1 << perm[i]
    return out


def identity(n: int) -> Isometry:
    return Isometry(n, tuple(range(n)), 0)


def compose(s: Isometry, t: Isometry) -> Isometry:
    """The isometry x -> s(t(x))."""
    if s.n != t.n:
        raise ValueError("dimension mismatch")
    perm = tuple(s.perm[t.perm[i]] for i in range(s.n))
    return Isometry(s.n, perm, _permute_bits(s.perm, t.mask) ^ s.mask)


def invert(s: Isometry) -> Isometry:
    """The isometry with invert(s)(s(x)) = x."""
    inv = [0] * s.n
    for i, j in enumerate(s.perm):
        inv[j] = i
    inv_perm = tuple(inv)
    return Isometry(s.n, inv_perm, _permute_bits(inv_perm, s.mask))


def _perm_images(
    src: list[int],
    dst: list[int],
    n: int,
    meter: BudgetMeter,
    pin: tuple[int, int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield all coordinate permutations p with p(src) == dst as sets.

    Backtracks over the image of each source coordinate; a partial
    assignment survives only if the multiset of source-word projections onto
    the assigned coordinates matches the destination side.  ``pin`` forces
    one source word to map onto one destination word.
    """
    colw_src = [sum(w >> i & 1 for w in src) for i in range(n)]
    colw_dst = [sum(w >> j & 1 for w in dst) for j in range(n)]
    if sorted(colw_src) != sorted(colw_dst):
        return
    k = len(src)
    perm = [0] * n
    used = [False] * n

    def rec(d: int, proj_src: list[int], proj_dst: list[int]):
        meter.tick()
        if d == n:
            yield tuple(perm)
            return
        for j in range(n):
            if used[j] or colw_src[d] != colw_dst[j]:
                continue
            if pin is not None and (pin[0] >> d & 1) != (pin[1] >> j & 1):
                continue
            nps = [proj_src[x] | (src[x] >> d & 1) << d for x in range(k)]
            npd = [proj_dst[x] | (dst[x] >> j & 1) << d for x in range(k)]
            if sorted(nps) != sorted(npd):
                continue
            used[j] = True
            perm[d] = j
            yield from rec(d + 1, nps, npd)
            used[j] = False

    yield from rec(0, [0] * k, [0] * k)


def _weights(vals) -> list[int]:
    return sorted(v.bit_count() for v in vals)


def _iter_stabilizer(m: WordSet, meter: BudgetMeter) -> Iterator[Isometry]:
    n = m.n
    words = sorted(m.bits)
    wm = _weights(words)
    for t in range(1 << n):
        meter.tick()
        target = sorted(b ^ t for b in words)
        if _weights(target) != wm:
            continue
        for perm in _perm_images(words, target, n, meter):
            yield Isometry(n, perm, t)


def stabilizer(m: WordSet, budget=None) -> list[Isometry]:
    """All isometries fixing m as a set, in deterministic order (ascending
    inversion mask, then depth-first permutation order)."""
    if not m.bits:
        raise ValueError("stabilizer of an empty set")
    meter = BudgetMeter(budget, "stabilizer search")
    return list(_iter_stabilizer(m, meter))


def is_transitive(m: WordSet, budget=None) -> bool:
    """True iff the stabilizer of m moves its lexicographically least word
    onto every word of m."""
    if not m.bits:
        raise ValueError("transitivity of an empty set")
    n = m.n
    meter = BudgetMeter(budget, "transitivity search")
    words = sorted(m.bits)
    wm = _weights(words)
    base = words[0]
    bw = base.bit_count()
    for goal in words:
        found = False
        for t in range(1 << n):
            meter.tick()
            pinned = goal ^ t  # the permutation must send base onto this
            if pinned.bit_count() != bw:
                continue
            target = sorted(b ^ t for b in words)
            if _weights(target) != wm:
                continue
            for _ in _perm_images(words, target, n, meter, pin=(base, pinned)):
                found = True
                break
            if found:
                break
        if not found:
            return False
    return True


def find_coordinate_permutation(a: WordSet, b: WordSet, budget=None) -> Isometry | None:
    """A pure coordinate permutation mapping a onto b, or None."""
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    if len(a) != len(b):
        return None
    meter = BudgetMeter(budget, "permutation search")
    for perm in _perm_images(sorted(a.bits), sorted(b.bits), a.n, meter):
        return Isometry(a.n, perm, 0)
    return None
