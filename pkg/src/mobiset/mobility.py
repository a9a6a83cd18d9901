"""Mobile-set verification and search.

A 1-code is mobile when a disjoint 1-code with the same radius-1
neighborhood exists (an "alternative"); the extended variant compares
sphere neighborhoods instead.  Both alternative searches are exact-cover
problems: the universe is the (spherical) neighborhood and each admissible
word contributes its ball (sphere) as a candidate subset, so solutions are
exactly the alternatives and the engine's determinism carries over.

Searches provided on top of that: splittability into two extended-mobile
parts, reducibility through the two-coordinate lift, and the minimum
cardinality of a nonempty extended-mobile set in a given dimension.
"""

import time
from dataclasses import dataclass

from .budget import BudgetExceededError, BudgetMeter
from .core import (
    WordSet,
    _color_components,
    _neighborhood_bits,
    _sphere_bits,
    distance_graph,
    is_bipartite,
    is_one_code,
    puncture,
)
from .exactcover import DEFAULT_CAP, CoverInstance, solve_all


def _parity_classes(bits) -> set[int]:
    return {b.bit_count() & 1 for b in bits}


# ---------------------------------------------------------------------------
# pair predicates
# ---------------------------------------------------------------------------


def is_mobile_pair(m: WordSet, alt: WordSet) -> bool:
    """True iff m and alt are disjoint 1-codes with equal neighborhoods."""
    if m.n != alt.n:
        raise ValueError("dimension mismatch")
    return (
        m.bits.isdisjoint(alt.bits)
        and is_one_code(m)
        and is_one_code(alt)
        and _neighborhood_bits(m.n, m.bits) == _neighborhood_bits(m.n, alt.bits)
    )


@dataclass(frozen=True)
class EmsConditionReport:
    """The three equivalent extended-mobile-pair conditions, evaluated
    independently, plus whether the hypotheses they rely on hold.

    hypotheses_ok: disjoint, both 1-codes, all words of one common parity.
    cond_a: puncturing one coordinate leaves a mobile pair of alternatives.
    cond_b: the distance-2 graph of the union is everywhere of degree n/2.
    cond_c: the sphere neighborhoods coincide.

    Under the hypotheses the three conditions agree.
    """

    hypotheses_ok: bool
    cond_a: bool
    cond_b: bool
    cond_c: bool

    @property
    def all_ok(self) -> bool:
        return self.hypotheses_ok and self.cond_a and self.cond_b and self.cond_c


def ems_conditions(m: WordSet, alt: WordSet, i: int | None = None) -> EmsConditionReport:
    """Evaluate the extended-mobile-pair conditions; puncture coordinate i
    (default: the last) for the punctured-pair condition."""
    if m.n != alt.n:
        raise ValueError("dimension mismatch")
    n = m.n
    if i is None:
        i = n - 1
    if not 0 <= i < n:
        raise ValueError(f"coordinate {i} out of range for n={n}")

    pars = _parity_classes(m.bits | alt.bits)
    hypotheses_ok = (
        m.bits.isdisjoint(alt.bits)
        and is_one_code(m)
        and is_one_code(alt)
        and len(pars) <= 1
    )

    cond_a = is_mobile_pair(
        puncture(m, i, strict=False), puncture(alt, i, strict=False)
    )
    g = distance_graph(m | alt, 2)
    cond_b = all(2 * len(nb) == n for nb in g.adjacency.values())
    cond_c = (_neighborhood_bits(n, m.bits) - m.bits) == (
        _neighborhood_bits(n, alt.bits) - alt.bits
    )
    return EmsConditionReport(hypotheses_ok, cond_a, cond_b, cond_c)


# ---------------------------------------------------------------------------
# alternative searches (exact cover)
# ---------------------------------------------------------------------------


def _ems_alternatives(n: int, bits: frozenset[int], cap: int) -> list[tuple[int, ...]]:
    """Exact-cover search for sphere-neighborhood alternatives of a
    uniform-parity 1-code given as raw bits.  Candidates are the words at
    distance two from the set whose sphere stays inside the set's sphere
    neighborhood; exactness forces every solution to be a disjoint 1-code.
    """
    omega = _neighborhood_bits(n, bits) - bits
    seen: dict[int, frozenset[int]] = {}
    for b in bits:
        for i in range(n):
            for j in range(i + 1, n):
                w = b ^ (1 << i) ^ (1 << j)
                if w in bits or w in seen:
                    continue
                sph = _sphere_bits(n, w)
                if sph <= omega:
                    seen[w] = sph
    inst = CoverInstance(sorted(omega), sorted(seen.items()))
    return [sol.chosen for sol in solve_all(inst, cap)]


def find_alternative_ems(m: WordSet, cap: int = DEFAULT_CAP) -> list[WordSet]:
    """All sphere-neighborhood alternatives of a uniform-parity 1-code,
    up to cap, in deterministic order."""
    if not is_one_code(m):
        raise ValueError("input is not a 1-code")
    if len(_parity_classes(m.bits)) > 1:
        raise ValueError("input has mixed parity")
    return [WordSet(m.n, sol) for sol in _ems_alternatives(m.n, m.bits, cap)]


def find_alternative_ms(m: WordSet, cap: int = DEFAULT_CAP) -> list[WordSet]:
    """All alternatives of a 1-code (disjoint 1-codes with the same ball
    neighborhood), up to cap, in deterministic order."""
    if not is_one_code(m):
        raise ValueError("input is not a 1-code")
    n = m.n
    omega = _neighborhood_bits(n, m.bits)
    cands = []
    for w in sorted(omega - m.bits):
        bl = _sphere_bits(n, w) | {w}
        if bl <= omega:
            cands.append((w, bl))
    inst = CoverInstance(sorted(omega), cands)
    return [WordSet(n, sol.chosen) for sol in solve_all(inst, cap)]


def is_mobile(m: WordSet) -> bool:
    """True iff the set has at least one alternative."""
    return bool(find_alternative_ms(m, cap=1))


def is_ems(m: WordSet) -> bool:
    """True iff the set has at least one sphere-neighborhood alternative."""
    return bool(find_alternative_ems(m, cap=1))


# ---------------------------------------------------------------------------
# i-components
# ---------------------------------------------------------------------------


def is_icomponent(m: WordSet, i: int) -> bool:
    """True iff translating coordinate i leaves the neighborhood unchanged.

    Evaluated twice: by the defining neighborhood equality and by the graph
    criterion (the distance-2 graph of the set punctured at i is bipartite
    and regular of degree (n-1)/2).  The two must agree; a mismatch raises.
    """
    n = m.n
    if n < 2:
        raise ValueError("dimension must be >= 2")
    if not 0 <= i < n:
        raise ValueError(f"coordinate {i} out of range for n={n}")
    if not is_one_code(m):
        raise ValueError("input is not a 1-code")

    translated = m.translate(1 << i)
    by_definition = _neighborhood_bits(n, m.bits) == _neighborhood_bits(
        n, translated.bits
    )
    g = distance_graph(puncture(m, i), 2)
    by_graph = is_bipartite(g) and all(
        2 * len(nb) == n - 1 for nb in g.adjacency.values()
    )
    if by_definition != by_graph:
        raise RuntimeError(
            "i-component criteria disagree; this indicates an implementation bug"
        )
    return by_definition


# ---------------------------------------------------------------------------
# splittability
# ---------------------------------------------------------------------------


@dataclass
class SplitSearchResult:
    """Outcome of a splittability search, with effort counters."""

    split: tuple[WordSet, WordSet] | None
    pairs_tested: int
    ems_checks: int
    elapsed: float
    exhausted: bool


def split_search(m: WordSet, budget=None) -> SplitSearchResult:
    """Search for a partition of m into two nonempty extended-mobile sets.

    Both parts must be 1-codes, so within one parity class they must be
    independent in the distance-2 graph of m: every candidate partition is a
    proper 2-coloring of that graph.  Components are enumerated in Gray-code
    order over their two colorings (for a set with no distance-2 pairs this
    is exactly the sweep over all proper nonempty subsets), and verdicts for
    each part are memoized.
    """
    if len(_parity_classes(m.bits)) > 1:
        raise ValueError("input has mixed parity")
    t0 = time.monotonic()
    meter = BudgetMeter(budget, "splittability search")
    g = distance_graph(m, 2)
    comps = []
    for _, side0, side1 in _color_components(g):
        if side0 is None:
            # some component has an odd distance-2 cycle: no 2-coloring exists
            return SplitSearchResult(None, 0, 0, time.monotonic() - t0, True)
        comps.append((side0, side1))
    c = len(comps)
    memo: dict[frozenset[int], bool] = {}

    def part_is_ems(bits: frozenset[int]) -> bool:
        if bits not in memo:
            memo[bits] = bool(_ems_alternatives(m.n, bits, 1))
        return memo[bits]

    pairs = 0
    try:
        # component 0 stays on side 0: unordered pairs are enumerated once
        for code in range(1 << max(c - 1, 0)):
            gray = code ^ (code >> 1)
            meter.tick()
            p: set[int] = set()
            for ci, (side0, side1) in enumerate(comps):
                p |= side1 if ci and gray >> (ci - 1) & 1 else side0
            part = frozenset(p)
            rest = m.bits - part
            if not part or not rest:
                continue
            pairs += 1
            if part_is_ems(part) and part_is_ems(rest):
                split = (WordSet(m.n, part), WordSet(m.n, rest))
                return SplitSearchResult(
                    split, pairs, len(memo), time.monotonic() - t0, True
                )
    except BudgetExceededError:
        return SplitSearchResult(None, pairs, len(memo), time.monotonic() - t0, False)
    return SplitSearchResult(None, pairs, len(memo), time.monotonic() - t0, True)


def is_splittable_ems(m: WordSet, budget=None) -> tuple[WordSet, WordSet] | None:
    """A partition of m into two nonempty extended-mobile sets, or None if
    none exists.  Raises BudgetExceededError if the budget ran out first."""
    res = split_search(m, budget)
    if res.split is None and not res.exhausted:
        raise BudgetExceededError("splittability search", res.ems_checks, res.elapsed)
    return res.split


# ---------------------------------------------------------------------------
# reducibility
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReducibilityWitness:
    """A coordinate pair (i, j) with x_i ^ x_j constant over the whole set.

    The witness induces a factorization candidate: split by the value at i,
    drop both coordinates.  valid_split records whether the two halves are
    an extended-mobile pair of alternatives; the degenerate flag marks the
    one-sided case (all words agree at i), accepted when the single half is
    itself extended mobile.
    """

    i: int
    j: int
    c: int
    valid_split: bool
    degenerate: bool


def _drop_two(b: int, i: int, j: int) -> int:
    # j > i: remove the higher coordinate first
    low = b & ((1 << j) - 1)
    b = low | (b >> (j + 1)) << j
    low = b & ((1 << i) - 1)
    return low | (b >> (i + 1)) << i


def reducibility_witnesses(r: WordSet) -> list[ReducibilityWitness]:
    """All constant-XOR coordinate pairs of r with their split verdicts."""
    if not r.bits:
        raise ValueError("input must be nonempty")
    n = r.n
    if n < 3:
        return []  # a factorization target would need dimension n-2 < 1
    words = sorted(r.bits)
    first = words[0]
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            c = (first >> i ^ first >> j) & 1
            if any((w >> i ^ w >> j) & 1 != c for w in words[1:]):
                continue
            zero = [_drop_two(w, i, j) for w in words if not w >> i & 1]
            one = [_drop_two(w, i, j) for w in words if w >> i & 1]
            if zero and one:
                rep = ems_conditions(WordSet(n - 2, zero), WordSet(n - 2, one))
                out.append(ReducibilityWitness(i, j, c, rep.all_ok, False))
            else:
                side = WordSet(n - 2, zero or one)
                try:
                    valid = is_ems(side)
                except ValueError:
                    valid = False
                out.append(ReducibilityWitness(i, j, c, valid, True))
    return out


def is_reducible_ems(r: WordSet) -> bool:
    """True iff some constant-XOR coordinate pair yields a valid split."""
    return any(w.valid_split for w in reducibility_witnesses(r))


# ---------------------------------------------------------------------------
# sampling harness
# ---------------------------------------------------------------------------


def random_parity_pair(rng, n: int, max_size: int = 6) -> tuple[WordSet, WordSet]:
    """Random disjoint 1-code pair whose words all share one parity.

    Greedy fill from a shuffled parity class; used to sample inputs for the
    three-way equivalence check of ems_conditions.
    """
    par = rng.randint(0, 1)
    words = [w for w in range(1 << n) if w.bit_count() & 1 == par]
    rng.shuffle(words)
    sizes = (rng.randint(1, max_size), rng.randint(1, max_size))
    sides: tuple[list[int], list[int]] = ([], [])
    for w in words:
        for side, size in zip(sides, sizes):
            if len(side) < size and all((w ^ v).bit_count() >= 3 for v in side):
                side.append(w)
                break
    return WordSet(n, sides[0]), WordSet(n, sides[1])


# ---------------------------------------------------------------------------
# minimum extended-mobile cardinality
# ---------------------------------------------------------------------------


def min_ems_cardinality(n: int, cap: int) -> int | None:
    """Smallest cardinality <= cap of a nonempty extended-mobile set in E^n,
    or None when every size up to cap is infeasible.

    The search normalizes by isometry: translating by a member word puts the
    all-zero word in the set (and makes it even), and a coordinate
    permutation makes a minimum-weight member the prefix-ones word of its
    weight.  Members are then pairwise at distance >= 4, so candidates are
    cliques in a compatibility graph, checked by the alternative search
    (whose cover engine rejects any set violating the degree-n/2 condition
    as soon as one sphere element is uncoverable).
    """
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    if cap < 1:
        raise ValueError("cap must be >= 1")

    if _ems_alternatives(n, frozenset({0}), 1):
        return 1

    pools: dict[int, list[int]] = {}
    compat: dict[int, list[int]] = {}
    for w in range(4, n + 1, 2):
        u = (1 << w) - 1
        pool = [
            v
            for v in range(1 << n)
            if v not in (0, u)
            and not v.bit_count() & 1
            and v.bit_count() >= w
            and (v ^ u).bit_count() >= 4
        ]
        pools[w] = pool
        # adjacency over pool indexes, restricted to higher indexes
        adj = []
        for a, va in enumerate(pool):
            mask = 0
            for b in range(a + 1, len(pool)):
                if (va ^ pool[b]).bit_count() >= 4:
                    mask |= 1 << b
            adj.append(mask)
        compat[w] = adj

    def cliques(adj: list[int], size: int, allowed: int, chosen: list[int]):
        if size == 0:
            yield tuple(chosen)
            return
        rest = allowed
        while rest:
            a = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            chosen.append(a)
            yield from cliques(adj, size - 1, allowed & adj[a] & -2 << a, chosen)
            chosen.pop()

    for size in range(2, cap + 1):
        for w in range(4, n + 1, 2):
            pool, adj = pools[w], compat[w]
            u = (1 << w) - 1
            full = (1 << len(pool)) - 1
            for idxs in cliques(adj, size - 2, full, []):
                cand = frozenset({0, u, *(pool[a] for a in idxs)})
                if _ems_alternatives(n, cand, 1):
                    return size
    return None
