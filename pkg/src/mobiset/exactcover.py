"""Deterministic exact-cover backtracking.

Candidates are (label, subset) pairs over a finite universe; a solution is a
subfamily of pairwise disjoint subsets whose union is the whole universe.
The search always branches on the universe element covered by the fewest
active candidates (ties: earliest in the universe) and tries candidates in
ascending label order, so repeated runs return identical solution lists.

Everything is bitmask-based: with m universe elements and k candidates the
state is one m-bit "uncovered" integer and one k-bit "active" integer.
"""

from dataclasses import dataclass
from typing import Hashable, Iterable


@dataclass(frozen=True)
class CoverInstance:
    """Universe plus labelled candidate subsets (validated on construction)."""

    universe: tuple[Hashable, ...]
    candidates: tuple[tuple[Hashable, frozenset], ...]

    def __init__(self, universe: Iterable[Hashable], candidates):
        universe = tuple(universe)
        if len(set(universe)) != len(universe):
            raise ValueError("universe elements must be distinct")
        uset = set(universe)
        cands = []
        labels = set()
        for label, subset in candidates:
            subset = frozenset(subset)
            if not subset:
                raise ValueError(f"candidate {label!r} has an empty subset")
            if not subset <= uset:
                raise ValueError(f"candidate {label!r} is not a subset of the universe")
            if label in labels:
                raise ValueError(f"duplicate candidate label {label!r}")
            labels.add(label)
            cands.append((label, subset))
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "candidates", tuple(cands))


@dataclass(frozen=True)
class CoverSolution:
    """Chosen candidate labels, stored sorted."""

    chosen: tuple[Hashable, ...]


DEFAULT_CAP = 10**6


def solve_all(inst: CoverInstance, cap: int = DEFAULT_CAP) -> list[CoverSolution]:
    """All exact covers (up to cap), in deterministic search order."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    m = len(inst.universe)
    elem_index = {e: i for i, e in enumerate(inst.universe)}
    order = sorted(range(len(inst.candidates)), key=lambda c: inst.candidates[c][0])
    labels = [inst.candidates[c][0] for c in order]
    cand_mask = []  # universe bits covered by each candidate
    for c in order:
        mask = 0
        for e in inst.candidates[c][1]:
            mask |= 1 << elem_index[e]
        cand_mask.append(mask)
    k = len(cand_mask)
    elem_cands = [0] * m  # candidate bits touching each element
    for ci, mask in enumerate(cand_mask):
        em = mask
        while em:
            e = (em & -em).bit_length() - 1
            elem_cands[e] |= 1 << ci
            em &= em - 1
    conflict = [0] * k  # candidates sharing an element (including self)
    for ci, mask in enumerate(cand_mask):
        cm = 0
        em = mask
        while em:
            e = (em & -em).bit_length() - 1
            cm |= elem_cands[e]
            em &= em - 1
        conflict[ci] = cm

    solutions: list[CoverSolution] = []
    chosen: list[int] = []

    def search(uncovered: int, active: int) -> bool:
        if not uncovered:
            solutions.append(CoverSolution(tuple(sorted(chosen))))
            return len(solutions) >= cap
        best_e, best_opts, best_count = -1, 0, -1
        em = uncovered
        while em:
            e = (em & -em).bit_length() - 1
            em &= em - 1
            opts = elem_cands[e] & active
            c = opts.bit_count()
            if c == 0:
                return False
            if best_count < 0 or c < best_count:
                best_e, best_opts, best_count = e, opts, c
                if c == 1:
                    break
        while best_opts:
            ci = (best_opts & -best_opts).bit_length() - 1
            best_opts &= best_opts - 1
            chosen.append(labels[ci])
            if search(uncovered & ~cand_mask[ci], active & ~conflict[ci]):
                chosen.pop()
                return True
            chosen.pop()
        return False

    search((1 << m) - 1, (1 << k) - 1)
    return solutions


def solve_first(inst: CoverInstance) -> CoverSolution | None:
    """First solution in the deterministic order, or None."""
    found = solve_all(inst, cap=1)
    return found[0] if found else None
