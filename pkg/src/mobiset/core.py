"""Hamming geometry of the binary hypercube E^n.

Words are coordinate vectors over GF(2), stored as machine integers with
coordinate i in bit i; printed strings list coordinate 0 first.  Word sets
are immutable and iterate in ascending numeric order, so everything derived
from them (neighborhoods, graphs, file output) is deterministic.

Provided here:
  distance, parity           Hamming metric, coordinate sum mod 2
  sphere, ball               radius-1 shell / closed ball around a word
  neighborhood               union of radius-1 balls of a set
  spherical_neighborhood     the neighborhood minus the set itself
  is_one_code                pairwise distance >= 3 (disjoint balls)
  extend, puncture           parity-bit extension, coordinate deletion
  distance_graph             graph with edges at one fixed distance
  is_regular, is_bipartite, components
  affine_rank                GF(2) dimension of the affine span
  Isometry, apply_isometry   coordinate permutation + inversion mask
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_N = 63  # one word per machine word


def _check_dim(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"dimension must be in 1..{MAX_N}, got {n}")


@dataclass(frozen=True, order=True)
class Word:
    """A vertex of E^n: dimension plus an n-bit coordinate vector."""

    n: int
    bits: int

    def __post_init__(self):
        _check_dim(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits 0x{self.bits:x} out of range for n={self.n}")

    @classmethod
    def from_string(cls, s: str) -> "Word":
        """Parse a {'0','1'} string; character i is coordinate i."""
        if not s or any(c not in "01" for c in s):
            raise ValueError(f"not a binary word: {s!r}")
        bits = 0
        for i, c in enumerate(s):
            if c == "1":
                bits |= 1 << i
        return cls(len(s), bits)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.n))

    def __repr__(self) -> str:
        return f"Word({self})"

    def __xor__(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return Word(self.n, self.bits ^ other.bits)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def par(self) -> int:
        """Coordinate sum modulo 2."""
        return self.bits.bit_count() & 1


class WordSet:
    """An immutable set of equal-length words.

    Iteration yields Word objects in ascending numeric order.  The raw
    integer view is exposed as ``bits`` for algorithmic code.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n: int, words: Iterable["Word | int"] = ()):
        _check_dim(n)
        vals = set()
        for w in words:
            if isinstance(w, Word):
                if w.n != n:
                    raise ValueError(f"word of length {w.n} in a set of dimension {n}")
                vals.add(w.bits)
            else:
                if not 0 <= w < (1 << n):
                    raise ValueError(f"bits 0x{w:x} out of range for n={n}")
                vals.add(w)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", frozenset(vals))

    def __setattr__(self, *a):
        raise AttributeError("WordSet is immutable")

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "WordSet":
        words = [Word.from_string(s) for s in strings]
        if not words:
            raise ValueError("cannot infer dimension from an empty list")
        return cls(words[0].n, words)

    @property
    def words(self) -> tuple[Word, ...]:
        return tuple(Word(self.n, b) for b in sorted(self.bits))

    def to_strings(self) -> list[str]:
        return [str(w) for w in self.words]

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.bits)

    def __contains__(self, w) -> bool:
        if isinstance(w, Word):
            return w.n == self.n and w.bits in self.bits
        return w in self.bits

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WordSet) and self.n == other.n and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"WordSet(n={self.n}, {{{', '.join(self.to_strings())}}})"

    def _binop(self, other: "WordSet", op) -> "WordSet":
        if not isinstance(other, WordSet) or other.n != self.n:
            raise ValueError("dimension mismatch")
        return WordSet(self.n, op(self.bits, other.bits))

    def __or__(self, other):
        return self._binop(other, frozenset.union)

    def __and__(self, other):
        return self._binop(other, frozenset.intersection)

    def __sub__(self, other):
        return self._binop(other, frozenset.difference)

    def isdisjoint(self, other: "WordSet") -> bool:
        return self.bits.isdisjoint(other.bits)

    def translate(self, t: "Word | int") -> "WordSet":
        """XOR every word with t."""
        tb = t.bits if isinstance(t, Word) else t
        return WordSet(self.n, (b ^ tb for b in self.bits))


# ---------------------------------------------------------------------------
# metric and neighborhoods
# ---------------------------------------------------------------------------


def distance(u: Word, v: Word) -> int:
    """Hamming distance: number of coordinates where u and v differ."""
    if u.n != v.n:
        raise ValueError("dimension mismatch")
    return (u.bits ^ v.bits).bit_count()


def parity(x: Word) -> int:
    """XOR of all coordinates of x."""
    return x.bits.bit_count() & 1


def _sphere_bits(n: int, b: int) -> frozenset[int]:
    return frozenset(b ^ (1 << i) for i in range(n))


def sphere(x: Word) -> WordSet:
    """The n words at distance exactly 1 from x."""
    return WordSet(x.n, _sphere_bits(x.n, x.bits))


def ball(x: Word) -> WordSet:
    """The n+1 words at distance at most 1 from x."""
    return WordSet(x.n, _sphere_bits(x.n, x.bits) | {x.bits})


def _neighborhood_bits(n: int, bits: frozenset[int]) -> frozenset[int]:
    out = set(bits)
    for b in bits:
        for i in range(n):
            out.add(b ^ (1 << i))
    return frozenset(out)


def neighborhood(s: WordSet) -> WordSet:
    """Union of the radius-1 balls around the words of s."""
    return WordSet(s.n, _neighborhood_bits(s.n, s.bits))


def spherical_neighborhood(s: WordSet) -> WordSet:
    """The neighborhood of s with s itself removed."""
    return WordSet(s.n, _neighborhood_bits(s.n, s.bits) - s.bits)


def _is_one_code_bits(vals: Iterable[int]) -> bool:
    seen: list[int] = []
    for b in vals:
        for a in seen:
            if (a ^ b).bit_count() < 3:
                return False
        seen.append(b)
    return True


def is_one_code(s: WordSet) -> bool:
    """True iff all pairwise distances are >= 3 (radius-1 balls disjoint)."""
    return _is_one_code_bits(s.bits)


# ---------------------------------------------------------------------------
# extension and puncturing
# ---------------------------------------------------------------------------


def extend(s: WordSet, odd: int = 0) -> WordSet:
    """Append a parity bit so every output word has coordinate sum ``odd``."""
    if odd not in (0, 1):
        raise ValueError("odd must be 0 or 1")
    n = s.n
    if n + 1 > MAX_N:
        raise ValueError(f"extension exceeds the n <= {MAX_N} limit")
    return WordSet(n + 1, (b | ((b.bit_count() & 1) ^ odd) << n for b in s.bits))


def _puncture_bits(b: int, i: int) -> int:
    low = b & ((1 << i) - 1)
    return low | (b >> (i + 1)) << i


def puncture(s: WordSet, i: int | None = None, strict: bool = True) -> WordSet:
    """Delete coordinate i (default: the last) from every word.

    In strict mode two words that collide after deletion raise ValueError;
    this cannot happen when s has minimum distance >= 2.  With strict=False
    colliding words merge.
    """
    n = s.n
    if n < 2:
        raise ValueError("cannot puncture below dimension 1")
    if i is None:
        i = n - 1
    if not 0 <= i < n:
        raise ValueError(f"coordinate {i} out of range for n={n}")
    out = {_puncture_bits(b, i) for b in s.bits}
    if strict and len(out) != len(s.bits):
        raise ValueError(f"puncturing coordinate {i} merges words")
    return WordSet(n - 1, out)


# ---------------------------------------------------------------------------
# distance graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DistGraph:
    """Graph on a word set with edges exactly at one Hamming distance."""

    n: int
    dist: int
    vertices: tuple[Word, ...]
    adjacency: dict[int, frozenset[int]] = field(repr=False)


def distance_graph(s: WordSet, dist: int) -> DistGraph:
    """Graph on s whose edges are the pairs at Hamming distance ``dist``."""
    if dist < 1:
        raise ValueError("dist must be >= 1")
    vals = sorted(s.bits)
    adj: dict[int, set[int]] = {b: set() for b in vals}
    for idx, a in enumerate(vals):
        for b in vals[idx + 1 :]:
            if (a ^ b).bit_count() == dist:
                adj[a].add(b)
                adj[b].add(a)
    return DistGraph(
        s.n, dist, tuple(Word(s.n, b) for b in vals),
        {b: frozenset(nb) for b, nb in adj.items()},
    )


def is_regular(g: DistGraph, d: int) -> bool:
    """True iff every vertex has degree exactly d (vacuously true if empty)."""
    return all(len(nb) == d for nb in g.adjacency.values())


def _color_components(g: DistGraph):
    """BFS 2-coloring per connected component.

    Yields (component_bits, side0, side1); side1 is None when the component
    contains an odd cycle.
    """
    seen: set[int] = set()
    for w in g.vertices:
        start = w.bits
        if start in seen:
            continue
        color = {start: 0}
        queue = [start]
        ok = True
        while queue:
            v = queue.pop()
            for u in g.adjacency[v]:
                if u not in color:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    ok = False
        seen.update(color)
        comp = frozenset(color)
        if not ok:
            yield comp, None, None
        else:
            yield (
                comp,
                frozenset(v for v, c in color.items() if c == 0),
                frozenset(v for v, c in color.items() if c == 1),
            )


def is_bipartite(g: DistGraph) -> bool:
    """True iff the graph contains no odd cycle."""
    return all(s0 is not None for _, s0, _ in _color_components(g))


def components(g: DistGraph) -> list[WordSet]:
    """Connected components, sorted by their smallest word."""
    comps = [WordSet(g.n, comp) for comp, _, _ in _color_components(g)]
    return sorted(comps, key=lambda c: min(c.bits))


# ---------------------------------------------------------------------------
# GF(2) rank
# ---------------------------------------------------------------------------


def _gf2_rank(rows: Iterable[int]) -> int:
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return len(basis)


def affine_rank(s: WordSet) -> int:
    """GF(2) dimension of {x ^ x0 : x in s}; equals n iff s is full-rank."""
    if not s.bits:
        raise ValueError("affine_rank of an empty set")
    x0 = min(s.bits)
    return _gf2_rank(b ^ x0 for b in s.bits)


# ---------------------------------------------------------------------------
# isometries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Isometry:
    """Hypercube isometry x -> perm(x) ^ mask.

    ``perm`` sends coordinate i of the input to coordinate perm[i] of the
    output; ``mask`` is the inversion (translation) vector applied after.
    """

    n: int
    perm: tuple[int, ...]
    mask: int

    def __post_init__(self):
        _check_dim(self.n)
        if sorted(self.perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of 0..n-1")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError("mask out of range")

    def apply_bits(self, b: int) -> int:
        out = 0
        for i in range(self.n):
            if b >> i & 1:
                out |= 1 << self.perm[i]
        return out ^ self.mask

    def __call__(self, x: Word) -> Word:
        if x.n != self.n:
            raise ValueError("dimension mismatch")
        return Word(self.n, self.apply_bits(x.bits))


def apply_isometry(sigma: Isometry, s: WordSet) -> WordSet:
    """Image of every word of s under sigma; cardinality is preserved."""
    if sigma.n != s.n:
        raise ValueError("dimension mismatch")
    return WordSet(s.n, (sigma.apply_bits(b) for b in s.bits))
