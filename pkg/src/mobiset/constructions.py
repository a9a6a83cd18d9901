"""Explicit word-set families: standard vectors, linear mobile sets, Hamming
codes, the two-coordinate lift, the 36-word full-rank example, and the
correspondence between alternative pairs and i-components.

Quadruple layout for standard vectors: quadruple q occupies coordinates
4q..4q+3; a chosen pair (j, t) sets coordinates 4q+j and 4q+t.
"""

import itertools
from dataclasses import dataclass

from .core import MAX_N, Word, WordSet, is_one_code, puncture

# value table of the pair operation: symmetric, row 0 the identity, and
# a*b == c*d whenever {a,b,c,d} = {0,1,2,3}
_STAR = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)

_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def star(j: int, t: int) -> int:
    """Table lookup for the pair operation on {0,1,2,3}."""
    if not (0 <= j <= 3 and 0 <= t <= 3):
        raise ValueError("star arguments must be in 0..3")
    return _STAR[j][t]


def pair_index(j: int, t: int) -> int:
    """Index in {0,1,2} of the unordered pair {j,t}: star(j,t) - 1."""
    if j == t:
        raise ValueError("pair_index requires two distinct orts")
    return star(j, t) - 1


@dataclass(frozen=True)
class StandardVector:
    """A weight-2k word with exactly two ones in each coordinate quadruple."""

    word: Word
    pairs: tuple[tuple[int, int], ...]
    index: int


def standard_vectors(k: int) -> list[StandardVector]:
    """All 6^k standard vectors of E^{4k}, each with its mod-3 index."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if 4 * k > MAX_N:
        raise ValueError(f"4k exceeds the n <= {MAX_N} limit")
    out = []
    for choice in itertools.product(_PAIRS, repeat=k):
        bits = 0
        idx = 0
        for q, (j, t) in enumerate(choice):
            bits |= (1 << (4 * q + j)) | (1 << (4 * q + t))
            idx += pair_index(j, t)
        out.append(StandardVector(Word(4 * k, bits), choice, idx % 3))
    return out


def standard_partition(k: int) -> tuple[WordSet, WordSet, WordSet]:
    """Split the standard vectors of E^{4k} into index classes S0, S1, S2."""
    classes: tuple[list[int], list[int], list[int]] = ([], [], [])
    for sv in standard_vectors(k):
        classes[sv.index].append(sv.word.bits)
    return tuple(WordSet(4 * k, c) for c in classes)  # type: ignore[return-value]


def theorem_ms(k: int) -> WordSet:
    """Unsplittable irreducible mobile set of cardinality 2*6^(k-1) in E^{4k-1}.

    Obtained by puncturing the last coordinate of the index-0 class S0.
    Requires k >= 2: at k = 1 the punctured set is reducible.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    s0 = standard_partition(k)[0]
    return puncture(s0)


def linear_ms(m: int) -> tuple[WordSet, WordSet]:
    """The linear mobile set {(x,x,|x|) : x in E^m} and its alternative."""
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 2 * m + 1
    if n > MAX_N:
        raise ValueError(f"2m+1 exceeds the n <= {MAX_N} limit")
    mbits, abits = [], []
    for x in range(1 << m):
        p = x.bit_count() & 1
        base = x | x << m
        mbits.append(base | p << (2 * m))
        abits.append(base | (p ^ 1) << (2 * m))
    return WordSet(n, mbits), WordSet(n, abits)


def hamming_code(r: int) -> WordSet:
    """The linear 1-perfect code of length 2^r - 1.

    Parity-check matrix: all nonzero r-bit columns in ascending numeric
    order, i.e. coordinate i carries the column with value i+1.  Limited to
    r <= 4 (2^(n-r) codewords are materialized).
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if r > 4:
        raise ValueError("r > 4 exceeds desk scale (would materialize 2^(n-r) words)")
    n = (1 << r) - 1
    code = []
    for w in range(1 << n):
        syn = 0
        b = w
        while b:
            i = (b & -b).bit_length() - 1
            syn ^= i + 1
            b &= b - 1
        if syn == 0:
            code.append(w)
    return WordSet(n, code)


def perfect_pair(c: WordSet, i: int) -> tuple[WordSet, WordSet]:
    """The disjoint mobile pair (C, C ^ e_i) for a 1-perfect code C."""
    n = c.n
    if not 0 <= i < n:
        raise ValueError(f"coordinate {i} out of range for n={n}")
    if len(c) * (n + 1) != 1 << n or not is_one_code(c):
        raise ValueError("input is not a 1-perfect code")
    return c, c.translate(1 << i)


def linear_extension(m: WordSet, alt: WordSet) -> tuple[WordSet, WordSet]:
    """Two-coordinate lift of an alternative pair: (x,0,0) for one side and
    (x,1,1) for the other, and the swapped variant as the new alternative.

    The precondition (the inputs form an extended-mobile pair) is not
    checked here; see linear_extension_checked.
    """
    if m.n != alt.n:
        raise ValueError("dimension mismatch")
    n = m.n
    if n + 2 > MAX_N:
        raise ValueError(f"n+2 exceeds the n <= {MAX_N} limit")
    tag = 3 << n  # ones in both new coordinates
    r = WordSet(n + 2, [*m.bits, *(b | tag for b in alt.bits)])
    r_alt = WordSet(n + 2, [*(b | tag for b in m.bits), *alt.bits])
    return r, r_alt


def linear_extension_checked(m: WordSet, alt: WordSet) -> tuple[WordSet, WordSet]:
    """Like linear_extension, but verifies the input pair first."""
    from .mobility import ems_conditions

    report = ems_conditions(m, alt)
    if not report.all_ok:
        raise ValueError("inputs are not an extended-mobile pair with alternative")
    return linear_extension(m, alt)


def _linear_ems_iterated_pair(m: int) -> tuple[WordSet, WordSet]:
    if m < 0:
        raise ValueError("m must be >= 0")
    if 2 * m + 2 > MAX_N:
        raise ValueError(f"2m+2 exceeds the n <= {MAX_N} limit")
    pair = WordSet(2, [0b00]), WordSet(2, [0b11])
    for _ in range(m):
        pair = linear_extension(*pair)
    return pair


def linear_ems_iterated(m: int) -> WordSet:
    """Extended mobile set of cardinality 2^m in E^{2m+2}, built from the
    trivial pair ({00}, {11}) by m successive two-coordinate lifts."""
    return _linear_ems_iterated_pair(m)[0]


_GRID_BASE = ("100110010", "011110000", "101001011", "001100111")


def _grid_shift(bits: int, dr: int, dc: int) -> int:
    out = 0
    for r in range(3):
        for c in range(3):
            if bits >> (3 * r + c) & 1:
                out |= 1 << (3 * ((r + dr) % 3) + (c + dc) % 3)
    return out


def grid36() -> tuple[WordSet, WordSet]:
    """Full-rank unsplittable mobile set of cardinality 36 in E^9.

    Four base words, read as 3x3 arrays row-major, closed under the nine
    cyclic row/column shifts; the alternative inverts every word.
    """
    base = [Word.from_string(s).bits for s in _GRID_BASE]
    words = {
        _grid_shift(b, dr, dc) for b in base for dr in range(3) for dc in range(3)
    }
    m = WordSet(9, words)
    return m, m.translate((1 << 9) - 1)


def icomponent_from_pair(m: WordSet, alt: WordSet) -> WordSet:
    """Join an alternative pair of E^n into one set of E^{n+2} that is an
    i-component in its last coordinate: (x,|x|,0) over m, (x,|x|,1) over alt."""
    if m.n != alt.n:
        raise ValueError("dimension mismatch")
    n = m.n
    if n + 2 > MAX_N:
        raise ValueError(f"n+2 exceeds the n <= {MAX_N} limit")
    out = [b | (b.bit_count() & 1) << n for b in m.bits]
    out += [b | (b.bit_count() & 1) << n | 1 << (n + 1) for b in alt.bits]
    return WordSet(n + 2, out)


def pair_from_icomponent(m: WordSet) -> dict[tuple[int, int], WordSet]:
    """Split a set of E^{n+2} into the four projections {x : (x,|x|^a,b)}.

    Every word lands in exactly one part: a is read off as the parity
    defect of the second-to-last coordinate, b as the last coordinate.
    Parts (a,0) and (a,1) are alternatives iff the input is an i-component
    in its last coordinate.
    """
    if m.n < 3:
        raise ValueError("dimension must be >= 3")
    n = m.n - 2
    parts: dict[tuple[int, int], list[int]] = {
        (a, b): [] for a in (0, 1) for b in (0, 1)
    }
    for w in m.bits:
        x = w & ((1 << n) - 1)
        a = (w >> n & 1) ^ (x.bit_count() & 1)
        b = w >> (n + 1) & 1
        parts[(a, b)].append(x)
    return {ab: WordSet(n, ws) for ab, ws in parts.items()}
