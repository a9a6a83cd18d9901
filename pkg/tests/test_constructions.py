import itertools

import pytest

from mobiset import (
    WordSet,
    distance_graph,
    grid36,
    hamming_code,
    icomponent_from_pair,
    is_one_code,
    is_regular,
    linear_ems_iterated,
    linear_extension,
    linear_extension_checked,
    linear_ms,
    neighborhood,
    pair_from_icomponent,
    pair_index,
    perfect_pair,
    puncture,
    spherical_neighborhood,
    standard_partition,
    standard_vectors,
    star,
    theorem_ms,
)
from _helpers import words

# the value table: row 0 is the identity, rows are involutions
STAR_TABLE = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)


class TestStar:
    def test_table_values(self):
        for j in range(4):
            for t in range(4):
                assert star(j, t) == STAR_TABLE[j][t]

    def test_symmetry(self):
        for j in range(4):
            for t in range(4):
                assert star(j, t) == star(t, j)

    def test_four_distinct_identity(self):
        for a, b, c, d in itertools.permutations(range(4)):
            assert star(a, b) == star(c, d)

    def test_examples(self):
        assert star(1, 2) == 3
        assert star(2, 3) == 1
        assert pair_index(2, 3) == 0
        assert (pair_index(0, 1), pair_index(0, 2), pair_index(0, 3)) == (0, 1, 2)

    def test_errors(self):
        with pytest.raises(ValueError):
            pair_index(2, 2)
        with pytest.raises(ValueError):
            star(4, 0)


class TestStandardVectors:
    def test_k1_words_and_indices(self):
        by_word = {str(sv.word): sv.index for sv in standard_vectors(1)}
        assert by_word == {
            "1100": 0, "0011": 0,
            "1010": 1, "0101": 1,
            "1001": 2, "0110": 2,
        }

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_counts_and_shape(self, k):
        vecs = standard_vectors(k)
        assert len(vecs) == 6**k
        for sv in vecs:
            assert sv.word.weight == 2 * k
            for q in range(k):
                assert (sv.word.bits >> (4 * q) & 0xF).bit_count() == 2
        # indices split evenly
        for i in range(3):
            assert sum(1 for sv in vecs if sv.index == i) == 2 * 6 ** (k - 1)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_partition(self, k):
        parts = standard_partition(k)
        assert all(len(p) == 2 * 6 ** (k - 1) for p in parts)
        union = parts[0] | parts[1] | parts[2]
        assert len(union) == 6**k
        assert parts[0].isdisjoint(parts[1]) and parts[0].isdisjoint(parts[2])

    def test_k1_partition(self):
        assert standard_partition(1)[0] == words("1100", "0011")

    def test_errors(self):
        with pytest.raises(ValueError):
            standard_vectors(0)
        with pytest.raises(ValueError):
            standard_vectors(16)


class TestClaim1Graphs:
    @pytest.mark.parametrize("k", [1, 2])
    def test_cross_class_graphs(self, k):
        parts = standard_partition(k)
        for i in range(3):
            assert is_regular(distance_graph(parts[i], 2), 0)
            for j in range(i + 1, 3):
                g = distance_graph(parts[i] | parts[j], 2)
                assert is_regular(g, 2 * k)
                for v, nbrs in g.adjacency.items():
                    side, other = (
                        (parts[i], parts[j]) if v in parts[i].bits else (parts[j], parts[i])
                    )
                    assert nbrs <= other.bits


class TestTheoremMs:
    def test_instances(self):
        t2 = theorem_ms(2)
        assert (len(t2), t2.n) == (12, 7)
        t3 = theorem_ms(3)
        assert (len(t3), t3.n) == (72, 11)

    def test_equals_punctured_class(self):
        assert theorem_ms(2) == puncture(standard_partition(2)[0])

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            theorem_ms(1)


class TestLinearMs:
    def test_m1(self):
        m, alt = linear_ms(1)
        assert m == words("000", "111")
        assert alt == words("001", "110")

    def test_m2(self):
        m, _ = linear_ms(2)
        assert m == words("00000", "01011", "10101", "11110")

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_cardinality_is_linear_bound(self, m):
        s, alt = linear_ms(m)
        n = 2 * m + 1
        assert len(s) == len(alt) == 2**m == 2 ** ((n - 1) // 2)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_xor_closed(self, m):
        s = linear_ms(m)[0]
        for a in s.bits:
            for b in s.bits:
                assert a ^ b in s.bits

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_disjoint_equal_neighborhoods(self, m):
        s, alt = linear_ms(m)
        assert s.isdisjoint(alt)
        assert neighborhood(s) == neighborhood(alt)


class TestHamming:
    def test_r2_is_repetition_code(self):
        assert hamming_code(2) == words("000", "111")

    def test_r3_is_perfect(self):
        c = hamming_code(3)
        assert len(c) == 16
        assert is_one_code(c)
        assert neighborhood(c) == WordSet(7, range(1 << 7))
        # linear: closed under xor
        for a in list(c.bits)[:6]:
            for b in list(c.bits)[:6]:
                assert a ^ b in c.bits

    def test_perfect_pair(self):
        c = hamming_code(3)
        base, shifted = perfect_pair(c, 0)
        assert base.isdisjoint(shifted)
        assert neighborhood(shifted) == WordSet(7, range(1 << 7))

    def test_errors(self):
        with pytest.raises(ValueError):
            hamming_code(1)
        with pytest.raises(ValueError):
            hamming_code(5)
        with pytest.raises(ValueError):
            perfect_pair(words("000", "110"), 0)


class TestLinearExtension:
    def test_trivial_pair(self):
        r, r_alt = linear_extension(WordSet(2, [0b00]), WordSet(2, [0b11]))
        assert r == words("0000", "1111")
        assert r_alt == words("0011", "1100")

    def test_last_two_coordinates_equal(self):
        s0, s1, _ = standard_partition(2)
        r, r_alt = linear_extension(s0, s1)
        assert len(r) == len(r_alt) == 24
        assert r.n == 10
        for x in r.bits | r_alt.bits:
            assert (x >> 8 & 1) == (x >> 9 & 1)

    def test_degree_condition_holds_after_lift(self):
        s0, s1, _ = standard_partition(2)
        r, r_alt = linear_extension(s0, s1)
        g = distance_graph(r | r_alt, 2)
        assert is_regular(g, 5)  # n/2 in the lifted dimension

    def test_checked_variant(self):
        s0, s1, s2 = standard_partition(2)
        assert linear_extension_checked(s0, s1) == linear_extension(s0, s1)
        with pytest.raises(ValueError):
            linear_extension_checked(words("0000"), words("1111"))


class TestIteratedEms:
    def test_small_cases(self):
        assert linear_ems_iterated(0) == WordSet(2, [0b00])
        assert linear_ems_iterated(1) == words("0000", "1111")
        two = linear_ems_iterated(2)
        assert (len(two), two.n) == (4, 6)
        for a in two.bits:
            for b in two.bits:
                assert a ^ b in two.bits

    def test_cardinality(self):
        for m in range(5):
            s = linear_ems_iterated(m)
            assert len(s) == 2**m and s.n == 2 * m + 2


class TestGrid36:
    def test_cardinality_and_base_words(self):
        m, alt = grid36()
        assert len(m) == len(alt) == 36
        for s in ("100110010", "011110000", "101001011", "001100111"):
            assert s in m.to_strings()

    def test_shift_closure(self):
        m = grid36()[0]

        def shift(bits, dr, dc):
            out = 0
            for r in range(3):
                for c in range(3):
                    if bits >> (3 * r + c) & 1:
                        out |= 1 << (3 * ((r + dr) % 3) + (c + dc) % 3)
            return out

        for b in m.bits:
            for dr in range(3):
                for dc in range(3):
                    assert shift(b, dr, dc) in m.bits

    def test_disjoint_one_codes(self):
        m, alt = grid36()
        assert m.isdisjoint(alt)
        assert is_one_code(m) and is_one_code(alt)


class TestIComponentMaps:
    def test_tiny_pair(self):
        ic = icomponent_from_pair(WordSet(1, [0]), WordSet(1, [1]))
        assert ic == words("000", "111")

    def test_linear_pair(self):
        m, alt = linear_ms(1)
        ic = icomponent_from_pair(m, alt)
        assert (len(ic), ic.n) == (4, 5)
        assert len(ic) == len(m) + len(alt)

    def test_roundtrip(self):
        m, alt = linear_ms(1)
        parts = pair_from_icomponent(icomponent_from_pair(m, alt))
        assert parts[(0, 0)] == m
        assert parts[(0, 1)] == alt
        assert len(parts[(1, 0)]) == 0 and len(parts[(1, 1)]) == 0

    def test_repetition_code_split(self):
        parts = pair_from_icomponent(words("000", "111"))
        assert parts[(0, 0)] == words("0")
        assert parts[(0, 1)] == words("1")

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            icomponent_from_pair(WordSet(1, [0]), WordSet(2, [3]))


def test_spherical_neighborhoods_of_classes_coincide():
    s0, s1, s2 = standard_partition(2)
    assert spherical_neighborhood(s0) == spherical_neighborhood(s1)
    assert spherical_neighborhood(s1) == spherical_neighborhood(s2)
