"""Increasing plane forests with typed leaf slots."""

from __future__ import annotations

import pytest

from normord import Grammar, Polynomial, family_row, grow_forests, mono, normal_order_power, variable


def tally_by_slot_and_x(flavor: str, n: int) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for f in grow_forests(flavor, n):
        key = (f.k, f.leaf_count("x"))
        out[key] = out.get(key, 0) + 1
    return out


class TestBasics:
    def test_empty_input(self):
        (f,) = grow_forests("binary", 0)
        assert f.k == 0
        assert f.leaves == (0, 0, 0)
        assert f.encode() == ""

    @pytest.mark.parametrize(
        "flavor,encoded,leaves",
        [
            ("binary", "1(x)", (1, 0, 0)),
            ("full-binary", "1(x,y)", (1, 1, 0)),
            ("ternary", "1(x)", (1, 0, 0)),
            ("full-ternary", "1(x,y,z)", (1, 1, 1)),
        ],
    )
    def test_single_vertex(self, flavor, encoded, leaves):
        (f,) = grow_forests(flavor, 1)
        assert f.encode() == encoded
        assert f.leaves == leaves
        assert f.k == 1

    def test_component_count_matches_encoding(self):
        for f in grow_forests("binary", 4):
            assert f.encode().count(" + ") + 1 == f.k

    def test_leaf_count_accessor(self):
        for f in grow_forests("full-ternary", 3):
            assert (
                f.leaf_count("x"),
                f.leaf_count("y"),
                f.leaf_count("z"),
            ) == f.leaves

    def test_encodings_unique(self):
        for flavor, n in [
            ("binary", 6),
            ("full-binary", 5),
            ("ternary", 5),
            ("full-ternary", 4),
        ]:
            seen = [f.encode() for f in grow_forests(flavor, n)]
            assert len(seen) == len(set(seen))

    def test_unknown_flavor(self):
        with pytest.raises(KeyError):
            next(grow_forests("septenary", 2))

    def test_caps(self):
        with pytest.raises(ValueError):
            next(grow_forests("binary", 10))
        with pytest.raises(ValueError):
            next(grow_forests("ternary", 8))
        with pytest.raises(ValueError):
            next(grow_forests("binary", 5, cap=4))


class TestTriangleTallies:
    def test_binary(self):
        for n in range(1, 7):
            assert tally_by_slot_and_x("binary", n) == family_row("A", n)

    def test_full_binary(self):
        for n in range(1, 6):
            assert tally_by_slot_and_x("full-binary", n) == family_row("a", n)

    def test_ternary(self):
        for n in range(1, 6):
            assert tally_by_slot_and_x("ternary", n) == family_row("C", n)

    def test_leaf_degrees_are_consistent(self):
        # Total slot weight per flavor: n for binary, n+k for full binary,
        # 2n-k for ternary, 2n+k for full ternary.
        for n in range(1, 5):
            for f in grow_forests("binary", n):
                assert sum(f.leaves) == n
            for f in grow_forests("full-binary", n):
                assert sum(f.leaves) == n + f.k
            for f in grow_forests("ternary", n):
                assert sum(f.leaves) == 2 * n - f.k
            for f in grow_forests("full-ternary", n):
                assert sum(f.leaves) == 2 * n + f.k


class TestOperatorTallies:
    @pytest.mark.parametrize(
        "flavor,multiplier,preset,n_max",
        [
            ("binary", "x", "eulerian-xy", 6),
            ("full-binary", "x*y", "eulerian-full", 5),
            ("ternary", "x", "second-order", 5),
            ("full-ternary", "x*y*z", "full-ternary", 4),
        ],
    )
    def test_weights_equal_normal_order_coefficients(
        self, flavor, multiplier, preset, n_max
    ):
        w = Polynomial.one()
        for s in multiplier.split("*"):
            w = w * variable(s)
        g = Grammar.preset(preset)
        for n in range(1, n_max + 1):
            sums: dict[int, Polynomial] = {}
            for f in grow_forests(flavor, n):
                term = mono(1, x=f.leaves[0], y=f.leaves[1], z=f.leaves[2])
                sums[f.k] = sums.get(f.k, Polynomial()) + term
            nf = normal_order_power(w, g, n)
            for k in range(1, n + 1):
                assert sums.get(k, Polynomial()) == nf.coefficient(k)
