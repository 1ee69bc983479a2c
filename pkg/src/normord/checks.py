"""Registry of exact cross-verification checks.

Every check pits at least two independently computed sides of one identity
against each other: an operator normal ordering, a triangle recurrence, a
closed form, a generating-function recurrence, or a brute-force enumeration
of combinatorial objects.  Comparisons happen on canonical polynomial
renders, so a pass means byte-identical output and a fail carries the first
differing pair verbatim.

Each check declares the range of levels it covers and two feasibility caps:
``full_cap`` is the largest level the check is designed to reach, and
``quick_cap`` keeps a whole-registry run within interactive time.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .combinat import (
    list_partitions,
    permutations,
    signed_permutations,
    stat_polynomial,
    stirling_lists,
    stirling_permutations,
)
from .forests import grow_forests
from .grammar import Grammar
from .normal_form import normal_order_power
from .poly import Polynomial, mono, variable
from .series import bessel_polynomial, catalan_number, verify_catalan_egf
from .triangles import (
    assemble,
    ctilde_xx,
    e_expand,
    family_row,
    gamma_expand,
    rising_factorial,
)

__all__ = [
    "Witness",
    "CheckResult",
    "CheckSpec",
    "REGISTRY",
    "check_ids",
    "run_check",
    "run_all",
    "render_report",
    "results_to_json",
]

ONE = Polynomial.one()


@dataclass(frozen=True)
class Witness:
    """First counterexample of a failed comparison, stored as canonical renders."""

    n: int
    note: str
    left: str
    right: str

    def render(self) -> str:
        return f"n={self.n} [{self.note}] left: {self.left} | right: {self.right}"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "note": self.note, "left": self.left, "right": self.right}


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one registered check over an inclusive level range."""

    check_id: str
    n_range: Tuple[int, int]
    status: str
    witness: Optional[Witness]

    def __post_init__(self) -> None:
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be pass or fail, got {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing result must carry a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def render(self) -> str:
        lo, hi = self.n_range
        head = f"{self.status.upper():4s} {self.check_id} (n={lo}..{hi})"
        if self.witness is None:
            return head
        return f"{head}: {self.witness.render()}"

    def to_json_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "n_range": list(self.n_range),
            "status": self.status,
            "witness": None if self.witness is None else self.witness.to_json_dict(),
        }


Runner = Callable[[int, int], Optional[Witness]]


@dataclass(frozen=True)
class CheckSpec:
    """A registered identity check with its level bounds."""

    check_id: str
    summary: str
    n_min: int
    full_cap: int
    quick_cap: int
    runner: Runner


def _diff(n: int, note: str, left: Polynomial, right: Polynomial) -> Optional[Witness]:
    lr, rr = left.render(), right.render()
    if lr != rr:
        return Witness(n, note, lr, rr)
    return None


def _tally_poly(counter: Counter, names: Tuple[str, ...]) -> Polynomial:
    acc = Polynomial()
    for key, count in counter.items():
        acc = acc + mono(count, **dict(zip(names, key)))
    return acc


def _row_poly(family: str, n: int, term: Callable[[tuple, int], Polynomial]) -> Polynomial:
    acc = Polynomial()
    for idx, value in family_row(family, n).items():
        acc = acc + term(idx, value)
    return acc


# ---------------------------------------------------------------------------
# runners
# ---------------------------------------------------------------------------


def _run_stirling_second_dual(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("stirling-dual")
    a = variable("a")
    for n in range(lo, hi + 1):
        left = g.derive_power(a, n)
        right = a * _row_poly("S2", n, lambda idx, v: mono(v, b=idx[0]))
        w = _diff(n, "iterated derivative vs set-partition triangle", left, right)
        if w:
            return w
    return None


def _run_stirling_second_normal_order(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("stirling-second")
    x = variable("x")
    for n in range(lo, hi + 1):
        left = normal_order_power(x, g, n).specialize(variable("z"))
        right = _row_poly("S2", n, lambda idx, v: mono(v, x=idx[0], z=idx[0]))
        w = _diff(n, "normal order vs set-partition triangle", left, right)
        if w:
            return w
    return None


def _run_stirling_first_surrogate(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("exp-surrogate")
    a = variable("a")
    for n in range(lo, hi + 1):
        left = normal_order_power(a, g, n).specialize(variable("z"))
        row = _row_poly("S1", n, lambda idx, v: mono(v, z=idx[0]))
        right = mono(1, a=n) * row
        w = _diff(n, "normal order vs cycle-count triangle", left, right)
        if w:
            return w
        w = _diff(n, "cycle-count triangle vs rising factorial", row, rising_factorial("z", n))
        if w:
            return w
    return None


def _run_eulerian_grammar_self_dual(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("eulerian-ab")
    g2 = Grammar.preset("eulerian-full")
    a, b = variable("a"), variable("b")
    x, y = variable("x"), variable("y")
    for n in range(lo, hi + 1):
        da = g.derive_power(a, n)
        db = g.derive_power(b, n)
        w = _diff(n, "derivative of first symbol vs second symbol", da, db)
        if w:
            return w
        row = _row_poly("eulerian", n, lambda idx, v: mono(v, a=idx[0], b=n + 1 - idx[0]))
        w = _diff(n, "iterated derivative vs descent triangle", da, row)
        if w:
            return w
        tally = Counter()
        for rec in permutations(n):
            tally[(rec.stats["des"] + 1,)] += 1
        enum = Polynomial()
        for (l,), c in tally.items():
            enum = enum + mono(c, a=l, b=n + 1 - l)
        w = _diff(n, "iterated derivative vs descent enumeration", da, enum)
        if w:
            return w
        nf = normal_order_power(x * y, g2, n)
        fx, fy = nf.apply_to(x), nf.apply_to(y)
        hom = _row_poly("eulerian", n, lambda idx, v: mono(v, x=idx[0], y=n + 1 - idx[0]))
        w = _diff(n, "product-multiplier action on x vs on y", fx, fy)
        if w:
            return w
        w = _diff(n, "product-multiplier action vs descent triangle", fx, hom)
        if w:
            return w
    return None


def _run_binary_forest_triple(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("eulerian-xy")
    x, z = variable("x"), variable("z")
    for n in range(lo, hi + 1):
        op = normal_order_power(x, g, n).specialize(z)
        tri = assemble("A", n)
        w = _diff(n, "normal order vs triangle assembly", op, tri)
        if w:
            return w
        tally = Counter()
        for f in grow_forests("binary", n):
            tally[(f.leaves[0], f.leaves[1], f.k)] += 1
        w = _diff(n, "triangle assembly vs forest enumeration", tri, _tally_poly(tally, ("x", "y", "z")))
        if w:
            return w
    return None


def _run_eulerian_specialization_chain(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        rows = family_row("A", n)
        diag = Polynomial()
        for (k, l), v in rows.items():
            if l == k:
                diag = diag + mono(v, z=k)
        s2 = _row_poly("S2", n, lambda idx, v: mono(v, z=idx[0]))
        w = _diff(n, "triangle diagonal vs set-partition triangle", diag, s2)
        if w:
            return w
        xy1 = Polynomial()
        z11 = Polynomial()
        for (k, l), v in rows.items():
            xy1 = xy1 + mono(v, x=l, y=n - l)
            z11 = z11 + mono(v, z=k)
        erow = _row_poly("eulerian", n, lambda idx, v: mono(v, x=idx[0], y=n - idx[0]))
        w = _diff(n, "third-slot specialization vs descent triangle", xy1, erow)
        if w:
            return w
        w = _diff(n, "first-two-slot specialization vs rising factorial", z11, rising_factorial("z", n))
        if w:
            return w
        ex = assemble("eulerian-x", n)
        row_x = _row_poly("eulerian", n, lambda idx, v: mono(v, x=idx[0]))
        w = _diff(n, "descent recurrence polynomial vs triangle row", ex, row_x)
        if w:
            return w
        rev = _row_poly("eulerian", n, lambda idx, v: mono(v, x=n + 1 - idx[0]))
        w = _diff(n, "descent polynomial vs reversed-row symmetry", ex, rev)
        if w:
            return w
        k1 = Polynomial()
        for (k, l), v in family_row("A", n + 1).items():
            if k == 1:
                k1 = k1 + mono(v, x=l)
        w = _diff(n, "single-slice row one level up vs descent polynomial", k1, ex)
        if w:
            return w
    return None


def _run_pq_eulerian_cycle_stats(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("pq-eulerian")
    x, z = variable("x"), variable("z")
    for n in range(lo, hi + 1):
        nf = normal_order_power(x, g, n)
        spec = nf.specialize(z)
        tri = assemble("Ap", n)
        w = _diff(n, "normal order vs weighted triangle assembly", spec, tri)
        if w:
            return w
        tally = Counter()
        for rec in permutations(n):
            tally[(n - rec.stats["exc"], rec.stats["exc"], rec.stats["cdes"], rec.stats["cyc"])] += 1
        enum = _tally_poly(tally, ("x", "y", "p", "z"))
        w = _diff(n, "normal order vs excedance-cycle enumeration", spec, enum)
        if w:
            return w
        plain = spec.subs({"p": ONE})
        w = _diff(n, "weight-one reduction vs plain triangle assembly", plain, assemble("A", n))
        if w:
            return w
    return None


def _run_full_binary_forest_triple(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("eulerian-full")
    x, y, z = variable("x"), variable("y"), variable("z")
    for n in range(lo, hi + 1):
        op = normal_order_power(x * y, g, n).specialize(z)
        tri = assemble("a", n)
        w = _diff(n, "normal order vs triangle assembly", op, tri)
        if w:
            return w
        tally = Counter()
        for f in grow_forests("full-binary", n):
            tally[(f.leaves[0], f.leaves[1], f.k)] += 1
        w = _diff(n, "triangle assembly vs forest enumeration", tri, _tally_poly(tally, ("x", "y", "z")))
        if w:
            return w
    return None


def _run_gamma_basis_expansion(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("pair-symmetric")
    u, z = variable("u"), variable("z")
    for n in range(lo, hi + 1):
        rows = family_row("gamma", n)
        grow = gamma_expand(assemble("a", n))
        left = Polynomial()
        for (k, l), v in grow.items():
            left = left + mono(v, u=l, z=k)
        right = Polynomial()
        for (k, l), v in rows.items():
            right = right + mono(v, u=l, z=k)
        w = _diff(n, "basis expansion of assembly vs paired-symbol triangle", left, right)
        if w:
            return w
        sur = normal_order_power(u, g, n).specialize(z)
        hom = Polynomial()
        for (k, l), v in rows.items():
            hom = hom + mono(v, u=l, v=n + k - 2 * l, z=k)
        w = _diff(n, "surrogate normal order vs paired-symbol triangle", sur, hom)
        if w:
            return w
    return None


def _run_lah_closed_form(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        row = _row_poly("lah", n, lambda idx, v: mono(v, z=idx[0]))
        closed = Polynomial()
        for k in range(1, n + 1):
            coeff = math.comb(n - 1, k - 1) * math.factorial(n) // math.factorial(k)
            closed = closed + mono(coeff, z=k)
        w = _diff(n, "list-count triangle vs binomial-factorial closed form", row, closed)
        if w:
            return w
        sums: Dict[int, int] = {}
        for (k, l), v in family_row("a", n).items():
            sums[k] = sums.get(k, 0) + v
        margin = Polynomial()
        for k, v in sorted(sums.items()):
            margin = margin + mono(v, z=k)
        w = _diff(n, "ascent-triangle row sums vs closed form", margin, closed)
        if w:
            return w
    return None


def _run_list_partition_ascents(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        asc_tally = Counter()
        block_tally = Counter()
        for rec in list_partitions(n):
            k = rec.stats["blocks"]
            asc_tally[(rec.stats["asc"], k)] += 1
            block_tally[(k,)] += 1
        left = _tally_poly(asc_tally, ("x", "z"))
        right = _row_poly("a", n, lambda idx, v: mono(v, x=idx[1], z=idx[0]))
        w = _diff(n, "list-partition ascent enumeration vs triangle", left, right)
        if w:
            return w
        blocks = _tally_poly(block_tally, ("z",))
        lah = _row_poly("lah", n, lambda idx, v: mono(v, z=idx[0]))
        w = _diff(n, "list-partition block counts vs list-count triangle", blocks, lah)
        if w:
            return w
    return None


def _run_gamma_valley_enumeration(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        tally = Counter()
        for rec in list_partitions(n):
            if rec.stats["dd"] == 0:
                k = rec.stats["blocks"]
                tally[(k + rec.stats["val"], k)] += 1
        left = _tally_poly(tally, ("u", "z"))
        right = _row_poly("gamma", n, lambda idx, v: mono(v, u=idx[1], z=idx[0]))
        w = _diff(n, "valley enumeration without double descents vs triangle", left, right)
        if w:
            return w
    return None


def _run_second_order_row_polynomial(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("second-order")
    x = variable("x")
    for n in range(lo, hi + 1):
        left = normal_order_power(x, g, n).apply_to(x)
        right = _row_poly("eulerian2", n, lambda idx, v: mono(v, x=idx[0], y=2 * n + 1 - idx[0]))
        w = _diff(n, "operator applied to its multiplier vs homogenized row", left, right)
        if w:
            return w
    return None


def _run_ternary_forest_triple(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("second-order")
    x, z = variable("x"), variable("z")
    for n in range(lo, hi + 1):
        op = normal_order_power(x, g, n).specialize(z)
        tri = assemble("Ct", n)
        w = _diff(n, "normal order vs triangle assembly", op, tri)
        if w:
            return w
        tally = Counter()
        for f in grow_forests("ternary", n):
            tally[(f.leaves[0], f.leaves[1], f.k)] += 1
        w = _diff(n, "triangle assembly vs forest enumeration", tri, _tally_poly(tally, ("x", "y", "z")))
        if w:
            return w
    return None


def _run_second_order_row_link(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        k1 = Polynomial()
        for (k, l), v in family_row("C", n + 1).items():
            if k == 1:
                k1 = k1 + mono(v, x=l)
        row = assemble("second-order-x", n)
        w = _diff(n, "single-slice row one level up vs plateau triangle", k1, row)
        if w:
            return w
    return None


def _run_catalan_egf(lo: int, hi: int) -> Optional[Witness]:
    report = verify_catalan_egf(hi)
    if report.matched:
        return None
    return Witness(
        report.first_mismatch,
        "recurrence-built series vs exponential closed form",
        report.lhs.render(),
        report.rhs.render(),
    )


def _run_ctilde_diagonal(lo: int, hi: int) -> Optional[Witness]:
    x = variable("x")
    for n in range(lo, hi + 1):
        left = assemble("Ct", n).subs({"y": x})
        right = ctilde_xx(n)
        w = _diff(n, "triangle assembly on the diagonal vs diagonal recurrence", left, right)
        if w:
            return w
    return None


def _run_bessel_closed_form(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        left = ctilde_xx(n)
        right = Polynomial()
        for j in range(n):
            num = math.factorial(n - 1 + j)
            den = (2 ** j) * math.factorial(n - 1 - j) * math.factorial(j)
            q, r = divmod(num, den)
            if r:
                return Witness(n, "factorial quotient fails to divide", str(num), str(den))
            right = right + mono(q, x=n + j, z=n - j)
        w = _diff(n, "diagonal recurrence vs factorial closed form", left, right)
        if w:
            return w
        w = _diff(
            n,
            "diagonal at unit first slot vs weighted-pairing polynomial",
            left.subs({"x": ONE}),
            bessel_polynomial(n),
        )
        if w:
            return w
    return None


def _run_trivariate_second_order(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("trivariate-second-order")
    x, y, z = variable("x"), variable("y"), variable("z")
    for n in range(lo, hi + 1):
        dum = assemble("second-order-xyz", n)
        der = g.derive_power(x, n)
        w = _diff(n, "product-rule recurrence vs iterated derivative", dum, der)
        if w:
            return w
        enum = stat_polynomial(stirling_permutations(n), {"asc": "x", "des": "y", "plat": "z"})
        w = _diff(n, "recurrence vs ascent-descent-plateau enumeration", dum, enum)
        if w:
            return w
        tally = Counter()
        for f in grow_forests("full-ternary", n):
            if f.k == 1:
                tally[f.leaves] += 1
        w = _diff(n, "recurrence vs single-tree leaf enumeration", dum, _tally_poly(tally, ("x", "y", "z")))
        if w:
            return w
        w = _diff(n, "symmetry under swapping first two slots", dum, dum.subs({"x": y, "y": x}))
        if w:
            return w
        w = _diff(n, "symmetry under swapping outer slots", dum, dum.subs({"x": z, "z": x}))
        if w:
            return w
    return None


def _run_full_ternary_forest(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("full-ternary")
    x, y, z, q = variable("x"), variable("y"), variable("z"), variable("q")
    for n in range(lo, hi + 1):
        op = normal_order_power(x * y * z, g, n).specialize(q)
        tally = Counter()
        for f in grow_forests("full-ternary", n):
            tally[(f.leaves[0], f.leaves[1], f.leaves[2], f.k)] += 1
        w = _diff(n, "normal order vs forest enumeration", op, _tally_poly(tally, ("x", "y", "z", "q")))
        if w:
            return w
    return None


def _run_stirling_list_distribution(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("full-ternary")
    x, y, z, q = variable("x"), variable("y"), variable("z"), variable("q")
    for n in range(lo, hi + 1):
        op = normal_order_power(x * y * z, g, n).specialize(q)
        enum = stat_polynomial(
            stirling_lists(n), {"asc": "x", "plat": "y", "des": "z", "blocks": "q"}
        )
        w = _diff(n, "normal order vs block-list enumeration", op, enum)
        if w:
            return w
        slice1 = Polynomial()
        for m, c in op.terms():
            if m.exponent("q") == 1:
                slice1 = slice1 + mono(c, x=m.exponent("x"), y=m.exponent("y"), z=m.exponent("z"))
        w = _diff(
            n,
            "single-block slice vs ascent-descent-plateau polynomial",
            slice1,
            stat_polynomial(stirling_permutations(n), {"asc": "x", "plat": "y", "des": "z"}),
        )
        if w:
            return w
    return None


def _run_beta_e_expansion(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("full-ternary")
    x, y, z = variable("x"), variable("y"), variable("z")
    for n in range(lo, hi + 1):
        nf = normal_order_power(x * y * z, g, n)
        rows = family_row("beta", n)
        for k in range(1, n + 1):
            got = e_expand(nf.coefficient(k))
            left = Polynomial()
            for (i, j, m), c in got.items():
                left = left + mono(c, u=i, v=j, w=m)
            right = Polynomial()
            for (kk, j, l), v in rows.items():
                if kk == k:
                    right = right + mono(v, u=2 * n - 2 * k - 2 * j - 3 * l, v=j, w=l + k)
            w = _diff(n, f"elementary-symmetric expansion of slice {k} vs triangle", left, right)
            if w:
                return w
    return None


def _run_beta_positivity(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("elementary-symmetric")
    wv, q = variable("w"), variable("q")
    for n in range(lo, hi + 1):
        op = normal_order_power(wv, g, n).specialize(q)
        tri = assemble("beta", n)
        w = _diff(n, "surrogate normal order vs triangle assembly", op, tri)
        if w:
            return w
        for idx, v in family_row("beta", n).items():
            if not isinstance(v, int) or v < 0:
                return Witness(n, "negative or non-integer triangle entry", str(idx), str(v))
    return None


def _run_type_b_eulerian_numbers(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        row = _row_poly("eulerianB", n, lambda idx, v: mono(v, x=idx[0]))
        poly = assemble("type-b-x", n)
        w = _diff(n, "scatter recurrence row vs derivative recurrence", row, poly)
        if w:
            return w
    return None


def _run_signed_permutation_descents(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        enum = stat_polynomial(signed_permutations(n), {"des_b": "x"})
        poly = assemble("type-b-x", n)
        w = _diff(n, "signed-word descent enumeration vs recurrence", enum, poly)
        if w:
            return w
    return None


def _run_swap_grammar_expansion(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("swap")
    x, y, z = variable("x"), variable("y"), variable("z")
    for n in range(lo, hi + 1):
        nf = normal_order_power(x * y, g, n)
        w = _diff(n, "normal order vs triangle assembly", nf.specialize(z), assemble("B", n))
        if w:
            return w
        applied = nf.apply_to(x * y)
        hom = _row_poly(
            "eulerianB", n, lambda idx, v: mono(v, x=2 * idx[0] + 1, y=2 * n + 1 - 2 * idx[0])
        )
        w = _diff(n, "operator applied to its multiplier vs homogenized row", applied, hom)
        if w:
            return w
    return None


def _run_half_square_grammar_expansion(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("type-b-split")
    x, y, z = variable("x"), variable("y"), variable("z")
    for n in range(lo, hi + 1):
        nf = normal_order_power(x, g, n)
        w = _diff(n, "normal order vs triangle assembly", nf.specialize(z), assemble("E", n))
        if w:
            return w
        applied = nf.apply_to(x * y)
        hom = _row_poly(
            "eulerianB", n, lambda idx, v: mono(v, x=2 * idx[0] + 1, y=2 * n + 1 - 2 * idx[0])
        )
        w = _diff(n, "operator applied to a product vs homogenized row", applied, hom)
        if w:
            return w
    return None


def _run_type_b_normal_order_rows(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        k1 = Polynomial()
        for (k, l), v in family_row("B", n + 1).items():
            if k == 1:
                k1 = k1 + mono(v, x=l)
        row = _row_poly("eulerianB", n, lambda idx, v: mono(v, x=idx[0]))
        w = _diff(n, "single-slice row one level up vs signed-descent row", k1, row)
        if w:
            return w
    return None


def _run_flag_ascent_plateau(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        poly = assemble("flag-ascent-plateau-x", n)
        enum = stat_polynomial(stirling_permutations(n), {"fap": "x"})
        w = _diff(n, "derivative recurrence vs flagged-plateau enumeration", poly, enum)
        if w:
            return w
        b11 = assemble("B", n).subs({"y": ONE, "z": ONE})
        w = _diff(n, "triangle assembly at unit slots vs recurrence", b11, poly)
        if w:
            return w
    return None


def _run_ascent_plateau_rows(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        k1 = Polynomial()
        for (k, l), v in family_row("E", n + 1).items():
            if k == 1:
                k1 = k1 + mono(v, x=l)
        enum = stat_polynomial(stirling_permutations(n), {"ap": "x"})
        w = _diff(n, "single-slice row one level up vs plateau-start enumeration", k1, enum)
        if w:
            return w
    return None


def _run_bessel_diagonal(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        left = assemble("E", n).subs({"x": ONE, "y": ONE})
        right = bessel_polynomial(n)
        w = _diff(n, "triangle assembly at unit slots vs weighted-pairing polynomial", left, right)
        if w:
            return w
        w = _diff(
            n,
            "weighted-pairing polynomial vs diagonal recurrence at unit slot",
            right,
            ctilde_xx(n).subs({"x": ONE}),
        )
        if w:
            return w
    return None


def _run_updown_runs(lo: int, hi: int) -> Optional[Witness]:
    for n in range(lo, hi + 1):
        poly = assemble("updown-run-x", n)
        enum = stat_polynomial(permutations(n), {"udrun": "x"})
        w = _diff(n, "derivative recurrence vs alternating-run enumeration", poly, enum)
        if w:
            return w
    return None


def _run_updown_normal_order(lo: int, hi: int) -> Optional[Witness]:
    g = Grammar.preset("swap")
    x, z = variable("x"), variable("z")
    for n in range(lo, hi + 1):
        nf = normal_order_power(x, g, n)
        tri = assemble("W", n)
        w = _diff(n, "normal order vs triangle assembly", nf.specialize(z), tri)
        if w:
            return w
        w = _diff(
            n,
            "assembly at unit first slots vs rising factorial",
            tri.subs({"x": ONE, "y": ONE}),
            rising_factorial("z", n),
        )
        if w:
            return w
        t = assemble("updown-run-x", n)
        hom = Polynomial()
        for m, c in t.terms():
            l = m.exponent("x")
            hom = hom + mono(c, x=l, y=n - l)
        w = _diff(
            n,
            "assembly at unit third slot vs homogenized alternating-run polynomial",
            tri.subs({"z": ONE}),
            hom,
        )
        if w:
            return w
    return None


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_SPECS: List[CheckSpec] = [
    CheckSpec(
        "stirling-second-dual",
        "iterated derivative of the growing symbol equals the set-partition row",
        0, 10, 8, _run_stirling_second_dual,
    ),
    CheckSpec(
        "stirling-second-normal-order",
        "normal ordering over the constant rule matches set-partition counts",
        0, 10, 8, _run_stirling_second_normal_order,
    ),
    CheckSpec(
        "stirling-first-surrogate",
        "normal ordering over the self-reproducing rule matches cycle counts",
        0, 10, 8, _run_stirling_first_surrogate,
    ),
    CheckSpec(
        "eulerian-grammar-self-dual",
        "both symbols derive to the same descent polynomial, matched by enumeration",
        1, 8, 6, _run_eulerian_grammar_self_dual,
    ),
    CheckSpec(
        "binary-forest-triple",
        "normal order, triangle recurrence and forest enumeration agree",
        1, 9, 6, _run_binary_forest_triple,
    ),
    CheckSpec(
        "eulerian-specialization-chain",
        "triangle specializations reach set-partition, descent and cycle counts",
        1, 8, 8, _run_eulerian_specialization_chain,
    ),
    CheckSpec(
        "pq-eulerian-cycle-stats",
        "weighted normal order tracks excedances, cycle descents and cycles",
        1, 8, 6, _run_pq_eulerian_cycle_stats,
    ),
    CheckSpec(
        "full-binary-forest-triple",
        "normal order, triangle recurrence and two-child forest enumeration agree",
        1, 6, 5, _run_full_binary_forest_triple,
    ),
    CheckSpec(
        "gamma-basis-expansion",
        "paired-symbol expansion of the assembly matches its own recurrence",
        1, 8, 6, _run_gamma_basis_expansion,
    ),
    CheckSpec(
        "lah-closed-form",
        "list counts match the binomial-factorial closed form and row sums",
        1, 10, 8, _run_lah_closed_form,
    ),
    CheckSpec(
        "list-partition-ascents",
        "ascent statistics over list partitions reproduce the triangle",
        1, 6, 5, _run_list_partition_ascents,
    ),
    CheckSpec(
        "gamma-valley-enumeration",
        "valley counts without double descents reproduce the paired triangle",
        1, 6, 5, _run_gamma_valley_enumeration,
    ),
    CheckSpec(
        "second-order-row-polynomial",
        "applying the operator power to its multiplier homogenizes the plateau row",
        1, 10, 8, _run_second_order_row_polynomial,
    ),
    CheckSpec(
        "ternary-forest-triple",
        "normal order, triangle recurrence and three-child forest enumeration agree",
        1, 7, 5, _run_ternary_forest_triple,
    ),
    CheckSpec(
        "second-order-row-link",
        "the single-slice row one level up equals the plateau triangle row",
        1, 9, 8, _run_second_order_row_link,
    ),
    CheckSpec(
        "catalan-egf",
        "the diagonal series equals the exponential of a Catalan argument",
        0, 10, 6, _run_catalan_egf,
    ),
    CheckSpec(
        "ctilde-diagonal-recurrence",
        "the assembled diagonal satisfies its own first-order recurrence",
        0, 10, 8, _run_ctilde_diagonal,
    ),
    CheckSpec(
        "bessel-closed-form",
        "the diagonal matches the factorial closed form for weighted pairings",
        1, 10, 8, _run_bessel_closed_form,
    ),
    CheckSpec(
        "trivariate-second-order",
        "four constructions of the symmetric trivariate polynomial coincide",
        1, 6, 5, _run_trivariate_second_order,
    ),
    CheckSpec(
        "full-ternary-forest",
        "normal order over three constant rules matches forest leaf tallies",
        1, 6, 4, _run_full_ternary_forest,
    ),
    CheckSpec(
        "stirling-list-distribution",
        "normal order matches statistics over block partitions into repeated words",
        1, 5, 4, _run_stirling_list_distribution,
    ),
    CheckSpec(
        "beta-e-expansion",
        "each operator slice expands positively in elementary symmetric functions",
        1, 6, 4, _run_beta_e_expansion,
    ),
    CheckSpec(
        "beta-positivity",
        "the surrogate normal order reproduces the nonnegative triangle",
        1, 8, 6, _run_beta_positivity,
    ),
    CheckSpec(
        "type-b-eulerian-numbers",
        "the signed-descent row recurrence matches the derivative recurrence",
        0, 9, 7, _run_type_b_eulerian_numbers,
    ),
    CheckSpec(
        "signed-permutation-descents",
        "signed-word descent enumeration reproduces the recurrence polynomial",
        0, 7, 5, _run_signed_permutation_descents,
    ),
    CheckSpec(
        "swap-grammar-expansion",
        "the swap-rule operator expands into the even-odd split triangle",
        1, 9, 7, _run_swap_grammar_expansion,
    ),
    CheckSpec(
        "half-square-grammar-expansion",
        "the square-split operator expands into its own triangle and row form",
        1, 9, 7, _run_half_square_grammar_expansion,
    ),
    CheckSpec(
        "type-b-normal-order-rows",
        "the single-slice row one level up equals the signed-descent row",
        0, 9, 7, _run_type_b_normal_order_rows,
    ),
    CheckSpec(
        "flag-ascent-plateau",
        "flagged plateau-start counts match the recurrence and the triangle",
        0, 7, 5, _run_flag_ascent_plateau,
    ),
    CheckSpec(
        "ascent-plateau-rows",
        "plateau-start counts match the single-slice row one level up",
        0, 7, 5, _run_ascent_plateau_rows,
    ),
    CheckSpec(
        "bessel-diagonal",
        "unit-slot assembly equals the weighted-pairing polynomial",
        1, 10, 8, _run_bessel_diagonal,
    ),
    CheckSpec(
        "updown-runs",
        "alternating-run enumeration matches the derivative recurrence",
        0, 8, 6, _run_updown_runs,
    ),
    CheckSpec(
        "updown-normal-order",
        "the swap-rule single-symbol operator reaches cycle counts and run polynomials",
        0, 10, 8, _run_updown_normal_order,
    ),
]

REGISTRY: Dict[str, CheckSpec] = {spec.check_id: spec for spec in _SPECS}
assert len(REGISTRY) == len(_SPECS)


def check_ids() -> List[str]:
    """All registered check ids, sorted."""
    return sorted(REGISTRY)


def _execute(spec: CheckSpec, n_max: int) -> CheckResult:
    witness = spec.runner(spec.n_min, n_max)
    status = "pass" if witness is None else "fail"
    return CheckResult(spec.check_id, (spec.n_min, n_max), status, witness)


def run_check(check_id: str, n_max: Optional[int] = None) -> CheckResult:
    """Run one registered check through level ``n_max`` (default: its full cap)."""
    spec = REGISTRY.get(check_id)
    if spec is None:
        known = ", ".join(check_ids())
        raise KeyError(f"unknown check {check_id!r}; known: {known}")
    if n_max is None:
        n_max = spec.full_cap
    if n_max > spec.full_cap:
        raise ValueError(f"{check_id} is capped at n={spec.full_cap}, requested {n_max}")
    if n_max < spec.n_min:
        raise ValueError(f"{check_id} starts at n={spec.n_min}, requested {n_max}")
    return _execute(spec, n_max)


def run_all(profile: str = "full") -> List[CheckResult]:
    """Run every registered check under the named profile, sorted by id."""
    if profile not in ("quick", "full"):
        raise ValueError(f"profile must be quick or full, got {profile!r}")
    results = []
    for check_id in check_ids():
        spec = REGISTRY[check_id]
        cap = spec.full_cap if profile == "full" else spec.quick_cap
        results.append(_execute(spec, cap))
    return results


def render_report(results: List[CheckResult]) -> str:
    lines = [result.render() for result in results]
    passed = sum(1 for r in results if r.passed)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)


def results_to_json(results: List[CheckResult]) -> List[dict]:
    return [result.to_json_dict() for result in results]
