"""Coefficient triangles built from their recurrences, plus assembled polynomials.

Each family of normal-order coefficients (or classical companion numbers)
is generated bottom-up from its defining recurrence, never from closed
forms, so the triangles serve as an independent computation path against
operator expansions and brute-force enumeration.  Rows are cached; keys
are plain index tuples.

Multi-index families and their row keys:

    A, Ap, a, gamma, C    (k, l)     Ap stores polynomials in p, others ints
    beta                  (k, j, l)
    B, E, W               (k, l)
    S2, S1, eulerian, eulerian2, eulerianB, lah    (k,)
    bessel                (j,)       closed form (n+j)!/(2^j (n-j)! j!)
    catalan               ()         one number per row

``assemble`` turns a family row into its generating polynomial in the
standard symbol layout (x/y graded by leaf type, z marking the operator
power, and u/v/w/q for the elementary-symmetric family).  ``gamma_expand``
and ``e_expand`` rewrite symmetric polynomials in the bases
(xy)^l * (x+y)^(d-2l) and e1^i * e2^j * e3^k respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable, Mapping, Union

from .poly import ONE, Polynomial, variable

Entry = Union[int, Polynomial]
Row = Mapping[tuple, Entry]

_P = variable("p")


def _bump(row: dict, key: tuple, value: Entry) -> None:
    if value == 0:
        return
    prev = row.get(key)
    row[key] = value if prev is None else prev + value


# Each step maps the row at level n to the row at level n+1 by pushing the
# three (or four) contributions of an entry to its children.


def _step_A(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k, l), v in prev.items():
        _bump(nxt, (k, l), l * v)
        _bump(nxt, (k, l + 1), (n - l) * v)
        _bump(nxt, (k + 1, l + 1), v)
    return nxt


def _step_Ap(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k, l), v in prev.items():
        _bump(nxt, (k, l), v * l)
        if n - l:
            _bump(nxt, (k, l + 1), v * (n - l) * _P)
        _bump(nxt, (k + 1, l + 1), v)
    return nxt


def _step_a(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k, l), v in prev.items():
        _bump(nxt, (k, l), l * v)
        _bump(nxt, (k, l + 1), (n + k - l) * v)
        _bump(nxt, (k + 1, l + 1), v)
    return nxt


def _step_gamma(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k, l), v in prev.items():
        _bump(nxt, (k, l), l * v)
        _bump(nxt, (k, l + 1), 2 * (n + k - 2 * l) * v)
        _bump(nxt, (k + 1, l + 1), v)
    return nxt


def _step_C(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k, l), v in prev.items():
        _bump(nxt, (k, l), l * v)
        _bump(nxt, (k, l + 1), (2 * n - k - l) * v)
        _bump(nxt, (k + 1, l + 1), v)
    return nxt


def _step_beta(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k, j, l), v in prev.items():
        _bump(nxt, (k, j + 1, l), (l + k) * v)
        if j:
            _bump(nxt, (k, j - 1, l + 1), 2 * j * v)
        _bump(nxt, (k, j, l + 1), 3 * (2 * n - 2 * k - 2 * j - 3 * l) * v)
        _bump(nxt, (k + 1, j, l), v)
    return nxt


def _step_B(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k, l), v in prev.items():
        _bump(nxt, (k, l), (k + 2 * l) * v)
        _bump(nxt, (k, l + 1), (2 * n - k - 2 * l) * v)
        _bump(nxt, (k + 1, l), v)
    return nxt


def _step_E(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k, l), v in prev.items():
        _bump(nxt, (k, l), (k + 2 * l) * v)
        _bump(nxt, (k, l + 1), (2 * n - 2 * k - 2 * l) * v)
        _bump(nxt, (k + 1, l), v)
    return nxt


def _step_W(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k, l), v in prev.items():
        _bump(nxt, (k, l), (k + 2 * l) * v)
        _bump(nxt, (k, l + 1), (n - k - 2 * l) * v)
        _bump(nxt, (k + 1, l), v)
    return nxt


def _step_S2(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k,), v in prev.items():
        _bump(nxt, (k,), k * v)
        _bump(nxt, (k + 1,), v)
    return nxt


def _step_S1(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k,), v in prev.items():
        _bump(nxt, (k,), n * v)
        _bump(nxt, (k + 1,), v)
    return nxt


def _step_eulerian(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k,), v in prev.items():
        _bump(nxt, (k,), k * v)
        _bump(nxt, (k + 1,), (n - k + 1) * v)
    return nxt


def _step_eulerian2(prev: Row, n: int) -> dict:
    # Gap insertion in Stirling permutations: a new pair lands in one of
    # the 2n+1 gaps; descents are preserved or created accordingly.
    nxt: dict = {}
    for (l,), v in prev.items():
        _bump(nxt, (l,), l * v)
        _bump(nxt, (l + 1,), (2 * n + 1 - l) * v)
    return nxt


def _step_eulerianB(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k,), v in prev.items():
        _bump(nxt, (k,), (1 + 2 * k) * v)
        _bump(nxt, (k + 1,), (2 * n - 2 * k + 1) * v)
    return nxt


def _step_lah(prev: Row, n: int) -> dict:
    nxt: dict = {}
    for (k,), v in prev.items():
        _bump(nxt, (k,), (n + k) * v)
        _bump(nxt, (k + 1,), v)
    return nxt


def _row_bessel(n: int) -> dict:
    row: dict = {}
    for j in range(n + 1):
        num = factorial(n + j)
        den = (1 << j) * factorial(n - j) * factorial(j)
        q, r = divmod(num, den)
        assert r == 0
        row[(j,)] = q
    return row


def _row_catalan(n: int) -> dict:
    if n == 0:
        return {(): 1}
    total = 0
    for i in range(n):
        total += _row("catalan", i)[()] * _row("catalan", n - 1 - i)[()]
    return {(): total}


@dataclass(frozen=True)
class FamilySpec:
    indices: tuple[str, ...]
    start: int
    base: Mapping[tuple, Entry]
    step: Callable[[Row, int], dict] | None = None
    row_fn: Callable[[int], dict] | None = None


FAMILIES: dict[str, FamilySpec] = {
    "A": FamilySpec(("k", "l"), 1, {(1, 1): 1}, _step_A),
    "Ap": FamilySpec(("k", "l"), 1, {(1, 1): ONE}, _step_Ap),
    "a": FamilySpec(("k", "l"), 1, {(1, 1): 1}, _step_a),
    "gamma": FamilySpec(("k", "l"), 1, {(1, 1): 1}, _step_gamma),
    "C": FamilySpec(("k", "l"), 1, {(1, 1): 1}, _step_C),
    "beta": FamilySpec(("k", "j", "l"), 1, {(1, 0, 0): 1}, _step_beta),
    "B": FamilySpec(("k", "l"), 1, {(1, 0): 1}, _step_B),
    "E": FamilySpec(("k", "l"), 1, {(1, 0): 1}, _step_E),
    "W": FamilySpec(("k", "l"), 1, {(1, 0): 1}, _step_W),
    "S2": FamilySpec(("k",), 0, {(0,): 1}, _step_S2),
    "S1": FamilySpec(("k",), 0, {(0,): 1}, _step_S1),
    "eulerian": FamilySpec(("k",), 0, {(0,): 1}, _step_eulerian),
    "eulerian2": FamilySpec(("k",), 1, {(1,): 1}, _step_eulerian2),
    "eulerianB": FamilySpec(("k",), 0, {(0,): 1}, _step_eulerianB),
    "lah": FamilySpec(("k",), 1, {(1,): 1}, _step_lah),
    "bessel": FamilySpec(("j",), 0, {(0,): 1}, row_fn=_row_bessel),
    "catalan": FamilySpec((), 0, {(): 1}, row_fn=_row_catalan),
}

FAMILY_NAMES: tuple[str, ...] = tuple(FAMILIES)


@lru_cache(maxsize=None)
def _row(family: str, n: int) -> Row:
    spec = FAMILIES.get(family)
    if spec is None:
        known = ", ".join(FAMILY_NAMES)
        raise KeyError(f"unknown family {family!r}; known families: {known}")
    if n < spec.start:
        raise ValueError(f"family {family!r} starts at n = {spec.start}")
    if spec.row_fn is not None:
        return spec.row_fn(n)
    if n == spec.start:
        return dict(spec.base)
    return spec.step(_row(family, n - 1), n - 1)


def family_row(family: str, n: int) -> dict[tuple, Entry]:
    """One row of a family as a fresh dict keyed by the index tuple."""
    return dict(_row(family, n))


@dataclass(frozen=True)
class Triangle:
    """Materialised rows of one family, keyed (n, *indices)."""

    family: str
    max_n: int
    entries: Mapping[tuple, Entry]

    def entry(self, n: int, *indices: int) -> Entry:
        return self.entries.get((n, *indices), 0)

    def row(self, n: int) -> dict[tuple, Entry]:
        return {key[1:]: v for key, v in self.entries.items() if key[0] == n}


def build_triangle(family: str, max_n: int) -> Triangle:
    spec = FAMILIES.get(family)
    if spec is None:
        known = ", ".join(FAMILY_NAMES)
        raise KeyError(f"unknown family {family!r}; known families: {known}")
    entries: dict[tuple, Entry] = {}
    for n in range(spec.start, max_n + 1):
        for idx, v in _row(family, n).items():
            entries[(n, *idx)] = v
    return Triangle(family=family, max_n=max_n, entries=entries)


# -- assembled polynomials -------------------------------------------------


def _poly(acc: dict) -> Polynomial:
    return Polynomial(acc)


def _mono_key(**exps: int):
    from .poly import Monomial

    return Monomial({s: e for s, e in exps.items() if e})


def _assemble_A(n: int) -> Polynomial:
    if n == 0:
        return ONE
    acc = {}
    for (k, l), v in _row("A", n).items():
        acc[_mono_key(x=l, y=n - l, z=k)] = v
    return _poly(acc)


def _assemble_Ap(n: int) -> Polynomial:
    if n == 0:
        return ONE
    total = Polynomial()
    for (k, l), v in _row("Ap", n).items():
        total = total + v * _poly({_mono_key(x=l, y=n - l, z=k): 1})
    return total


def _assemble_a(n: int) -> Polynomial:
    if n == 0:
        return ONE
    acc = {}
    for (k, l), v in _row("a", n).items():
        acc[_mono_key(x=l, y=n + k - l, z=k)] = v
    return _poly(acc)


def _assemble_Ct(n: int) -> Polynomial:
    if n == 0:
        return ONE
    acc = {}
    for (k, l), v in _row("C", n).items():
        acc[_mono_key(x=l, y=2 * n - k - l, z=k)] = v
    return _poly(acc)


def _assemble_beta(n: int) -> Polynomial:
    if n == 0:
        return ONE
    acc = {}
    for (k, j, l), v in _row("beta", n).items():
        acc[_mono_key(u=2 * n - 2 * k - 2 * j - 3 * l, v=j, w=l + k, q=k)] = v
    return _poly(acc)


def _assemble_B(n: int) -> Polynomial:
    if n == 0:
        return ONE
    acc = {}
    for (k, l), v in _row("B", n).items():
        acc[_mono_key(x=k + 2 * l, y=2 * n - k - 2 * l, z=k)] = v
    return _poly(acc)


def _assemble_E(n: int) -> Polynomial:
    if n == 0:
        return ONE
    acc = {}
    for (k, l), v in _row("E", n).items():
        acc[_mono_key(x=k + 2 * l, y=2 * n - 2 * k - 2 * l, z=k)] = v
    return _poly(acc)


def _assemble_W(n: int) -> Polynomial:
    if n == 0:
        return ONE
    acc = {}
    for (k, l), v in _row("W", n).items():
        acc[_mono_key(x=k + 2 * l, y=n - k - 2 * l, z=k)] = v
    return _poly(acc)


def _iterate(n: int, start: Polynomial, step: Callable[[Polynomial, int], Polynomial]) -> Polynomial:
    f = start
    for m in range(n):
        f = step(f, m)
    return f


def _assemble_eulerian_x(n: int) -> Polynomial:
    x = variable("x")
    one_minus = ONE - x

    def step(f: Polynomial, m: int) -> Polynomial:
        return (m + 1) * x * f + x * one_minus * f.diff("x")

    return _iterate(n, ONE, step)


def _assemble_eulerian_xq(n: int) -> Polynomial:
    if n < 1:
        raise ValueError("the cycle-refined family starts at n = 1")
    x, q = variable("x"), variable("q")
    one_minus = ONE - x

    def step(f: Polynomial, m: int) -> Polynomial:
        return ((m + 1) * x + q) * f + x * one_minus * f.diff("x")

    return _iterate(n - 1, ONE, step)


def _assemble_type_b_x(n: int) -> Polynomial:
    x = variable("x")
    one_minus = ONE - x

    def step(f: Polynomial, m: int) -> Polynomial:
        return (ONE + (2 * m + 1) * x) * f + 2 * x * one_minus * f.diff("x")

    return _iterate(n, ONE, step)


def _assemble_second_order_x(n: int) -> Polynomial:
    if n == 0:
        return ONE
    acc = {}
    for (l,), v in _row("eulerian2", n).items():
        acc[_mono_key(x=l)] = v
    return _poly(acc)


def _assemble_second_order_xyz(n: int) -> Polynomial:
    if n == 0:
        return ONE
    f = _poly({_mono_key(x=1, y=1, z=1): 1})
    xyz = f
    for _ in range(n - 1):
        f = xyz * (f.diff("x") + f.diff("y") + f.diff("z"))
    return f


def _assemble_fap_x(n: int) -> Polynomial:
    x = variable("x")
    x2 = x * x

    def step(f: Polynomial, m: int) -> Polynomial:
        return (x + 2 * m * x2) * f + x * (ONE - x2) * f.diff("x")

    return _iterate(n, ONE, step)


def _assemble_updown_x(n: int) -> Polynomial:
    x = variable("x")
    x2 = x * x

    def step(f: Polynomial, m: int) -> Polynomial:
        return x * (ONE + m * x) * f + x * (ONE - x2) * f.diff("x")

    return _iterate(n, ONE, step)


ASSEMBLERS: dict[str, Callable[[int], Polynomial]] = {
    "A": _assemble_A,
    "Ap": _assemble_Ap,
    "a": _assemble_a,
    "Ct": _assemble_Ct,
    "beta": _assemble_beta,
    "B": _assemble_B,
    "E": _assemble_E,
    "W": _assemble_W,
    "eulerian-x": _assemble_eulerian_x,
    "eulerian-xq": _assemble_eulerian_xq,
    "type-b-x": _assemble_type_b_x,
    "second-order-x": _assemble_second_order_x,
    "second-order-xyz": _assemble_second_order_xyz,
    "flag-ascent-plateau-x": _assemble_fap_x,
    "updown-run-x": _assemble_updown_x,
}


def assemble(name: str, n: int) -> Polynomial:
    """Generating polynomial of a family at level n (exact, recurrence-built)."""
    fn = ASSEMBLERS.get(name)
    if fn is None:
        known = ", ".join(sorted(ASSEMBLERS))
        raise KeyError(f"unknown assembly {name!r}; known: {known}")
    if n < 0:
        raise ValueError("level must be nonnegative")
    return fn(n)


def ctilde_xx(n: int) -> Polynomial:
    """Diagonal x = y of the second-order family, via its own recurrence."""
    x, z = variable("x"), variable("z")
    x2 = x * x

    def step(f: Polynomial, m: int) -> Polynomial:
        return (x * z + 2 * m * x2) * f - x2 * z * f.diff("z")

    return _iterate(n, ONE, step)


def rising_factorial(name: str, n: int) -> Polynomial:
    """The product v(v+1)...(v+n-1) in the symbol ``name``."""
    v = variable(name)
    out = ONE
    for i in range(n):
        out = out * (v + i)
    return out


# -- symmetric-basis expansions -------------------------------------------


def gamma_expand(
    f: Polynomial, slice_symbol: str = "z", pair: tuple[str, str] = ("x", "y")
) -> dict[tuple[int, int], int]:
    """Expand each slice_symbol^k slice in the basis (xy)^l * (x+y)^(d-2l).

    Every slice must be an ordinary polynomial in the pair symbols,
    homogeneous and symmetric under swapping them.  Returns the mapping
    (k, l) -> coefficient; coefficients may be negative for inputs outside
    the positivity results.
    """
    x, y = pair
    xv, yv = variable(x), variable(y)
    swap = {x: yv, y: xv}
    out: dict[tuple[int, int], int] = {}
    for k, g in f.slices(slice_symbol).items():
        if k < 0:
            raise ValueError(f"negative power of {slice_symbol!r}")
        extra = g.variables() - {x, y}
        if extra:
            raise ValueError(f"slice at {slice_symbol}^{k} involves {sorted(extra)}")
        d = g.homogeneous_degree()
        if d is None:
            raise ValueError(f"slice at {slice_symbol}^{k} is not homogeneous")
        if g.subs(swap) != g:
            raise ValueError(f"slice at {slice_symbol}^{k} is not symmetric in {x}, {y}")
        if any(e < 0 for m, _ in g.terms() for _, e in m.pairs):
            raise ValueError("negative exponents have no expansion in this basis")
        residual = g
        xy = xv * yv
        x_plus_y = xv + yv
        while not residual.is_zero:
            l = min(m.exponent(x) for m, _ in residual.terms())
            c = residual.coefficient({x: l, y: d - l})
            residual = residual - c * (xy ** l) * (x_plus_y ** (d - 2 * l))
            out[(k, l)] = c
    return out


def e_expand(
    f: Polynomial, symbols: tuple[str, str, str] = ("x", "y", "z")
) -> dict[tuple[int, int, int], int]:
    """Expand a fully symmetric polynomial in the elementary basis.

    Returns (i, j, k) -> coefficient with f = sum c * e1^i * e2^j * e3^k,
    where e1, e2, e3 are the elementary symmetric polynomials in the three
    symbols.  Raises ValueError if f is not symmetric.
    """
    x, y, z = symbols
    xv, yv, zv = variable(x), variable(y), variable(z)
    extra = f.variables() - set(symbols)
    if extra:
        raise ValueError(f"input involves symbols outside the basis: {sorted(extra)}")
    if any(e < 0 for m, _ in f.terms() for _, e in m.pairs):
        raise ValueError("negative exponents have no expansion in this basis")
    if f.subs({x: yv, y: xv}) != f or f.subs({y: zv, z: yv}) != f:
        raise ValueError(f"input is not symmetric in {x}, {y}, {z}")
    e1 = xv + yv + zv
    e2 = xv * yv + xv * zv + yv * zv
    e3 = xv * yv * zv
    out: dict[tuple[int, int, int], int] = {}
    residual = f
    while not residual.is_zero:
        lead = max(
            (m for m, _ in residual.terms()),
            key=lambda m: (m.exponent(x), m.exponent(y), m.exponent(z)),
        )
        a, b, c = lead.exponent(x), lead.exponent(y), lead.exponent(z)
        coeff = residual.coefficient(lead)
        # For a symmetric residual the lex-leading exponents are sorted.
        assert a >= b >= c
        i, j, k = a - b, b - c, c
        residual = residual - coeff * (e1 ** i) * (e2 ** j) * (e3 ** k)
        out[(i, j, k)] = coeff
    return out
