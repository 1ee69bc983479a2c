"""Substitution rules acting as a derivation on polynomials.

A grammar maps symbol names to replacement polynomials.  It induces the
unique linear operator D on polynomials that satisfies the Leibniz rule
and sends each symbol to its replacement; symbols without a rule behave
as constants and are annihilated.  On a single term this is the usual
formal chain rule:

    D(c * s1^e1 * ... * sk^ek) = c * sum_i ei * s1^e1 ... si^(ei-1) ... * rule(si)

Rule text uses the form ``"x -> y^2; y -> x*y"`` (whitespace optional).
A small registry of named presets covers the grammars exercised by the
verification checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .poly import Monomial, ParseError, Polynomial, Scalar, parse

# Preset grammars are data, not code: name -> rule text.
PRESETS: dict[str, str] = {
    "stirling-second": "x -> 1",
    "stirling-dual": "a -> a*b; b -> b",
    "eulerian-ab": "a -> a*b; b -> a*b",
    "eulerian-xy": "x -> y; y -> y",
    "eulerian-full": "x -> 1; y -> 1",
    "pq-eulerian": "x -> y; y -> p*y",
    "second-order": "x -> y^2; y -> y^2",
    "trivariate-second-order": "x -> x*y*z; y -> x*y*z; z -> x*y*z",
    "full-ternary": "x -> 1; y -> 1; z -> 1",
    "elementary-symmetric": "u -> 3; v -> 2*u; w -> v",
    "pair-symmetric": "u -> v; v -> 2",
    "type-b": "x -> x*y^2; y -> x^2*y",
    "swap": "x -> y; y -> x",
    "type-b-split": "x -> y^2; y -> x*y",
    "exp-surrogate": "a -> a",
}


@dataclass(frozen=True)
class Grammar:
    """Finite set of rules symbol -> polynomial, applied as a derivation."""

    rules: Mapping[str, Polynomial] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[str, Polynomial] = {}
        for name, rhs in self.rules.items():
            p = Polynomial._coerce(rhs)
            if p is None:
                raise TypeError(f"rule for {name!r} is not a polynomial")
            clean[name] = p
        object.__setattr__(self, "rules", clean)

    @staticmethod
    def from_text(text: str) -> "Grammar":
        """Parse ``"x -> y^2; y -> x*y"`` style rule text."""
        rules: dict[str, Polynomial] = {}
        for chunk in text.split(";"):
            if not chunk.strip():
                continue
            head, sep, body = chunk.partition("->")
            if not sep:
                raise ParseError(f"rule {chunk.strip()!r} is missing '->'", 0)
            name = head.strip()
            if not name.isidentifier():
                raise ParseError(f"bad rule symbol {name!r}", 0)
            if name in rules:
                raise ParseError(f"duplicate rule for {name!r}", 0)
            rules[name] = parse(body)
        return Grammar(rules)

    @staticmethod
    def preset(name: str) -> "Grammar":
        try:
            text = PRESETS[name]
        except KeyError:
            known = ", ".join(sorted(PRESETS))
            raise KeyError(f"unknown preset {name!r}; known presets: {known}") from None
        return Grammar.from_text(text)

    def render_rules(self) -> str:
        return "; ".join(f"{s} -> {p.render()}" for s, p in sorted(self.rules.items()))

    def __str__(self) -> str:
        return self.render_rules()

    def derive(self, f: Polynomial | Scalar) -> Polynomial:
        """Apply the induced derivation once."""
        p = Polynomial._coerce(f)
        if p is None:
            raise TypeError("derive expects a polynomial or exact scalar")
        acc: dict[Monomial, Scalar] = {}
        for m, c in p.terms():
            for s, e in m.pairs:
                rule = self.rules.get(s)
                if rule is None:
                    continue
                lowered = Monomial(tuple((t, x - 1 if t == s else x) for t, x in m.pairs))
                weight = c * e
                for mr, cr in rule.terms():
                    mm = lowered.mul(mr)
                    acc[mm] = acc.get(mm, 0) + weight * cr
        return Polynomial(acc)

    def derive_power(self, f: Polynomial | Scalar, n: int) -> Polynomial:
        """Apply the derivation ``n`` times (``n >= 0``)."""
        if n < 0:
            raise ValueError("repeat count must be nonnegative")
        p = Polynomial._coerce(f)
        if p is None:
            raise TypeError("derive_power expects a polynomial or exact scalar")
        for _ in range(n):
            p = self.derive(p)
        return p
