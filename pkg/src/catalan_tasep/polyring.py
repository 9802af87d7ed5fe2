"""Exact bivariate polynomials in alpha and beta with big-integer coefficients.

A :class:`BivarPoly` maps exponent pairs ``(j, l)`` (power of alpha, power of
beta) to nonzero Python ints.  Instances are immutable and hashable.  Concrete
evaluation goes through :class:`fractions.Fraction`, which plays the role of
the exact rational type throughout the package.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rat = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "BivarPoly",
    "QPoly",
    "Rat",
    "ParseError",
    "ALPHA",
    "BETA",
    "ONE",
    "ZERO",
    "parse",
    "parse_rat",
    "monomial",
]

SUBSTITUTIONS = ("qq", "q1", "1q")


class ParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the offending character index."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def _graded_lex(exp: tuple[int, int]) -> tuple[int, int]:
    j, l = exp
    return (-(j + l), -j)


class BivarPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (j, l), c in terms.items():
                if j < 0 or l < 0:
                    raise ValueError(f"negative exponent in term {(j, l)}")
                c = int(c)
                if c:
                    clean[(int(j), int(l))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], int]) -> "BivarPoly":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivarPoly.const(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BivarPoly({self.format()!r})"

    __str__ = lambda self: self.format()  # noqa: E731

    # ring operations

    def __add__(self, other) -> "BivarPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return BivarPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "BivarPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "BivarPoly":
        return (-self) + other

    def __mul__(self, other) -> "BivarPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (j1, l1), c1 in self._terms.items():
            for (j2, l2), c2 in other._terms.items():
                e = (j1 + j2, l1 + l2)
                out[e] = out.get(e, 0) + c1 * c2
        return BivarPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivarPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # inspection

    def coeff(self, j: int, l: int) -> int:
        """Coefficient of ``alpha^j beta^l`` (zero when absent)."""
        return self._terms.get((j, l), 0)

    def degree(self) -> int:
        return max((j + l for j, l in self._terms), default=-1)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exponents(self) -> tuple[int, int]:
        if not self._terms:
            return (0, 0)
        return (min(j for j, _ in self._terms), min(l for _, l in self._terms))

    def shift(self, dj: int, dl: int) -> "BivarPoly":
        """Multiply by ``alpha^dj beta^dl``; negative shifts must divide exactly."""
        out = {}
        for (j, l), c in self._terms.items():
            if j + dj < 0 or l + dl < 0:
                raise ValueError(f"monomial shift ({dj}, {dl}) is not exact")
            out[(j + dj, l + dl)] = c
        return BivarPoly._raw(out)

    def exact_div(self, other: "BivarPoly") -> "BivarPoly":
        """Divide by ``other``, raising ``ArithmeticError`` if a remainder is left."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = max(other._terms, key=lambda e: (e[0], e[1]))
        lead_c = other._terms[lead_e]
        rem = self
        quot: dict[tuple[int, int], int] = {}
        while rem:
            e = max(rem._terms, key=lambda e: (e[0], e[1]))
            c = rem._terms[e]
            dj, dl = e[0] - lead_e[0], e[1] - lead_e[1]
            if dj < 0 or dl < 0 or c % lead_c:
                raise ArithmeticError("polynomial division is not exact")
            q = c // lead_c
            quot[(dj, dl)] = q
            rem = rem - other.shift(dj, dl) * q
        return BivarPoly._raw(quot)

    # evaluation and specialisation

    def eval(self, a: Scalar, b: Scalar) -> Fraction:
        a, b = Fraction(a), Fraction(b)
        total = Fraction(0)
        for (j, l), c in self._terms.items():
            total += c * a**j * b**l
        return total

    def __call__(self, a: Scalar, b: Scalar) -> Fraction:
        return self.eval(a, b)

    def substitute(self, mode: str) -> "QPoly":
        """Image in Z[q] under alpha=beta=q ("qq"), alpha=q, beta=1 ("q1") or alpha=1, beta=q ("1q")."""
        if mode not in SUBSTITUTIONS:
            raise ValueError(f"unknown substitution {mode!r}; expected one of {SUBSTITUTIONS}")
        out: dict[int, int] = {}
        for (j, l), c in self._terms.items():
            d = {"qq": j + l, "q1": j, "1q": l}[mode]
            out[d] = out.get(d, 0) + c
        return QPoly(out)

    # text and JSON forms

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._terms.items(), key=lambda t: _graded_lex(t[0]))

    def format(self) -> str:
        """Canonical text, e.g. ``a^2*b + 3*b - 1``."""
        if not self._terms:
            return "0"
        parts = []
        for idx, ((j, l), c) in enumerate(self.sorted_terms()):
            factors = []
            if j:
                factors.append("a" if j == 1 else f"a^{j}")
            if l:
                factors.append("b" if l == 1 else f"b^{l}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if idx == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"a": j, "b": l, "c": str(c)} for (j, l), c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, obj: Mapping | str) -> "BivarPoly":
        if isinstance(obj, str):
            obj = json.loads(obj)
        out: dict[tuple[int, int], int] = {}
        for t in obj["terms"]:
            e = (int(t["a"]), int(t["b"]))
            out[e] = out.get(e, 0) + int(t["c"])
        return cls(out)


def _coerce(x) -> BivarPoly:
    if isinstance(x, BivarPoly):
        return x
    if isinstance(x, int):
        return BivarPoly.const(x)
    return NotImplemented


def monomial(j: int, l: int, c: int = 1) -> BivarPoly:
    """``c * alpha^j * beta^l``."""
    return BivarPoly({(j, l): c})


ZERO = BivarPoly()
ONE = BivarPoly.const(1)
ALPHA = monomial(1, 0)
BETA = monomial(0, 1)


def parse(text: str) -> BivarPoly:
    """Parse the canonical grammar (``a`` for alpha, ``b`` for beta).

    Also accepts the unicode minus sign.  Whitespace is insignificant.
    """
    s = text.replace("−", "-")
    pos = 0
    n = len(s)

    def skip_ws(p):
        while p < n and s[p].isspace():
            p += 1
        return p

    def read_int(p):
        p = skip_ws(p)
        m = re.match(r"\d+", s[p:])
        if not m:
            raise ParseError("expected integer", p)
        return int(m.group()), p + m.end()

    terms: dict[tuple[int, int], int] = {}
    first = True
    pos = skip_ws(pos)
    if pos == n:
        raise ParseError("empty polynomial", pos)
    while True:
        pos = skip_ws(pos)
        sign = 1
        if pos < n and s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError("expected '+' or '-'", pos)
        first = False
        pos = skip_ws(pos)
        coef = None
        j = l = 0
        seen_var = False
        if pos < n and s[pos].isdigit():
            coef, pos = read_int(pos)
            pos = skip_ws(pos)
            if pos < n and s[pos] == "*":
                pos += 1
                pos = skip_ws(pos)
                if pos >= n or s[pos] not in "ab":
                    raise ParseError("expected variable after '*'", pos)
        for var in "ab":
            pos = skip_ws(pos)
            if pos < n and s[pos] == var:
                pos += 1
                seen_var = True
                exp = 1
                pos = skip_ws(pos)
                if pos < n and s[pos] == "^":
                    exp, pos = read_int(pos + 1)
                if var == "a":
                    j = exp
                else:
                    l = exp
                pos = skip_ws(pos)
                if var == "a" and pos < n and s[pos] == "*":
                    pos = skip_ws(pos + 1)
                    if pos >= n or s[pos] != "b":
                        raise ParseError("expected 'b' after '*'", pos)
        if coef is None and not seen_var:
            raise ParseError("expected a term", pos)
        c = sign * (1 if coef is None else coef)
        terms[(j, l)] = terms.get((j, l), 0) + c
        pos = skip_ws(pos)
        if pos == n:
            break
    return BivarPoly(terms)


def parse_rat(text: str) -> Fraction:
    """Parse ``p/q`` or an integer literal as an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


class QPoly:
    """Univariate integer polynomial in q, used for the q-specialisations."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] | None = None):
        if coeffs is None:
            coeffs = {}
        if not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        self._c = {int(d): int(c) for d, c in coeffs.items() if c}

    def coeff(self, d: int) -> int:
        return self._c.get(d, 0)

    def degree(self) -> int:
        return max(self._c, default=-1)

    def shift(self, d: int) -> "QPoly":
        if any(e + d < 0 for e in self._c):
            raise ValueError(f"q-shift by {d} is not exact")
        return QPoly({e + d: c for e, c in self._c.items()})

    def eval(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        return sum((c * x**d for d, c in self._c.items()), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"QPoly({self.format()!r})"

    def format(self) -> str:
        """Descending powers in the ``2q^5 + 3q^4 + 6q + 1`` style."""
        if not self._c:
            return "0"
        parts = []
        for idx, d in enumerate(sorted(self._c, reverse=True)):
            c = self._c[d]
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            if idx == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    __str__ = format

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Inverse of :meth:`format`; tolerant of irregular spacing."""
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ParseError("empty polynomial", 0)
        out: dict[int, int] = {}
        pos = 0
        for m in re.finditer(r"([+-]?)(\d*)(q(?:\^(\d+))?)?", s):
            if m.start() != pos:
                raise ParseError("unexpected character", pos)
            if m.end() == m.start():
                if m.start() == len(s):
                    break
                raise ParseError("unexpected character", pos)
            sign, num, var, exp = m.groups()
            if pos and not sign:
                raise ParseError("expected '+' or '-'", m.start())
            if not num and not var:
                raise ParseError("expected a term", m.start())
            c = int(num) if num else 1
            d = (int(exp) if exp else 1) if var else 0
            out[d] = out.get(d, 0) + (-c if sign == "-" else c)
            pos = m.end()
        if pos != len(s):
            raise ParseError("unexpected character", pos)
        return cls(out)
