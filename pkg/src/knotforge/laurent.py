"""Exact Laurent polynomials in one variable, and the annular ring Z[A, A^-1][z].

Polynomials are immutable. Coefficients are Python ints, so nothing ever
overflows. A ``LaurentPoly`` carries a variable tag: ``"A"`` for Kauffman
brackets, ``"q"`` for Jones polynomials written in q = t^(1/2).
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

__all__ = [
    "LaurentPoly",
    "AnnularPoly",
    "TagMismatchError",
    "delta",
    "parse_poly",
]


class TagMismatchError(ValueError):
    """Raised when combining polynomials in different variables."""


def _clean(terms: Mapping[int, int]) -> dict[int, int]:
    return {int(e): int(c) for e, c in terms.items() if c}


class LaurentPoly:
    __slots__ = ("_terms", "_tag", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, tag: str = "A"):
        if tag not in ("A", "q"):
            raise ValueError(f"unknown variable tag {tag!r}")
        self._terms = _clean(terms or {})
        self._tag = tag
        self._hash = None

    # construction helpers

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, tag: str = "A") -> "LaurentPoly":
        return cls({exp: coeff}, tag)

    @classmethod
    def constant(cls, c: int, tag: str = "A") -> "LaurentPoly":
        return cls({0: c}, tag)

    @classmethod
    def zero(cls, tag: str = "A") -> "LaurentPoly":
        return cls({}, tag)

    # accessors

    @property
    def tag(self) -> str:
        return self._tag

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __getitem__(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # ring operations

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other._tag != self._tag:
                raise TagMismatchError(f"cannot combine {self._tag}-polynomial with {other._tag}-polynomial")
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other}, self._tag)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self._tag)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self._tag)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self._tag)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have negative powers")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit to invert")
            return LaurentPoly({e * k: c ** (-k)}, self._tag)
        result = LaurentPoly({0: 1}, self._tag)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int, coeff: int = 1) -> "LaurentPoly":
        """Multiply by ``coeff * var**k``."""
        return LaurentPoly({e + k: c * coeff for e, c in self._terms.items()}, self._tag)

    def divmod_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ``ArithmeticError`` on a nonzero remainder."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._terms)
        dtop = max(divisor._terms)
        dlead = divisor._terms[dtop]
        quot: dict[int, int] = {}
        dbot = min(divisor._terms)
        while rem:
            top = max(rem)
            if top - dtop < min(rem) - dbot:
                break
            c = rem[top]
            if c % dlead:
                raise ArithmeticError("inexact division")
            qc = c // dlead
            shift = top - dtop
            quot[shift] = qc
            for e, dc in divisor._terms.items():
                v = rem.get(e + shift, 0) - qc * dc
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        if rem:
            raise ArithmeticError("inexact division")
        return LaurentPoly(quot, self._tag)

    def mirror(self) -> "LaurentPoly":
        """Substitute var -> var^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()}, self._tag)

    def retag(self, tag: str) -> "LaurentPoly":
        return LaurentPoly(self._terms, tag)

    # breadth

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def breadth(self) -> tuple[int, int, int]:
        """Return ``(min exponent, max exponent, max - min)``."""
        lo, hi = self.min_exp(), self.max_exp()
        return lo, hi, hi - lo

    # comparison, hashing, display

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == _clean({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._tag == other._tag and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._tag, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_terms(self._terms, self._tag)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, tag={self._tag!r})"

    def t_string(self) -> str:
        """Render a q-tagged polynomial in t, using half-integer exponents where needed."""
        if self._tag != "q":
            raise TagMismatchError("t rendering is for q-tagged polynomials")
        parts = []
        for e, c in self:
            if e % 2 == 0:
                parts.append((c, "t", str(e // 2) if e != 0 else None))
            else:
                parts.append((c, "t", f"({e}/2)"))
        return _join(parts)


def _join(parts) -> str:
    if not parts:
        return "0"
    out = []
    for i, (c, var, exp) in enumerate(parts):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if exp is None:
            body = str(mag)
        else:
            mono = var if exp == "1" else f"{var}^{exp}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_terms(terms: Mapping[int, int], var: str) -> str:
    parts = [(c, var, None if e == 0 else str(e)) for e, c in sorted(terms.items(), reverse=True)]
    return _join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*(?:([A-Za-z])(?:\^\(?(-?\d+)\)?)?)?\s*")


def parse_poly(text: str, tag: str = "A") -> LaurentPoly:
    """Parse the canonical rendering, e.g. ``-A^97 + A^93 + 3*A^-5 - 2``."""
    text = text.strip()
    if text == "0":
        return LaurentPoly({}, tag)
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign, coeff, var, exp = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator near {text[pos:]!r}")
        if coeff is None and var is None:
            raise ValueError(f"empty term near {text[pos:]!r}")
        if var is not None and var != tag:
            raise TagMismatchError(f"expected variable {tag}, found {var}")
        c = int(coeff) if coeff is not None else 1
        if sign == "-":
            c = -c
        e = 0 if var is None else (int(exp) if exp is not None else 1)
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(terms, tag)


def delta() -> LaurentPoly:
    """The loop value -A^2 - A^-2."""
    return LaurentPoly({2: -1, -2: -1}, "A")


class AnnularPoly:
    """Polynomial in A^(+-1) and z, with z-degrees nonnegative.

    Stored as a map ``(a_exp, z_deg) -> coeff``.
    """

    __slots__ = ("_terms", "_tag")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None, tag: str = "A"):
        clean = {}
        for (a, z), c in (terms or {}).items():
            if z < 0:
                raise ValueError("z-degree must be nonnegative")
            if c:
                clean[(int(a), int(z))] = int(c)
        self._terms = clean
        self._tag = tag

    @classmethod
    def from_coefficients(cls, coeffs: Mapping[int, LaurentPoly]) -> "AnnularPoly":
        tags = {p.tag for p in coeffs.values()}
        tag = tags.pop() if tags else "A"
        if tags:
            raise TagMismatchError("mixed coefficient tags")
        terms: dict[tuple[int, int], int] = {}
        for k, p in coeffs.items():
            for e, c in p.terms.items():
                terms[(e, k)] = terms.get((e, k), 0) + c
        return cls(terms, tag)

    @property
    def tag(self) -> str:
        return self._tag

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def coefficient(self, k: int) -> LaurentPoly:
        """The Laurent coefficient of z^k."""
        return LaurentPoly({a: c for (a, z), c in self._terms.items() if z == k}, self._tag)

    def coefficients(self) -> dict[int, LaurentPoly]:
        return {k: self.coefficient(k) for k in sorted({z for _, z in self._terms})}

    def z_degree(self) -> int:
        """Top z-degree; -1 for the zero polynomial."""
        return max((z for _, z in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "AnnularPoly") -> "AnnularPoly":
        if other._tag != self._tag:
            raise TagMismatchError("annular tags differ")
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return AnnularPoly(out, self._tag)

    def __mul__(self, other) -> "AnnularPoly":
        if isinstance(other, LaurentPoly):
            other = AnnularPoly({(e, 0): c for e, c in other.terms.items()}, other.tag)
        if other._tag != self._tag:
            raise TagMismatchError("annular tags differ")
        out: dict[tuple[int, int], int] = {}
        for (a1, z1), c1 in self._terms.items():
            for (a2, z2), c2 in other._terms.items():
                key = (a1 + a2, z1 + z2)
                out[key] = out.get(key, 0) + c1 * c2
        return AnnularPoly(out, self._tag)

    __rmul__ = __mul__

    def substitute(self, values: Mapping[int, LaurentPoly] | None = None, z: LaurentPoly | None = None) -> LaurentPoly:
        """Replace z^k by ``values[k]`` (or by ``z**k``) and collapse to a LaurentPoly."""
        total = LaurentPoly({}, self._tag)
        for k, coeff in self.coefficients().items():
            if values is not None:
                total = total + coeff * values[k]
            else:
                total = total + coeff * (z ** k)
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, AnnularPoly):
            return NotImplemented
        return self._tag == other._tag and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._tag, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for k, coeff in sorted(self.coefficients().items(), reverse=True):
            zpart = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            body = f"({coeff})"
            pieces.append(body if not zpart else f"{body}*{zpart}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"AnnularPoly({str(self)!r})"


def sum_polys(polys: Iterable[LaurentPoly], tag: str = "A") -> LaurentPoly:
    out: dict[int, int] = {}
    for p in polys:
        for e, c in p.terms.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly(out, tag)
