"""Exact scalar arithmetic: rationals, Laurent polynomials in lambda, and Q(sqrt 5).

Rationals are plain :class:`fractions.Fraction` values.  The two other rings
interoperate with ``int`` and ``Fraction`` through the usual operators, which
is the whole coefficient-ring contract the series engine relies on
(``+``, ``-``, ``*``, ``==`` and, for units, ``1 / x``).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, LaurentPoly) and x.is_constant():
        return x.constant_term()
    if isinstance(x, QuadNum) and x.is_rational():
        return x.rational
    raise TypeError(f"not an exact rational: {x!r}")


def format_rational(q) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"``, ``"-p"`` or ``"p/q"`` (the unicode minus is accepted too)."""
    m = _RATIONAL_RE.match(text.replace("−", "-"))
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


class LaurentPoly:
    """Finite sum of ``c * lam**e`` with rational ``c`` and integer ``e``.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for e, c in items:
            if not isinstance(e, int):
                raise TypeError(f"exponent must be int, got {e!r}")
            acc[e] = acc.get(e, Fraction(0)) + as_fraction(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> LaurentPoly:
        # terms must already be normalized (no zeros)
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def var(cls) -> LaurentPoly:
        return cls._raw({1: Fraction(1)})

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: Scalar) -> LaurentPoly:
        return cls({0: c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coeff(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def is_constant(self) -> bool:
        return not self._terms or list(self._terms) == [0]

    def constant_term(self) -> Fraction:
        return self.coeff(0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly._raw({0: Fraction(other)} if other else {})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> LaurentPoly:
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def inverse(self) -> LaurentPoly:
        """Multiplicative inverse; only monomials are units."""
        if not self.is_monomial():
            raise ValueError(f"{self} is not a unit in Q[lambda, 1/lambda]")
        (e, c), = self._terms.items()
        return LaurentPoly._raw({-e: 1 / c})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of LaurentPoly by zero")
            return self * (Fraction(1) / other)
        if isinstance(other, LaurentPoly):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if self.is_monomial():
            (e, c), = self._terms.items()
            return LaurentPoly._raw({e * k: c ** k})
        result = LaurentPoly._raw({0: Fraction(1)})
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- lambda-specific operations -------------------------------------------

    def eval(self, lam0) -> Fraction:
        return laurent_eval(self, lam0)

    def substitute_power(self, m: int) -> LaurentPoly:
        return laurent_substitute_power(self, m)

    def ddl(self) -> LaurentPoly:
        return laurent_ddl(self)

    # -- serialization -------------------------------------------------------

    def to_json_obj(self) -> dict[str, str]:
        return {str(e): format_rational(c) for e, c in self._terms.items()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, str]) -> LaurentPoly:
        return cls({int(e): parse_rational(c) for e, c in obj.items()})

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        obj = json.loads(text)
        if not isinstance(obj, dict):
            raise ValueError(f"expected a JSON object, got {text!r}")
        return cls.from_json_obj(obj)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_json_obj()})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            coef = format_rational(abs(c))
            if e == 0:
                body = coef
            else:
                power = "λ" if e == 1 else f"λ^{e}"
                body = power if coef == "1" else f"{coef}*{power}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


LAMBDA = LaurentPoly.var()


def laurent_eval(p: LaurentPoly, lam0) -> Fraction:
    """Specialize ``p`` at the nonzero rational ``lam0``."""
    lam0 = as_fraction(lam0)
    if lam0 == 0:
        raise ValueError("cannot evaluate a Laurent polynomial at lambda = 0")
    return sum((c * lam0 ** e for e, c in p._terms.items()), Fraction(0))


def laurent_substitute_power(p: LaurentPoly, m: int) -> LaurentPoly:
    """lambda -> lambda**m."""
    if m == 0:
        raise ValueError("substitution lambda -> lambda**0 is not allowed")
    return LaurentPoly._raw({e * m: c for e, c in p._terms.items()})


def laurent_ddl(p: LaurentPoly) -> LaurentPoly:
    """Formal derivative with respect to lambda."""
    return LaurentPoly._raw({e - 1: c * e for e, c in p._terms.items() if e != 0})


class QuadNum:
    """``rational + radical * sqrt(5)`` with rational parts."""

    __slots__ = ("rational", "radical")

    def __init__(self, rational: Scalar = 0, radical: Scalar = 0):
        self.rational = as_fraction(rational)
        self.radical = as_fraction(radical)

    @staticmethod
    def _coerce(other) -> QuadNum | None:
        if isinstance(other, QuadNum):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum(other, 0)
        return None

    def is_rational(self) -> bool:
        return self.radical == 0

    def conjugate(self) -> QuadNum:
        return QuadNum(self.rational, -self.radical)

    def norm(self) -> Fraction:
        return self.rational ** 2 - 5 * self.radical ** 2

    def __bool__(self) -> bool:
        return bool(self.rational) or bool(self.radical)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.rational + o.rational, self.radical + o.radical)

    __radd__ = __add__

    def __neg__(self) -> QuadNum:
        return QuadNum(-self.rational, -self.radical)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.rational, self.radical, o.rational, o.radical
        return QuadNum(a * c + 5 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> QuadNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse in Q(sqrt 5)")
        return QuadNum(self.rational / n, -self.radical / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> QuadNum:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = QuadNum(1)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.rational == o.rational and self.radical == o.radical

    def __hash__(self) -> int:
        if self.radical == 0:
            return hash(self.rational)
        return hash((self.rational, self.radical))

    def to_json_obj(self) -> dict[str, str]:
        return {"rational": format_rational(self.rational),
                "sqrt5": format_rational(self.radical)}

    def __repr__(self) -> str:
        return f"QuadNum({format_rational(self.rational)}, {format_rational(self.radical)})"

    def __str__(self) -> str:
        if self.radical == 0:
            return format_rational(self.rational)
        return f"{format_rational(self.rational)} + {format_rational(self.radical)}*√5"


SQRT5 = QuadNum(0, 1)
GOLDEN = QuadNum(Fraction(1, 2), Fraction(1, 2))       # (1 + sqrt5) / 2
GOLDEN_CONJ = QuadNum(Fraction(1, 2), Fraction(-1, 2))  # (1 - sqrt5) / 2


def serialize(value):
    """JSON-ready form of any exact value produced by this package."""
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, (LaurentPoly, QuadNum)):
        return value.to_json_obj()
    if isinstance(value, (tuple, list)):
        return [serialize(v) for v in value]
    if value is None:
        return None
    raise TypeError(f"cannot serialize {value!r}")


def deserialize(obj):
    """Inverse of :func:`serialize` for rationals and Laurent polynomials."""
    if isinstance(obj, str):
        return parse_rational(obj)
    if isinstance(obj, dict):
        if set(obj) == {"rational", "sqrt5"}:
            return QuadNum(parse_rational(obj["rational"]), parse_rational(obj["sqrt5"]))
        return LaurentPoly.from_json_obj(obj)
    if isinstance(obj, list):
        return [deserialize(v) for v in obj]
    raise TypeError(f"cannot deserialize {obj!r}")
