"""Registry of identities among the families, checked exhaustively over grids.

Each :class:`Identity` maps a point ``(n, k, lam)`` to its two sides.  Entries
whose source is ``"printed"`` are encoded exactly as published, including
any defects; entries whose source is ``"derived"`` are independently derived
corrections.  An identity either is expected to hold on every point, or is
expected to be a ``paper-discrepancy``: at least one counterexample must
turn up and the corrected variant, if any, must hold everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, perm
from typing import Callable

from . import applications as apps
from . import families as fam
from .exact import GOLDEN, GOLDEN_CONJ, LAMBDA, LaurentPoly, QuadNum, format_rational, serialize

HOLDS = "holds"
DISCREPANCY = "paper-discrepancy"

# how lambda enters an identity
LAMBDA_FREE = "fixed"       # runs once per (n, k)
ANY_LAMBDA = "any"          # symbolic point plus every numeric lambda
NUMERIC_ONLY = "numeric"    # numeric lambdas only

DEFAULT_LAMBDAS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 5))


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class Identity:
    id: str
    statement: str
    sides: Callable
    expectation: str = HOLDS
    source: str = "printed"
    lam_mode: str = ANY_LAMBDA
    domain: Callable = field(default=lambda n, k, lam: True)
    corrected_variant: str | None = None

    def applies(self, n: int, k: int, lam) -> bool:
        return bool(self.domain(n, k, lam))


@dataclass(frozen=True)
class Witness:
    holds: bool
    lhs: object
    rhs: object

    def to_json_obj(self) -> dict:
        return {"holds": self.holds, "lhs": serialize(self.lhs), "rhs": serialize(self.rhs)}


REGISTRY: dict[str, Identity] = {}


def _register(*args, **kwargs) -> None:
    ident = Identity(*args, **kwargs)
    if ident.id in REGISTRY:
        raise ValueError(f"duplicate identity id {ident.id}")
    REGISTRY[ident.id] = ident


def _sum(terms, zero=Fraction(0)):
    return sum(terms, zero)


def _zero_for(lam):
    return LaurentPoly() if isinstance(lam, LaurentPoly) else Fraction(0)


def _symbolic_then_eval(fn, lam):
    """Evaluate ``fn`` on symbolic lambda, specialising afterwards if ``lam`` is numeric."""
    lhs, rhs = fn(LAMBDA)
    if isinstance(lam, LaurentPoly):
        return lhs, rhs
    return lhs.eval(lam), rhs.eval(lam)


def _pow2(e: int) -> Fraction:
    return Fraction(2) ** e


# ---------------------------------------------------------------------------
# Golombek sums, power sums and binomial sums
# ---------------------------------------------------------------------------

_register(
    "I-01", "sum_j C(k,j) j^n equals the n-th EGF coefficient of (e^t+1)^k",
    lambda n, k, lam: (fam.golombek_B(n, k, "explicit"), fam.golombek_B(n, k, "series")),
    lam_mode=LAMBDA_FREE,
)

_register(
    "I-02", "sum_{m=0}^{n} m^r = (B_{r+1}(n+1) - B_{r+1}(0)) / (r+1), with r = k",
    lambda n, r, lam: (
        _sum(Fraction(m ** r) for m in range(n + 1)),
        (fam.bernoulli_poly(r + 1, n + 1) - fam.bernoulli_poly(r + 1, 0)) / (r + 1),
    ),
    lam_mode=LAMBDA_FREE,
)


def _i03(n, k, lam):
    lhs = k ** n * lam ** k
    rhs = _sum(((-1) ** (k - l) * comb(k, l) * factorial(l) * fam.y1(n, l, lam)
                for l in range(k + 1)), _zero_for(lam))
    return lhs, rhs


_register("I-03", "k^n lam^k = sum_l (-1)^(k-l) C(k,l) l! y1(n,l;lam)", _i03)


def _i04(n, k, lam):
    lhs = fam.stirling2_lambda(n, k, lam ** 2)
    rhs = Fraction(factorial(k), 2 ** n) * _sum(
        (comb(n, l) * fam.stirling2_lambda(l, k, lam) * fam.y1(n - l, k, lam) for l in range(n + 1)),
        _zero_for(lam))
    return lhs, rhs


_register("I-04", "S2(n,k;lam^2) = (k!/2^n) sum_l C(n,l) S2(l,k;lam) y1(n-l,k;lam)", _i04)


def _i05(n, k, lam):
    lhs = fam.stirling2_lambda(n, k, lam ** 3)
    rhs = _zero_for(lam)
    for l in range(n + 1):
        for j in range(k + 1):
            rhs = rhs + (comb(n, l) * comb(k, j) * lam ** (2 * k - 2 * j) * Fraction(factorial(j), 3 ** n)
                         * fam.y1(l, j, lam) * fam.array_poly(n - l, k, 2 * k - 2 * j, lam))
    return lhs, rhs


_register(
    "I-05", "S2(n,k;lam^3) = sum_l sum_j C(n,l) C(k,j) lam^(2k-2j) j!/3^n y1(l,j;lam) S_k^(n-l)(2k-2j;lam)",
    _i05, corrected_variant="I-05c",
)


def _i05c(n, k, lam):
    lhs = 3 ** n * fam.stirling2_lambda(n, k, lam ** 3)
    rhs = _zero_for(lam)
    for l in range(n + 1):
        for j in range(k + 1):
            rhs = rhs + (comb(n, l) * comb(k, j) * factorial(j) * lam ** j
                         * fam.y1(l, j, lam) * fam.array_poly(n - l, k, j, lam))
    return lhs, rhs


_register(
    "I-05c", "3^n S2(n,k;lam^3) = sum_l sum_j C(n,l) C(k,j) j! lam^j y1(l,j;lam) S_k^(n-l)(j;lam)",
    _i05c, source="derived",
)

_register(
    "I-06", "B(m,n) = sum_j C(n,j) j! 2^(n-j) S2(m,j)",
    lambda n, k, lam: (fam.golombek_B(n, k), fam.golombek_B_spivey(n, k)),
    lam_mode=LAMBDA_FREE,
)


def binomial_as_power_poly(d: int) -> list[Fraction]:
    """``m_0 .. m_{d-1}`` with ``C(j, d) = sum_v m_v j^(d-v)``."""
    poly = [Fraction(1)]  # ascending powers of j
    for i in range(d):
        nxt = [Fraction(0)] * (len(poly) + 1)
        for p, c in enumerate(poly):
            nxt[p + 1] += c
            nxt[p] -= i * c
        poly = nxt
    poly = [c / factorial(d) for c in poly]
    return [poly[d - v] for v in range(d)]


def _i07(d, k, lam):
    target = _pow2(k - d) * comb(k, d)
    direct = _sum(Fraction(comb(k, j) * comb(j, d)) for j in range(k + 1))
    m = binomial_as_power_poly(d)
    via_b = _sum(m[v] * fam.golombek_B(d - v, k) for v in range(d))
    return (direct, via_b), (target, target)


_register(
    "I-07", "sum_j C(k,j) C(j,d) = 2^(k-d) C(k,d) = sum_v m_v B(d-v,k), with d = n >= 1",
    _i07, lam_mode=LAMBDA_FREE, domain=lambda n, k, lam: n >= 1,
)

_B_CLOSED = {
    1: lambda k: k * _pow2(k - 1),
    2: lambda k: k * (k + 1) * _pow2(k - 2),
    3: lambda k: k * k * (k + 3) * _pow2(k - 3),
    4: lambda k: k * (k ** 3 + 6 * k ** 2 + 3 * k - 2) * _pow2(k - 4),
}

_register(
    "I-08", "closed forms of B(n,k) for n = 1..4",
    lambda n, k, lam: (Fraction(fam.golombek_B(n, k)), _B_CLOSED[n](k)),
    lam_mode=LAMBDA_FREE, domain=lambda n, k, lam: 1 <= n <= 4,
)

# ---------------------------------------------------------------------------
# y1 recurrences and lambda-derivatives
# ---------------------------------------------------------------------------

_register(
    "I-09", "y1(n+1,k;lam) = k y1(n,k;lam) - y1(n,k-1;lam)",
    lambda n, k, lam: (fam.y1(n + 1, k, lam), k * fam.y1(n, k, lam) - fam.y1(n, k - 1, lam)),
    domain=lambda n, k, lam: k >= 1,
)

_register(
    "I-10", "d/dlam y1(n,k;lam) = sum_j C(n,j) y1(j,k-1;lam)",
    lambda n, k, lam: _symbolic_then_eval(lambda L: (
        fam.y1(n, k, L).ddl(),
        _sum((comb(n, j) * fam.y1(j, k - 1, L) for j in range(n + 1)), LaurentPoly()),
    ), lam),
    domain=lambda n, k, lam: k >= 1,
)

_register(
    "I-11", "lam d/dlam y1(n,k;lam) = k y1(n,k;lam) - y1(n,k-1;lam)",
    lambda n, k, lam: _symbolic_then_eval(lambda L: (
        L * fam.y1(n, k, L).ddl(), k * fam.y1(n, k, L) - fam.y1(n, k - 1, L),
    ), lam),
    domain=lambda n, k, lam: k >= 1,
)

# ---------------------------------------------------------------------------
# y2
# ---------------------------------------------------------------------------

_register(
    "I-12", "explicit double sum for y2 equals the EGF coefficient",
    lambda n, k, lam: (fam.y2(n, k, lam, "explicit"), fam.y2(n, k, lam, "series")),
)


def _i13(n, k, lam):
    rhs = _zero_for(lam)
    inv = 1 / lam
    for j in range(k + 1):
        for l in range(n + 1):
            rhs = rhs + (-1) ** (n - l) * comb(n, l) * fam.y1(l, j, lam) * fam.y1(n - l, k - j, inv)
    return fam.y2(n, k, lam), Fraction(factorial(k), factorial(2 * k)) * rhs


_register("I-13", "y2(n,k;lam) = k!/(2k)! sum_j sum_l (-1)^(n-l) C(n,l) y1(l,j;lam) y1(n-l,k-j;1/lam)",
          _i13)


def _i14(n, k, lam):
    rhs = lam ** k * _sum((comb(n, j) * k ** (n - j) * fam.y2(j, k, lam) for j in range(n + 1)),
                          _zero_for(lam))
    return fam.y1(n, 2 * k, lam), rhs


_register("I-14", "y1(n,2k;lam) = lam^k sum_j C(n,j) k^(n-j) y2(j,k;lam)", _i14)


def _i15(n, k, lam):
    def inner(power):
        return _sum(Fraction(comb(k, j) * 2 ** (k - j) * comb(j, l) * (2 * l - j) ** power)
                    for j in range(k + 1) for l in range(j + 1))
    lhs = (fam.y2(2 * n + 1, k, 1), fam.y2(2 * n, k, 1), inner(2 * n + 1))
    rhs = (Fraction(0), inner(2 * n) / factorial(2 * k), Fraction(0))
    return lhs, rhs


_register("I-15", "y2(2n+1,k;1) = 0, with the even and odd power sums of (2l-j)", _i15,
          lam_mode=LAMBDA_FREE)


def _i16(n, k, lam):
    lhs = _sum(comb(n, j) * (-k) ** (n - j) * fam.y1(j, 2 * k, 1) for j in range(n + 1))
    rhs = _sum((-1) ** (n - j) * comb(n, j) * fam.y1(j, v, 1) * fam.y1(n - j, k - v, 1)
               for j in range(n + 1) for v in range(k + 1))
    return lhs, Fraction(factorial(k), factorial(2 * k)) * rhs


_register("I-16", "sum_j C(n,j)(-k)^(n-j) y1(j,2k;1) = k!/(2k)! sum_j (-1)^(n-j) C(n,j) "
                  "sum_v y1(j,v;1) y1(n-j,k-v;1)", _i16, lam_mode=LAMBDA_FREE)


def _i17(n, k, lam):
    rhs = _sum(comb(n, 2 * j) * k ** (n - 2 * j) * fam.y2(2 * j, k, 1) for j in range(n // 2 + 1))
    return fam.y1(n, 2 * k, 1), rhs


_register("I-17", "y1(n,2k;1) = sum_{j <= n/2} C(n,2j) k^(n-2j) y2hat(j,k), "
                  "y2hat(j,k) the t^(2j)/(2j)! coefficient", _i17, lam_mode=LAMBDA_FREE)


def _sym(base: int, e: int, sign: int) -> Fraction:
    """``base^e + sign * (-base)^e`` with rational powers for negative ``e``."""
    b = Fraction(base)
    return b ** e + sign * (-b) ** e


# y2(n,k;1) closed forms exactly as published (n >= 1), and the published n = 0 list
_Y2_PRINTED = {
    0: lambda n: Fraction(0),
    1: lambda n: Fraction((-1) ** n + 1),
    2: lambda n: Fraction((-1) ** n + 1, 6) + _sym(2, n - 1, -1) / 3,
    3: lambda n: Fraction((-1) ** n + 1, 24) + _sym(2, n - 2, 1) / 15 + _sym(3, n - 2, 1) / 10,
    4: lambda n: (Fraction(13 * ((-1) ** n + 1), 5040) + _sym(2, n - 1, -1) / 315
                  + _sym(4, n - 1, -1) / 630 + _sym(3, n - 2, 1) / 140 + _sym(2, n - 4, 1) / 105),
}
_Y2_PRINTED_AT_ZERO = {0: Fraction(1), 1: Fraction(2), 2: Fraction(2, 3), 3: Fraction(5, 36),
                       4: Fraction(63, 5292)}


def y2_printed_closed_form(n: int, k: int) -> Fraction:
    if n == 0:
        return _Y2_PRINTED_AT_ZERO[k]
    return _Y2_PRINTED[k](n)


_register(
    "I-18", "published closed forms of y2(n,k;1) for k = 0..4, and the published y2(0,k) list",
    lambda n, k, lam: (fam.y2(n, k, 1), y2_printed_closed_form(n, k)),
    expectation=DISCREPANCY, corrected_variant="I-18c", lam_mode=LAMBDA_FREE,
    domain=lambda n, k, lam: k <= 4,
)


def y2_corrected_closed_form(n: int, k: int) -> Fraction:
    """``y2(n,k;1) = sum_m C(2k,m) (m-k)^n / (2k)!`` grouped by ``|m-k|``."""
    zero = Fraction(0 ** n)
    if k == 1:
        return zero + _sym(1, n, 1) / 2
    if k == 2:
        return zero / 4 + _sym(1, n, 1) / 6 + _sym(2, n, 1) / 24
    if k == 3:
        return zero / 36 + _sym(1, n, 1) / 48 + _sym(2, n, 1) / 120 + _sym(3, n, 1) / 720
    raise ValueError("corrected closed forms cover k = 1..3")


_register(
    "I-18c", "corrected closed forms of y2(n,k;1) for k = 1..3",
    lambda n, k, lam: (fam.y2(n, k, 1), y2_corrected_closed_form(n, k)),
    source="derived", lam_mode=LAMBDA_FREE, domain=lambda n, k, lam: 1 <= k <= 3,
)

# ---------------------------------------------------------------------------
# Lucas and Fibonacci, checked in Q(sqrt5)
# ---------------------------------------------------------------------------

_C = (GOLDEN - GOLDEN_CONJ) / 2   # sqrt5 / 2


def _i19(n, k, lam):
    rhs = QuadNum(0)
    for j in range(k + 1):
        for m in range(n // 2 + 1):
            rhs = rhs + (comb(k, j) * factorial(2 * j) * (-2) ** (k - j) * comb(n, 2 * m)
                         * _C ** (2 * m) * fam.y2(m, j, 1) * Fraction(k, 2) ** (n - 2 * m))
    return QuadNum(fam.lucas_order(n, k)), rhs


_register(
    "I-19", "L_n^(k) = sum_j C(k,j) (2j)! (-2)^(k-j) sum_m C(n,2m) c^(2m) y2(m,j;1) (k/2)^(n-2m)",
    _i19, expectation=DISCREPANCY, corrected_variant="I-19c", lam_mode=LAMBDA_FREE,
)


def _i19c(n, k, lam):
    direct = fam.lucas_order(n, k, "explicit")
    series = fam.lucas_order(n, k, "series")
    # e^{tk/2} sum_j C(k,j) (-2)^(k-j) (2j)! F_y2(ct, j; 1)
    fe = QuadNum(0)
    for i in range(n + 1):
        inner = _sum(comb(k, j) * (-2) ** (k - j) * factorial(2 * j) * fam.y2(i, j, 1)
                     for j in range(k + 1))
        fe = fe + comb(n, i) * Fraction(k, 2) ** (n - i) * _C ** i * inner
    return (QuadNum(direct), QuadNum(series)), (QuadNum(series), fe)


_register(
    "I-19c", "(e^{at}+e^{bt})^k = sum_j C(k,j) e^{(ja+(k-j)b)t} "
             "= e^{tk/2} sum_j C(k,j)(-2)^(k-j)(2j)! F_y2(ct,j;1)",
    _i19c, source="derived", lam_mode=LAMBDA_FREE,
)


def _i20(n, k, lam):
    rhs = QuadNum(0)
    for j in range(n + 1):
        bracket = fam.fibonacci(j) * (GOLDEN - 2 * _C * k ** j) + fam.fibonacci(j - 1)
        rhs = rhs + comb(n, j) * (2 * _C) ** (n - j) * fam.y1(n - j, k, 1) * bracket
    return QuadNum(fam.lucas_order(n, k)), factorial(k) * rhs


_register(
    "I-20", "L_n^(k) = k! sum_j C(n,j) (2c)^(n-j) y1(n-j,k;1) (f_j (a - 2c k^j) + f_{j-1})",
    _i20, expectation=DISCREPANCY, lam_mode=LAMBDA_FREE, corrected_variant="I-19c",
)

# ---------------------------------------------------------------------------
# y2 recurrences and lambda-derivatives
# ---------------------------------------------------------------------------


def _twisted(n, k, lam, f):
    return _sum(((-1) ** (n - j) * comb(n, j) * f(j, k, lam) for j in range(n + 1)), _zero_for(lam))


_register(
    "I-21", "y2(n+1,k;lam) = k y2(n,k;lam) - y2(n,k-1;lam) - (1/lam) sum_j C(n,j)(-1)^(n-j) y2(j,k-1;lam)",
    lambda n, k, lam: (
        fam.y2(n + 1, k, lam),
        k * fam.y2(n, k, lam) - fam.y2(n, k - 1, lam) - _twisted(n, k - 1, lam, fam.y2) / lam,
    ),
    expectation=DISCREPANCY, corrected_variant="I-21c", domain=lambda n, k, lam: k >= 1,
)

_register(
    "I-21c", "y2(n+1,k;lam) = k y2(n,k;lam) - (y2(n,k-1;lam) + (1/lam) sum_j C(n,j)(-1)^(n-j) y2(j,k-1;lam))"
             " / (2k-1)",
    lambda n, k, lam: (
        fam.y2(n + 1, k, lam),
        k * fam.y2(n, k, lam)
        - Fraction(1, 2 * k - 1) * (fam.y2(n, k - 1, lam) + _twisted(n, k - 1, lam, fam.y2) / lam),
    ),
    source="derived", domain=lambda n, k, lam: k >= 1,
)

_register(
    "I-22", "d/dlam y2(n,k;lam) = lam y2(n,k;lam) - lam/(k(2k-1)) y2(n,k-1;lam)",
    lambda n, k, lam: _symbolic_then_eval(lambda L: (
        fam.y2(n, k, L).ddl(),
        L * fam.y2(n, k, L) - Fraction(1, k * (2 * k - 1)) * L * fam.y2(n, k - 1, L),
    ), lam),
    expectation=DISCREPANCY, corrected_variant="I-22c", domain=lambda n, k, lam: k >= 1,
)

def _i22c(n, k, lam):
    def at(L):
        lhs = (L * fam.y2(n, k, L).ddl(), L * fam.c_central(n, k, L).ddl())
        return lhs, (fam.y2(n + 1, k, L), fam.c_central(n + 1, k, L))
    lhs, rhs = at(LAMBDA)
    if isinstance(lam, LaurentPoly):
        return lhs, rhs
    return tuple(p.eval(lam) for p in lhs), tuple(p.eval(lam) for p in rhs)


_register("I-22c", "lam d/dlam y2(n,k;lam) = y2(n+1,k;lam), and likewise for C(n,k;lam)", _i22c,
          source="derived")


# ---------------------------------------------------------------------------
# Central factorial numbers
# ---------------------------------------------------------------------------


def _i23(n, k, lam):
    rhs = _sum((comb(n, j) * fam.c_central(j, k, lam) * fam.y2(n - j, k, lam) for j in range(n + 1)),
               _zero_for(lam))
    return 2 ** n * fam.c_central(n, k, lam ** 2), factorial(2 * k) * rhs


_register("I-23", "2^n C(n,k;lam^2) = (2k)! sum_j C(n,j) C(j,k;lam) y2(n-j,k;lam)", _i23)


def _i24(n, k, lam):
    rhs = _sum(comb(n, j) * fam.y2(j, k, 1) * fam.c_central(n - j, k, 1) for j in range(n + 1))
    return 2 ** n * fam.c_central(n, k, 1), factorial(2 * k) * rhs


_register("I-24", "2^n C(n,k;1) = (2k)! sum_j C(n,j) y2(j,k;1) C(n-j,k;1)", _i24,
          lam_mode=LAMBDA_FREE)

# ---------------------------------------------------------------------------
# Euler and Bernoulli numbers of negative order
# ---------------------------------------------------------------------------


def _i25(n, k, lam):
    lhs = (fam.euler_first_neg(n, k, lam, "series"), fam.euler_first_neg(n, k, 1, "series"))
    rhs = (Fraction(factorial(k), 2 ** k) * fam.y1(n, k, lam),
           _sum(Fraction(comb(k, j) * j ** n, 2 ** k) for j in range(k + 1)))
    return lhs, rhs


_register("I-25", "E_n^(-k)(lam) = k! 2^-k y1(n,k;lam), and E_n^(-k)(1) = 2^-k sum_j C(k,j) j^n", _i25)


def _i26(n, k, lam):
    rhs = _zero_for(lam)
    inv = 1 / lam
    for j in range(k + 1):
        top = n - k + j
        for l in range(top + 1):
            rhs = rhs + ((-1) ** (top - l) * comb(k, j) * comb(top, l) * _pow2(j - k) * perm(n, k - j)
                         * fam.euler_first_neg(l, j, lam)
                         * fam.apostol_bernoulli_neg(top - l, k - j, inv))
    return fam.euler_second_neg(n, k, lam), rhs


_register(
    "I-26", "E*_n^(-k)(lam) = sum_j C(k,j) sum_l (-1)^(n+j-k-l) C(n-k+j,l) 2^(j-k) (n)_(k-j) "
            "E_l^(-j)(lam) B_(n+j-k-l)^(-k+j)(1/lam)",
    _i26, expectation=DISCREPANCY,
)


def _i27(n, k, lam):
    rhs = _sum((comb(k, l) * fam.euler_second_neg(n, l, lam) for l in range(k + 1)), _zero_for(lam))
    return fam.y2(n, k, lam), Fraction(2 ** k, factorial(2 * k)) * rhs


_register("I-27", "y2(n,k;lam) = 2^k/(2k)! sum_l C(k,l) E*_n^(-l)(lam)", _i27)


def _i28_sum(n, k, lam):
    return _sum((comb(k, l) * lam ** (-l) * fam.euler_first_neg_poly(n, l, Fraction(-l, 2), lam ** 2)
                 for l in range(k + 1)), _zero_for(lam))


_register(
    "I-28", "y2(n,k;lam) = (-1)^n 2^(n+k)/(2k)! sum_l C(k,l) lam^-l E_n^(-l)(-l/2; lam^2)",
    lambda n, k, lam: (fam.y2(n, k, lam),
                       Fraction((-1) ** n * 2 ** (n + k), factorial(2 * k)) * _i28_sum(n, k, lam)),
    expectation=DISCREPANCY, corrected_variant="I-28c",
)

_register(
    "I-28c", "y2(n,k;lam) = 2^(n+k)/(2k)! sum_l C(k,l) lam^-l E_n^(-l)(-l/2; lam^2)",
    lambda n, k, lam: (fam.y2(n, k, lam),
                       Fraction(2 ** (n + k), factorial(2 * k)) * _i28_sum(n, k, lam)),
    source="derived",
)


def _i29_with(euler):
    def sides(n, k, lam):
        conv = _sum((comb(n, l) * euler(l, lam) * fam.y1(n - l, k, lam) for l in range(n + 1)),
                    _zero_for(lam))
        rhs = (k * fam.y1(n, k, lam) + fam.y1(n, k - 2, lam) - fam.y1(n, k - 1, lam) + 2 * k * conv)
        return fam.y1(n + 2, k, lam), rhs
    return sides


_register(
    "I-29", "y1(n+2,k;lam) = k y1(n,k) + y1(n,k-2) - y1(n,k-1) + 2k sum_l C(n,l) E_l^(-1)(lam) y1(n-l,k), "
            "order -1 reading",
    _i29_with(lambda l, lam: fam.euler_first_neg(l, 1, lam)),
    expectation=DISCREPANCY, corrected_variant="I-29c", domain=lambda n, k, lam: k >= 2,
)

_register(
    "I-29b", "same recurrence with E_l^(1)(lam), order +1 reading",
    _i29_with(lambda l, lam: fam.euler_first_pos(l, 1, 0, lam)),
    expectation=DISCREPANCY, corrected_variant="I-29c", lam_mode=NUMERIC_ONLY,
    domain=lambda n, k, lam: k >= 2 and lam != -1,
)

_register(
    "I-29c", "y1(n+2,k;lam) = k^2 y1(n,k;lam) - (2k-1) y1(n,k-1;lam) + y1(n,k-2;lam)",
    lambda n, k, lam: (
        fam.y1(n + 2, k, lam),
        k * k * fam.y1(n, k, lam) - (2 * k - 1) * fam.y1(n, k - 1, lam) + fam.y1(n, k - 2, lam),
    ),
    source="derived", domain=lambda n, k, lam: k >= 2,
)

# ---------------------------------------------------------------------------
# Binomial moments
# ---------------------------------------------------------------------------

_register(
    "I-30", "y1(r,n;1) = 2^n/n! E(S_n(1/2))^r, with trials n and moment order r = k",
    lambda n, r, lam: (fam.y1(r, n, 1), Fraction(2 ** n, factorial(n)) * apps.binomial_moment(n, r, Fraction(1, 2))),
    lam_mode=LAMBDA_FREE,
)

_register(
    "I-31", "integral over [0,1] of E(S_n(x))^r = (B_{r+1}(n+1) - B_{r+1}(0)) / ((n+1)(r+1)), with r = k",
    lambda n, r, lam: (
        apps.moment_integral(n, r),
        (fam.bernoulli_poly(r + 1, n + 1) - fam.bernoulli_poly(r + 1, 0)) / ((n + 1) * (r + 1)),
    ),
    lam_mode=LAMBDA_FREE,
)


# ---------------------------------------------------------------------------
# Running
# ---------------------------------------------------------------------------

def list_identities() -> list[Identity]:
    return list(REGISTRY.values())


def get_identity(identity_id: str) -> Identity:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def _normalize_lam(lam):
    if lam is None or isinstance(lam, LaurentPoly):
        return lam
    if isinstance(lam, str) and lam.strip().lower() in ("symbolic", "lambda", "λ"):
        return LAMBDA
    from .exact import as_fraction
    value = as_fraction(lam)
    if value == 0:
        raise ValueError("lambda must be nonzero")
    return value


def _evaluate(ident: Identity, n: int, k: int, lam) -> Witness:
    lhs, rhs = ident.sides(n, k, lam)
    return Witness(lhs == rhs, lhs, rhs)


def check_one(identity_id: str, n: int, k: int, lam=1) -> Witness:
    """Both sides of one identity at one point."""
    ident = get_identity(identity_id)
    lam = _normalize_lam(lam)
    if ident.lam_mode == LAMBDA_FREE:
        lam = None
    elif ident.lam_mode == NUMERIC_ONLY and isinstance(lam, LaurentPoly):
        raise ValueError(f"{identity_id} is checked at numeric lambda only")
    if not ident.applies(n, k, lam):
        raise ValueError(f"{identity_id} does not apply at n={n}, k={k}, lambda={lam}")
    return _evaluate(ident, n, k, lam)


def _lam_label(lam) -> str | None:
    if lam is None:
        return None
    if isinstance(lam, LaurentPoly):
        return "symbolic"
    return format_rational(lam)


@dataclass
class IdentityResult:
    identity: Identity
    run: int = 0
    passed: int = 0
    counterexample: dict | None = None
    corrected_ok: bool | None = None

    @property
    def expectation_met(self) -> bool:
        if self.identity.expectation == HOLDS:
            return self.passed == self.run
        found = self.counterexample is not None
        return found and self.corrected_ok is not False

    @property
    def status(self) -> str:
        if self.identity.expectation == HOLDS:
            return "pass" if self.passed == self.run else "fail"
        if self.counterexample is None:
            return "discrepancy not reproduced"
        if self.corrected_ok is False:
            return "corrected variant failed"
        return "paper-discrepancy confirmed"

    def to_json_obj(self) -> dict:
        ident = self.identity
        return {
            "id": ident.id,
            "statement": ident.statement,
            "source": ident.source,
            "expectation": ident.expectation,
            "corrected_variant": ident.corrected_variant,
            "cases_run": self.run,
            "cases_passed": self.passed,
            "status": self.status,
            "expectation_met": self.expectation_met,
            "counterexample": self.counterexample,
        }


@dataclass
class Report:
    n_max: int
    k_max: int
    lambdas: tuple
    symbolic: bool
    results: list[IdentityResult]

    @property
    def all_expectations_met(self) -> bool:
        return all(r.expectation_met for r in self.results)

    def __getitem__(self, identity_id: str) -> IdentityResult:
        for r in self.results:
            if r.identity.id == identity_id:
                return r
        raise UnknownIdentity(identity_id)

    def to_json_obj(self) -> dict:
        return {
            "parameters": {
                "n_max": self.n_max,
                "k_max": self.k_max,
                "lambdas": [format_rational(x) for x in self.lambdas],
                "symbolic": self.symbolic,
            },
            "all_expectations_met": self.all_expectations_met,
            "identities": [r.to_json_obj() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            line = f"{r.identity.id:7s} {r.status:28s} {r.passed}/{r.run}"
            cx = r.counterexample
            if cx is not None:
                where = f"n={cx['n']}, k={cx['k']}"
                if cx["lambda"] is not None:
                    where += f", lambda={cx['lambda']}"
                line += f"  first counterexample at {where}: lhs={_show(cx['lhs'])} rhs={_show(cx['rhs'])}"
            lines.append(line)
        verdict = "all expectations met" if self.all_expectations_met else "EXPECTATIONS NOT MET"
        lines.append(verdict)
        return "\n".join(lines)


def _show(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _points(ident: Identity, n_max: int, k_max: int, lams: list):
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            if ident.lam_mode == LAMBDA_FREE:
                candidates = [None]
            elif ident.lam_mode == NUMERIC_ONLY:
                candidates = [x for x in lams if not isinstance(x, LaurentPoly)]
            else:
                candidates = lams
            for lam in candidates:
                if ident.applies(n, k, lam):
                    yield n, k, lam


def run_identity(ident: Identity, n_max: int, k_max: int, lams: list) -> IdentityResult:
    result = IdentityResult(ident)
    for n, k, lam in _points(ident, n_max, k_max, lams):
        w = _evaluate(ident, n, k, lam)
        result.run += 1
        if w.holds:
            result.passed += 1
        elif result.counterexample is None:
            result.counterexample = {
                "n": n, "k": k, "lambda": _lam_label(lam),
                "lhs": serialize(w.lhs), "rhs": serialize(w.rhs),
            }
    return result


def run_suite(n_max: int = 8, k_max: int = 6, lambdas=DEFAULT_LAMBDAS, symbolic: bool = True,
              ids=None) -> Report:
    """Check every registered identity (or those in ``ids``) over the grid.

    Points are visited in ascending ``n``, then ``k``, then ``lambdas`` in the
    given order followed by the symbolic point (if enabled).
    """
    if n_max < 2 or k_max < 2:
        raise ValueError("n_max and k_max must be at least 2")
    numeric = [_normalize_lam(x) for x in lambdas]
    lams = numeric + ([LAMBDA] if symbolic else [])
    selected = [get_identity(i) for i in ids] if ids is not None else list_identities()
    results = {ident.id: run_identity(ident, n_max, k_max, lams) for ident in selected}
    for res in list(results.values()):
        variant = res.identity.corrected_variant
        if variant is None:
            continue
        if variant not in results:
            results[variant] = run_identity(get_identity(variant), n_max, k_max, lams)
        res.corrected_ok = results[variant].expectation_met
    ordered = [results[i] for i in REGISTRY if i in results]
    return Report(n_max, k_max, tuple(numeric), symbolic, ordered)
