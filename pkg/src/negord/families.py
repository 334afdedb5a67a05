"""The special-number families, each computable along independent paths.

Every family takes a ``method`` of ``"explicit"`` (closed-form finite sum),
``"series"`` (coefficient extraction from the generating function via
:mod:`negord.egf`) and, where one exists, ``"recurrence"``.  The paths share
no code beyond exact arithmetic, so agreement between them is meaningful.

The ``lam`` argument is either a rational (numeric mode, result is a
``Fraction``) or a :class:`~negord.exact.LaurentPoly` such as ``LAMBDA``
(symbolic mode, result is a ``LaurentPoly``).  ``0**0 == 1`` throughout.
"""

from __future__ import annotations

import os
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, perm

from . import egf
from .egf import EgfSeries, default_order, exp_series
from .exact import GOLDEN, GOLDEN_CONJ, LAMBDA, LaurentPoly, QuadNum, as_fraction


class ConsistencyError(ArithmeticError):
    """An internal cross-check failed; indicates a bug, not bad input."""


class Method(str, Enum):
    EXPLICIT = "explicit"
    SERIES = "series"
    RECURRENCE = "recurrence"

    def __str__(self) -> str:
        return self.value


EXPLICIT, SERIES, RECURRENCE = Method.EXPLICIT, Method.SERIES, Method.RECURRENCE
_ALL = (EXPLICIT, SERIES, RECURRENCE)
_TWO = (EXPLICIT, SERIES)

# Methods each family implements, by CLI tag.
FAMILY_METHODS: dict[str, tuple[Method, ...]] = {
    "y1": _ALL,
    "y2": _ALL,
    "C": _ALL,
    "S2": _ALL,
    "array": _TWO,
    "T": _ALL,
    "B": _TWO,
    "bernoulli": _ALL,
    "e-neg": _TWO,
    "e-neg-poly": _TWO,
    "e-star-neg": _TWO,
    "b-neg": _TWO,
    "e-pos": _TWO,
    "e-star": _ALL,
    "lucas-order": _TWO,
}


def _method(method, family: str) -> Method:
    m = Method(method)
    if m not in FAMILY_METHODS[family]:
        raise ValueError(f"family {family!r} has no {m.value!r} method")
    return m


def _lam(lam):
    """Normalize lambda; returns (value, symbolic flag)."""
    if isinstance(lam, LaurentPoly):
        return lam, True
    return as_fraction(lam), False


def _unit(lam, sym: bool, family: str):
    if sym:
        if not lam.is_monomial():
            raise ValueError(f"{family}: symbolic lambda must be a monomial, got {lam}")
    elif lam == 0:
        raise ValueError(f"{family}: lambda must be nonzero (1/lambda appears)")


def _finish(value, sym: bool):
    if sym:
        return value if isinstance(value, LaurentPoly) else LaurentPoly.constant(value)
    if isinstance(value, LaurentPoly):
        return value.constant_term()
    return Fraction(value)


def _zero(sym: bool):
    return LaurentPoly() if sym else Fraction(0)


def _ring_one(sym: bool):
    return LaurentPoly.constant(1) if sym else Fraction(1)


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"indices must be nonnegative, got n={n}, k={k}")


def _order(n: int) -> int:
    """Truncation order for coefficient ``n``.

    Rounded up to a multiple of 8 so the cached series serve neighbouring
    ``n``; coefficients up to the order are exact, so the value is unaffected.
    An explicit ``NEGORD_TRUNC_ORDER`` is honoured as given.
    """
    if os.environ.get(egf.TRUNC_ENV):
        return default_order(n)
    return -(-default_order(n) // 8) * 8


def _series_coeff(builder, n: int, *key):
    return builder(*key, _order(n))[n]


# ---------------------------------------------------------------------------
# y1(n, k; lambda): (lambda e^t + 1)^k / k!
# ---------------------------------------------------------------------------

def y1(n: int, k: int, lam=1, method=EXPLICIT):
    _check_nk(n, k)
    lam, sym = _lam(lam)
    return _y1(n, k, lam, sym, _method(method, "y1"))


@lru_cache(maxsize=None)
def _y1(n, k, lam, sym, method):
    if method is EXPLICIT:
        total = sum((comb(k, j) * j ** n * lam ** j for j in range(k + 1)), _zero(sym))
        value = total * Fraction(1, factorial(k))
    elif method is SERIES:
        value = _series_coeff(_y1_series, n, k, lam, sym)
    else:
        value = _y1_rec(n, k, lam, sym)
    return _finish(value, sym)


@lru_cache(maxsize=None)
def _y1_series(k, lam, sym, N):
    base = exp_series(lam, 1, N) + 1
    return egf.pow(base, k) * Fraction(1, factorial(k))


@lru_cache(maxsize=None)
def _y1_rec(n, k, lam, sym):
    if n == 0:
        return (lam + 1) ** k * Fraction(1, factorial(k))
    if k == 0:
        return _zero(sym)
    return k * _y1_rec(n - 1, k, lam, sym) - _y1_rec(n - 1, k - 1, lam, sym)


# ---------------------------------------------------------------------------
# y2(n, k; lambda): (lambda e^t + e^-t / lambda + 2)^k / (2k)!
# ---------------------------------------------------------------------------

def y2(n: int, k: int, lam=1, method=EXPLICIT):
    _check_nk(n, k)
    lam, sym = _lam(lam)
    _unit(lam, sym, "y2")
    return _y2(n, k, lam, sym, _method(method, "y2"))


def _two_sided_sum(n, k, lam, sym, shift):
    # (1/(2k)!) sum_j C(k,j) shift^(k-j) sum_l C(j,l) (2l-j)^n lam^(2l-j)
    total = _zero(sym)
    for j in range(k + 1):
        inner = _zero(sym)
        for l in range(j + 1):
            e = 2 * l - j
            inner = inner + comb(j, l) * e ** n * lam ** e
        total = total + comb(k, j) * shift ** (k - j) * inner
    return total * Fraction(1, factorial(2 * k))


@lru_cache(maxsize=None)
def _y2(n, k, lam, sym, method):
    if method is EXPLICIT:
        value = _two_sided_sum(n, k, lam, sym, 2)
    elif method is SERIES:
        value = _series_coeff(_two_sided_series, n, k, lam, sym, 2)
    else:
        value = _two_sided_rec(n, k, lam, sym, 2)
    return _finish(value, sym)


@lru_cache(maxsize=None)
def _two_sided_series(k, lam, sym, shift, N):
    base = exp_series(lam, 1, N) + exp_series(1 / lam, -1, N) + shift
    return egf.pow(base, k) * Fraction(1, factorial(2 * k))


@lru_cache(maxsize=None)
def _two_sided_rec(n, k, lam, sym, shift):
    # d/dt F_k = k F_k - (shift + 2 e^-t / lam) F_{k-1} / (2 (2k-1))
    if n == 0:
        return (lam + 1 / lam + shift) ** k * Fraction(1, factorial(2 * k))
    if k == 0:
        return _zero(sym)
    m = n - 1
    prev = _two_sided_rec(m, k - 1, lam, sym, shift)
    twisted = _zero(sym)
    for j in range(m + 1):
        sign = -1 if (m - j) % 2 else 1
        twisted = twisted + sign * comb(m, j) * _two_sided_rec(j, k - 1, lam, sym, shift)
    corr = Fraction(1, 2 * (2 * k - 1))
    return k * _two_sided_rec(m, k, lam, sym, shift) - corr * (shift * prev + 2 * twisted / lam)


# ---------------------------------------------------------------------------
# C(n, k; lambda): (lambda e^t + e^-t / lambda - 2)^k / (2k)!
# ---------------------------------------------------------------------------

def c_central(n: int, k: int, lam=1, method=EXPLICIT):
    _check_nk(n, k)
    lam, sym = _lam(lam)
    _unit(lam, sym, "C")
    return _c(n, k, lam, sym, _method(method, "C"))


@lru_cache(maxsize=None)
def _c(n, k, lam, sym, method):
    if method is EXPLICIT:
        value = _two_sided_sum(n, k, lam, sym, -2)
    elif method is SERIES:
        value = _series_coeff(_two_sided_series, n, k, lam, sym, -2)
    else:
        value = _two_sided_rec(n, k, lam, sym, -2)
    return _finish(value, sym)


# ---------------------------------------------------------------------------
# S2(n, v; lambda): (lambda e^t - 1)^v / v!
# ---------------------------------------------------------------------------

def stirling2_lambda(n: int, v: int, lam=1, method=EXPLICIT):
    _check_nk(n, v)
    lam, sym = _lam(lam)
    return _s2(n, v, lam, sym, _method(method, "S2"))


@lru_cache(maxsize=None)
def _s2(n, v, lam, sym, method):
    if method is EXPLICIT:
        total = sum(((-1) ** (v - j) * comb(v, j) * j ** n * lam ** j for j in range(v + 1)),
                    _zero(sym))
        value = total * Fraction(1, factorial(v))
    elif method is SERIES:
        value = _series_coeff(_s2_series, n, v, lam, sym)
    else:
        value = _s2_rec(n, v, lam, sym)
    return _finish(value, sym)


@lru_cache(maxsize=None)
def _s2_series(v, lam, sym, N):
    return egf.pow(exp_series(lam, 1, N) - 1, v) * Fraction(1, factorial(v))


@lru_cache(maxsize=None)
def _s2_rec(n, v, lam, sym):
    if n == 0:
        return (lam - 1) ** v * Fraction(1, factorial(v))
    if v == 0:
        return _zero(sym)
    return v * _s2_rec(n - 1, v, lam, sym) + _s2_rec(n - 1, v - 1, lam, sym)


# ---------------------------------------------------------------------------
# Array polynomials S_v^n(x; lambda): (lambda e^t - 1)^v e^{xt} / v!
# ---------------------------------------------------------------------------

def array_poly(n: int, v: int, x=0, lam=1, method=EXPLICIT):
    _check_nk(n, v)
    lam, sym = _lam(lam)
    return _array(n, v, as_fraction(x), lam, sym, _method(method, "array"))


@lru_cache(maxsize=None)
def _array(n, v, x, lam, sym, method):
    if method is EXPLICIT:
        total = sum(((-1) ** (v - j) * comb(v, j) * lam ** j * (x + j) ** n for j in range(v + 1)),
                    _zero(sym))
        value = total * Fraction(1, factorial(v))
    else:
        value = _series_coeff(_array_series, n, v, x, lam, sym)
    return _finish(value, sym)


@lru_cache(maxsize=None)
def _array_series(v, x, lam, sym, N):
    return egf.mul(_s2_series(v, lam, sym, N), exp_series(1, x, N))


# ---------------------------------------------------------------------------
# Central factorial numbers T(n, k): t^{2n}/(2n)! coefficient of
# (e^t + e^-t - 2)^k / (2k)!
# ---------------------------------------------------------------------------

def central_T(n: int, k: int, method=EXPLICIT) -> Fraction:
    _check_nk(n, k)
    return _central_T(n, k, _method(method, "T"))


@lru_cache(maxsize=None)
def _central_T(n, k, method):
    if method is EXPLICIT:
        return _two_sided_sum(2 * n, k, Fraction(1), False, -2)
    if method is SERIES:
        return c_central(2 * n, k, 1, SERIES)
    return Fraction(_central_T_rec(n, k))


@lru_cache(maxsize=None)
def _central_T_rec(n, k):
    if n == 0 or k == 0:
        return 1 if n == k else 0
    return _central_T_rec(n - 1, k - 1) + k * k * _central_T_rec(n - 1, k)


# ---------------------------------------------------------------------------
# Golombek sums B(n, k) = sum_j C(k, j) j^n = k! y1(n, k; 1)
# ---------------------------------------------------------------------------

def golombek_B(n: int, k: int, method=EXPLICIT) -> int:
    """Always a nonnegative integer, returned as ``int``."""
    _check_nk(n, k)
    m = _method(method, "B")
    if m is EXPLICIT:
        return sum(comb(k, j) * j ** n for j in range(k + 1))
    # n-th derivative of (e^t + 1)^k at t = 0
    return int(_series_coeff(_golombek_series, n, k))


@lru_cache(maxsize=None)
def _golombek_series(k, N):
    return egf.pow(exp_series(1, 1, N) + 1, k)


def golombek_B_spivey(m: int, n: int) -> int:
    """``B(m, n)`` through ``sum_j C(n, j) j! 2^(n-j) S2(m, j)``."""
    total = sum(comb(n, j) * factorial(j) * 2 ** (n - j) * stirling2_lambda(m, j, 1)
                for j in range(n + 1))
    return int(total)


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials, t e^{xt} / (e^t - 1)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli_number(n: int, method=RECURRENCE) -> Fraction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = _method(method, "bernoulli")
    if m is RECURRENCE:
        if n == 0:
            return Fraction(1)
        acc = sum(comb(n + 1, j) * bernoulli_number(j, RECURRENCE) for j in range(n))
        return -acc / (n + 1)
    if m is EXPLICIT:
        return sum((Fraction(1, r + 1) * sum((-1) ** j * comb(r, j) * j ** n for j in range(r + 1))
                    for r in range(n + 1)), Fraction(0))
    return bernoulli_poly(n, 0, SERIES)


def bernoulli_poly(n: int, x=0, method=RECURRENCE) -> Fraction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = as_fraction(x)
    m = _method(method, "bernoulli")
    if m is SERIES:
        return _bernoulli_series(x, _order(n))[n]
    return sum((comb(n, j) * bernoulli_number(j, m) * x ** (n - j) for j in range(n + 1)),
               Fraction(0))


@lru_cache(maxsize=None)
def _bernoulli_series(x, N):
    # (e^t - 1) / t needs one extra order before the shift
    quotient = egf.shift_div_t(exp_series(1, 1, N + 1) - 1, 1)
    return egf.mul(egf.reciprocal(quotient), exp_series(1, x, N))


# ---------------------------------------------------------------------------
# Negative-order Apostol-Euler numbers E_n^(-k)(lambda), ((lambda e^t + 1)/2)^k
# ---------------------------------------------------------------------------

def euler_first_neg(n: int, k: int, lam=1, method=EXPLICIT):
    _check_nk(n, k)
    lam, sym = _lam(lam)
    return _euler_neg_poly(n, k, Fraction(0), lam, sym, _method(method, "e-neg"))


def euler_first_neg_poly(n: int, k: int, x=0, lam=1, method=EXPLICIT):
    """``E_n^(-k)(x; lambda)``: coefficients of ``((lambda e^t + 1)/2)^k e^{xt}``."""
    _check_nk(n, k)
    lam, sym = _lam(lam)
    return _euler_neg_poly(n, k, as_fraction(x), lam, sym, _method(method, "e-neg-poly"))


@lru_cache(maxsize=None)
def _euler_neg_poly(n, k, x, lam, sym, method):
    if method is EXPLICIT:
        total = sum((comb(k, j) * lam ** j * (x + j) ** n for j in range(k + 1)), _zero(sym))
        value = total * Fraction(1, 2 ** k)
    else:
        value = _series_coeff(_euler_neg_series, n, k, x, lam, sym)
    return _finish(value, sym)


@lru_cache(maxsize=None)
def _euler_neg_series(k, x, lam, sym, N):
    half = (exp_series(lam, 1, N) + 1) * Fraction(1, 2)
    series = egf.pow(half, k)
    if x:
        series = egf.mul(series, exp_series(1, x, N))
    return series


def euler_second_neg(n: int, k: int, lam=1, method=EXPLICIT):
    """``E*_n^(-k)(lambda)``: coefficients of ``((lambda e^t + e^-t / lambda)/2)^k``."""
    _check_nk(n, k)
    lam, sym = _lam(lam)
    _unit(lam, sym, "e-star-neg")
    return _euler_second_neg(n, k, lam, sym, _method(method, "e-star-neg"))


@lru_cache(maxsize=None)
def _euler_second_neg(n, k, lam, sym, method):
    if method is EXPLICIT:
        total = _zero(sym)
        for j in range(k + 1):
            e = 2 * j - k
            total = total + comb(k, j) * e ** n * lam ** e
        value = total * Fraction(1, 2 ** k)
    else:
        value = _series_coeff(_euler_second_neg_series, n, k, lam, sym)
    return _finish(value, sym)


@lru_cache(maxsize=None)
def _euler_second_neg_series(k, lam, sym, N):
    half = (exp_series(lam, 1, N) + exp_series(1 / lam, -1, N)) * Fraction(1, 2)
    return egf.pow(half, k)


def apostol_bernoulli_neg(n: int, k: int, lam=1, method=EXPLICIT):
    """``B_n^(-k)(lambda)`` from ``((lambda e^t - 1)/t)^k``.

    For ``lambda != 1`` the generating function has a pole of order up to
    ``k`` at ``t = 0``; the values returned are the coefficients of its
    power-series part, ``n! k! / (n+k)! * S2(n+k, k; lambda)``.
    """
    _check_nk(n, k)
    lam, sym = _lam(lam)
    return _apostol_bernoulli_neg(n, k, lam, sym, _method(method, "b-neg"))


@lru_cache(maxsize=None)
def _apostol_bernoulli_neg(n, k, lam, sym, method):
    if method is EXPLICIT:
        scale = Fraction(factorial(n) * factorial(k), factorial(n + k))
        value = scale * _s2(n + k, k, lam, sym, EXPLICIT)
    else:
        value = _series_coeff(_apostol_bernoulli_series, n, k, lam, sym)
    return _finish(value, sym)


@lru_cache(maxsize=None)
def _apostol_bernoulli_series(k, lam, sym, N):
    # power-series part of ((lam e^t - 1)/t)^k
    numer = egf.pow(exp_series(lam, 1, N + k) - 1, k)
    return egf.shift_div_t(egf.drop_below(numer, k), k)


@lru_cache(maxsize=None)
def _euler_pos_series(k, x, lam, N):
    inv = egf.reciprocal((exp_series(lam, 1, N) + 1) * Fraction(1, 2))
    return egf.mul(egf.pow(inv, k), exp_series(1, x, N))


def euler_first_pos(n: int, k: int, x=0, lam=1, method=SERIES) -> Fraction:
    """Positive-order ``E_n^(k)(x; lambda)``, numeric ``lambda != -1`` only."""
    _check_nk(n, k)
    if isinstance(lam, LaurentPoly):
        raise ValueError("e-pos: symbolic lambda unsupported (lambda + 1 is not a Laurent unit)")
    lam = as_fraction(lam)
    if lam == -1:
        raise ValueError("e-pos: lambda = -1 makes the constant term vanish")
    return _euler_first_pos(n, k, as_fraction(x), lam, _method(method, "e-pos"))


@lru_cache(maxsize=None)
def _euler_first_pos(n, k, x, lam, method):
    if method is SERIES:
        return _series_coeff(_euler_pos_series, n, k, x, lam)
    # (2/(1+lam))^k (1 + w)^-k with w = lam (e^t - 1)/(1 + lam), expanded in
    # powers of (e^t - 1), then shifted by e^{xt}
    def at_zero(i):
        if k == 0:
            return Fraction(1 if i == 0 else 0)
        total = Fraction(0)
        for m in range(i + 1):
            total += ((-1) ** m * comb(k + m - 1, m) * (lam / (1 + lam)) ** m
                      * factorial(m) * _s2(i, m, Fraction(1), False, EXPLICIT))
        return (2 / (1 + lam)) ** k * total
    return sum((comb(n, i) * at_zero(i) * x ** (n - i) for i in range(n + 1)), Fraction(0))


def euler_second_std(n: int, method=RECURRENCE) -> Fraction:
    """Second-kind Euler numbers ``E*_n``, coefficients of ``2 / (e^t + e^-t)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _euler_second_std(n, _method(method, "e-star"))


@lru_cache(maxsize=None)
def _sech_series(N):
    return egf.reciprocal((exp_series(1, 1, N) + exp_series(1, -1, N)) * Fraction(1, 2))


@lru_cache(maxsize=None)
def _euler_second_std(n, method):
    if method is SERIES:
        return _series_coeff(_sech_series, n)
    if method is RECURRENCE:
        # cosh * sech = 1
        if n == 0:
            return Fraction(1)
        return -sum((comb(n, j) * _euler_second_std(j, RECURRENCE)
                     for j in range(n) if (n - j) % 2 == 0), Fraction(0))
    # 2/(e^t + e^-t) = e^t * 2/(e^{2t} + 1), so E*_n = 2^n E_n(1/2)
    return 2 ** n * euler_first_pos(n, 1, Fraction(1, 2), 1, EXPLICIT)


# ---------------------------------------------------------------------------
# Fibonacci and Lucas numbers
# ---------------------------------------------------------------------------

def fibonacci(n: int) -> int:
    """``f_0 = 0, f_1 = 1``; negative indices via ``f_{-n} = (-1)^(n+1) f_n``."""
    if n < 0:
        return (-1) ** (-n + 1) * fibonacci(-n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    if n < 0:
        return (-1) ** (-n) * lucas(-n)
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def _lucas_series(k, N):
    return egf.pow(exp_series(1, GOLDEN, N) + exp_series(1, GOLDEN_CONJ, N), k)


def lucas_order(n: int, k: int, method=EXPLICIT) -> Fraction:
    """``L_n^(k)``: coefficients of ``(e^{at} + e^{bt})^k``, ``a, b = (1 +- sqrt5)/2``."""
    _check_nk(n, k)
    m = _method(method, "lucas-order")
    if m is EXPLICIT:
        value = sum((comb(k, j) * (j * GOLDEN + (k - j) * GOLDEN_CONJ) ** n for j in range(k + 1)),
                    QuadNum(0))
    else:
        value = _series_coeff(_lucas_series, n, k)
    if not isinstance(value, QuadNum):
        value = QuadNum(value)
    if not value.is_rational():
        raise ConsistencyError(f"L_{n}^({k}) came out irrational: {value}")
    return value.rational


# ---------------------------------------------------------------------------
# Uniform dispatch used by the CLI and the cross-method checks
# ---------------------------------------------------------------------------

NEEDS_X = {"array", "e-neg-poly", "e-pos"}
NEEDS_UNIT_LAMBDA = {"y2", "C", "e-star-neg"}
NO_LAMBDA = {"T", "B", "bernoulli", "e-star", "lucas-order"}
NO_K = {"bernoulli", "e-star"}


def evaluate(family: str, n: int, k: int = 0, *, lam=1, x=0, method=EXPLICIT):
    """Evaluate any family by its CLI tag."""
    if family not in FAMILY_METHODS:
        raise ValueError(f"unknown family {family!r}")
    if family == "y1":
        return y1(n, k, lam, method)
    if family == "y2":
        return y2(n, k, lam, method)
    if family == "C":
        return c_central(n, k, lam, method)
    if family == "S2":
        return stirling2_lambda(n, k, lam, method)
    if family == "array":
        return array_poly(n, k, x, lam, method)
    if family == "T":
        return central_T(n, k, method)
    if family == "B":
        return golombek_B(n, k, method)
    if family == "bernoulli":
        return bernoulli_poly(n, x, method)
    if family == "e-neg":
        return euler_first_neg(n, k, lam, method)
    if family == "e-neg-poly":
        return euler_first_neg_poly(n, k, x, lam, method)
    if family == "e-star-neg":
        return euler_second_neg(n, k, lam, method)
    if family == "b-neg":
        return apostol_bernoulli_neg(n, k, lam, method)
    if family == "e-pos":
        return euler_first_pos(n, k, x, lam, method)
    if family == "e-star":
        return euler_second_std(n, method)
    return lucas_order(n, k, method)


def falling_factorial(n: int, k: int) -> int:
    return perm(n, k) if 0 <= k <= n else 0


__all__ = [
    "LAMBDA", "Method", "EXPLICIT", "SERIES", "RECURRENCE", "FAMILY_METHODS", "ConsistencyError",
    "y1", "y2", "c_central", "stirling2_lambda", "array_poly", "central_T", "golombek_B",
    "golombek_B_spivey", "bernoulli_number", "bernoulli_poly", "euler_first_neg",
    "euler_first_neg_poly", "euler_second_neg", "apostol_bernoulli_neg", "euler_first_pos",
    "euler_second_std", "fibonacci", "lucas", "lucas_order", "evaluate", "falling_factorial",
]
