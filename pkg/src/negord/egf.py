"""Truncated exponential generating functions over an exact coefficient ring.

A series ``f(t) = sum a_n t^n / n!`` is stored densely as ``a_0 .. a_N``.
Coefficients may be ``int``, ``Fraction``, ``LaurentPoly`` or ``QuadNum``;
they only need ``+``, ``-``, ``*``, ``==`` and, for :func:`reciprocal`,
an inverse of the constant term.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

TRUNC_ENV = "NEGORD_TRUNC_ORDER"


def default_order(n: int) -> int:
    """Truncation order used to extract coefficient ``n``.

    Two orders of headroom by default; ``NEGORD_TRUNC_ORDER`` overrides.
    """
    override = os.environ.get(TRUNC_ENV)
    if override:
        try:
            order = int(override)
        except ValueError:
            raise ValueError(f"{TRUNC_ENV} must be an integer, got {override!r}") from None
        if order < n:
            raise ValueError(f"{TRUNC_ENV}={order} is below the requested index {n}")
        return order
    return n + 2


def _zero_like(x):
    return x * 0


def _inverse(x):
    if isinstance(x, int):
        if x == 0:
            raise ValueError("constant term 0 is not invertible")
        return Fraction(1, x)
    try:
        return 1 / x
    except (ZeroDivisionError, ValueError) as exc:
        raise ValueError(f"constant term {x} is not invertible: {exc}") from None


class EgfSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if len(coeffs) == 0:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return coeff(self, n)

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: EgfSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, EgfSeries):
            self._check(other)
            return EgfSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])
        # a ring scalar is a constant series
        return EgfSeries((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> EgfSeries:
        return EgfSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, EgfSeries):
            return mul(self, other)
        return EgfSeries([a * other for a in self.coeffs])

    def __rmul__(self, other):
        return EgfSeries([other * a for a in self.coeffs])

    def __truediv__(self, scalar):
        if isinstance(scalar, int):
            scalar = Fraction(scalar)
        return EgfSeries([a / scalar for a in self.coeffs])

    def __pow__(self, k: int) -> EgfSeries:
        return pow(self, k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"EgfSeries({list(self.coeffs)!r})"


def exp_series(prefactor, rate, N: int) -> EgfSeries:
    """``prefactor * exp(rate * t)``: coefficients ``prefactor * rate**n``."""
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    out = []
    power = rate * 0 + 1
    for _ in range(N + 1):
        out.append(prefactor * power)
        power = power * rate
    return EgfSeries(out)


def one_series(N: int, one=1) -> EgfSeries:
    zero = _zero_like(one)
    return EgfSeries([one] + [zero] * N)


def t_power(k: int, N: int) -> EgfSeries:
    """The series ``t**k``, i.e. the single EGF coefficient ``a_k = k!``."""
    return EgfSeries([factorial(k) if n == k else 0 for n in range(N + 1)])


def mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """Binomial convolution ``c_n = sum_j C(n, j) a_j b_{n-j}``."""
    f._check(g)
    a, b = f.coeffs, g.coeffs
    out = []
    for n in range(len(a)):
        acc = None
        for j in range(n + 1):
            aj, bk = a[j], b[n - j]
            if not aj or not bk:
                continue
            term = aj * bk
            c = comb(n, j)
            if c != 1:
                term = term * c
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else _zero_like(a[0]) + _zero_like(b[0]))
    return EgfSeries(out)


def pow(f: EgfSeries, k: int) -> EgfSeries:
    """``f**k`` by iterated multiplication; ``f**0`` is the one-series."""
    if k < 0:
        raise ValueError("negative powers need reciprocal()")
    result = one_series(f.order, _zero_like(f.coeffs[0]) + 1)
    for _ in range(k):
        result = mul(result, f)
    return result


def reciprocal(f: EgfSeries) -> EgfSeries:
    a = f.coeffs
    inv0 = _inverse(a[0])
    b = [inv0]
    for n in range(1, len(a)):
        acc = _zero_like(inv0)
        for j in range(1, n + 1):
            if a[j]:
                acc = acc + comb(n, j) * a[j] * b[n - j]
        b.append(-inv0 * acc)
    return EgfSeries(b)


def shift_div_t(f: EgfSeries, k: int) -> EgfSeries:
    """Divide by ``t**k``; the first ``k`` coefficients must vanish."""
    if k > f.order:
        raise ValueError(f"cannot divide an order-{f.order} series by t^{k}")
    for j in range(k):
        if f.coeffs[j]:
            raise ValueError(f"coefficient a_{j} = {f.coeffs[j]} is nonzero; not divisible by t^{k}")
    out = []
    for n in range(f.order - k + 1):
        out.append(f.coeffs[n + k] * Fraction(factorial(n), factorial(n + k)))
    return EgfSeries(out)


def drop_below(f: EgfSeries, k: int) -> EgfSeries:
    """Zero the coefficients of ``t**0 .. t**(k-1)``."""
    zero = _zero_like(f.coeffs[0])
    return EgfSeries([zero if n < k else a for n, a in enumerate(f.coeffs)])


def negate_t(f: EgfSeries) -> EgfSeries:
    """``f(-t)``."""
    return EgfSeries([a if n % 2 == 0 else -a for n, a in enumerate(f.coeffs)])


def scale_t(f: EgfSeries, c) -> EgfSeries:
    """``f(c t)``: coefficients ``a_n c**n``."""
    out = []
    power = c * 0 + 1
    for a in f.coeffs:
        out.append(a * power)
        power = power * c
    return EgfSeries(out)


def truncate(f: EgfSeries, N: int) -> EgfSeries:
    if N > f.order:
        raise ValueError(f"cannot extend an order-{f.order} series to order {N}")
    return EgfSeries(f.coeffs[: N + 1])


def coeff(f: EgfSeries, n: int):
    """The EGF coefficient ``a_n`` (already scaled by ``n!``)."""
    if not 0 <= n <= f.order:
        raise IndexError(f"index {n} outside 0..{f.order}")
    return f.coeffs[n]
