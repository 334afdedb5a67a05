"""Binomial moments, Bernstein basis, rook placements and Golombek polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial, perm

from .exact import as_fraction
from .families import golombek_B, stirling2_lambda


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_eval(coeffs, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def bernstein_basis(n: int, k: int, x) -> Fraction:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    x = as_fraction(x)
    return comb(n, k) * x ** k * (1 - x) ** (n - k)


def binomial_moment(n: int, r: int, x) -> Fraction:
    """``E(S_n(x))^r`` for a binomial count with ``n`` trials and success rate ``x``."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    x = as_fraction(x)
    return sum((k ** r * bernstein_basis(n, k, x) for k in range(n + 1)), Fraction(0))


@dataclass(frozen=True)
class MomentPoly:
    """``E(S_n(x))^r`` expanded in powers of ``x``; ``coeffs[i]`` multiplies ``x**i``."""

    n: int
    r: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, x) -> Fraction:
        return _poly_eval(self.coeffs, as_fraction(x))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def moment_poly(n: int, r: int) -> MomentPoly:
    total = [Fraction(0)]
    for k in range(n + 1):
        # C(n,k) k^r x^k (1-x)^(n-k)
        term = [Fraction(0)] * k + [Fraction(comb(n, k) * k ** r)]
        for _ in range(n - k):
            term = _poly_mul(term, [Fraction(1), Fraction(-1)])
        if len(term) > len(total):
            total += [Fraction(0)] * (len(term) - len(total))
        for i, c in enumerate(term):
            total[i] += c
    return MomentPoly(n, r, tuple(_trim(total)))


def moment_integral(n: int, r: int) -> Fraction:
    """Integral of ``E(S_n(x))^r`` over ``[0, 1]``, via the Beta integral per term."""
    return sum((Fraction(comb(n, k) * k ** r * factorial(k) * factorial(n - k), factorial(n + 1))
                for k in range(n + 1)), Fraction(0))


BRUTE_FORCE_MAX = 6


def rook_count_bruteforce(n: int, k: int) -> int:
    """Non-attacking placements of ``k`` rooks on an ``n x n`` board, by enumeration."""
    if not 1 <= n <= BRUTE_FORCE_MAX:
        raise ValueError(f"brute force supports 1 <= n <= {BRUTE_FORCE_MAX}, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    count = 0
    for cols in combinations(range(n), k):
        for rows in product(range(n), repeat=k):
            if len(set(rows)) == k:
                count += 1
    return count


def rook_count_formula(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return comb(n, k) * perm(n, k)


def rook_total(n: int) -> int:
    """Placements of at least one rook, any count up to ``n``."""
    return sum(rook_count_formula(n, k) for k in range(1, n + 1))


def golombek_poly(d: int) -> list[Fraction]:
    """``p_d(k)`` with ``B(d, k) = p_d(k) 2^(k-d)``; ``result[i]`` multiplies ``k**i``."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    total = [Fraction(0)] * (d + 1)
    for m in range(d + 1):
        s = stirling2_lambda(d, m, 1)
        if not s:
            continue
        falling = [Fraction(1)]
        for i in range(m):
            falling = _poly_mul(falling, [Fraction(-i), Fraction(1)])
        for i, c in enumerate(falling):
            total[i] += s * 2 ** (d - m) * c
    return _trim(total)


def eval_poly(coeffs, x) -> Fraction:
    return _poly_eval(coeffs, as_fraction(x))


def b_ogf_coeffs(d: int, K: int) -> list[Fraction]:
    """``[B(d, 0), ..., B(d, K)]``, the ordinary generating function coefficients in ``k``."""
    if d < 0 or K < 0:
        raise ValueError("d and K must be nonnegative")
    return [Fraction(golombek_B(d, k)) for k in range(K + 1)]
