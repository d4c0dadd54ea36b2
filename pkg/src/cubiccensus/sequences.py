"""Exact integer sequences: Fibonacci numbers, the extremal values m_n,
the inequalities between them, and the cycle counts of the crossed-rung
prisms together with the lower bounds they give for the maximum number of
cycles at a fixed cyclomatic number."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import NonIntegerResultError, ParameterOutOfRangeError

MAX_FIB_INDEX = 184
SMALL_M = {2: 3, 3: 6, 4: 9, 5: 13}


@lru_cache(maxsize=None)
def _fib_table() -> tuple[int, ...]:
    f = [0, 1]
    while len(f) <= MAX_FIB_INDEX + 1:
        f.append(f[-1] + f[-2])
    return tuple(f)


def fibonacci(n: int) -> int:
    if not 0 <= n <= MAX_FIB_INDEX:
        raise ParameterOutOfRangeError(f"fibonacci index {n} outside 0..{MAX_FIB_INDEX}")
    return _fib_table()[n]


def m_value(n: int) -> int:
    """Maximum number of perfect matchings of a connected cubic graph on 2n vertices."""
    if not 2 <= n <= MAX_FIB_INDEX + 1:
        raise ParameterOutOfRangeError(f"m_n needs 2 <= n <= {MAX_FIB_INDEX + 1}, got {n}")
    if n in SMALL_M:
        return SMALL_M[n]
    return 4 * fibonacci(n - 1)


class InequalityRow(NamedTuple):
    clause: str
    params: tuple[int, ...]
    lhs: int
    rhs: int
    relation: str  # "=", "<" or "<="
    holds: bool
    equality: bool


def m_inequality_rows(n_max: int) -> list[InequalityRow]:
    """Every instance of the eight inequalities with all indices <= ``n_max``.

    Clauses carry their source labels: viii (recurrence), i (3/2 growth),
    ii (2 m_{n-2}), iii (4 m_{n-3}, equality allowed only at n = 8),
    iv (6 m_{n-4}), ix (sqrt 3 growth, squared), v (m_{2n} < m_n^2),
    vii (m_a m_b < m_{a+b+1}).
    """
    if n_max < 9:
        raise ParameterOutOfRangeError("n_max must be at least 9")
    m = m_value
    rows: list[InequalityRow] = []

    def add(clause, params, lhs, rhs, relation, equality_ok=False):
        if relation == "=":
            holds = lhs == rhs
        elif relation == "<":
            holds = lhs < rhs
        else:
            holds = lhs < rhs or (lhs == rhs and equality_ok)
        rows.append(InequalityRow(clause, params, lhs, rhs, relation, holds, relation != "=" and lhs == rhs))

    for n in range(8, n_max + 1):
        add("viii", (n,), m(n), m(n - 1) + m(n - 2), "=")
    for n in range(6, n_max + 1):
        add("i", (n,), 3 * m(n - 1), 2 * m(n), "<")
    for n in range(5, n_max + 1):
        add("ii", (n,), 2 * m(n - 2), m(n), "<")
    for n in range(8, n_max + 1):
        add("iii", (n,), 4 * m(n - 3), m(n), "<=", equality_ok=(n == 8))
    for n in range(9, n_max + 1):
        add("iv", (n,), 6 * m(n - 4), m(n), "<")
    for n in range(6, n_max):
        add("ix", (n,), m(n + 1) ** 2, 3 * m(n) ** 2, "<")
    for n in range(3, n_max // 2 + 1):
        add("v", (n,), m(2 * n), m(n) ** 2, "<")
    for a in range(3, n_max):
        for b in range(3, n_max):
            if a + b >= 8 and a + b + 1 <= n_max:
                add("vii", (a, b), m(a) * m(b), m(a + b + 1), "<")
    return rows


def check_m_inequalities(n_max: int) -> list[InequalityRow]:
    """Rows that fail; an empty list means every clause holds up to ``n_max``."""
    return [row for row in m_inequality_rows(n_max) if not row.holds]


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResultError(f"{what} evaluated to {value}")
    return value.numerator


def mc_cycle_formula(k: int) -> int:
    """Closed-form number of cycles of the crossed-rung prism on 2k vertices."""
    if k < 3:
        raise ParameterOutOfRangeError(f"k must be >= 3, got {k}")
    if k % 2 == 0:
        value = 2**k + (k + Fraction(1, 2)) * 2 ** (k // 2) - Fraction(3, 2) * k
    else:
        value = 2**k + (k + Fraction(7, 2)) * 2 ** ((k - 1) // 2) - Fraction(3 * k + 5, 2)
    return _exact(value, f"cycle formula at k={k}")


def psi_lower_bound(r: int) -> int:
    """Lower bound on the maximum cycle count at cyclomatic number ``r``."""
    if r < 4:
        raise ParameterOutOfRangeError(f"r must be >= 4, got {r}")
    if r % 2:
        value = 2 ** (r - 1) + (r - Fraction(1, 2)) * 2 ** ((r - 1) // 2) - Fraction(3, 2) * (r - 1)
    else:
        value = 2 ** (r - 1) + (r + Fraction(5, 2)) * 2 ** ((r - 2) // 2) - Fraction(3 * r + 2, 2)
    return _exact(value, f"psi bound at r={r}")


class PsiRow(NamedTuple):
    r: int
    psi_lower: int
    half_power: int  # 2^(r-1)
    ceiling_16ths: int  # 15 * 2^r, compare against 16 * psi_lower


def psi_table(max_r: int, min_r: int = 4) -> list[PsiRow]:
    return [PsiRow(r, psi_lower_bound(r), 2 ** (r - 1), 15 * 2**r) for r in range(min_r, max_r + 1)]
