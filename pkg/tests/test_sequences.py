import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubiccensus.errors import ParameterOutOfRangeError
from cubiccensus.sequences import (
    check_m_inequalities,
    fibonacci,
    m_inequality_rows,
    m_value,
    mc_cycle_formula,
    psi_lower_bound,
    psi_table,
)


def test_fibonacci():
    assert [fibonacci(i) for i in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert fibonacci(184) == fibonacci(183) + fibonacci(182)
    with pytest.raises(ParameterOutOfRangeError):
        fibonacci(185)


def test_m_values():
    assert [m_value(n) for n in range(2, 10)] == [3, 6, 9, 13, 20, 32, 52, 84]
    with pytest.raises(ParameterOutOfRangeError):
        m_value(1)


@given(st.integers(8, 185))
def test_m_recurrence(n):
    assert m_value(n) == m_value(n - 1) + m_value(n - 2)


def test_inequalities_hold_to_40():
    assert check_m_inequalities(40) == []
    equalities = [(r.clause, r.params) for r in m_inequality_rows(40) if r.equality]
    assert equalities == [("iii", (8,))]


def test_clause_ii_at_5():
    row = next(r for r in m_inequality_rows(9) if r.clause == "ii" and r.params == (5,))
    assert (row.lhs, row.rhs, row.holds) == (12, 13, True)


def test_all_clauses_present():
    assert {r.clause for r in m_inequality_rows(9)} == {"viii", "i", "ii", "iii", "iv", "ix", "v", "vii"}
    with pytest.raises(ParameterOutOfRangeError):
        m_inequality_rows(8)


def test_cycle_formula_values():
    assert mc_cycle_formula(3) == 14
    assert mc_cycle_formula(4) == 28
    assert psi_lower_bound(4) == 14
    assert psi_lower_bound(5) == 28
    with pytest.raises(ParameterOutOfRangeError):
        mc_cycle_formula(2)
    with pytest.raises(ParameterOutOfRangeError):
        psi_lower_bound(3)


@given(st.integers(4, 400))
def test_psi_is_shifted_cycle_formula(r):
    assert psi_lower_bound(r) == mc_cycle_formula(r - 1)


def test_psi_table_frozen():
    # frozen from count_cycles on the crossed-rung prisms (see test_acceptance)
    assert [row.psi_lower for row in psi_table(10)] == [14, 28, 56, 107, 199, 380, 696]
    assert psi_table(6)[-1] == (6, 56, 32, 960)
