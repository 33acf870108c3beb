from fractions import Fraction

import pytest

from algebra.errors import InvalidQuantumNumbers, LevelOutOfRange, NoGauge, UnknownSystem
from algebra.function_factor import FunctionFactor
from algebra.operators import OpExpr, adjoint
from algebra.scalar import INV_SQRT2, Scalar
from models.chain import chain_energies
from models.gauge import similarity_check, solve_gauge
from models.ladder import factorization_check, hamiltonian, intertwine_check, lowering_op, raising_op
from models.normalization import (closed_form_constant, exact_ground_norm, final_norm,
                                  normalization_constant, printed_ground_norm)
from models.system_spec import QuantumNumbers, all_systems, check_level, get_system
from analysis.verification_pipeline import state_grid

LEVELS = range(0, 9)


# =============================================================================
# Registry
# =============================================================================
def test_registry_has_the_five_systems():
    assert [s.name for s in all_systems()] == ["sho1d", "osc2d", "osc3d", "coul2d", "coul3d"]


def test_unknown_system():
    with pytest.raises(UnknownSystem):
        get_system("morse")


def test_level_guard():
    with pytest.raises(LevelOutOfRange):
        check_level(-1)
    with pytest.raises(LevelOutOfRange):
        check_level(13, 12)
    assert check_level(12, 12) == 12


def test_superpotentials():
    assert get_system("sho1d").superpotential(0) == (0, 1, 0)
    assert get_system("osc3d").superpotential(2) == (-3, 1, 0)
    assert get_system("coul3d").superpotential(0) == (-1, 0, 1)
    assert get_system("coul2d").superpotential(1) == (Fraction(-3, 2), 0, Fraction(2, 3))


# =============================================================================
# Factorization chain identities
# =============================================================================
def test_factorization_identities(system):
    levels = LEVELS if system.is_radial else [0]
    assert all(factorization_check(system, level) for level in levels)


def test_intertwining(system):
    levels = LEVELS if system.is_radial else [0]
    assert all(intertwine_check(system, level) for level in levels)


def test_oscillator_ladder_operators_are_the_textbook_ones():
    sho = get_system("sho1d")
    x, p = OpExpr.coordinate(1), OpExpr.momentum(1)
    assert lowering_op(sho, 0) == (p - x.scale(Scalar(im=1))).scale(INV_SQRT2)
    assert raising_op(sho, 0) == (p + x.scale(Scalar(im=1))).scale(INV_SQRT2)
    # [Â, Â†] = 1
    a, a_dag = lowering_op(sho, 0), raising_op(sho, 0)
    assert a * a_dag - a_dag * a == OpExpr.scalar(1)


def test_hamiltonian_is_hermitian(system):
    h = hamiltonian(system, 1 if system.is_radial else 0)
    assert adjoint(h) == h


# =============================================================================
# Gauge
# =============================================================================
def test_gauge_of_the_oscillator():
    solution = solve_gauge(lowering_op(get_system("sho1d"), 0), 0)
    assert solution.f == FunctionFactor(0, Fraction(-1, 2))
    assert solution.ground == solution.f


def test_gauge_of_hydrogen():
    coul = get_system("coul3d")
    solution = solve_gauge(lowering_op(coul, 2), coul.shift)
    # f = x^3 e^{-x/3}; F = x^2 e^{-x/3}
    assert solution.f == FunctionFactor(3, 0, Fraction(-1, 3))
    assert solution.ground == FunctionFactor(2, 0, Fraction(-1, 3))


def test_gauge_similarity(system):
    for level in (0, 1, 3) if system.is_radial else (0,):
        a = lowering_op(system, level)
        assert similarity_check(a, solve_gauge(a, system.shift))


def test_gauge_rejects_other_shapes():
    with pytest.raises(NoGauge):
        solve_gauge(OpExpr.momentum(2), 0)
    with pytest.raises(NoGauge):
        solve_gauge(OpExpr.momentum(1) + OpExpr.coordinate(3), 0)


# =============================================================================
# Spectra
# =============================================================================
def test_spectrum_examples():
    assert get_system("sho1d").energy(QuantumNumbers(0, 2)) == Fraction(5, 2)
    assert get_system("coul3d").energy(QuantumNumbers(0, 1)) == Fraction(-1, 8)
    assert get_system("osc2d").energy(QuantumNumbers(1, 0)) == 2
    assert get_system("osc3d").energy(QuantumNumbers(1, 1)) == Fraction(9, 2)
    assert get_system("coul2d").energy(QuantumNumbers(0, 0)) == -2


def test_chain_energies_follow_the_law(system):
    for qn in state_grid(system, 8):
        assert system.energy(qn) == system.energy_law(qn)


def test_chain_grid_rows_share_energy():
    entries = chain_energies(get_system("sho1d"), 4)
    rows = {}
    for e in entries:
        rows.setdefault(e.row, set()).add(e.energy)
    assert [rows[r] for r in range(5)] == [{Fraction(2 * r + 1, 2)} for r in range(5)]
    assert len(entries) == 15


def test_chain_guard():
    with pytest.raises(LevelOutOfRange):
        chain_energies(get_system("osc3d"), 20, bound=12)


# =============================================================================
# Quantum numbers
# =============================================================================
def test_quantum_numbers_from_flags():
    assert QuantumNumbers.from_flags(get_system("sho1d"), n=3) == QuantumNumbers(0, 3)
    assert QuantumNumbers.from_flags(get_system("coul3d"), n=3, l=1) == QuantumNumbers(1, 1)
    assert QuantumNumbers.from_flags(get_system("osc3d"), n=5, l=1) == QuantumNumbers(1, 2)
    assert QuantumNumbers.from_flags(get_system("osc2d"), m=-2, k=1) == QuantumNumbers(2, 1, -1)


@pytest.mark.parametrize("name, flags", [
    ("coul3d", {"n": 2, "l": 2}),
    ("osc3d", {"n": 4, "l": 1}),
    ("osc2d", {"l": 1, "k": 0}),
    ("sho1d", {}),
    ("sho1d", {"n": 2, "k": 3}),
    ("sho1d", {"n": 2, "l": 1}),
    ("sho1d", {"n": 2, "m": 0}),
])
def test_invalid_quantum_numbers(name, flags):
    with pytest.raises(InvalidQuantumNumbers):
        QuantumNumbers.from_flags(get_system(name), **flags)


# =============================================================================
# Normalization
# =============================================================================
def test_chain_product_matches_closed_forms(system):
    for qn in state_grid(system, 8):
        assert normalization_constant(system, qn) == closed_form_constant(system, qn)


def test_chain_product_examples():
    assert normalization_constant(get_system("sho1d"), QuantumNumbers(0, 3)) == Scalar.sqrt_of(Fraction(1, 6))
    assert normalization_constant(get_system("osc3d"), QuantumNumbers(0, 2)) == Scalar.sqrt_of(Fraction(1, 8))


def test_exact_ground_norms_match_printed(system):
    for level in (0, 1, 2, 5) if system.is_radial else (0,):
        assert exact_ground_norm(system, level) == printed_ground_norm(system, level)


def test_ground_norm_values():
    assert exact_ground_norm(get_system("sho1d"), 0) == Scalar.pi_power(-1)
    assert exact_ground_norm(get_system("coul3d"), 0) == Scalar.of(2)
    assert exact_ground_norm(get_system("osc2d"), 0) == Scalar.sqrt_of(2)


def test_printed_coulomb_prefactor_differs_except_at_l_equal_one():
    coul = get_system("coul3d")
    for qn in state_grid(coul, 5):
        same = final_norm(coul, qn) == final_norm(coul, qn, printed_coulomb=True)
        assert same == (qn.level == 1)
