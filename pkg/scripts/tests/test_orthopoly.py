"""Параметры Якоби, многочлены Q_n, моменты, преобразование Коши и мера при q = 0"""

import math
from fractions import Fraction

import pytest

from typeb_fock.algebra import ALPHA, Q, BivariatePoly
from typeb_fock.exceptions import PreconditionError
from typeb_fock.orthopoly import (
    SUPPORT,
    atom_location,
    atom_mass,
    atom_mass_from_transform,
    beta_poly,
    cauchy_cf,
    cauchy_closed_form,
    gamma_poly,
    gamma_products,
    jacobi,
    meixner_measure,
    measure_moments,
    moment_functional,
    moment_polys,
    moments_from_jacobi,
    orthogonality_norms,
    poly_Q,
    t_poly_text,
    q_number,
    q_pochhammer,
    t_mul,
)

ONE = BivariatePoly.one()


# ============================================================================
# q-числа и параметры Якоби
# ============================================================================

def test_q_numbers():
    assert q_number(1, 5) == 1
    assert q_number(3, 2) == 7
    assert q_number(4, 0) == 1
    assert q_number(2, "-1/2") == Fraction(1, 2)
    assert q_pochhammer("1/2", "1/2", 2) == Fraction(3, 8)
    with pytest.raises(ValueError):
        q_number(0, 1)


def test_jacobi_at_q_zero():
    params = jacobi(Fraction(1, 3), 0, 3)
    a = Fraction(4, 3)
    assert params.beta == (0, a, 1, 1)
    assert params.gamma == (a, 1, 1, 1)


def test_parameter_polynomials():
    assert beta_poly(0).is_zero()
    assert beta_poly(1) == ONE + ALPHA
    assert gamma_poly(1) == (ONE + Q) * (ONE + ALPHA * Q)
    assert gamma_poly(2) == (ONE + Q + Q ** 2) * (ONE + ALPHA * Q ** 2)


def test_first_orthogonal_polynomials():
    assert poly_Q(0) == (ONE,)
    assert poly_Q(1) == (BivariatePoly.zero(), ONE)
    assert poly_Q(2) == (-(ONE + ALPHA), -(ONE + ALPHA), ONE)
    assert t_poly_text(poly_Q(1)) == "(1)*t"
    assert t_poly_text(()) == "0"
    with pytest.raises(ValueError):
        poly_Q(-1)


# ============================================================================
# Моменты
# ============================================================================

def test_moments_marchenko_pastur_case():
    assert moments_from_jacobi(0, 0, 5) == [1, 0, 1, 1, 3, 6]


def test_moment_polynomials():
    m = moment_polys(4)
    assert m[0] == ONE and m[1].is_zero()
    assert m[2] == ONE + ALPHA
    assert m[3] == (ONE + ALPHA) ** 2
    at = [p.evaluate("1/2", "1/3") for p in m]
    assert at == moments_from_jacobi(Fraction(1, 2), Fraction(1, 3), 4)


def test_orthogonality_norms():
    norms = orthogonality_norms(3)
    products = gamma_products(3)
    for i in range(4):
        for j in range(4):
            if i == j:
                assert norms[i][j] == products[i]
            else:
                assert norms[i][j].is_zero()
    assert products[2] == (ONE + ALPHA) * gamma_poly(1)


def test_moment_functional_needs_enough_moments():
    with pytest.raises(ValueError):
        moment_functional(moment_polys(2), t_mul(poly_Q(2), poly_Q(1)))


# ============================================================================
# Преобразование Коши
# ============================================================================

@pytest.mark.parametrize("alpha, q", [(0.0, 0.0), (1.0, 0.0), (0.5, 0.4), (-0.5, -0.3)])
def test_cauchy_transform_behaves_like_one_over_z(alpha, q):
    z = complex(0, 1e6)
    g = cauchy_cf(alpha, q, z)
    assert abs(z * g - 1) < 1e-6
    for z in (1 + 1j, -2 + 0.5j, 5 + 2j):
        assert cauchy_cf(alpha, q, z).imag < 0


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 1.0, 2.0])
def test_continued_fraction_matches_closed_form(alpha):
    for z in (1 + 1j, 4 + 0.5j, -2 + 2j, 0.3 + 0.01j):
        assert cauchy_cf(alpha, 0.0, z) == pytest.approx(cauchy_closed_form(alpha, z), abs=1e-8)


@pytest.mark.parametrize("alpha", [0.0, 1.0, 2.0])
def test_stieltjes_inversion_recovers_density(alpha):
    mu = meixner_measure(alpha)
    for x in (-0.5, 0.5, 1.0, 2.5):
        assert stieltjes(alpha, x) == pytest.approx(mu.density(x), abs=1e-4)


def stieltjes(alpha, x):
    return -cauchy_cf(alpha, 0.0, complex(x, 1e-6)).imag / math.pi


def test_cauchy_preconditions():
    with pytest.raises(PreconditionError):
        cauchy_cf(0.0, 0.0, 1.0)
    with pytest.raises(PreconditionError):
        cauchy_cf(0.0, 0.0, 1j, depth=0)
    with pytest.raises(PreconditionError):
        cauchy_cf(0.0, 1.0, 1j)
    with pytest.raises(ValueError):
        cauchy_cf(0.0, 0.0, 1j, tail="linear")
    assert cauchy_cf(0.0, 1.0, 1j, tail="zero").imag < 0


# ============================================================================
# Мера при q = 0
# ============================================================================

def test_atom_location_and_mass():
    assert atom_location(1.0) == pytest.approx(1 + math.sqrt(5))
    assert atom_mass(1.0) == pytest.approx(0.10557, abs=1e-5)
    assert atom_mass(2.0) == pytest.approx(0.13397, abs=1e-5)
    assert atom_mass(0.5) == pytest.approx(0.0, abs=1e-12)
    assert atom_mass(0.25) == pytest.approx(0.0, abs=1e-9)
    assert atom_location(0.5) == pytest.approx(SUPPORT[1])


@pytest.mark.parametrize("alpha", [1.0, 2.0])
@pytest.mark.parametrize("method", ["closed", "cf"])
def test_atom_mass_from_transform(alpha, method):
    assert atom_mass_from_transform(alpha, method=method) == pytest.approx(atom_mass(alpha), abs=1e-4)


def test_atom_needs_positive_alpha():
    with pytest.raises(PreconditionError):
        atom_mass_from_transform(0.0)


@pytest.mark.parametrize("alpha", [Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)])
def test_measure_reproduces_exact_moments(alpha):
    exact = moments_from_jacobi(alpha, 0, 4)
    numeric = measure_moments(float(alpha), 4)
    assert numeric == pytest.approx([float(m) for m in exact], abs=1e-5)


def test_measure_shape():
    assert meixner_measure(0.0).atom is None
    assert meixner_measure(-0.5).atom is None
    assert meixner_measure(0.3).atom is not None
    mu = meixner_measure(0.0)
    assert mu.density(-1.5) == 0.0 and mu.density(3.5) == 0.0
    assert mu.density(1.0) == pytest.approx(math.sqrt(4) / (2 * math.pi * 2))
    with pytest.raises(PreconditionError):
        meixner_measure(-2.0)
    with pytest.raises(PreconditionError):
        meixner_measure(-1.0)


@pytest.mark.parametrize("alpha", [-0.9, -0.5, 0.5, 1.0, 2.0])
def test_density_is_nonnegative(alpha):
    mu = meixner_measure(alpha)
    for i in range(400):
        x = SUPPORT[0] + 0.05 + i * (SUPPORT[1] - SUPPORT[0] - 0.1) / 399
        assert mu.density(x) >= 0.0
    assert mu.total_mass() == pytest.approx(1.0, abs=1e-5)
