"""
Ортогональные многочлены, параметры Якоби, преобразование Коши, мера Мейкснера
"""

from .jacobi import (
    TPoly,
    q_number,
    q_pochhammer,
    beta_poly,
    gamma_poly,
    jacobi,
    poly_Q,
    poly_Q_sequence,
    t_mul,
    t_poly_text,
    moments_from_jacobi,
    moment_polys,
    moment_functional,
    orthogonality_norms,
    gamma_products,
)
from .cauchy import cauchy_cf, stieltjes_density, cauchy_closed_form, atom_mass_from_transform
from .meixner import SUPPORT, MeixnerMeasure, meixner_measure, atom_location, atom_mass, measure_moments

__all__ = [
    "TPoly",
    "q_number",
    "q_pochhammer",
    "beta_poly",
    "gamma_poly",
    "jacobi",
    "poly_Q",
    "poly_Q_sequence",
    "t_mul",
    "t_poly_text",
    "moments_from_jacobi",
    "moment_polys",
    "moment_functional",
    "orthogonality_norms",
    "gamma_products",
    "cauchy_cf",
    "stieltjes_density",
    "cauchy_closed_form",
    "atom_mass_from_transform",
    "SUPPORT",
    "MeixnerMeasure",
    "meixner_measure",
    "atom_location",
    "atom_mass",
    "measure_moments",
]
