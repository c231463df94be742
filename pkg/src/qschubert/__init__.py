"""Exact Schubert calculus for the classical and small quantum cohomology
rings of complex Grassmannians G(n-k, n)."""

from .classical import (
    CohomClass,
    SpecialExpansion,
    degree,
    giambelli_leibniz,
    lr_tableaux_oracle,
    multiply_classical,
    pieri_classical,
    poincare_pairing,
)
from .grassmannian import (
    GrassmannianShape,
    ShapeError,
    complement,
    degree_for_codim,
    enumerate_box,
    make_shape,
    moduli_dimension,
    weight,
)
from .presentation import (
    XPolynomial,
    evaluate_classical,
    evaluate_quantum,
    inverse_series,
    quantum_relation_sign,
    verify_presentations,
)
from .quantum import (
    QuantumClass,
    enumerate_extended,
    extended_giambelli_direct,
    extended_giambelli_reduce,
    giambelli_quantum,
    gromov_witten,
    pieri_quantum,
    quantum_multiply,
    quantum_product,
)
from .residue import (
    ResidualError,
    VacuumSet,
    elem_sym,
    giambelli_at,
    vacuum_set,
    vi_gromov_witten,
    vi_quantum_product,
)

__version__ = "0.1.0"
