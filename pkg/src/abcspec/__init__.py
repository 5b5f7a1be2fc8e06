"""Closed-form spectra of arrow-bordered circulant (abc) matrices, checked against a Jacobi oracle."""

from .arrowhead import ArrowheadSpectrum, arrowhead_eigenvalues, arrowhead_spectrum_cardinality
from .circulant import ComplexEigenpair, circulant_eigenpairs
from .errors import (
    NoConvergence,
    UnsupportedDegeneracy,
    UnsupportedOrder,
    ZeroAbscissa,
    ZeroBorder,
    ZeroTire,
    ZeroVector,
)
from .matrices import (
    AbcParams,
    ArrowheadParams,
    CirculantParams,
    N2Variant,
    materialize_abc,
    materialize_arrowhead,
    materialize_circulant,
    normalize_b,
)
from .oracle import OracleSpectrum, count_near, jacobi_eigenvalues, residual
from .special_points import (
    extreme_eigenvalues,
    extreme_extrema,
    classify_configuration,
    limit_transition_curve,
    special_points,
)
from .spectrum import (
    AbcEigenbasis,
    AbcSpectrum,
    abc_eigenbasis,
    abc_spectrum,
    crossing_abscissas,
    multiplicity_profile,
    small_n_spectrum,
    spectrum_cardinality,
)
from .wheel import WeightedWheel, build_wheel, wheel_adjacency

__version__ = "0.1.0"
