"""Cayley-Dickson algebras, shifted multiplication spectra and meson mass
relations.

The heavy lifting lives in the compiled extension; this package re-exports its
public surface.
"""

from cdspectra._core import (  # noqa: F401
    DOUBLET_COEFFICIENT,
    MAX_LEVEL,
    CdElement,
    GenerationError,
    InputError,
    InternalError,
    SolverError,
    __version__,
    add,
    associator,
    basis_element,
    commutator,
    conjugate,
    degeneracy_profile,
    delta,
    eta_doublet,
    imaginary_part,
    inner,
    is_alternative,
    left_mult_matrix,
    make_alternative_entry_element,
    make_element,
    mass_formula_16,
    multiply,
    n_operator_matrix,
    norm_sq,
    propagate_ratio_uncertainty,
    property_report,
    random_element,
    right_mult_matrix,
    run_command,
    scale,
    shifted_spectrum,
    subtract,
    zero_element,
)
