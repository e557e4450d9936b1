"""Discrete Wigner functions and phase-space operator bases for N-level systems."""
from .bases import (
    OperatorCoefficients,
    coeff_fourier_inverse,
    coeff_fourier_link,
    d_basis,
    decompose,
    delta_basis,
    g_basis,
    g_basis_all,
    g_basis_window,
    label_signs,
    phi,
    reconstruct,
    reference_labels,
    s_basis,
    similarity_check,
)
from .errors import InvalidStateError, UnsupportedDimensionError
from .linalg import (
    anticommutator,
    charpoly_coeffs,
    commutator,
    dagger,
    hermitian_eigenvalues,
    matmul,
    trace,
)
from .schwinger import FourierParity, SchwingerPair, make_fourier_parity, make_schwinger
from .sun import (
    DensityMatrix,
    GeneratorIndex,
    GeneratorSet,
    StructureConstants,
    ToyModelParams,
    bloch_vector,
    generators_via_schwinger,
    make_generators,
    mean_value,
    pair_mean,
    random_density_matrix,
    random_pure_state,
    rho_from_bloch,
    schwinger_via_gellmann,
    structure_constants,
    toy_admissible,
    transition_op,
)
from .wigner import (
    CharacteristicGrid,
    MappedGenerators,
    WignerGrid,
    characteristic,
    characteristic_bloch,
    compare_bases,
    mapped_generators,
    mapped_generators_closed,
    mapped_generators_dual,
    mean_from_grids,
    su2_wigner_closed,
    su3_wigner_closed,
    toy_model,
    wigner_bloch,
    wigner_direct,
    wigner_from_characteristic,
)

__version__ = "0.1.0"
