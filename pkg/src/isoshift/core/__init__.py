"""
Module core - Package d'initialisation
"""

from .errors import (
    IsoShiftError, InvalidParameterError, DimensionMismatchError, NonFiniteError,
    GraphValidationError, EdgeListParseError, GraphGenerationError,
    IncompatibleBasisError, DecompositionError, SeriesConvergenceError,
    DenseLimitError, SignalFormatError,
)
from .graph import (
    Graph, ValidationReport, ValidationIssue, validate, validate_weights,
    laplacian, adjacency, generate, load_edges, save_edges, joint_graph,
)
from .spectral import (
    BasisSource, SpectralBasis, eig_sym, dft_basis, custom_basis, graph_basis,
    gft, igft, eigengap, unitarity_defect, max_abs,
)
from .translation import (
    FrequencyVariant, FrequencySpec, TranslationOperator, frequencies, gto,
    translate, power_spectrum, default_phases, warn_if_degenerate,
)
from .discrete_time import shift_permutation, dt_translation
from .schrodinger import (
    Hamiltonian, hamiltonian, transition_spectral, transition_series,
    transition_expm, evolve, trajectory,
)
from .joint import (
    JointForm, TimeVertexSignal, JointOperator, JWSSEntry, JWSSReport,
    jft, ijft, joint_basis, joint_power_spectrum, jto_kronecker, jto_apply,
    jto_spectral, convolutivity_defect, segarra_shift, segarra_bivariate,
    isometry_defect, joint_graph_gto, joint_graph_deviation, sample_moments, jwss_check,
)

__all__ = [
    'IsoShiftError', 'InvalidParameterError', 'DimensionMismatchError', 'NonFiniteError',
    'GraphValidationError', 'EdgeListParseError', 'GraphGenerationError',
    'IncompatibleBasisError', 'DecompositionError', 'SeriesConvergenceError',
    'DenseLimitError', 'SignalFormatError',
    'Graph', 'ValidationReport', 'ValidationIssue', 'validate', 'validate_weights',
    'laplacian', 'adjacency', 'generate', 'load_edges', 'save_edges', 'joint_graph',
    'BasisSource', 'SpectralBasis', 'eig_sym', 'dft_basis', 'custom_basis', 'graph_basis',
    'gft', 'igft', 'eigengap', 'unitarity_defect', 'max_abs',
    'FrequencyVariant', 'FrequencySpec', 'TranslationOperator', 'frequencies', 'gto',
    'translate', 'power_spectrum', 'default_phases', 'warn_if_degenerate',
    'shift_permutation', 'dt_translation',
    'Hamiltonian', 'hamiltonian', 'transition_spectral', 'transition_series',
    'transition_expm', 'evolve', 'trajectory',
    'JointForm', 'TimeVertexSignal', 'JointOperator', 'JWSSEntry', 'JWSSReport',
    'jft', 'ijft', 'joint_basis', 'joint_power_spectrum', 'jto_kronecker', 'jto_apply',
    'jto_spectral', 'convolutivity_defect', 'segarra_shift', 'segarra_bivariate',
    'isometry_defect', 'joint_graph_gto', 'joint_graph_deviation', 'sample_moments', 'jwss_check',
]
