"""Horn-problem / Littlewood-Richardson toolkit.

Computes Littlewood-Richardson coefficients by two independent algorithms,
simulates the tensor-power spectrum-estimation measurement with its
exponential outcome bound, constructs Hermitian witnesses for prescribed
spectral triples, and scans for integer-triple witnesses converging to
target spectra.
"""

from .converse_scan import (
    ScanReport,
    ScanTarget,
    ScanWitness,
    candidate_triples,
    epsilon_schedule,
    mixture_spectrum,
    scan,
)
from .horn_realize import (
    RealizationResult,
    SweepReport,
    realize_triple,
    spectral_residual,
    to_density_form,
    verify_theorem1_sweep,
)
from .lr import (
    LRResult,
    balanced_frame_triples,
    find_scaling,
    lr_character_oracle,
    lr_general,
    lr_tableaux,
    nonzero_balanced_triples,
)
from .schur_weyl import (
    DensityOperator,
    MeasurementDistribution,
    ResourceError,
    kl_divergence,
    kw_bound,
    measurement_distribution,
    pinsker_gap,
    projector_trace_direct,
    projector_trace_schur,
)
from .symfun import (
    class_size,
    gl_dim,
    partitions,
    schur_poly,
    schur_poly_exact,
    sym_character,
    sym_dim,
)
from .weights import (
    DominantWeight,
    NormalizedSpectrum,
    SpectralTriple,
    dominance_check,
    enumerate_frames,
    format_weight,
    normalize,
    parse_weight,
    shift_triple,
)

__version__ = "0.1.0"
