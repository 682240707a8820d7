"""randzeros: predicted vs. empirical zero counts of random polynomials,
trigonometric polynomials and exponential sums."""

from .spectra import (
    ComplexSpectrum,
    ExpSum,
    LaurentPolynomial,
    Spectrum1D,
    SpectrumND,
    TrigPolynomial,
    TrigPolynomialND,
    degree,
    is_centrally_symmetric,
    is_real_on_circle,
    trig_to_laurent,
)
from .ensembles import (
    RealPolynomial,
    RngStream,
    sample_expsum,
    sample_kac,
    sample_kostlan,
    sample_trig,
    sample_trig_system,
)
from .geometry import (
    ComplexPolytope,
    Ellipsoid,
    Polygon2D,
    SphericalCurve,
    convex_hull_2d,
    crofton_estimate,
    ellipsoid_volume,
    great_circle,
    kappa_curve,
    kappa_length,
    kappa_speed,
    mixed_area,
    newton_ellipsoid,
    polygon_area,
    polygon_perimeter,
    pseudovolume,
)
from .predictors import (
    SlopeConvention,
    expsum_slope,
    kac_asymptotic,
    nd_expected,
    nd_expected_mixed,
    nd_prob,
    pvol_leading_coefficient,
    trig_expected,
    trig_prob,
)
from .zerocount import (
    CountResult,
    ZeroCountError,
    circle_zeros_count,
    disk_zeros_count,
    hyperplane_curve_intersections,
    real_roots_count,
    torus_common_zeros_count,
)
from .harness import (
    ExperimentConfig,
    ExperimentError,
    ExperimentReport,
    run_experiment,
    slope_fit,
)

__version__ = "0.1.0"
