"""holoball: holomorphic extendibility tests on the complex unit sphere.

The library decides, numerically, whether a function on the unit sphere of
C^n is the boundary value of a holomorphic function on the ball, using only
its restrictions to circles cut by complex lines through one or two base
points, and reconstructs the global extension when the answer is yes.

Modules
-------
geometry     complex lines, sphere circles, ball automorphisms, circles of
             constant pseudo-hyperbolic distance
boundary     sphere functions: monomial sums, rational quotients, samplers
spectral     angular Fourier slices A_nu, F_nu and boundary vanishing orders
exttest      per-line / per-circle extension tests and the two-bunch
             membership classifier
reconstruct  power-series extension models, pole-basis decomposition,
             cross-section lifting to n >= 3, Forelli-style checks
cli          `holoball` command line front end
"""

from .boundary import (
    DenominatorVanishes,
    MonomialSum,
    RationalSphereFunction,
    SamplerFunction,
    eval_on_sphere,
    example_counterexample,
    example_globevnik,
    format_monomial_text,
    monomial,
    parse_monomial_text,
    rotate_z2,
)
from .exttest import (
    BunchReport,
    CenterOnCircle,
    ClassificationReport,
    MomentReport,
    NonFiniteSample,
    NormalizationFailed,
    PoleTestReport,
    PoleTooClose,
    bunch_test,
    holomorphic_extension_test,
    meromorphic_extension_test,
    moment_integral,
    normalize_to_axis,
    two_bunch_classify,
)
from .geometry import (
    CircleSamples,
    CoincidentPoints,
    ComplexLine,
    HyperbolicCircle,
    LineMissesBall,
    MoebiusMap,
    ParameterOnBoundary,
    SphereCircle,
    TangentLine,
    VerticalLine,
    disc_automorphism,
    fit_line,
    line_through_points,
    make_line,
    moebius,
    moebius_apply_line,
    project_to_hyperbolic_circle,
    sample_circle,
    sphere_intersection,
)
from .reconstruct import (
    CrossSectionPlane,
    ExtensionModel,
    ForelliReport,
    IllConditioned,
    PlaneMismatch,
    PoleBasisDecomposition,
    PolynomialModel,
    RadialInconsistency,
    TruncationInsufficient,
    assemble_extension,
    assemble_global_model,
    circle_family_points,
    cross_section_extend,
    cross_section_planes,
    eval_extension,
    forelli_check,
    pole_basis_decompose,
    taylor_coeffs,
)
from .spectral import (
    BandwidthTooSmall,
    FourierSlice,
    SliceIsZero,
    VanishingOrderEstimate,
    build_slice,
    build_slices,
    fourier_slice,
    normalized_slice,
    slice_values,
    slices_to_csv,
    vanishing_order,
)

__version__ = "0.1.0"
