"""Systoles and 2-systoles of hyperbolic once-punctured tori and four-punctured spheres.

Points of Teichmüller space are given in explicit ``(alpha, beta)``
coordinates; simple closed curves are traced through the Markoff-type
recursion on the tree of complementary regions.  Rational input is handled
exactly with :class:`fractions.Fraction`.

>>> from systoles import make_point, classify
>>> c = classify(make_point("s11", 1, 1))
>>> c.systole_count, c.systole_value
(3, Fraction(3, 1))
"""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    EPS,
    S04,
    S11,
    LogPoint,
    SurfaceKind,
    TeichPoint,
    as_scalar,
    from_log,
    log_point,
    make_point,
    to_log,
)
from .errors import (  # noqa: E402
    DepthExceeded,
    DomainError,
    IllegalLetter,
    InvariantViolation,
    NonTermination,
    RelationViolation,
    SystoleError,
    ToleranceAmbiguity,
    UnsupportedGenerator,
    UnsupportedSurface,
)
from .rep import (  # noqa: E402
    base_traces,
    char_tuple,
    check_relations,
    generator_matrices,
    geodesic_length,
    trace_of_word,
    word_matrix,
)
from .mcg import McgWord, act_on_labels, apply_word, reduce_to_fundamental  # noqa: E402
from .curvetree import RegionAddress, Curve, Triple, region_value, region_word  # noqa: E402
from .curvetree import enumerate as enumerate_curves  # noqa: E402
from .classify import (  # noqa: E402
    Classification,
    GammaPosition,
    classify,
    delta_membership,
    gamma_position,
    special_points,
)
from .oracle import automorphism_trace, christoffel_trace, orbit_values  # noqa: E402
