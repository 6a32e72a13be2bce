"""Heat-trace asymptotics for Laplace-type operators with singular boundary weights."""

from .errors import (
    HeatTraceError,
    InternalConsistencyError,
    RootFindingError,
    ToleranceFailure,
    ValidationError,
)
from .geometry import Annulus, Ball3, Cylinder, Disk, Hemisphere, Interval, make_geometry
from .predict import AsymptoticExpansion, full_expansion
from .regularize import RegularizedValue, i_reg, i_reg_weight, laurent_constant
from .weight import CutoffSpec, WeightProfile, constant_weight

__version__ = "0.1.0"

__all__ = [
    "Annulus",
    "AsymptoticExpansion",
    "Ball3",
    "CutoffSpec",
    "Cylinder",
    "Disk",
    "HeatTraceError",
    "Hemisphere",
    "InternalConsistencyError",
    "Interval",
    "RegularizedValue",
    "RootFindingError",
    "ToleranceFailure",
    "ValidationError",
    "WeightProfile",
    "constant_weight",
    "full_expansion",
    "i_reg",
    "i_reg_weight",
    "laurent_constant",
    "make_geometry",
]
