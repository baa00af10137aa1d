"""Mod-2 homology Hopf rings of the KO and KU spectra and their delooping cycle."""

from .barss import (
    AssumptionUnavailable,
    Collapse,
    CollapseKind,
    CycleReport,
    DeloopReport,
    StructureViolation,
    TorGenerator,
    collapse_mode,
    deloop,
    run_cycle,
    tor,
    verify_extensions,
)
from .circle import (
    Shift,
    ShiftedElement,
    SuspendedForm,
    UnsupportedAction,
    circle0,
    circle_int,
    e_suspend,
    normalize,
    shift_by,
)
from .elements import HopfElement, antipode, coproduct, frobenius, star, verschiebung
from .f2series import PoincareSeries, binom_mod2, dim_by_enumeration, series_inv, series_mul
from .presentations import AlgebraPresentation, GeneratorFamily, parse_presentation, poincare, registry_lookup

__version__ = "0.1.0"
