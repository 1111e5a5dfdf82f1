"""Information transfer through symmetric quantum copiers of two nonorthogonal qubit states."""
from .copiers import (
    CopierFamily,
    CopierOutput,
    InputEnsemble,
    make_copier,
    make_ensemble,
    wz_cascade,
)
from .exceptions import ConsistencyError, DomainError, InfeasibleError
from .infomeasures import (
    accessible_info_oracle,
    binary_info_from_q,
    holevo_two_state,
    i1_baseline,
    ih_baseline,
)
from .optimizer import UltimateCopierSolution, cos_phi_of_r, feasibility_check, maximize_ih
from .sweep import SweepConfig, SweepRecord, evaluate, run_sweep

__version__ = "0.1.0"

__all__ = [
    "CopierFamily",
    "CopierOutput",
    "InputEnsemble",
    "make_copier",
    "make_ensemble",
    "wz_cascade",
    "ConsistencyError",
    "DomainError",
    "InfeasibleError",
    "accessible_info_oracle",
    "binary_info_from_q",
    "holevo_two_state",
    "i1_baseline",
    "ih_baseline",
    "UltimateCopierSolution",
    "cos_phi_of_r",
    "feasibility_check",
    "maximize_ih",
    "SweepConfig",
    "SweepRecord",
    "evaluate",
    "run_sweep",
]
