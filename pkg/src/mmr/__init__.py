"""Exact coloured Jones polynomials of braid closures and their Melvin-Morton lines."""

__version__ = "0.1.0"

from .braid import BraidWord, closure_info, parity_check, parse_braid
from .burau import alexander_conway, torus2_oracle
from .errors import BraidParseError, ConsistencyError, InputError, NotAKnotError
from .mmexpand import check_integrality, extract_D, recover_P, to_line_series
from .perturb import gen_T_R1, gen_T_R2, line_via_perturbation
from .qtrace import colored_jones, jones_h_series, stratified_trace

__all__ = [
    "BraidWord",
    "BraidParseError",
    "ConsistencyError",
    "InputError",
    "NotAKnotError",
    "alexander_conway",
    "check_integrality",
    "closure_info",
    "colored_jones",
    "extract_D",
    "gen_T_R1",
    "gen_T_R2",
    "jones_h_series",
    "line_via_perturbation",
    "parity_check",
    "parse_braid",
    "recover_P",
    "stratified_trace",
    "to_line_series",
    "torus2_oracle",
]
