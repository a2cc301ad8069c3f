from .core import Monad, act, change_coordinates, direct_sum, dualize, end_complex, pullback, tensor_complex
from .isomorphism import hom_dimension, intertwiner_system, monad_isomorphic, verify_intertwiner
from .restriction import (
    Frame, SplittingType, coordinate_plane, find_jumping_lines, find_trivializing_line,
    frame_along_line, frame_change, h0_on_line, is_trivializing, line_coordinate_change,
    line_through, plane_from_covector, plane_from_matrix, random_line, random_point, restrict,
    splitting_type,
)
from .sampling import SamplingError, sample_instanton
from .serialization import (
    canonical_dumps, dumps_monad, load_monad, loads_monad, monad_from_dict, monad_to_dict,
    roundtrip_text, save_monad,
)
from .validation import Item, ValidationReport, validate

__all__ = [
    "Monad", "act", "change_coordinates", "direct_sum", "dualize", "end_complex", "pullback",
    "tensor_complex",
    "hom_dimension", "intertwiner_system", "monad_isomorphic", "verify_intertwiner",
    "Frame", "SplittingType", "coordinate_plane", "find_jumping_lines", "find_trivializing_line",
    "frame_along_line", "frame_change", "h0_on_line", "is_trivializing", "line_coordinate_change",
    "line_through", "plane_from_covector", "plane_from_matrix", "random_line", "random_point",
    "restrict", "splitting_type",
    "SamplingError", "sample_instanton",
    "canonical_dumps", "dumps_monad", "load_monad", "loads_monad", "monad_from_dict",
    "monad_to_dict", "roundtrip_text", "save_monad",
    "Item", "ValidationReport", "validate",
]
