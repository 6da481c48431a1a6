"""Crossings and nestings in arc diagrams, and the reverse-labelling involution."""

from .bijection import InadmissibleError, coloured_admissible, image_class, ptr, ptr_coloured
from .diagram import (
    Arc,
    ArcDiagram,
    DiagramError,
    ObjectClass,
    Role,
    blocks_of,
    from_blocks,
    from_permutation,
    parse,
    roles,
    serialize,
    to_permutation,
    validate,
)
from .enumeration import brute_force_count, joint_table, sequence
from .render import render_ascii, render_svg
from .series import TruncatedSeries
from .stats import (
    Label,
    PermLabel,
    count_k_crossings,
    count_k_nestings,
    label_of,
    max_crossing,
    max_nesting,
)
from .structure import AdmissibilityReport, BlockType, decompose, deflate, inflate, is_admissible

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport", "Arc", "ArcDiagram", "BlockType", "DiagramError", "InadmissibleError",
    "Label", "ObjectClass", "PermLabel", "Role", "TruncatedSeries", "blocks_of", "brute_force_count",
    "coloured_admissible", "count_k_crossings", "count_k_nestings", "decompose", "deflate",
    "from_blocks", "from_permutation", "image_class", "inflate", "is_admissible", "joint_table",
    "label_of", "max_crossing", "max_nesting", "parse", "ptr", "ptr_coloured", "render_ascii",
    "render_svg", "roles", "sequence", "serialize", "to_permutation", "validate",
]
