"""Short simple-cycle separators for maximal planar graphs.

The cycle has at most ``sqrt(8n) + O(1)`` edges and leaves at most two thirds
of the faces, and of the vertices, on either side.  Start with
:func:`separate`.
"""

from .assembly import SeparatorReport, separate, vertices_inside
from .embedding import (
    FaceTable,
    PlanarEmbedding,
    build_embedding,
    enumerate_faces,
    from_csr,
    from_faces,
)
from .errors import EmbeddingError, InternalError, SeparatorError
from .formats import parse_rot, read_report, read_rot, serialize_rot, write_report, write_rot
from .fundamental import Cycle, find_root_cycle
from .generators import gen_apollonian, gen_flipped, gen_nested, gen_pillow, k4
from .oracle import verify_separator

__all__ = [
    "Cycle",
    "EmbeddingError",
    "FaceTable",
    "InternalError",
    "PlanarEmbedding",
    "SeparatorError",
    "SeparatorReport",
    "build_embedding",
    "enumerate_faces",
    "find_root_cycle",
    "from_csr",
    "from_faces",
    "gen_apollonian",
    "gen_flipped",
    "gen_nested",
    "gen_pillow",
    "k4",
    "parse_rot",
    "read_report",
    "read_rot",
    "separate",
    "serialize_rot",
    "verify_separator",
    "vertices_inside",
    "write_report",
    "write_rot",
]
