"""clopen: connected components through clopen sets and idempotents,
verified exhaustively at finite scale."""

from .parse import parse_ring_desc, render_ring_desc
from .topo import FiniteSpace
from .verify import VerifyConfig, run_verify

__version__ = "0.1.0"

__all__ = [
    "FiniteSpace",
    "VerifyConfig",
    "parse_ring_desc",
    "render_ring_desc",
    "run_verify",
    "__version__",
]
