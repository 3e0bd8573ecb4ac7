"""Exact-arithmetic engine for theta-symmetric crystal and global bases."""

try:
    from ._core import (  # noqa: F401
        build_dims,
        crystal_graph_dot,
        crystal_graph_json,
        folded_dims,
        global_basis_json,
        qbinom,
        verify,
    )
except ImportError:  # in-tree use: _core from the CMake build directory on sys.path
    from _core import (  # noqa: F401
        build_dims,
        crystal_graph_dot,
        crystal_graph_json,
        folded_dims,
        global_basis_json,
        qbinom,
        verify,
    )

__all__ = [
    "build_dims",
    "crystal_graph_dot",
    "crystal_graph_json",
    "folded_dims",
    "global_basis_json",
    "qbinom",
    "verify",
]
