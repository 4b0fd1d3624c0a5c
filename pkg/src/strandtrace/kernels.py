"""Kernel backend selection.

Prefers the compiled extension built from ``_kernels.pyx``; falls back to
the pure-Python implementations in ``_kernels_py`` when the extension is
not available.  ``BACKEND`` records which one is active.
"""

try:
    from strandtrace import _kernels as _backend

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on how the package was built
    from strandtrace import _kernels_py as _backend

    BACKEND = "python"

colored_census = _backend.colored_census
restricted_census = _backend.restricted_census
count_colorings = _backend.count_colorings
