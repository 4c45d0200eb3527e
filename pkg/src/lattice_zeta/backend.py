"""Selects the compiled summation kernels when the extension built.

Import the names from here, never from the twins directly.  BACKEND is
"compiled" or "python"; the benchmark script times the twins against
each other.
"""

try:
    from . import _kernels as _impl
    BACKEND = "compiled"
except ImportError:  # extension not built on this platform
    from . import _kernels_py as _impl
    BACKEND = "python"

sps_real = _impl.sps_real
sps_complex = _impl.sps_complex
log_sps_complex = _impl.log_sps_complex
torus2_sum_real = _impl.torus2_sum_real

__all__ = ["BACKEND", "sps_real", "sps_complex", "log_sps_complex", "torus2_sum_real"]
