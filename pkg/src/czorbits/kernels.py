"""Kernel backend selection.

The hot path (4x4 exact matrix products during group closure) has two
interchangeable implementations: a compiled Cython extension and a pure
Python fallback. Both operate on the same packed byte encoding and must
agree bit-for-bit; the test suite checks them against each other.

Set CZORBITS_KERNEL=py or CZORBITS_KERNEL=cy to force a backend. Unset,
the compiled extension is used when importable.
"""

import os

_choice = os.environ.get("CZORBITS_KERNEL", "")

if _choice == "py":
    from czorbits import _kernels_py as _impl
elif _choice == "cy":
    from czorbits import _kernels_cy as _impl  # type: ignore[no-redef]
elif _choice == "":
    try:
        from czorbits import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from czorbits import _kernels_py as _impl
else:
    raise ImportError(f"CZORBITS_KERNEL must be 'py' or 'cy', got {_choice!r}")

BACKEND = _impl.BACKEND
mat_mul = _impl.mat_mul
mat_tensor = _impl.mat_tensor
mat_dagger = _impl.mat_dagger
