"""Select the kernel implementation at import time.

The compiled extension is used when it imports cleanly, unless the
environment variable ``HYCOLOR_PURE_PYTHON`` is set to a non-empty value.
"""

import os

from . import _pykernels

kernels = _pykernels

if not os.environ.get("HYCOLOR_PURE_PYTHON"):
    try:
        from . import _ckernels as kernels  # noqa: F811
    except ImportError:
        pass

BACKEND = kernels.NAME


def use(name: str) -> None:
    """Switch backends at runtime (``"python"`` or ``"cython"``)."""
    global kernels, BACKEND
    if name == "python":
        kernels = _pykernels
    elif name == "cython":
        from . import _ckernels

        kernels = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = kernels.NAME


def available() -> list[str]:
    names = ["python"]
    try:
        from . import _ckernels  # noqa: F401
    except ImportError:
        return names
    return names + ["cython"]
