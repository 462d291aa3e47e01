"""Kernel selection: compiled extension if available, pure Python otherwise.

Both implementations expose the same two functions with identical pivoting,
so every result is bit-identical.  Set ``CONFSPACE_PURE=1`` to force the
pure-Python kernel (used by the benchmark and the equivalence tests).
"""

import os

if os.environ.get("CONFSPACE_PURE") == "1":
    from . import _core_py as _impl
    IMPLEMENTATION = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
        IMPLEMENTATION = "compiled"
    except ImportError:
        from . import _core_py as _impl
        IMPLEMENTATION = "python"

snf_invariant_factors = _impl.snf_invariant_factors
rank_mod_p = _impl.rank_mod_p
