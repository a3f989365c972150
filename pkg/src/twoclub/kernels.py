"""Backend selection for the bitset kernels.

The compiled ``_speedups`` extension is used when it is importable; setting
``TWO_CLUB_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from twoclub import _purekernels as pure

if os.environ.get("TWO_CLUB_PURE_PYTHON", "") not in ("", "0"):
    _impl = pure
else:
    try:
        from twoclub import _speedups as _impl
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND

prepare = _impl.prepare
ball_mask = _impl.ball_mask
is_s_club = _impl.is_s_club
far_pair = _impl.far_pair
dual_branch = _impl.dual_branch
dual_levels = _impl.dual_levels
clean = _impl.clean


def compiled():
    """The compiled module, or ``None`` when it was not built."""
    try:
        from twoclub import _speedups
    except ImportError:
        return None
    return _speedups
