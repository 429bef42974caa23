"""Exact decisions for the ln-based gap thresholds.

The quantities
    t(r,k)      = ceil((r-1)(k-1) / ln(2r))
    threshold   = (n-1) ln(2r) / ((r-1)(k-1))
mix integers with ln(2r), which is irrational for every integer 2r >= 2, so
no comparison here can ever be an exact tie.  Decisions are made with
mpmath interval arithmetic at increasing precision until the interval
separates cleanly from the integer side; outward rounding makes every
reported "meets the threshold" conservative.
"""

from __future__ import annotations

import math

from mpmath import iv, mp

from .errors import ParamOutOfRange

_DPS_LADDER = (30, 60, 120, 240)


def _check_rk(r: int, k: int) -> None:
    if r < 2:
        raise ParamOutOfRange(f"need r >= 2, got r={r}")
    if not 2 <= k <= r:
        raise ParamOutOfRange(f"need 2 <= k <= r, got k={k}, r={r}")


def _interval_endpoints(build, dps):
    """Evaluate build() under iv/mp precision dps; return exact (lo, hi) mpf endpoints."""
    saved = iv.dps
    iv.dps = dps
    try:
        with mp.workdps(dps):
            x = build()
            return mp.mpf(x.a), mp.mpf(x.b)
    finally:
        iv.dps = saved


def t_param(r: int, k: int) -> int:
    """ceil((r-1)(k-1) / ln(2r)), decided by interval arithmetic."""
    _check_rk(r, k)
    d = (r - 1) * (k - 1)
    for dps in _DPS_LADDER:
        lo, hi = _interval_endpoints(lambda: iv.mpf(d) / iv.log(2 * r), dps)
        with mp.workdps(dps):
            clo, chi = int(mp.ceil(lo)), int(mp.ceil(hi))
        if clo == chi:
            return clo
    raise ArithmeticError(f"t({r},{k}) did not separate at {_DPS_LADDER[-1]} digits")


def gap_threshold(n: int, r: int, k: int) -> float:
    """(n-1) ln(2r) / ((r-1)(k-1)) as a display value; compare via meets_gap_threshold."""
    _check_rk(r, k)
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got n={n}")
    return (n - 1) * math.log(2 * r) / ((r - 1) * (k - 1))


def meets_gap_threshold(m: int, n: int, r: int, k: int) -> bool:
    """Decide m >= (n-1) ln(2r) / ((r-1)(k-1)) exactly.

    Evaluated as m (r-1)(k-1) >= (n-1) ln(2r): integer left side versus an
    irrational right side, so the interval eventually excludes the tie.
    """
    _check_rk(r, k)
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got n={n}")
    lhs = m * (r - 1) * (k - 1)
    for dps in _DPS_LADDER:
        lo, hi = _interval_endpoints(lambda: iv.mpf(n - 1) * iv.log(2 * r), dps)
        if lhs >= hi:
            return True
        if lhs < lo:
            return False
    raise ArithmeticError(
        f"threshold comparison did not separate at {_DPS_LADDER[-1]} digits"
    )
