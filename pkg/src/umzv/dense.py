"""Exact dense convolution kernels used by the polynomial layers.

All inputs hold small residues mod p.  1-D convolutions go through
``numpy.convolve`` on int64, which is exact for our sizes (products
bounded by p^2 * length << 2^63).  2-D convolutions use an FFT on
centered residues with a strict roundoff check; if the check ever
fails they fall back to an exact big-integer Kronecker substitution.
``conv2d_modp`` returns an int64 array congruent to the true
convolution mod p (not necessarily reduced).
"""

from __future__ import annotations

import numpy as np
from scipy.signal import fftconvolve

_FFT_MIN_CELLS = 4096


def conv1d_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact convolution of two 1-D residue arrays, reduced mod p."""
    if len(a) == 0 or len(b) == 0:
        return np.zeros(0, dtype=np.int64)
    return np.convolve(a.astype(np.int64), b.astype(np.int64)) % p


def _kronecker_conv2d(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact 2-D convolution via big-integer multiplication.

    Slow-but-sure fallback: cells are packed little-endian with a fixed
    byte width chosen so that no convolution value can overflow its cell.
    """
    a = a.astype(np.int64) % p
    b = b.astype(np.int64) % p
    rows = a.shape[0] + b.shape[0] - 1
    cols = a.shape[1] + b.shape[1] - 1
    maxval = (p - 1) * (p - 1) * min(a.size, b.size) + 1
    width = (maxval.bit_length() + 8) // 8  # bytes per cell, with headroom
    assert width <= 8, "cell width beyond uint64 not supported"

    def pack(m: np.ndarray) -> int:
        buf = bytearray(m.shape[0] * cols * width)
        for (i, j), v in np.ndenumerate(m):
            if v:
                off = (i * cols + j) * width
                buf[off:off + width] = int(v).to_bytes(width, "little")
        return int.from_bytes(bytes(buf), "little")

    prod = pack(a) * pack(b)
    total = rows * cols
    raw = prod.to_bytes(total * width + 8, "little")[: total * width]
    cells = np.frombuffer(raw, dtype=np.uint8).reshape(total, width)
    padded = np.zeros((total, 8), dtype=np.uint8)
    padded[:, :width] = cells
    vals = padded.view("<u8").reshape(total)
    return (vals.astype(np.int64) % p).reshape(rows, cols)


def conv2d_modp(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """2-D convolution of residue arrays, exact mod p (possibly unreduced)."""
    if a.size == 0 or b.size == 0:
        return np.zeros((max(a.shape[0] + b.shape[0] - 1, 0),
                         max(a.shape[1] + b.shape[1] - 1, 0)), dtype=np.int64)
    out_cells = (a.shape[0] + b.shape[0] - 1) * (a.shape[1] + b.shape[1] - 1)
    sa = a.astype(np.int64)
    sb = b.astype(np.int64)
    if p > 2:  # centered residues: smaller L1 norms, exact FFT with margin
        sa = np.where(sa > p // 2, sa - p, sa)
        sb = np.where(sb > p // 2, sb - p, sb)
    if out_cells <= _FFT_MIN_CELLS or min(a.size, b.size) <= 16:
        out = np.zeros((a.shape[0] + b.shape[0] - 1,
                        a.shape[1] + b.shape[1] - 1), dtype=np.int64)
        if np.count_nonzero(sb) > np.count_nonzero(sa):
            sa, sb = sb, sa
        for (i, j), v in np.ndenumerate(sb):
            if v:
                out[i:i + sa.shape[0], j:j + sa.shape[1]] += sa * int(v)
        return out
    raw = fftconvolve(sa.astype(np.float64), sb.astype(np.float64))
    rounded = np.rint(raw)
    if np.max(np.abs(raw - rounded)) > 0.2:
        return _kronecker_conv2d(a, b, p)
    return rounded.astype(np.int64)


def trim2d(m: np.ndarray) -> np.ndarray:
    """Drop all-zero trailing rows and columns."""
    if m.size == 0:
        return m.reshape(0, 0)
    nz = np.nonzero(m)
    if len(nz[0]) == 0:
        return m[:0, :0]
    return np.ascontiguousarray(m[: nz[0].max() + 1, : nz[1].max() + 1])
