"""Skew-regular quaternary Hadamard matrices of order 1 + p^2.

The pipeline: Paley-style conference matrix C over GF(p^2), the complex
Hadamard matrix H = I - iC, and a diagonal phase similarity that makes
every row sum equal to 1 - p*i while keeping H + H* = 2I.  Also the
skew-core extraction and the order-doubling block construction.
"""

from __future__ import annotations

import numpy as np

from .field import FieldCtx
from .qmatrix import (
    MatrixError,
    QMatrix,
    block2,
    conj_transpose,
    diag_similarity,
    gram_is_scalar,
)

# Row/column labels are {infinity} followed by GF(p^2) in index order,
# so position of element x is 1 + index(x) and each additive coset is a
# contiguous block of p positions.


def _element_coords(ctx: FieldCtx) -> tuple[np.ndarray, np.ndarray]:
    idx = np.arange(ctx.q)
    return idx % ctx.p, idx // ctx.p


def conference_matrix(ctx: FieldCtx) -> QMatrix:
    """Order q+1: zero diagonal, first row/column 1, chi(x - y) elsewhere."""
    p, q = ctx.p, ctx.q
    a, b = _element_coords(ctx)
    da = (a[:, None] - a[None, :]) % p
    db = (b[:, None] - b[None, :]) % p
    chi = ctx.char_table[db * p + da]
    c = np.zeros((q + 1, q + 1), dtype=np.complex128)
    c[0, 1:] = 1
    c[1:, 0] = 1
    c[1:, 1:] = chi
    return QMatrix(c)


def paley_qhm(ctx: FieldCtx) -> QMatrix:
    """H = I - iC: unit diagonal, +-i off-diagonal, HH* = (q+1) I."""
    c = conference_matrix(ctx)
    return QMatrix(np.eye(ctx.q + 1) - 1j * c.data)


def half_coset_split(ctx: FieldCtx) -> tuple[range, range]:
    """Coset indices assigned phase -i and phase +i respectively."""
    half = (ctx.p - 1) // 2
    return range(1, half + 1), range(half + 1, ctx.p)


def twist_vector(ctx: FieldCtx) -> np.ndarray:
    """Phase vector: 1 on {infinity} and GF(p), -i / +i on the two coset halves."""
    _, b = _element_coords(ctx)
    lo, _ = half_coset_split(ctx)
    v = np.empty(ctx.q + 1, dtype=np.complex128)
    v[0] = 1
    v[1:] = np.where(b == 0, 1, np.where(b <= lo.stop - 1, -1j, 1j))
    return v


def skew_regular_qhm(ctx: FieldCtx) -> QMatrix:
    """The order 1+p^2 matrix with Gram (1+p^2) I, row sums 1 - p*i, S + S* = 2I."""
    return diag_similarity(paley_qhm(ctx), twist_vector(ctx))


def row_sum_parts(ctx: FieldCtx, row: int) -> list[complex]:
    """Partial row sums of the twisted matrix, split by column class.

    For the first row the columns split into {infinity}, GF(p), and the
    two coset halves; for field rows into {infinity}, the diagonal cell,
    GF(p), the row's own coset, and the remainder.  Each group has a
    known closed-form value pinned down by the tests, and the parts add
    up to the full row sum 1 - p*i.
    """
    s = skew_regular_qhm(ctx).data
    q, p = ctx.q, ctx.p
    _, b = _element_coords(ctx)
    lo, _ = half_coset_split(ctx)
    infty = np.concatenate(([True], np.zeros(q, dtype=bool)))
    in_fp = np.concatenate(([False], b == 0))
    in_lo = np.concatenate(([False], (b >= 1) & (b <= lo.stop - 1)))
    in_hi = ~infty & ~in_fp & ~in_lo
    if row == 0:
        groups = [infty, in_fp, in_lo, in_hi]
    else:
        k = b[row - 1]
        self_col = np.arange(q + 1) == row
        if k == 0:
            groups = [infty, self_col, in_fp & ~self_col,
                      ~infty & ~in_fp]
        else:
            in_own = np.concatenate(([False], b == k))
            groups = [infty, self_col, in_fp,
                      in_own & ~self_col,
                      ~infty & ~in_fp & ~in_own]
    return [complex(s[row][g].sum()) for g in groups]


def skew_core(h: QMatrix) -> QMatrix:
    """Extract I + Q of order n-1 from a skew-type quaternary Hadamard matrix.

    Normalizes by the diagonal phase similarity diag(first row), which
    sends the first row to all ones and (by skewness) the first column
    below the corner to all minus ones.
    """
    from .verify import check_skew_type

    if not check_skew_type(h):
        raise MatrixError("input is not skew-type")
    d = h.data[0].copy()
    if (d == 0).any():
        raise MatrixError("input is not normalizable to the bordered form")
    d[0] = 1
    normalized = diag_similarity(h, d)
    if not (np.array_equal(normalized.data[0], np.ones(h.n))
            and np.array_equal(normalized.data[1:, 0], -np.ones(h.n - 1))):
        raise MatrixError("input is not normalizable to the bordered form")
    return QMatrix(normalized.data[1:, 1:])


def double(h: QMatrix) -> QMatrix:
    """Order-doubling block matrix [[H, iH], [iH*, H*]].

    Preserves the Hadamard property and skewness; a constant row sum
    a + b*i spreads into {a-b + (a+b)i, a+b + (a-b)i}.
    """
    if not gram_is_scalar(h, h.n):
        raise MatrixError("input is not a quaternary Hadamard matrix")
    hs = conj_transpose(h)
    return block2(h, h.scale(1j), hs.scale(1j), hs)
