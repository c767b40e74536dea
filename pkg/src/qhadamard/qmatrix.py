"""Dense exact matrices over {0, 1, i, -1, -i} and their real counterparts.

Entries and all derived quantities are small Gaussian integers, so
complex128 arithmetic is exact here: every intermediate is an integer
far below 2**53 in each component.  Products are verified integral
after the fact as a belt-and-braces check.
"""

from __future__ import annotations

import numpy as np

PHASES = (1 + 0j, 1j, -1 + 0j, -1j)
QALPHABET = (0j,) + PHASES


class MatrixError(ValueError):
    """Shape or alphabet violation."""


def _check_integral(arr: np.ndarray) -> np.ndarray:
    rounded = np.rint(arr.real) + 1j * np.rint(arr.imag)
    if not np.array_equal(rounded, arr):
        raise MatrixError("arithmetic left the Gaussian integers")
    return arr


def _is_alphabet(arr: np.ndarray) -> bool:
    ok = np.zeros(arr.shape, dtype=bool)
    for v in QALPHABET:
        ok |= arr == v
    return bool(ok.all())


class QMatrix:
    """Immutable square matrix with entries in {0, 1, i, -1, -i}."""

    __slots__ = ("data",)

    def __init__(self, data):
        arr = np.asarray(data, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise MatrixError(f"expected a square matrix, got shape {arr.shape}")
        if not _is_alphabet(arr):
            raise MatrixError("entries must be 0 or fourth roots of unity")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @property
    def n(self) -> int:
        return self.data.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, QMatrix) and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.n, self.data.tobytes()))

    def __repr__(self):
        return f"QMatrix(n={self.n})"

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(np.eye(n, dtype=np.complex128))

    @classmethod
    def zeros(cls, n: int) -> "QMatrix":
        return cls(np.zeros((n, n), dtype=np.complex128))

    def scale(self, phase: complex) -> "QMatrix":
        if phase not in PHASES:
            raise MatrixError(f"{phase!r} is not a phase")
        return QMatrix(self.data * phase)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        # Defined only when supports are disjoint (the sum stays quaternary).
        return QMatrix(self.data + other.data)


class SignMatrix:
    """Immutable square matrix with entries in {-1, 0, +1}."""

    __slots__ = ("data",)

    def __init__(self, data):
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise MatrixError(f"expected a square matrix, got shape {arr.shape}")
        if not np.isin(arr, (-1, 0, 1)).all():
            raise MatrixError("entries must be in {-1, 0, +1}")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("SignMatrix is immutable")

    @property
    def n(self) -> int:
        return self.data.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, SignMatrix) and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.n, self.data.tobytes()))

    def __repr__(self):
        return f"SignMatrix(n={self.n})"

    def __add__(self, other: "SignMatrix") -> "SignMatrix":
        return SignMatrix(self.data + other.data)


def conj_transpose(m: QMatrix) -> QMatrix:
    return QMatrix(m.data.conj().T)


def multiply(a: QMatrix, b: QMatrix) -> np.ndarray:
    """Exact Gaussian-integer product as a complex128 array."""
    if a.n != b.n:
        raise MatrixError(f"order mismatch: {a.n} vs {b.n}")
    return _check_integral(a.data @ b.data)


def gram(m: QMatrix) -> np.ndarray:
    return _check_integral(m.data @ m.data.conj().T)


def gram_is_scalar(m: QMatrix, c: complex) -> bool:
    return np.array_equal(gram(m), c * np.eye(m.n))


def row_sums(m: QMatrix) -> list[complex]:
    return [complex(s) for s in m.data.sum(axis=1)]


def col_sums(m: QMatrix) -> list[complex]:
    return [complex(s) for s in m.data.sum(axis=0)]


def check_phase_vector(v) -> np.ndarray:
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim != 1:
        raise MatrixError("phase vector must be one-dimensional")
    ok = np.zeros(arr.shape, dtype=bool)
    for ph in PHASES:
        ok |= arr == ph
    if not ok.all():
        raise MatrixError("vector entries must be fourth roots of unity")
    return arr


def diag_similarity(m: QMatrix, v) -> QMatrix:
    """D M D* for D = diag(v), v a vector of phases."""
    arr = check_phase_vector(v)
    if arr.shape[0] != m.n:
        raise MatrixError(f"vector length {arr.shape[0]} != order {m.n}")
    return QMatrix(arr[:, None] * m.data * arr.conj()[None, :])


def block2(m11: QMatrix, m12: QMatrix, m21: QMatrix, m22: QMatrix) -> QMatrix:
    if not (m11.n == m12.n == m21.n == m22.n):
        raise MatrixError("block orders differ")
    return QMatrix(np.block([[m11.data, m12.data], [m21.data, m22.data]]))


def split_real_imag(m: QMatrix) -> tuple[SignMatrix, SignMatrix]:
    """M = A + iB with A, B of disjoint support."""
    a = m.data.real.astype(np.int64)
    b = m.data.imag.astype(np.int64)
    return SignMatrix(a), SignMatrix(b)


_REAL_CELL = np.array([[1, 1], [1, -1]], dtype=np.int64)
_IMAG_CELL = np.array([[-1, 1], [1, 1]], dtype=np.int64)


def realify(m: QMatrix) -> SignMatrix:
    """Order-doubling substitution 1 -> [[1,1],[1,-1]], i -> [[-1,1],[1,1]]."""
    a, b = split_real_imag(m)
    return SignMatrix(np.kron(a.data, _REAL_CELL) + np.kron(b.data, _IMAG_CELL))


def sign_gram(w: SignMatrix) -> np.ndarray:
    return w.data @ w.data.T


def sign_gram_is_scalar(w: SignMatrix, c: int) -> bool:
    return np.array_equal(sign_gram(w), c * np.eye(w.n, dtype=np.int64))
