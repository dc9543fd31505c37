"""Exact rank, kernel dimension, echelon forms and linear solves.

Two engines sit behind one interface:

* prime fields: dense ``int64`` arrays reduced mod p with numpy. Large ranks use a
  blocked elimination whose trailing updates are float64 matrix products, exact as
  long as every partial dot product stays below 2**53.
* Q and extensions: Python objects. Sparse matrices go through row-by-row
  elimination on dict rows; matrices with fill above :data:`DENSE_FILL` use
  fraction-free Bareiss elimination (on integers after clearing row denominators
  over Q).

Pivot columns are always the column rank profile (scan left to right, keep a
column when it raises the rank), so every engine reports the same set.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .fields import Field, PrimeField, Rationals

DENSE_FILL = 0.25
BLOCK = 64
_FLOAT_EXACT = 2**53


@dataclass(frozen=True)
class ExactMatrix:
    """Sparse matrix over an exact field; ``entries`` maps (row, col) to a nonzero value."""

    field: Field
    nrows: int
    ncols: int
    entries: dict

    def __post_init__(self):
        F = self.field
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise IndexError(f"entry ({r}, {c}) outside {self.nrows}x{self.ncols}")
            if not F.is_zero(v):
                clean[(r, c)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                v = _coerce(field, v)
                if not field.is_zero(v):
                    entries[(i, j)] = v
        return cls(field, len(rows), ncols, entries)

    @classmethod
    def from_sparse_rows(cls, field, rows, ncols):
        """``rows`` is a list of ``{col: value}`` dicts."""
        entries = {(i, c): v for i, row in enumerate(rows) for c, v in row.items()}
        return cls(field, len(rows), ncols, entries)

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols, {})

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, {(i, i): field.one() for i in range(n)})

    def transpose(self):
        return ExactMatrix(self.field, self.ncols, self.nrows, {(c, r): v for (r, c), v in self.entries.items()})

    def sparse_rows(self):
        rows = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def to_lists(self):
        z = self.field.zero()
        out = [[z] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def to_numpy(self):
        """Dense int64 array; prime fields only."""
        if not isinstance(self.field, PrimeField):
            raise TypeError("numpy export only for prime fields")
        A = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for (r, c), v in self.entries.items():
            A[r, c] = v
        return A

    @property
    def fill(self):
        size = self.nrows * self.ncols
        return len(self.entries) / size if size else 0.0

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.field, self.nrows, self.ncols, self.entries) == (
            other.field,
            other.nrows,
            other.ncols,
            other.entries,
        )


def _coerce(F, v):
    if isinstance(v, int) and not isinstance(F, PrimeField):
        return F.from_int(v)
    if isinstance(v, Fraction) and not isinstance(F, Rationals):
        return F.from_fraction(v)
    if isinstance(F, PrimeField):
        return int(v) % F.p
    return v


# -- prime field engine -------------------------------------------------------------


def _matmul_mod(A, B, p):
    """(A @ B) mod p for int64 arrays with entries in [0, p)."""
    k = A.shape[1]
    if k == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    sq = (p - 1) ** 2
    if sq == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    chunk = (_FLOAT_EXACT - 1) // sq
    if chunk < 1:
        return (A.astype(object) @ B.astype(object) % p).astype(np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for s in range(0, k, chunk):
        prod = A[:, s : s + chunk].astype(np.float64) @ B[s : s + chunk].astype(np.float64)
        out = (out + prod.astype(np.int64) % p) % p
    return out


def _outer_update(rows, mult, pivot_row, p):
    """rows - outer(mult, pivot_row) mod p without int64 overflow."""
    if p < 3_037_000_499:  # (p-1)**2 fits in int64
        return (rows - np.outer(mult, pivot_row)) % p
    return ((rows.astype(object) - np.outer(mult.astype(object), pivot_row.astype(object))) % p).astype(np.int64)


def _unit_lower_inverse(L, p):
    """Inverse mod p of a unit lower triangular k x k matrix."""
    k = L.shape[0]
    inv = np.eye(k, dtype=np.int64)
    small = k * (p - 1) ** 2 < 2**63
    for i in range(1, k):
        if small:
            row = L[i, :i] @ inv[:i, :i]
        else:
            row = _matmul_mod(L[i : i + 1, :i], inv[:i, :i], p)[0]
        inv[i, :i] = (-row) % p
    return inv


def rank_profile_modp(A, p):
    """Pivot columns of ``A`` over F_p (blocked right-looking elimination)."""
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    r = 0
    pivots = []
    c0 = 0
    while c0 < n and r < m:
        c1 = min(c0 + BLOCK, n)
        W = A[r:, c0:c1].copy()
        h = W.shape[0]
        perm = np.arange(h)
        L = np.zeros((h, c1 - c0), dtype=np.int64)
        k = 0
        for j in range(c1 - c0):
            if k == h:
                break
            nz = np.flatnonzero(W[k:, j])
            if nz.size == 0:
                continue
            i = k + nz[0]
            if i != k:
                W[[k, i]] = W[[i, k]]
                L[[k, i]] = L[[i, k]]
                perm[[k, i]] = perm[[i, k]]
            inv = pow(int(W[k, j]), -1, p)
            mult = W[k + 1 :, j] * inv % p
            # columns left of j are already zero below row k
            W[k + 1 :, j:] = _outer_update(W[k + 1 :, j:], mult, W[k, j:], p)
            L[k + 1 :, k] = mult
            pivots.append(c0 + j)
            k += 1
        if k and c1 < n:
            T = A[r:, c1:][perm]
            X = _matmul_mod(_unit_lower_inverse(L[:k, :k], p), T[:k], p)
            T[k:] = (T[k:] - _matmul_mod(L[k:, :k], X, p)) % p
            T[:k] = X
            A[r:, c1:] = T
        r += k
        c0 = c1
    return pivots


def rref_modp(A, p):
    """Reduced row echelon form over F_p: returns (R, pivots) with R of shape (rank, ncols)."""
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r, c:] = A[r, c:] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            # A[r, :c] is zero, so only columns from c on change
            A[hit, c:] = _outer_update(A[hit, c:], col[hit], A[r, c:], p)
        pivots.append(c)
        r += 1
    return A[:r], pivots


# -- generic engine -------------------------------------------------------------------


def _sparse_insert(F, basis, row):
    """Reduce ``row`` against ``basis`` ({pivot col: normalized row}); insert if independent."""
    row = dict(row)
    while row:
        c = min(row)
        b = basis.get(c)
        a = row[c]
        if b is None:
            inv = F.inv(a)
            basis[c] = {k: F.mul(v, inv) for k, v in row.items()}
            return c
        for k, v in b.items():
            if k in row:
                nv = F.sub(row[k], F.mul(a, v))
                if F.is_zero(nv):
                    del row[k]
                else:
                    row[k] = nv
            else:
                row[k] = F.neg(F.mul(a, v))
    return None


def _sparse_echelon(F, rows):
    basis = {}
    for row in rows:
        if row:
            _sparse_insert(F, basis, row)
    return basis


def _sparse_reduce(F, basis, pivot_order, vec):
    """Normal form of a dict vector: zero at every pivot column."""
    vec = dict(vec)
    for c in pivot_order:
        a = vec.get(c)
        if a is None:
            continue
        for k, v in basis[c].items():
            if k in vec:
                nv = F.sub(vec[k], F.mul(a, v))
                if F.is_zero(nv):
                    del vec[k]
                else:
                    vec[k] = nv
            else:
                vec[k] = F.neg(F.mul(a, v))
    return vec


def _bareiss_pivots(F, dense):
    """Fraction-free elimination; returns pivot columns. Over Q it runs on integers."""
    if isinstance(F, Rationals):
        rows = []
        for row in dense:
            den = lcm(*(Fraction(v).denominator for v in row)) if row else 1
            rows.append([int(Fraction(v) * den) for v in row])
        mul = lambda a, b: a * b  # noqa: E731
        sub = lambda a, b: a - b  # noqa: E731
        exact_div = lambda a, b: a // b  # noqa: E731
        is_zero = lambda a: a == 0  # noqa: E731
        one = 1
    else:
        rows = [list(r) for r in dense]
        mul, sub, exact_div, is_zero, one = F.mul, F.sub, F.div, F.is_zero, F.one()
    m = len(rows)
    n = len(rows[0]) if rows else 0
    prev = one
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if not is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        pv = pr[c]
        for i in range(r + 1, m):
            row = rows[i]
            a = row[c]
            if is_zero(a):
                rows[i] = [exact_div(mul(pv, x), prev) for x in row]
            else:
                rows[i] = [exact_div(sub(mul(pv, x), mul(a, y)), prev) for x, y in zip(row, pr)]
        prev = pv
        pivots.append(c)
        r += 1
    return pivots


# -- public interface ---------------------------------------------------------------


def pivot_columns(M: ExactMatrix) -> list:
    """Column rank profile of ``M``."""
    F = M.field
    if M.nrows == 0 or M.ncols == 0 or not M.entries:
        return []
    if isinstance(F, PrimeField):
        return rank_profile_modp(M.to_numpy(), F.p)
    if M.fill >= DENSE_FILL:
        return _bareiss_pivots(F, M.to_lists())
    return sorted(_sparse_echelon(F, M.sparse_rows()))


def rank(M: ExactMatrix) -> int:
    if isinstance(M.field, PrimeField) and M.nrows > M.ncols:
        # elimination cost grows with the row count
        M = M.transpose()
    r = len(pivot_columns(M))
    assert r <= min(M.nrows, M.ncols)
    return r


def kernel_dimension(M: ExactMatrix) -> int:
    """Dimension of the kernel of ``x -> M x`` (columns minus rank)."""
    return M.ncols - rank(M)


def echelon_pivot_complement(M: ExactMatrix) -> list:
    """Non-pivot column indices of a row echelon form of ``M``."""
    piv = set(pivot_columns(M))
    return [c for c in range(M.ncols) if c not in piv]


class EchelonForm:
    """Row space of a matrix kept in echelon form, for reducing vectors to normal form.

    ``reduce`` subtracts row-space vectors until the pivot coordinates vanish; the
    remaining coordinates (on non-pivot columns) do not depend on which generators
    or which echelon basis produced the row space.
    """

    def __init__(self, M: ExactMatrix):
        self.field = M.field
        self.ncols = M.ncols
        F = M.field
        if isinstance(F, PrimeField):
            R, piv = rref_modp(M.to_numpy(), F.p) if M.nrows else (np.zeros((0, M.ncols), np.int64), [])
            self._R = R
            self.pivots = list(piv)
        else:
            self._basis = _sparse_echelon(F, M.sparse_rows())
            self.pivots = sorted(self._basis)
        pivset = set(self.pivots)
        self.free_columns = [c for c in range(self.ncols) if c not in pivset]

    @property
    def rank(self):
        return len(self.pivots)

    def reduce_dense(self, vectors):
        """Reduce a list of dense vectors; returns reduced dense vectors (lists or int arrays)."""
        F = self.field
        if isinstance(F, PrimeField):
            V = np.array(vectors, dtype=np.int64).reshape(len(vectors), self.ncols) % F.p
            if self.pivots:
                V = (V - _matmul_mod(V[:, self.pivots], self._R, F.p)) % F.p
            return V
        out = []
        for v in vectors:
            d = {i: x for i, x in enumerate(v) if not F.is_zero(x)}
            d = _sparse_reduce(F, self._basis, self.pivots, d)
            z = F.zero()
            dense = [z] * self.ncols
            for i, x in d.items():
                dense[i] = x
            out.append(dense)
        return out

    def coordinates(self, vectors):
        """Normal-form coordinates on the free (non-pivot) columns."""
        red = self.reduce_dense(vectors)
        if isinstance(self.field, PrimeField):
            return red[:, self.free_columns]
        return [[v[c] for c in self.free_columns] for v in red]

    def contains(self, vector) -> bool:
        red = self.reduce_dense([vector])
        F = self.field
        return all(F.is_zero(int(x) if isinstance(F, PrimeField) else x) for x in red[0])


def solve(M: ExactMatrix, rhs) -> list | None:
    """One solution ``x`` of ``M x = rhs`` (free variables set to zero), or None."""
    F = M.field
    if len(rhs) != M.nrows:
        raise ValueError("right-hand side length mismatch")
    n = M.ncols
    if isinstance(F, PrimeField):
        A = np.zeros((M.nrows, n + 1), dtype=np.int64)
        A[:, :n] = M.to_numpy()
        A[:, n] = [int(v) % F.p for v in rhs]
        R, piv = rref_modp(A, F.p)
        if piv and piv[-1] == n:
            return None
        x = [0] * n
        for i, c in enumerate(piv):
            x[c] = int(R[i, n])
        return x
    rows = M.sparse_rows()
    for i, v in enumerate(rhs):
        v = _coerce(F, v)
        if not F.is_zero(v):
            rows[i][n] = v
    basis = _sparse_echelon(F, rows)
    if n in basis:
        return None
    order = sorted(basis)
    # back substitution to reduced form
    for c in reversed(order):
        row = basis[c]
        for c2 in order:
            if c2 >= c:
                break
            if c in basis[c2]:
                basis[c2] = _sparse_reduce(F, {c: row}, [c], basis[c2])
    x = [F.zero()] * n
    for c in order:
        x[c] = basis[c].get(n, F.zero())
    return x


def matvec(M: ExactMatrix, x) -> list:
    F = M.field
    out = [F.zero()] * M.nrows
    for (r, c), v in M.entries.items():
        out[r] = F.add(out[r], F.mul(v, x[c]))
    return out

