"""Square matrices over Z[t, t^-1].

Everything is exact: the determinant uses a division-free expansion
(memoized cofactor expansion over column subsets), and inverses exist only
for unit determinants, via the adjugate.
"""

from __future__ import annotations

import json

from .errors import DimensionMismatchError, NonUnitDeterminantError
from .laurent import ONE, ZERO, LaurentPoly


class LPMatrix:
    """An n x n matrix of LaurentPoly entries; immutable."""

    __slots__ = ("n", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionMismatchError("matrix must be square")
        for row in rows:
            for e in row:
                if not isinstance(e, LaurentPoly):
                    raise TypeError("entries must be LaurentPoly")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("LPMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n):
        return cls([[ZERO] * n for _ in range(n)])

    def __eq__(self, other):
        if not isinstance(other, LPMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self):
        return f"LPMatrix({[[str(e) for e in row] for row in self.entries]})"

    def to_json_obj(self):
        return {
            "n": self.n,
            "entries": [[e.to_json_obj() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json_obj(cls, obj):
        entries = [[LaurentPoly.from_json_obj(e) for e in row] for row in obj["entries"]]
        mat = cls(entries)
        if mat.n != obj["n"]:
            raise DimensionMismatchError("declared dimension disagrees with entries")
        return mat

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_json_obj(json.loads(text))


def mat_mul(a: LPMatrix, b: LPMatrix) -> LPMatrix:
    if a.n != b.n:
        raise DimensionMismatchError(f"cannot multiply {a.n}x{a.n} by {b.n}x{b.n}")
    n = a.n
    bt = list(zip(*b.entries))
    out = []
    for i in range(n):
        arow = a.entries[i]
        row = []
        for j in range(n):
            bcol = bt[j]
            acc = ZERO
            for k in range(n):
                if arow[k] and bcol[k]:
                    acc = acc + arow[k] * bcol[k]
            row.append(acc)
        out.append(row)
    return LPMatrix(out)


def mat_det(a: LPMatrix) -> LaurentPoly:
    """Exact determinant, division-free.

    Dynamic Laplace expansion: minors of the first k rows are indexed by
    k-subsets of columns, so shared sub-minors are computed once. Cost is
    about n * 2^n polynomial operations, fine for the sizes used here.
    """
    n = a.n
    if n == 0:
        return ONE
    # minors[mask] = det of rows 0..k-1, columns in mask (popcount k)
    minors = {0: ONE}
    for k in range(n):
        row = a.entries[k]
        new = {}
        for mask, sub in minors.items():
            if not sub:
                continue
            # expanding along local row k: entry sign is (-1)^(k + local column)
            sign = 1 if k % 2 == 0 else -1
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    sign = -sign
                    continue
                if row[j]:
                    term = sub * row[j]
                    if sign < 0:
                        term = -term
                    newmask = mask | bit
                    if newmask in new:
                        new[newmask] = new[newmask] + term
                    else:
                        new[newmask] = term
        minors = new
        if not minors:
            return ZERO
    return minors.get((1 << n) - 1, ZERO)


def _minor(a: LPMatrix, i, j):
    rows = [
        [e for jj, e in enumerate(row) if jj != j]
        for ii, row in enumerate(a.entries)
        if ii != i
    ]
    return LPMatrix(rows)


def mat_inverse(a: LPMatrix) -> LPMatrix:
    """Inverse of a matrix whose determinant is a unit +-t^k."""
    det = mat_det(a)
    unit = det.is_unit()
    if unit is None:
        raise NonUnitDeterminantError(f"determinant {det} is not a unit of Z[t,t^-1]")
    s, k = unit
    det_inv = LaurentPoly.t_power(-k, s)  # (s*t^k)^-1 = s*t^-k since s = +-1
    n = a.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            cof = mat_det(_minor(a, j, i))  # adjugate: transposed cofactors
            if (i + j) % 2:
                cof = -cof
            row.append(cof * det_inv)
        out.append(row)
    return LPMatrix(out)


def block_diag(a: LPMatrix, b: LPMatrix) -> LPMatrix:
    n = a.n + b.n
    out = [[ZERO] * n for _ in range(n)]
    for i in range(a.n):
        for j in range(a.n):
            out[i][j] = a.entries[i][j]
    for i in range(b.n):
        for j in range(b.n):
            out[a.n + i][a.n + j] = b.entries[i][j]
    return LPMatrix(out)
