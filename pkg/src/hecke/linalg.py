"""Exact dense linear algebra over Q on top of flint's fmpq_mat.

Vectors are columns.  Subspaces are handed around as matrices whose columns
form a basis; ``echelon_rows`` gives the canonical reduced form when a
subspace has to be compared or hashed.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from flint import fmpq, fmpq_mat, fmpq_poly

from .scalars import to_scalar


def zeros(r: int, c: int) -> fmpq_mat:
    return fmpq_mat(r, c)


def identity(n: int) -> fmpq_mat:
    m = fmpq_mat(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def scalar_matrix(n: int, c) -> fmpq_mat:
    m = fmpq_mat(n, n)
    c = to_scalar(c)
    for i in range(n):
        m[i, i] = c
    return m


def from_rows(rows: Sequence[Sequence], ncols: int | None = None) -> fmpq_mat:
    rows = [list(r) for r in rows]
    if not rows:
        return fmpq_mat(0, ncols or 0)
    nc = len(rows[0])
    flat = [to_scalar(x) for r in rows for x in r]
    return fmpq_mat(len(rows), nc, flat)


def to_rows(m: fmpq_mat) -> List[List[fmpq]]:
    e = m.entries()
    c = m.ncols()
    return [e[i * c:(i + 1) * c] for i in range(m.nrows())]


def diag(values: Sequence) -> fmpq_mat:
    n = len(values)
    m = fmpq_mat(n, n)
    for i, v in enumerate(values):
        m[i, i] = to_scalar(v)
    return m


def hstack(mats: Sequence[fmpq_mat], nrows: int | None = None) -> fmpq_mat:
    mats = [m for m in mats if m.ncols() > 0]
    if not mats:
        return fmpq_mat(nrows or 0, 0)
    r = mats[0].nrows()
    rows = [[] for _ in range(r)]
    for m in mats:
        if m.nrows() != r:
            raise ValueError("row count mismatch in hstack")
        for i, row in enumerate(to_rows(m)):
            rows[i].extend(row)
    return fmpq_mat(r, len(rows[0]), [x for row in rows for x in row])


def vstack(mats: Sequence[fmpq_mat], ncols: int | None = None) -> fmpq_mat:
    mats = [m for m in mats if m.nrows() > 0]
    if not mats:
        return fmpq_mat(0, ncols or 0)
    c = mats[0].ncols()
    flat = []
    r = 0
    for m in mats:
        if m.ncols() != c:
            raise ValueError("column count mismatch in vstack")
        flat.extend(m.entries())
        r += m.nrows()
    return fmpq_mat(r, c, flat)


def column(m: fmpq_mat, j: int) -> fmpq_mat:
    return fmpq_mat(m.nrows(), 1, [m[i, j] for i in range(m.nrows())])


def columns(m: fmpq_mat, idx: Sequence[int]) -> fmpq_mat:
    r = m.nrows()
    out = fmpq_mat(r, len(idx))
    for k, j in enumerate(idx):
        for i in range(r):
            out[i, k] = m[i, j]
    return out


def rows_of(m: fmpq_mat, idx: Sequence[int]) -> fmpq_mat:
    c = m.ncols()
    e = m.entries()
    flat = []
    for i in idx:
        flat.extend(e[i * c:(i + 1) * c])
    return fmpq_mat(len(idx), c, flat)


def block(m: fmpq_mat, r0: int, r1: int, c0: int, c1: int) -> fmpq_mat:
    out = fmpq_mat(r1 - r0, c1 - c0)
    for i in range(r0, r1):
        for j in range(c0, c1):
            out[i - r0, j - c0] = m[i, j]
    return out


def kron(a: fmpq_mat, b: fmpq_mat) -> fmpq_mat:
    ra, ca, rb, cb = a.nrows(), a.ncols(), b.nrows(), b.ncols()
    out = fmpq_mat(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            x = a[i, j]
            if x == 0:
                continue
            for k in range(rb):
                for l in range(cb):
                    y = b[k, l]
                    if y != 0:
                        out[i * rb + k, j * cb + l] = x * y
    return out


def is_zero(m: fmpq_mat) -> bool:
    return all(x == 0 for x in m.entries())


def rank(m: fmpq_mat) -> int:
    if m.nrows() == 0 or m.ncols() == 0:
        return 0
    return m.rank()


def _pivots(r: fmpq_mat, rk: int) -> List[int]:
    piv = []
    c = r.ncols()
    for i in range(rk):
        j = piv[-1] + 1 if piv else 0
        while j < c and r[i, j] == 0:
            j += 1
        piv.append(j)
    return piv


def echelon_rows(m: fmpq_mat) -> fmpq_mat:
    """Reduced row echelon form with the zero rows dropped."""
    if m.nrows() == 0:
        return fmpq_mat(0, m.ncols())
    r, rk = m.rref()
    return block(r, 0, rk, 0, m.ncols())


def nullspace(m: fmpq_mat) -> fmpq_mat:
    """Columns spanning {x : m x = 0}, one per free column of the rref."""
    c = m.ncols()
    if m.nrows() == 0:
        return identity(c)
    r, rk = m.rref()
    piv = _pivots(r, rk)
    pivset = set(piv)
    free = [j for j in range(c) if j not in pivset]
    out = fmpq_mat(c, len(free))
    for k, f in enumerate(free):
        out[f, k] = 1
        for i, p in enumerate(piv):
            out[p, k] = -r[i, f]
    return out


def left_nullspace(m: fmpq_mat) -> fmpq_mat:
    """Columns spanning {y : y^T m = 0}."""
    return nullspace(m.transpose())


def column_basis(m: fmpq_mat) -> fmpq_mat:
    """A basis (as columns, canonical echelon form) of the column span."""
    if m.ncols() == 0:
        return fmpq_mat(m.nrows(), 0)
    return echelon_rows(m.transpose()).transpose()


def span_dim(m: fmpq_mat) -> int:
    return rank(m)


def in_span(basis: fmpq_mat, v: fmpq_mat) -> bool:
    if basis.ncols() == 0:
        return is_zero(v)
    return rank(hstack([basis, v])) == rank(basis)


def intersect(a: fmpq_mat, b: fmpq_mat) -> fmpq_mat:
    """Intersection of two column spans."""
    if a.ncols() == 0 or b.ncols() == 0:
        return fmpq_mat(a.nrows(), 0)
    k = nullspace(hstack([a, -b]))
    if k.ncols() == 0:
        return fmpq_mat(a.nrows(), 0)
    return column_basis(a * block(k, 0, a.ncols(), 0, k.ncols()))


def complement_columns(basis: fmpq_mat) -> fmpq_mat:
    """Standard basis vectors completing ``basis`` (full column rank) to a basis."""
    n = basis.nrows()
    if basis.ncols() == 0:
        return identity(n)
    r = echelon_rows(basis.transpose())
    piv = set(_pivots(r, r.nrows()))
    free = [j for j in range(n) if j not in piv]
    out = fmpq_mat(n, len(free))
    for k, j in enumerate(free):
        out[j, k] = 1
    return out


def solve_coords(basis: fmpq_mat, v: fmpq_mat) -> fmpq_mat:
    """Coordinates c with basis * c = v; raises if v is not in the span."""
    k = basis.ncols()
    if k == 0:
        if not is_zero(v):
            raise ValueError("vector not in span")
        return fmpq_mat(0, v.ncols())
    r, rk = hstack([basis, v]).rref()
    piv = _pivots(r, rk)
    if any(p >= k for p in piv):
        raise ValueError("vector not in span")
    if rk != k:
        raise ValueError("basis columns are dependent")
    return block(r, 0, k, k, k + v.ncols())


def restricted_action(mat: fmpq_mat, basis: fmpq_mat) -> fmpq_mat:
    """Matrix of ``mat`` on the invariant column span of ``basis``."""
    return solve_coords(basis, mat * basis)


def mat_pow(m: fmpq_mat, k: int) -> fmpq_mat:
    if k < 0:
        return mat_pow(m.inv(), -k)
    out = identity(m.nrows())
    base = m
    while k:
        if k & 1:
            out = out * base
        base = base * base
        k >>= 1
    return out


def rational_eigenvalues(m: fmpq_mat) -> Tuple[List[Tuple[fmpq, int]], int]:
    """Rational roots of the characteristic polynomial with multiplicities,
    plus the degree left over by irrational roots."""
    n = m.nrows()
    if n == 0:
        return [], 0
    cp = m.charpoly()
    roots = [(fmpq(r), int(e)) for r, e in cp.roots()]
    roots.sort(key=lambda t: t[0])
    found = sum(e for _, e in roots)
    return roots, n - found


def generalized_eigenspace(m: fmpq_mat, lam, mult: int | None = None) -> fmpq_mat:
    n = m.nrows()
    if mult is None:
        mult = n
    a = m - scalar_matrix(n, lam)
    return nullspace(mat_pow(a, mult))


def eigenspace(m: fmpq_mat, lam) -> fmpq_mat:
    return nullspace(m - scalar_matrix(m.nrows(), lam))


def jordan_block_sizes(m: fmpq_mat, lam) -> List[int]:
    """Sizes of the Jordan blocks of m at eigenvalue lam, largest first."""
    n = m.nrows()
    a = m - scalar_matrix(n, lam)
    ranks = [n]
    p = identity(n)
    while True:
        p = p * a
        rk = rank(p)
        ranks.append(rk)
        if rk == ranks[-2]:
            break
    # ranks[k] = rank of a^k; number of blocks of size >= k is ranks[k-1]-ranks[k]
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes = []
    for k in range(len(at_least)):
        exact = at_least[k] - (at_least[k + 1] if k + 1 < len(at_least) else 0)
        sizes.extend([k + 1] * exact)
    return sorted(sizes, reverse=True)


def is_scalar(m: fmpq_mat) -> bool:
    n = m.nrows()
    if n == 0:
        return True
    c = m[0, 0]
    return m == scalar_matrix(n, c)


def mat_to_strings(m: fmpq_mat) -> List[List[str]]:
    return [[str(x) for x in row] for row in to_rows(m)]


def mat_from_strings(rows, n: int | None = None) -> fmpq_mat:
    if not rows:
        return fmpq_mat(n or 0, n or 0)
    return from_rows(rows)


def poly_of_matrix(coeffs: fmpq_poly, m: fmpq_mat) -> fmpq_mat:
    """Horner evaluation of a polynomial at a square matrix."""
    n = m.nrows()
    out = fmpq_mat(n, n)
    for c in reversed(coeffs.coeffs()):
        out = out * m + scalar_matrix(n, c)
    return out
