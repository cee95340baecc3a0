"""Exact rational and integer linear algebra.

Everything downstream (quadratic-function spaces, lattice point
enumeration, certificates) sits on the routines in this module.  Rank,
solve and determinants use fraction-free Bareiss elimination so
intermediate entries stay integral and bounded; kernels are returned as
primitive integer vectors so they can be compared and hashed downstream.
"""

import math
from dataclasses import dataclass

from .rational import ZERO, ONE, Rat, clear_denominators, denom, numer, vec_rat


@dataclass(frozen=True)
class Mat:
    """Immutable row-major rational matrix."""

    rows: int
    cols: int
    data: tuple

    @staticmethod
    def from_rows(rows):
        rows = [vec_rat(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return Mat(n, m, tuple(x for r in rows for x in r))

    @staticmethod
    def identity(n):
        return Mat(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @staticmethod
    def zeros(rows, cols):
        return Mat(rows, cols, (ZERO,) * (rows * cols))

    @staticmethod
    def column(xs):
        xs = vec_rat(xs)
        return Mat(len(xs), 1, xs)

    def at(self, i, j):
        return self.data[i * self.cols + j]

    def row(self, i):
        return self.data[i * self.cols : (i + 1) * self.cols]

    def col(self, j):
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return Mat(self.cols, self.rows, tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = other.transpose()
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                c = bt.row(j)
                out.append(sum((r[k] * c[k] for k in range(self.cols)), ZERO))
        return Mat(self.rows, other.cols, tuple(out))

    def mat_vec(self, v):
        if self.cols != len(v):
            raise ValueError("shape mismatch")
        v = vec_rat(v)
        return tuple(sum((self.row(i)[k] * v[k] for k in range(self.cols)), ZERO) for i in range(self.rows))

    def __add__(self, other):
        self._same_shape(other)
        return Mat(self.rows, self.cols, tuple(a + b for a, b in zip(self.data, other.data)))

    def __sub__(self, other):
        self._same_shape(other)
        return Mat(self.rows, self.cols, tuple(a - b for a, b in zip(self.data, other.data)))

    def scale(self, c):
        c = Rat(c)
        return Mat(self.rows, self.cols, tuple(c * a for a in self.data))

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def is_symmetric(self):
        return self.rows == self.cols and all(
            self.at(i, j) == self.at(j, i) for i in range(self.rows) for j in range(i)
        )

    def is_integer(self):
        return all(denom(x) == 1 for x in self.data)

    def int_rows(self):
        if not self.is_integer():
            raise ValueError("matrix is not integral")
        return [[numer(x) for x in self.row(i)] for i in range(self.rows)]


def _scaled_int_rows(m: Mat):
    """Rows scaled to integers (row scaling preserves rank and consistency)."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        d = 1
        for x in row:
            d = math.lcm(d, denom(x))
        out.append([numer(x) * (d // denom(x)) for x in row])
    return out


def _bareiss_echelon(rows):
    """In-place fraction-free elimination.

    Returns (rows, pivots) where pivots is a list of (row, col) positions of
    the echelon pivots.  Entries stay integral throughout.
    """
    if not rows:
        return rows, []
    nr, nc = len(rows), len(rows[0])
    prev = 1
    r = 0
    pivots = []
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        for i in range(r + 1, nr):
            if rows[i][c] == 0 and prev == 1:
                continue
            ric = rows[i][c]
            rrw, riw = rows[r], rows[i]
            for k in range(c + 1, nc):
                riw[k] = (rrw[c] * riw[k] - ric * rrw[k]) // prev
            riw[c] = 0
        prev = rows[r][c]
        pivots.append((r, c))
        r += 1
    return rows, pivots


def rank(m: Mat) -> int:
    _, pivots = _bareiss_echelon(_scaled_int_rows(m))
    return len(pivots)


def det(m: Mat):
    """Exact determinant via Bareiss (with per-row denominator scaling)."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    if m.rows == 0:
        return ONE
    rows = []
    scale = ONE
    for i in range(m.rows):
        row = m.row(i)
        d = 1
        for x in row:
            d = math.lcm(d, denom(x))
        scale = scale * d
        rows.append([numer(x) * (d // denom(x)) for x in row])
    sign = 1
    prev = 1
    n = m.rows
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            sign = -sign
        for i in range(c + 1, n):
            ric = rows[i][c]
            for k in range(c + 1, n):
                rows[i][k] = (rows[c][c] * rows[i][k] - ric * rows[c][k]) // prev
            rows[i][c] = 0
        prev = rows[c][c]
    return Rat(sign * rows[n - 1][n - 1]) / scale


def _back_substitute(rows, pivots, rhs_cols, ncols):
    """Solve the echelon system for one rhs column; free variables are 0."""
    x = [ZERO] * ncols
    for (r, c) in reversed(pivots):
        s = Rat(rhs_cols[r])
        row = rows[r]
        for k in range(c + 1, ncols):
            if x[k] != ZERO and row[k] != 0:
                s -= Rat(row[k]) * x[k]
        x[c] = s / row[c]
    return x


def solve(a: Mat, b: Mat):
    """Exact solution x of a @ x = b, or None when the system is inconsistent.

    Underdetermined systems return the particular solution with all free
    variables set to zero.
    """
    if a.rows != b.rows:
        raise ValueError("row count mismatch")
    aug = Mat(a.rows, a.cols + b.cols, tuple(
        x for i in range(a.rows) for x in (a.row(i) + b.row(i))
    ))
    rows, pivots = _bareiss_echelon(_scaled_int_rows(aug))
    pivots_a = [(r, c) for (r, c) in pivots if c < a.cols]
    if len(pivots_a) < len(pivots):
        return None
    lead = len(pivots_a)
    for i in range(lead, a.rows):
        if any(rows[i][c] != 0 for c in range(a.cols, aug.cols)):
            return None
    cols = []
    for j in range(b.cols):
        rhs = [rows[i][a.cols + j] for i in range(a.rows)]
        cols.append(_back_substitute(rows, pivots_a, rhs, a.cols))
    return Mat.from_rows([[cols[j][i] for j in range(b.cols)] for i in range(a.cols)])


def solve_vec(a: Mat, v):
    x = solve(a, Mat.column(v))
    return None if x is None else x.col(0)


def nullspace(m: Mat):
    """Basis of the right kernel as primitive integer vectors.

    Empty list iff rank = cols.  Basis vectors are scaled to coprime
    integers with the first nonzero entry positive, giving a stable
    representative per kernel ray.
    """
    rows, pivots = _bareiss_echelon(_scaled_int_rows(m))
    pivot_cols = [c for (_, c) in pivots]
    free_cols = [c for c in range(m.cols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        rhs = [-Rat(rows[r][fc]) for (r, _) in pivots] + [ZERO] * (m.rows - len(pivots))
        x = _back_substitute(rows, pivots, rhs, m.cols)
        x[fc] = ONE
        ints, _ = clear_denominators(x)
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = tuple(-v for v in ints)
        basis.append(ints)
    return basis


def hnf(m: Mat):
    """Row Hermite normal form H = U @ m with U unimodular.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot).  Requires integer entries.
    """
    a = m.int_rows()
    nr, nc = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]

    def addmul(dst, src, q):
        ad, au, bd, bu = a[dst], u[dst], a[src], u[src]
        for k in range(nc):
            ad[k] -= q * bd[k]
        for k in range(nr):
            au[k] -= q * bu[k]

    r = 0
    for c in range(nc):
        if r == nr:
            break
        while True:
            nz = [i for i in range(r, nr) if a[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            if p != r:
                a[r], a[p] = a[p], a[r]
                u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, nr):
                if a[i][c] != 0:
                    addmul(i, r, a[i][c] // a[r][c])
                    if a[i][c] != 0:
                        done = False
            if done:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q != 0:
                addmul(i, r, q)
        r += 1
    return Mat.from_rows(a), Mat.from_rows(u)


def is_unimodular(u: Mat) -> bool:
    return u.rows == u.cols and u.is_integer() and abs(det(u)) == ONE


def integer_kernel(m: Mat):
    """Basis of the saturated lattice {x in Z^cols : m @ x = 0}.

    Uses the unimodular factor of an HNF, so the result is a genuine
    lattice basis of the full intersection with Z^cols (not merely a
    rational kernel basis with cleared denominators).
    """
    scaled = Mat.from_rows(_scaled_int_rows(m))
    h, u = hnf(scaled.transpose())
    out = []
    for i in range(h.rows):
        if all(x == ZERO for x in h.row(i)):
            v = [numer(x) for x in u.row(i)]
            lead = next((x for x in v if x != 0), 0)
            if lead < 0:
                v = [-x for x in v]
            out.append(tuple(v))
    out.sort()
    return out


PD = "positive_definite"
PSD = "positive_semidefinite"
INDEFINITE = "indefinite"


@dataclass(frozen=True)
class Definiteness:
    kind: str
    kernel: tuple = ()           # saturated integer kernel basis (PSD only)
    negative_witness: tuple = () # integer v with v^T q v < 0 (indefinite only)

    @property
    def is_pd(self):
        return self.kind == PD

    @property
    def is_psd(self):
        return self.kind == PSD

    @property
    def is_indefinite(self):
        return self.kind == INDEFINITE


def _primitive_int(v):
    ints, _ = clear_denominators(v)
    return ints


def definiteness(q: Mat) -> Definiteness:
    """Classify a symmetric rational matrix by exact congruence elimination.

    PSD results carry a saturated integer kernel basis; indefinite results
    carry an explicit integer vector of negative value.
    """
    if not q.is_symmetric():
        raise ValueError("definiteness requires a symmetric matrix")
    n = q.rows
    m = q.to_rows()
    basis = [[ONE if i == k else ZERO for i in range(n)] for k in range(n)]
    active = list(range(n))
    while active:
        piv = next((i for i in active if m[i][i] != ZERO), None)
        if piv is None:
            off = next(
                ((i, j) for i in active for j in active if i < j and m[i][j] != ZERO),
                None,
            )
            if off is None:
                break
            i, j = off
            if m[i][j] < ZERO:
                w = [basis[i][k] + basis[j][k] for k in range(n)]
            else:
                w = [basis[i][k] - basis[j][k] for k in range(n)]
            return Definiteness(INDEFINITE, negative_witness=_primitive_int(w))
        if m[piv][piv] < ZERO:
            return Definiteness(INDEFINITE, negative_witness=_primitive_int(basis[piv]))
        active.remove(piv)
        d = m[piv][piv]
        factors = {j: m[piv][j] / d for j in active if m[piv][j] != ZERO}
        for j, f in factors.items():
            basis[j] = [basis[j][k] - f * basis[piv][k] for k in range(n)]
        for j in active:
            fj = factors.get(j, ZERO)
            if fj == ZERO:
                continue
            mj = m[j]
            for k in active:
                mj[k] = mj[k] - fj * m[piv][k]
        for j in active:
            m[piv][j] = m[j][piv] = ZERO
    if not active:
        return Definiteness(PD)
    return Definiteness(PSD, kernel=tuple(integer_kernel(q)))
