"""Exact linear algebra over Q(zeta_m): fraction-free elimination, kernels,
determinants, eigen-decomposition of finite-order matrices, and symplectic
(Darboux) bases of subspaces.

Pivoting is deterministic (first nonzero column, lowest row index), so every
derived basis -- and everything downstream that consumes one -- is
reproducible run to run.
"""

from __future__ import annotations

from .scalar import Cyclotomic


class DecompositionIncompleteError(Exception):
    """Eigenspaces of the m-th roots of unity do not fill the whole space."""


class DegenerateRestrictionError(Exception):
    """The symplectic form restricted to a subspace is singular."""


Vector = tuple[Cyclotomic, ...]


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(u: Vector, c: Cyclotomic) -> Vector:
    return tuple(a * c for a in u)

def vec_is_zero(u: Vector) -> bool:
    return all(a.is_zero() for a in u)


class Matrix:
    """Dense matrix of canonical cyclotomic entries, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data):
        data = tuple(data)
        if len(data) != rows * cols:
            raise ValueError("matrix data size mismatch")
        self.rows, self.cols, self.data = rows, cols, data

    @staticmethod
    def from_rows(rows_of_entries) -> "Matrix":
        rows = len(rows_of_entries)
        cols = len(rows_of_entries[0]) if rows else 0
        flat = [x for row in rows_of_entries for x in row]
        return Matrix(rows, cols, flat)

    @staticmethod
    def identity(n: int, m: int) -> "Matrix":
        one, zero = Cyclotomic.one(m), Cyclotomic.zero(m)
        return Matrix(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @staticmethod
    def zero(rows: int, cols: int, m: int) -> "Matrix":
        z = Cyclotomic.zero(m)
        return Matrix(rows, cols, [z] * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.data[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def order(self) -> int:
        return self.data[0].m if self.data else 1

    def embed(self, m: int) -> "Matrix":
        return Matrix(self.rows, self.cols, [x.embed(m) for x in self.data])

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.data])

    def scaled(self, c: Cyclotomic) -> "Matrix":
        return Matrix(self.rows, self.cols, [a * c for a in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("matrix dimension mismatch")
        n, k, p = self.rows, self.cols, other.cols
        zero = Cyclotomic.zero(self.order())
        out = []
        for i in range(n):
            ri = self.row(i)
            for j in range(p):
                acc = zero
                for t in range(k):
                    a = ri[t]
                    if not a.is_zero():
                        b = other.data[t * p + j]
                        if not b.is_zero():
                            acc = acc + a * b
                out.append(acc)
        return Matrix(n, p, out)

    def matvec(self, v: Vector) -> Vector:
        zero = Cyclotomic.zero(self.order())
        out = []
        for i in range(self.rows):
            acc = zero
            base = i * self.cols
            for t, x in enumerate(v):
                if not x.is_zero():
                    a = self.data[base + t]
                    if not a.is_zero():
                        acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self.data[i * self.cols + j]
                       for j in range(self.cols) for i in range(self.rows)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.data) == (other.rows, other.cols, other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def key(self):
        """Canonical key: coefficient data of all entries in row-major order."""
        return tuple(x.key() for x in self.data)

    def __repr__(self):
        from .scalar import literal
        rows = [" ".join(literal(self[i, j]) for j in range(self.cols))
                for i in range(self.rows)]
        return "Matrix[" + "; ".join(rows) + "]"


class Subspace:
    """Subspace given by a linearly independent list of column vectors."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: list[Vector], check: bool = True):
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        if check and basis:
            mat = Matrix.from_rows([list(v) for v in zip(*basis)])
            if rank(mat) != len(basis):
                raise ValueError("subspace basis is linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)


def _echelon(mat: Matrix):
    """Fraction-free (Bareiss) row echelon form.

    Returns (rows, pivot_cols) where rows is a list of row lists.  Pivot rule:
    scan columns left to right, pick the lowest-index row with a nonzero entry.
    """
    m = mat.order()
    zero = Cyclotomic.zero(m)
    a = [list(mat.row(i)) for i in range(mat.rows)]
    nrows, ncols = mat.rows, mat.cols
    piv_cols = []
    r = 0
    prev_pivot = Cyclotomic.one(m)
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if not a[i][c].is_zero():
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            a[r], a[sel] = a[sel], a[r]
        pivot = a[r][c]
        inv_prev = prev_pivot.inverse()
        for i in range(r + 1, nrows):
            head = a[i][c]
            if head.is_zero():
                for j in range(c + 1, ncols):
                    if not a[i][j].is_zero():
                        a[i][j] = a[i][j] * pivot * inv_prev
                continue
            a[i][c] = zero
            for j in range(c + 1, ncols):
                a[i][j] = (a[i][j] * pivot - a[r][j] * head) * inv_prev
        prev_pivot = pivot
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    return a, piv_cols


def rank(mat: Matrix) -> int:
    _, piv = _echelon(mat)
    return len(piv)


def det(mat: Matrix) -> Cyclotomic:
    """Determinant by fraction-free elimination with row-swap sign tracking."""
    if mat.rows != mat.cols:
        raise ValueError("determinant of a non-square matrix")
    m = mat.order()
    n = mat.rows
    if n == 0:
        return Cyclotomic.one(m)
    a = [list(mat.row(i)) for i in range(n)]
    sign = 1
    prev_pivot = Cyclotomic.one(m)
    for c in range(n):
        sel = None
        for i in range(c, n):
            if not a[i][c].is_zero():
                sel = i
                break
        if sel is None:
            return Cyclotomic.zero(m)
        if sel != c:
            a[c], a[sel] = a[sel], a[c]
            sign = -sign
        pivot = a[c][c]
        inv_prev = prev_pivot.inverse()
        for i in range(c + 1, n):
            head = a[i][c]
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * pivot - a[c][j] * head) * inv_prev
        prev_pivot = pivot
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def kernel_basis(mat: Matrix) -> Subspace:
    """Exact basis of the right null space, deterministic."""
    m = mat.order()
    one, zero = Cyclotomic.one(m), Cyclotomic.zero(m)
    a, piv_cols = _echelon(mat)
    ncols = mat.cols
    free_cols = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free_cols:
        sol = [zero] * ncols
        sol[fc] = one
        # back substitution over the echelon rows
        for r in range(len(piv_cols) - 1, -1, -1):
            pc = piv_cols[r]
            acc = zero
            for j in range(pc + 1, ncols):
                if not sol[j].is_zero() and not a[r][j].is_zero():
                    acc = acc + a[r][j] * sol[j]
            if not acc.is_zero():
                sol[pc] = -acc * a[r][pc].inverse()
        basis.append(tuple(sol))
    return Subspace(ncols, basis, check=False)


def inverse(mat: Matrix) -> Matrix:
    """Matrix inverse by elimination with exact division."""
    if mat.rows != mat.cols:
        raise ValueError("inverse of a non-square matrix")
    n = mat.rows
    m = mat.order()
    one, zero = Cyclotomic.one(m), Cyclotomic.zero(m)
    a = [list(mat.row(i)) + [one if i == j else zero for j in range(n)] for i in range(n)]
    for c in range(n):
        sel = None
        for i in range(c, n):
            if not a[i][c].is_zero():
                sel = i
                break
        if sel is None:
            raise ZeroDivisionError("singular matrix")
        if sel != c:
            a[c], a[sel] = a[sel], a[c]
        inv_p = a[c][c].inverse()
        a[c] = [x * inv_p for x in a[c]]
        for i in range(n):
            if i != c and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return Matrix(n, n, [a[i][n + j] for i in range(n) for j in range(n)])


def eigen_decompose(g: Matrix, m: int, order: int | None = None):
    """Eigen-decomposition of a finite-order matrix over Q(zeta_m).

    Returns a list of (eigenvalue, Subspace) pairs with nonzero eigenspaces,
    sorted by the root-of-unity exponent of the eigenvalue.  Raises
    DecompositionIncompleteError when the eigenspaces do not fill the space
    (i.e. the input is not of finite order dividing m).
    """
    n = g.rows
    candidates = range(m) if order is None else range(0, m, m // order) if m % order == 0 else range(m)
    out = []
    total = 0
    ident = Matrix.identity(n, m)
    for k in candidates:
        lam = Cyclotomic.root_of_unity(m, k)
        ker = kernel_basis(g - ident.scaled(lam))
        if ker.dim:
            out.append((lam, ker))
            total += ker.dim
        if total == n:
            break
    if total != n:
        raise DecompositionIncompleteError(
            f"eigenspaces of the {m}-th roots of unity span {total} < {n} dimensions")
    return out


def form_value(omega: Matrix, u: Vector, v: Vector) -> Cyclotomic:
    """omega(u, v) = u^T Omega v."""
    return _dot(u, omega.matvec(v))


def _dot(u: Vector, v: Vector) -> Cyclotomic:
    acc = Cyclotomic.zero(u[0].m if u else 1)
    for a, b in zip(u, v):
        if not a.is_zero() and not b.is_zero():
            acc = acc + a * b
    return acc


def darboux_basis(space: Subspace, omega: Matrix) -> list[Vector]:
    """Symplectic Gram-Schmidt: basis c_1, ..., c_2k of the subspace with
    omega(c_{2i-1}, c_{2i}) = 1 and all other pairings zero.

    Deterministic for a fixed input basis.  Raises DegenerateRestrictionError
    when the restriction of omega to the subspace is singular.
    """
    pending = list(space.basis)
    out: list[Vector] = []
    while pending:
        c1 = pending.pop(0)
        if vec_is_zero(c1):
            raise DegenerateRestrictionError("zero vector while pairing")
        partner = None
        for idx, w in enumerate(pending):
            s = form_value(omega, c1, w)
            if not s.is_zero():
                partner = idx
                break
        if partner is None:
            raise DegenerateRestrictionError(
                "symplectic form restricted to the subspace is singular")
        w = pending.pop(partner)
        s = form_value(omega, c1, w)
        c2 = vec_scale(w, s.inverse())
        rest = []
        for v in pending:
            a = form_value(omega, c2, v)
            b = form_value(omega, c1, v)
            v2 = vec_add(v, vec_scale(c1, a))
            v2 = vec_sub(v2, vec_scale(c2, b))
            rest.append(v2)
        out.extend([c1, c2])
        pending = rest
    return out
