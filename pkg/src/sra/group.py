"""Finite symplectic reflection groups: closure from generators, conjugacy
classes, the reflection set, E-grading, and the trace/supertrace counts.

A group element is a 2N x 2N matrix over Q(zeta_m) with m the session
cyclotomic order (the group exponent, enlarged when matrix entries need a
bigger field).  The canonical key of an element is the canonical coefficient
data of its entries in row-major order; class representatives are the
elements with minimal key, which makes eta-variable labels and all reports
deterministic.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm

from .scalar import Cyclotomic, literal, parse_literal
from .linalg import (
    Matrix,
    darboux_basis,
    eigen_decompose,
    form_value,
    kernel_basis,
    rank,
)

DEFAULT_CAP = 100_000


class NotSymplecticError(Exception):
    """A generator does not preserve the symplectic form."""


class NotReflectionError(Exception):
    """A generator is not a symplectic reflection (rank(g-1) != 2)."""


class CapExceededError(Exception):
    """Closure would exceed the element cap."""


class GroupElement:
    __slots__ = ("matrix", "key", "order", "word", "index")

    def __init__(self, matrix: Matrix, key, order: int, word: tuple[int, ...], index: int):
        self.matrix = matrix
        self.key = key
        self.order = order
        self.word = word      # generator indices whose product equals the element
        self.index = index    # BFS discovery index

    def __repr__(self):
        return f"GroupElement(word={self.word}, order={self.order})"


class Group:
    """Closed symplectic reflection group with precomputed class data."""

    def __init__(self, N, omega, elements, generator_keys, classes, reflections, exponent, name):
        self.N = N
        self.omega = omega
        self.elements: dict = elements              # key -> GroupElement
        self.generator_keys = generator_keys
        self.classes: list[tuple] = classes         # list of sorted key tuples
        self.reflections: list = reflections        # reflection keys, sorted
        self.exponent = exponent                    # session cyclotomic order m
        self.name = name
        self.class_rep = [cls[0] for cls in self.classes]
        self.class_of = {k: i for i, cls in enumerate(self.classes) for k in cls}
        refl_classes = sorted({self.class_of[r] for r in self.reflections})
        self.eta_vars = {ci: vi for vi, ci in enumerate(refl_classes)}
        self.reflection_classes = refl_classes
        self.eta_assignment: dict[int, Fraction] | None = None  # optional, from files
        self._mul_cache: dict = {}
        self._inv_cache: dict = {}
        self._egrading: dict = {}
        self._omega_r: dict = {}
        self._spectrum: dict = {}
        self._identity = None

    # -- basic structure ----------------------------------------------------

    def __len__(self):
        return len(self.elements)

    @property
    def dim(self) -> int:
        return 2 * self.N

    @property
    def n_eta(self) -> int:
        return len(self.eta_vars)

    def eta_var_of(self, refl_key) -> int:
        return self.eta_vars[self.class_of[refl_key]]

    def identity_key(self):
        if self._identity is None:
            ident = Matrix.identity(self.dim, self.exponent)
            self._identity = ident.key()
        return self._identity

    def mul(self, a, b):
        got = self._mul_cache.get((a, b))
        if got is None:
            prod = self.elements[a].matrix * self.elements[b].matrix
            got = prod.key()
            self._mul_cache[(a, b)] = got
        return got

    def inv(self, a):
        got = self._inv_cache.get(a)
        if got is None:
            x, acc = a, self.identity_key()
            # a^(order-1)
            for _ in range(self.elements[a].order - 1):
                acc = self.mul(acc, a)
            got = acc
            self._inv_cache[a] = got
        return got

    def power(self, a, k: int):
        if k < 0:
            return self.power(self.inv(a), -k)
        acc = self.identity_key()
        for _ in range(k):
            acc = self.mul(acc, a)
        return acc

    def sorted_keys(self):
        return sorted(self.elements)

    # -- spectral data ------------------------------------------------------

    def e_grading(self, key, kappa: int):
        """E = dim Ker(g - kappa)/2 together with the cached kappa-eigenspace."""
        got = self._egrading.get((key, kappa))
        if got is None:
            g = self.elements[key].matrix
            scal = Cyclotomic.from_rational(kappa, self.exponent)
            space = kernel_basis(g - Matrix.identity(self.dim, self.exponent).scaled(scal))
            if space.dim % 2 != 0:
                raise ArithmeticError("odd-dimensional kappa-eigenspace (impossible in Sp(2N))")
            got = (space.dim // 2, space)
            self._egrading[(key, kappa)] = got
        return got

    def spectrum(self, key):
        """Eigen-decomposition [(lambda, Subspace)] of an element, cached."""
        got = self._spectrum.get(key)
        if got is None:
            el = self.elements[key]
            got = eigen_decompose(el.matrix, self.exponent, order=el.order)
            self._spectrum[key] = got
        return got

    def kappa_counts(self) -> tuple[int, int]:
        """(T, S): numbers of classes without eigenvalue +1 / -1."""
        t = s = 0
        for rep in self.class_rep:
            if self.e_grading(rep, +1)[0] == 0:
                t += 1
            if self.e_grading(rep, -1)[0] == 0:
                s += 1
        return t, s

    def klein(self):
        """Key of the element -1, or None if the group lacks it."""
        minus = Matrix.identity(self.dim, self.exponent).scaled(
            Cyclotomic.from_rational(-1, self.exponent))
        key = minus.key()
        return key if key in self.elements else None

    # -- the pairing omega_R ------------------------------------------------

    def omega_r_covectors(self, refl_key):
        """Covectors (A, B) with omega_R(x, y) = (x.B)(y.A) - (x.A)(y.B).

        Built from a Darboux pair of V_R = Im(R - 1); omega_R projects onto
        V_R along Z_R and evaluates omega there.
        """
        got = self._omega_r.get(refl_key)
        if got is None:
            R = self.elements[refl_key].matrix
            diff = R - Matrix.identity(self.dim, self.exponent)
            cols = [diff.col(j) for j in range(self.dim)]
            v1 = next(c for c in cols if any(not x.is_zero() for x in c))
            v2 = None
            for c in cols:
                if rank(Matrix.from_rows([list(v) for v in zip(v1, c)])) == 2:
                    v2 = c
                    break
            if v2 is None:
                raise NotReflectionError("Im(R-1) is not 2-dimensional")
            s = form_value(self.omega, v1, v2)
            if s.is_zero():
                raise ArithmeticError("omega degenerate on Im(R-1)")
            v2 = tuple(x * s.inverse() for x in v2)
            a_cov = self.omega.matvec(v2)
            b_cov = self.omega.matvec(v1)
            got = (a_cov, b_cov)
            self._omega_r[refl_key] = got
        return got

    def omega_r(self, refl_key, x, y) -> Cyclotomic:
        a_cov, b_cov = self.omega_r_covectors(refl_key)

        def dot(u, v):
            acc = Cyclotomic.zero(self.exponent)
            for p, q in zip(u, v):
                if not p.is_zero() and not q.is_zero():
                    acc = acc + p * q
            return acc

        return dot(x, b_cov) * dot(y, a_cov) - dot(x, a_cov) * dot(y, b_cov)

    def darboux_of_eigenspace(self, key, kappa: int):
        """Darboux basis of Ker(g - kappa), deterministic."""
        _, space = self.e_grading(key, kappa)
        return darboux_basis(space, self.omega)


# -- closure ----------------------------------------------------------------


def close(generators: list[Matrix], omega: Matrix, cap: int = DEFAULT_CAP,
          strict_reflections: bool = True, name: str = "group",
          min_order: int = 1) -> Group:
    """Breadth-first closure of symplectic generators into a Group.

    Each generator must satisfy g^T omega g = omega, and (unless
    strict_reflections is False) rank(g - 1) = 2.  After closure the session
    cyclotomic order is the lcm of all element orders and of the order the
    entries already live in, and every scalar is re-embedded into it.
    """
    if not generators:
        raise ValueError("need at least one generator")
    dim = generators[0].rows
    if omega.rows != dim or omega.cols != dim or dim % 2 != 0:
        raise ValueError("omega must be 2N x 2N matching the generators")
    m0 = lcm(omega.order(), *[g.order() for g in generators], min_order)
    omega0 = omega.embed(m0)
    if rank(omega0) != dim or not (-omega0.transpose() == omega0):
        raise ValueError("omega must be nondegenerate and antisymmetric")
    gens = [g.embed(m0) for g in generators]
    ident0 = Matrix.identity(dim, m0)
    for i, g in enumerate(gens):
        if not (g.transpose() * omega0 * g == omega0):
            raise NotSymplecticError(f"generator {i} does not preserve omega")
        if strict_reflections and rank(g - ident0) != 2:
            raise NotReflectionError(
                f"generator {i} has rank(g-1) = {rank(g - ident0)}, not 2")

    # BFS closure at the entry order
    found: dict = {ident0.key(): (ident0, ())}
    queue = [ident0.key()]
    while queue:
        key = queue.pop(0)
        mat, word = found[key]
        for gi, g in enumerate(gens):
            nxt = mat * g
            nk = nxt.key()
            if nk not in found:
                if len(found) >= cap:
                    raise CapExceededError(f"group closure exceeds cap {cap}")
                found[nk] = (nxt, word + (gi,))
                queue.append(nk)

    # element orders via the multiplication just computed
    ident_key = ident0.key()
    orders = {}
    mats = {k: v[0] for k, v in found.items()}
    mul_memo: dict = {}

    def mul0(a, b):
        got = mul_memo.get((a, b))
        if got is None:
            got = (mats[a] * mats[b]).key()
            mul_memo[(a, b)] = got
        return got

    for k in found:
        d, cur = 1, k
        while cur != ident_key:
            cur = mul0(cur, k)
            d += 1
        orders[k] = d

    exponent = 1
    for d in orders.values():
        exponent = lcm(exponent, d)
    m = lcm(exponent, m0)

    # re-embed into the session order and rebuild keys
    embedded = {}
    for k, (mat, word) in found.items():
        newmat = mat.embed(m)
        embedded[newmat.key()] = GroupElement(newmat, newmat.key(), orders[k], word, 0)
    for idx, k in enumerate(sorted(embedded)):
        embedded[k].index = idx

    omega_m = omega0.embed(m)
    gen_keys = [g.embed(m).key() for g in gens]

    # conjugacy classes: orbits under conjugation by the generators
    inv_gen = {}
    for gk in gen_keys:
        d = embedded[gk].order
        acc = Matrix.identity(dim, m)
        for _ in range(d - 1):
            acc = acc * embedded[gk].matrix
        inv_gen[gk] = acc.key()

    def mulk(a, b):
        return (embedded[a].matrix * embedded[b].matrix).key()

    unassigned = set(embedded)
    classes = []
    for k in sorted(embedded):
        if k not in unassigned:
            continue
        orbit = {k}
        frontier = [k]
        while frontier:
            x = frontier.pop()
            for gk in gen_keys:
                y = mulk(mulk(gk, x), inv_gen[gk])
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        unassigned -= orbit
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda cls: cls[0])

    ident_m = Matrix.identity(dim, m)
    reflections = sorted(k for k, el in embedded.items()
                         if rank(el.matrix - ident_m) == 2)

    return Group(dim // 2, omega_m, embedded, gen_keys, classes, reflections, m, name)


# -- builtin constructors ----------------------------------------------------


def standard_omega(n_half: int, m: int = 1) -> Matrix:
    """The block form ((0, I), (-I, 0))."""
    n = 2 * n_half
    one, zero = Cyclotomic.one(m), Cyclotomic.zero(m)
    rows = [[zero] * n for _ in range(n)]
    for i in range(n_half):
        rows[i][n_half + i] = one
        rows[n_half + i][i] = -one
    return Matrix.from_rows(rows)


def cyclic_sp2(n: int) -> Group:
    """The cyclic group generated by diag(zeta_n, zeta_n^-1) in Sp(2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n
    z = Cyclotomic.root_of_unity(m, 1)
    zero = Cyclotomic.zero(m)
    gen = Matrix.from_rows([[z, zero], [zero, z ** (n - 1)]])
    return close([gen], standard_omega(1, m), strict_reflections=(n >= 2),
                 name=f"cyclic_sp2({n})")


def _coxeter_gram(family: str, rank: int) -> list[list[Fraction]]:
    """Gram matrix (alpha_i, alpha_j) of the simple roots."""
    g = [[Fraction(0)] * rank for _ in range(rank)]
    for i in range(rank):
        g[i][i] = Fraction(2)
        if i + 1 < rank:
            g[i][i + 1] = g[i + 1][i] = Fraction(-1)
    if family == "B":
        g[rank - 1][rank - 1] = Fraction(1)
    elif family != "A":
        raise ValueError(f"unknown Coxeter family {family!r}")
    return g


def _simple_reflection_matrices(gram) -> list[Matrix]:
    rank = len(gram)
    mats = []
    for i in range(rank):
        rows = [[Fraction(1) if k == j else Fraction(0) for j in range(rank)]
                for k in range(rank)]
        for j in range(rank):
            rows[i][j] -= 2 * gram[j][i] / gram[i][i]
        mats.append(Matrix.from_rows(
            [[Cyclotomic.from_rational(x, 1) for x in row] for row in rows]))
    return mats


def _double_contragredient(g: Matrix) -> Matrix:
    """Block-diagonal action on coordinates and momenta: g + (g^-1)^T.

    Symplectic with respect to the standard omega for any invertible g; for
    the involutive Coxeter generators the momentum block is just g^T.
    """
    from .linalg import inverse as mat_inverse
    n = g.rows
    m = g.order()
    zero = Cyclotomic.zero(m)
    h = mat_inverse(g).transpose()
    rows = []
    for i in range(n):
        rows.append(list(g.row(i)) + [zero] * n)
    for i in range(n):
        rows.append([zero] * n + list(h.row(i)))
    return Matrix.from_rows(rows)


def doubled_coxeter(family: str, rank: int) -> Group:
    """Doubled Coxeter group of type A_(rank-1) or B_rank acting on
    coordinates and momenta with the standard symplectic form.

    For family "A" the argument is the number n of the symmetric group S_n,
    i.e. the reflection representation has dimension n - 1.
    """
    if family == "A":
        if rank < 2:
            raise ValueError("doubled A needs n >= 2")
        gram = _coxeter_gram("A", rank - 1)
        name = f"doubled-A{rank - 1}"
    elif family == "B":
        if rank < 1:
            raise ValueError("doubled B needs rank >= 1")
        gram = _coxeter_gram("B", rank)
        name = f"doubled-B{rank}"
    else:
        raise ValueError(f"unknown Coxeter family {family!r}")
    gens = [_double_contragredient(s) for s in _simple_reflection_matrices(gram)]
    n_half = len(gram)
    return close(gens, standard_omega(n_half, 1), name=name)


def dihedral(n: int) -> Group:
    """Doubled dihedral group I_2(n) of order 2n, realized over Q(zeta_n)."""
    if n < 2:
        raise ValueError("dihedral needs n >= 2")
    m = n
    z = Cyclotomic.root_of_unity(m, 1)
    zero, one = Cyclotomic.zero(m), Cyclotomic.one(m)
    s1 = Matrix.from_rows([[zero, one], [one, zero]])
    s2 = Matrix.from_rows([[zero, z ** (n - 1)], [z, zero]])
    gens = [_double_contragredient(s) for s in (s1, s2)]
    return close(gens, standard_omega(2, m), name=f"dihedral({n})")


def direct_product(g1: Group, g2: Group) -> Group:
    """Direct product, embedded block-diagonally with omega = diag(w1, w2)."""
    m = lcm(g1.exponent, g2.exponent)
    n1, n2 = g1.dim, g2.dim
    zero = Cyclotomic.zero(m)

    def blk(a: Matrix | None, b: Matrix | None) -> Matrix:
        am = (a if a is not None else Matrix.identity(n1, m)).embed(m)
        bm = (b if b is not None else Matrix.identity(n2, m)).embed(m)
        rows = []
        for i in range(n1):
            rows.append(list(am.row(i)) + [zero] * n2)
        for i in range(n2):
            rows.append([zero] * n1 + list(bm.row(i)))
        return Matrix.from_rows(rows)

    omega = blk(g1.omega, g2.omega)
    gens = [blk(g1.elements[k].matrix, None) for k in g1.generator_keys]
    gens += [blk(None, g2.elements[k].matrix) for k in g2.generator_keys]
    return close(gens, omega, name=f"{g1.name}x{g2.name}")


BUILTIN_NAMES = ("cyclic", "doubled-A", "doubled-B", "dihedral", "product")


def builtin(kind: str, **params) -> Group:
    """Construct a builtin group by name.

    cyclic: n; doubled-A: rank (= n of S_n); doubled-B: rank; dihedral: n;
    product: factors (list of (kind, param) pairs).
    """
    if kind == "cyclic":
        return cyclic_sp2(int(params["n"]))
    if kind == "doubled-A":
        return doubled_coxeter("A", int(params["rank"]))
    if kind == "doubled-B":
        return doubled_coxeter("B", int(params["rank"]))
    if kind == "dihedral":
        return dihedral(int(params["n"]))
    if kind == "product":
        factors = params["factors"]
        groups = [builtin(k, **p) for k, p in factors]
        if len(groups) < 2:
            raise ValueError("product needs at least two factors")
        out = groups[0]
        for g in groups[1:]:
            out = direct_product(out, g)
        return out
    raise ValueError(f"unknown builtin group {kind!r}")


# -- group definition files ---------------------------------------------------


def group_to_dict(group: Group) -> dict:
    """JSON-ready description; cyclotomic literals round-trip bit-exactly."""
    def mat_lits(mat: Matrix):
        return [[literal(mat[i, j]) for j in range(mat.cols)] for i in range(mat.rows)]

    d = {
        "name": group.name,
        "N": group.N,
        "cyclotomic_order": group.exponent,
        "omega": mat_lits(group.omega),
        "generators": [mat_lits(group.elements[k].matrix) for k in group.generator_keys],
    }
    if group.eta_assignment is not None:
        eta = {}
        for ci, vi in group.eta_vars.items():
            val = group.eta_assignment.get(vi)
            eta[f"R{vi}"] = "symbolic" if val is None else str(val)
        d["eta"] = eta
    return d


def group_from_dict(d: dict, cap: int = DEFAULT_CAP, min_order: int = 1) -> Group:
    n_half = int(d["N"])
    dim = 2 * n_half
    m0 = int(d.get("cyclotomic_order", min_order))

    def parse_matrix(rows) -> Matrix:
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise ValueError(f"matrix must be {dim}x{dim}")
        if m0 == 1 and any("z" in x for row in rows for x in row):
            raise ValueError(
                "literals use z but the file declares no cyclotomic_order")
        return Matrix.from_rows([[parse_literal(x, m0) for x in row] for row in rows])

    omega = parse_matrix(d["omega"]) if "omega" in d else standard_omega(n_half, m0)
    gens = [parse_matrix(g) for g in d["generators"]]
    strict = not d.get("allow_non_reflections", False)
    group = close(gens, omega, cap=cap, strict_reflections=strict,
                  name=d.get("name", "group"), min_order=min_order)
    if "eta" in d:
        assignment = {}
        for label, val in d["eta"].items():
            if not label.startswith("R"):
                raise ValueError(f"bad reflection-class label {label!r}")
            vi = int(label[1:])
            if vi >= group.n_eta:
                raise ValueError(f"label {label!r} exceeds the {group.n_eta} reflection classes")
            if val != "symbolic":
                assignment[vi] = Fraction(val)
        group.eta_assignment = assignment if assignment else None
    return group


def load_group(path: str, cap: int = DEFAULT_CAP, min_order: int = 1) -> Group:
    with open(path) as fh:
        return group_from_dict(json.load(fh), cap=cap, min_order=min_order)


def save_group(group: Group, path: str):
    with open(path, "w") as fh:
        json.dump(group_to_dict(group), fh, indent=2, sort_keys=True)
        fh.write("\n")
