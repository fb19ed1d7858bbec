"""Normal-form arithmetic in the symplectic reflection algebra H_t,eta(G).

Elements are stored with all generator letters left of the group element:
a map  group element -> (exponent vector -> eta-polynomial coefficient),
monomials in graded-lexicographic order with a_1 < ... < a_2N.  Rewriting
uses the defining relations

    [x, y] = t omega(x, y) + sum_R eta_R omega_R(x, y) R,      g x = g(x) g,

so commutator corrections inject reflections into the group part, and group
elements are pushed to the right by transforming the letters they cross.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import Cyclotomic, EtaPolynomial
from .linalg import Matrix, darboux_basis, eigen_decompose, form_value, inverse
from .group import Group


class GroupMismatchError(Exception):
    """Operands live in algebras over different groups (or different t)."""


class IndefiniteParityError(Exception):
    """The kappa-bracket needs operands of definite parity."""


def _letters(exp: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for i, e in enumerate(exp):
        out.extend([i] * e)
    return tuple(out)


def _exp_of(word: tuple[int, ...], n: int) -> tuple[int, ...]:
    exp = [0] * n
    for i in word:
        exp[i] += 1
    return tuple(exp)


class Frame:
    """A letter system closed under the rewriting rules.

    `pair[i][j]` is the scalar pairing entering [x_i, x_j] (multiplied by t),
    `refl[(i, j)]` lists (reflection key, omega_R(x_i, x_j)) with nonzero
    value, and `transform(h)` gives sparse columns expressing h(x_j) in the
    frame letters.  nf_word() is memoized per frame.
    """

    def __init__(self, algebra: "Algebra", pair, refl, transform_cols):
        self.algebra = algebra
        self.n = algebra.group.dim
        self.pair = pair
        self.refl = refl
        self._transform_cols = transform_cols
        self._transform_cache: dict = {}
        self._nf_cache: dict = {}

    def transform(self, h_key):
        cols = self._transform_cache.get(h_key)
        if cols is None:
            cols = self._transform_cols(h_key)
            self._transform_cache[h_key] = cols
        return cols

    def expand_letters_under(self, h_key, word):
        """h x_(w1) ... x_(wk) = sum over words w' of coeff * x_(w') h."""
        cols = self.transform(h_key)
        acc = {(): Cyclotomic.one(self.algebra.m)}
        for letter in word:
            nxt: dict = {}
            col = cols[letter]
            for w, c in acc.items():
                for i, ci in col:
                    w2 = w + (i,)
                    p = c * ci
                    cur = nxt.get(w2)
                    s = p if cur is None else cur + p
                    if s.is_zero():
                        nxt.pop(w2, None)
                    else:
                        nxt[w2] = s
            acc = nxt
        return acc

    def nf_word(self, word: tuple[int, ...]):
        """Normal form of a letter word: {(exponent, group key): coefficient}.

        The group key collects reflections produced by the corrections; the
        caller appends its own trailing group element on the right.
        """
        got = self._nf_cache.get(word)
        if got is not None:
            return got
        alg = self.algebra
        group = alg.group
        ident = group.identity_key()
        desc = None
        for p in range(len(word) - 1):
            if word[p] > word[p + 1]:
                desc = p
                break
        if desc is None:
            got = {(_exp_of(word, self.n), ident): alg.one_poly}
            self._nf_cache[word] = got
            return got
        p = desc
        j, k = word[p], word[p + 1]
        out: dict = {}

        def add(key, poly):
            cur = out.get(key)
            s = poly if cur is None else cur + poly
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s

        swapped = word[:p] + (k, j) + word[p + 2:]
        for key, poly in self.nf_word(swapped).items():
            add(key, poly)
        # x_j x_k = x_k x_j + t*pair_jk + sum_R eta_R omega_R(x_j, x_k) R
        scal = alg.t * self.pair[j][k]
        if not scal.is_zero():
            shorter = word[:p] + word[p + 2:]
            for key, poly in self.nf_word(shorter).items():
                add(key, poly.scaled(scal))
        for rkey, val in self.refl.get((j, k), ()):
            eta_coeff = alg.eta_poly(group.eta_var_of(rkey)).scaled(val)
            tail = word[p + 2:]
            for w2, c in self.expand_letters_under(rkey, tail).items():
                for (exp, g2), poly in self.nf_word(word[:p] + w2).items():
                    add((exp, group.mul(g2, rkey)), (poly * eta_coeff).scaled(c))
        self._nf_cache[word] = out
        return out


class EigenbasisChart:
    """Eigenbasis of one group element: b_I = sum_i M^i_I a_i with
    g(b_I) = lambda_I b_I; the +1 and -1 eigenvalue blocks are Darboux bases
    of their eigenspaces, so the kappa-block Gram matrix is the normal shape."""

    def __init__(self, algebra: "Algebra", g_key):
        group = algebra.group
        m = group.exponent
        el = group.elements[g_key]
        self.g_key = g_key
        decomp = eigen_decompose(el.matrix, m, order=el.order)
        lams: list[Cyclotomic] = []
        vectors = []
        plus_one = Cyclotomic.one(m)
        minus_one = Cyclotomic.from_rational(-1, m)
        for lam, space in decomp:
            if lam == plus_one or lam == minus_one:
                basis = darboux_basis(space, group.omega)
            else:
                basis = list(space.basis)
            for v in basis:
                lams.append(lam)
                vectors.append(v)
        self.lams = tuple(lams)
        self.vectors = tuple(vectors)
        n = group.dim
        self.M = Matrix.from_rows([[vectors[I][i] for I in range(n)] for i in range(n)])
        self.Minv = inverse(self.M)
        self.gram = [[form_value(group.omega, vectors[a], vectors[b]) for b in range(n)]
                     for a in range(n)]
        self.kappa_indices = {}
        self.kappa_pairs = {}
        for kappa, lam_val in ((+1, plus_one), (-1, minus_one)):
            idxs = [i for i, lv in enumerate(lams) if lv == lam_val]
            self.kappa_indices[kappa] = idxs
            self.kappa_pairs[kappa] = [(idxs[2 * r], idxs[2 * r + 1])
                                       for r in range(len(idxs) // 2)]

    def coords(self, v):
        """Sparse chart coordinates [(index, coeff)] of a standard vector."""
        full = self.Minv.matvec(v)
        return [(i, c) for i, c in enumerate(full) if not c.is_zero()]


class Algebra:
    """The algebra H_t,eta(G) with t a fixed scalar (default 1)."""

    def __init__(self, group: Group, t: int | Fraction | Cyclotomic = 1):
        self.group = group
        self.m = group.exponent
        if not isinstance(t, Cyclotomic):
            t = Cyclotomic.from_rational(Fraction(t), self.m)
        elif t.m != self.m:
            t = t.embed(self.m)
        if t.is_zero():
            raise ValueError("t must be nonzero (t = 0 is out of scope)")
        self.t = t
        self.nvars = group.n_eta
        self.one_poly = EtaPolynomial.constant(1, self.nvars, self.m)
        self.zero_poly = EtaPolynomial.zero(self.nvars, self.m)
        self._eta_polys = [EtaPolynomial.variable(i, self.nvars, self.m)
                           for i in range(self.nvars)]
        self._charts: dict = {}
        self._chart_frames: dict = {}
        n = group.dim
        pair = [[group.omega[i, j] for j in range(n)] for i in range(n)]
        refl = {}
        std = tuple(tuple(Cyclotomic.one(self.m) if i == j else Cyclotomic.zero(self.m)
                          for j in range(n)) for i in range(n))
        for i in range(n):
            for j in range(n):
                entries = []
                for rkey in group.reflections:
                    val = group.omega_r(rkey, std[i], std[j])
                    if not val.is_zero():
                        entries.append((rkey, val))
                if entries:
                    refl[(i, j)] = entries

        def std_cols(h_key):
            hmat = group.elements[h_key].matrix
            return [[(i, hmat[i, j]) for i in range(n) if not hmat[i, j].is_zero()]
                    for j in range(n)]

        self.frame = Frame(self, pair, refl, std_cols)

    # -- scalar helpers -----------------------------------------------------

    def eta_poly(self, i: int) -> EtaPolynomial:
        return self._eta_polys[i]

    def coeff(self, c) -> EtaPolynomial:
        if isinstance(c, EtaPolynomial):
            if c.nvars != self.nvars or c.m != self.m:
                raise ValueError("coefficient from a different algebra")
            return c
        return EtaPolynomial.constant(c, self.nvars, self.m)

    # -- charts --------------------------------------------------------------

    def chart(self, g_key) -> EigenbasisChart:
        got = self._charts.get(g_key)
        if got is None:
            got = EigenbasisChart(self, g_key)
            self._charts[g_key] = got
        return got

    def chart_frame(self, g_key) -> Frame:
        """Frame whose letters are the eigenbasis of g (used by to_eigenbasis)."""
        got = self._chart_frames.get(g_key)
        if got is None:
            chart = self.chart(g_key)
            group = self.group
            n = group.dim
            refl = {}
            for i in range(n):
                for j in range(n):
                    entries = []
                    for rkey in group.reflections:
                        val = group.omega_r(rkey, chart.vectors[i], chart.vectors[j])
                        if not val.is_zero():
                            entries.append((rkey, val))
                    if entries:
                        refl[(i, j)] = entries

            def chart_cols(h_key, chart=chart):
                hmat = self.group.elements[h_key].matrix
                cols = []
                for j in range(n):
                    cols.append(chart.coords(hmat.matvec(chart.vectors[j])))
                return cols

            got = Frame(self, chart.gram, refl, chart_cols)
            self._chart_frames[g_key] = got
        return got

    # -- element constructors -------------------------------------------------

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def scalar(self, c) -> "AlgebraElement":
        poly = self.coeff(c)
        if poly.is_zero():
            return self.zero()
        e = self.group.identity_key()
        zero_exp = (0,) * self.group.dim
        return AlgebraElement(self, {e: {zero_exp: poly}})

    def one(self) -> "AlgebraElement":
        return self.scalar(1)

    def eta_scalar(self, i: int) -> "AlgebraElement":
        return self.scalar(self.eta_poly(i))

    def generator(self, i: int) -> "AlgebraElement":
        """The generator a_(i+1), zero-indexed argument."""
        n = self.group.dim
        if not 0 <= i < n:
            raise IndexError(f"generator index {i} out of range 0..{n - 1}")
        e = self.group.identity_key()
        exp = tuple(1 if j == i else 0 for j in range(n))
        return AlgebraElement(self, {e: {exp: self.one_poly}})

    def group_element(self, g_key) -> "AlgebraElement":
        zero_exp = (0,) * self.group.dim
        return AlgebraElement(self, {g_key: {zero_exp: self.one_poly}})

    def from_terms(self, terms) -> "AlgebraElement":
        clean: dict = {}
        for gk, poly in terms.items():
            inner = {e: c for e, c in poly.items() if not c.is_zero()}
            if inner:
                clean[gk] = inner
        return AlgebraElement(self, clean)


class AlgebraElement:
    """Normal-form element: sum over g of (ordered polynomial in a_i) * g."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Algebra, terms):
        self.algebra = algebra
        self.terms = terms

    # -- ring structure -------------------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if self.algebra is not other.algebra:
            if (self.algebra.group is not other.algebra.group
                    or self.algebra.t != other.algebra.t):
                raise GroupMismatchError("elements belong to different algebras")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, EtaPolynomial)):
            other = self.algebra.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        terms = {gk: dict(poly) for gk, poly in self.terms.items()}
        for gk, poly in other.terms.items():
            tgt = terms.setdefault(gk, {})
            for e, c in poly.items():
                cur = tgt.get(e)
                s = c if cur is None else cur + c
                if s.is_zero():
                    tgt.pop(e, None)
                else:
                    tgt[e] = s
            if not tgt:
                terms.pop(gk)
        return AlgebraElement(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra,
                              {gk: {e: -c for e, c in poly.items()}
                               for gk, poly in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, EtaPolynomial)):
            other = self.algebra.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scaled(self, c) -> "AlgebraElement":
        poly = self.algebra.coeff(c)
        if poly.is_zero():
            return self.algebra.zero()
        out = {}
        for gk, p in self.terms.items():
            inner = {}
            for e, cc in p.items():
                s = cc * poly
                if not s.is_zero():
                    inner[e] = s
            if inner:
                out[gk] = inner
        return AlgebraElement(self.algebra, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, EtaPolynomial)):
            return self.scaled(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        alg = self.algebra
        group = alg.group
        frame = alg.frame
        out: dict = {}
        for g, poly1 in self.terms.items():
            for h, poly2 in other.terms.items():
                gh = group.mul(g, h)
                for beta, c2 in poly2.items():
                    moved = frame.expand_letters_under(g, _letters(beta))
                    for alpha, c1 in poly1.items():
                        coeff = c1 * c2
                        head = _letters(alpha)
                        for w2, cw in moved.items():
                            for (exp, r), cnf in frame.nf_word(head + w2).items():
                                total = (coeff * cnf).scaled(cw)
                                if total.is_zero():
                                    continue
                                gk = group.mul(r, gh)
                                tgt = out.setdefault(gk, {})
                                cur = tgt.get(exp)
                                s = total if cur is None else cur + total
                                if s.is_zero():
                                    tgt.pop(exp, None)
                                else:
                                    tgt[exp] = s
        return AlgebraElement(alg, {gk: p for gk, p in out.items() if p})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, EtaPolynomial)):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.group is other.algebra.group and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(
            (gk, tuple(sorted(poly.items(), key=lambda t: t[0])))
            for gk, poly in self.terms.items())))

    # -- structure queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for poly in self.terms.values() for e in poly), default=-1)

    def parity(self):
        """0 or 1 when every monomial has that total degree mod 2, else None."""
        seen = {sum(e) % 2 for poly in self.terms.values() for e in poly}
        if len(seen) == 1:
            return seen.pop()
        return None if seen else 0

    def monomials(self):
        """Deterministic iteration: (group key, exponent, coefficient)."""
        for gk in sorted(self.terms):
            poly = self.terms[gk]
            for e in sorted(poly, key=lambda t: (sum(t), t)):
                yield gk, e, poly[e]


def multiply(f: AlgebraElement, h: AlgebraElement) -> AlgebraElement:
    return f * h


def kappa_commutator(f: AlgebraElement, h: AlgebraElement, kappa: int) -> AlgebraElement:
    """[f, h]_kappa = f h - kappa^(pi(f) pi(h)) h f, for definite parities."""
    pf, ph = f.parity(), h.parity()
    if pf is None or ph is None:
        raise IndefiniteParityError("kappa-bracket needs definite parities")
    sign = kappa if pf * ph else 1
    return f * h - (h * f).scaled(sign)


def to_eigenbasis(f: AlgebraElement, g_key):
    """Rewrite the g-term of f in the eigenbasis of g.

    Returns {(group key, exponent in the b letters): coefficient}; the main
    part sits over g itself, reordering corrections inject reflections and
    land over R g.  from_eigenbasis inverts exactly.
    """
    alg = f.algebra
    group = alg.group
    chart = alg.chart(g_key)
    cframe = alg.chart_frame(g_key)
    poly = f.terms.get(g_key, {})
    n = group.dim
    std = [tuple(Cyclotomic.one(alg.m) if i == j else Cyclotomic.zero(alg.m)
                 for i in range(n)) for j in range(n)]
    letter_coords = [chart.coords(std[j]) for j in range(n)]
    out: dict = {}
    for exp, coeff in poly.items():
        acc = {(): alg.one_poly.scaled(Cyclotomic.one(alg.m))}
        for letter in _letters(exp):
            nxt: dict = {}
            for w, c in acc.items():
                for i, ci in letter_coords[letter]:
                    w2 = w + (i,)
                    p = c.scaled(ci)
                    cur = nxt.get(w2)
                    s = p if cur is None else cur + p
                    if not s.is_zero():
                        nxt[w2] = s
                    else:
                        nxt.pop(w2, None)
            acc = nxt
        for w, cw in acc.items():
            for (bexp, r), cnf in cframe.nf_word(w).items():
                total = coeff * cw * cnf
                if total.is_zero():
                    continue
                key = (group.mul(r, g_key), bexp)
                cur = out.get(key)
                s = total if cur is None else cur + total
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
    return out


def from_eigenbasis(data, g_key, algebra: Algebra) -> AlgebraElement:
    """Inverse of to_eigenbasis: b-letter terms back to standard normal form."""
    group = algebra.group
    chart = algebra.chart(g_key)
    frame = algebra.frame
    out = algebra.zero()
    n = group.dim
    for (gk, bexp), coeff in data.items():
        acc = {(): Cyclotomic.one(algebra.m)}
        for letter in _letters(bexp):
            vec = chart.vectors[letter]
            nxt: dict = {}
            for w, c in acc.items():
                for i in range(n):
                    ci = vec[i]
                    if ci.is_zero():
                        continue
                    w2 = w + (i,)
                    p = c * ci
                    cur = nxt.get(w2)
                    s = p if cur is None else cur + p
                    if not s.is_zero():
                        nxt[w2] = s
                    else:
                        nxt.pop(w2, None)
            acc = nxt
        terms: dict = {}
        for w, cw in acc.items():
            for (exp, r), cnf in frame.nf_word(w).items():
                total = (coeff * cnf).scaled(cw)
                if total.is_zero():
                    continue
                tgt = terms.setdefault(group.mul(r, gk), {})
                cur = tgt.get(exp)
                s = total if cur is None else cur + total
                if s.is_zero():
                    tgt.pop(exp, None)
                else:
                    tgt[exp] = s
        out = out + AlgebraElement(algebra, {gk2: p for gk2, p in terms.items() if p})
    return out
