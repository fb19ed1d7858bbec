"""Traces and supertraces on H_t,eta(G).

solve_glc builds the unique kappa-trace on C[G] extending free values on the
E = 0 conjugacy classes: classes are processed in increasing E, and for a
representative g with E >= 1 the first Darboux pair c_1, c_2 of Ker(g - kappa)
gives

    t omega(c_1, c_2) sp(g) = - sum_R eta_R omega_R(c_1, c_2) sp(R g),

where every R g that contributes has E(R g) = E(g) - 1.  All remaining ground
level equations are then verified to vanish identically.

evaluate() reduces the kappa-trace of arbitrary normal-form elements with the
regular step (a letter with eigenvalue != kappa is moved to the front and
cyclically cancelled, dropping the degree by two) and the special step (all
letters with eigenvalue kappa: commuting one Darboux partner across the word
trades the monomial for same-degree monomials over group elements of smaller
E).  Both steps are exact; every division is by a nonzero cyclotomic scalar,
so trace values stay polynomial in eta.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .scalar import Cyclotomic, EtaPolynomial, literal
from .linalg import Matrix, form_value, inverse
from .group import Group
from .algebra import Algebra, AlgebraElement, _letters


class InconsistentGLCError(Exception):
    """A redundant ground level equation failed to vanish (implementation bug trap)."""


class KappaEigenvaluePresentError(Exception):
    """eta0_form needs E_kappa(g) = 0 so that kappa - g is invertible."""


class TraceValue:
    """Linear combination of the free trace parameters with EtaPolynomial
    coefficients."""

    __slots__ = ("nparams", "coeffs")

    def __init__(self, nparams: int, coeffs=None):
        self.nparams = nparams
        self.coeffs = {i: c for i, c in (coeffs or {}).items() if not c.is_zero()}

    @staticmethod
    def zero(nparams: int) -> "TraceValue":
        return TraceValue(nparams)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TraceValue") -> "TraceValue":
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            cur = out.get(i)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(i, None)
            else:
                out[i] = s
        return TraceValue(self.nparams, out)

    def __sub__(self, other: "TraceValue") -> "TraceValue":
        return self + other.scaled(-1)

    def scaled(self, c) -> "TraceValue":
        if isinstance(c, EtaPolynomial):
            return TraceValue(self.nparams, {i: p * c for i, p in self.coeffs.items()})
        return TraceValue(self.nparams, {i: p.scaled(c) if isinstance(c, Cyclotomic)
                                         else p * Fraction(c)
                          for i, p in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, TraceValue):
            return NotImplemented
        return self.nparams == other.nparams and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nparams, tuple(sorted((i, hash(c)) for i, c in self.coeffs.items()))))

    def substitute(self, assignment: list[Fraction]) -> EtaPolynomial:
        """Collapse the free parameters to rationals, leaving eta symbolic."""
        if len(assignment) != self.nparams:
            raise ValueError("assignment arity mismatch")
        acc = None
        for i, p in self.coeffs.items():
            term = p * Fraction(assignment[i])
            acc = term if acc is None else acc + term
        if acc is None:
            raise ValueError("cannot substitute into the zero value without arity info")
        return acc

    def substitute_or_zero(self, assignment, nvars: int, m: int) -> EtaPolynomial:
        if self.is_zero():
            return EtaPolynomial.zero(nvars, m)
        return self.substitute(assignment)

    def __repr__(self):
        if self.is_zero():
            return "TraceValue(0)"
        bits = [f"({c!r})*P{i}" for i, c in sorted(self.coeffs.items())]
        return "TraceValue(" + " + ".join(bits) + ")"


class TraceFunctional:
    """A kappa-trace presented as class -> TraceValue over one free parameter
    per E = 0 conjugacy class."""

    def __init__(self, algebra: Algebra, kappa: int, free_classes, table, e_of_class):
        self.algebra = algebra
        self.group: Group = algebra.group
        self.kappa = kappa
        self.free_classes = tuple(free_classes)
        self.table = table                  # class index -> TraceValue
        self.e_of_class = e_of_class        # class index -> E
        self.nparams = len(self.free_classes)
        self._evaluators: dict = {}

    def class_value(self, class_index: int) -> TraceValue:
        return self.table[class_index]

    def element_value(self, g_key) -> TraceValue:
        return self.table[self.group.class_of[g_key]]

    def evaluate(self, f: AlgebraElement, regular_strategy: str = "first",
                 pair_strategy: str = "first") -> TraceValue:
        ev = self._evaluators.get((regular_strategy, pair_strategy))
        if ev is None:
            ev = _Evaluator(self, regular_strategy, pair_strategy)
            self._evaluators[(regular_strategy, pair_strategy)] = ev
        return ev.element_value(f)

    def to_dict(self) -> dict:
        g = self.group
        return {
            "group": g.name,
            "kappa": self.kappa,
            "cyclotomic_order": g.exponent,
            "n_eta": g.n_eta,
            "free_classes": [f"C{i}" for i in self.free_classes],
            "classes": [
                {
                    "label": f"C{i}",
                    "size": len(g.classes[i]),
                    "rep_order": g.elements[g.class_rep[i]].order,
                    "E": self.e_of_class[i],
                    "value": _trace_value_json(self.table[i]),
                }
                for i in range(len(g.classes))
            ],
        }


def solve_glc(algebra: Algebra, kappa: int, verify: bool = True,
              verify_elements: bool = True) -> TraceFunctional:
    """Solve the ground level conditions for the kappa-trace on C[G].

    E = 0 classes become free parameters; higher classes are filled in
    increasing E by the Darboux-pair recursion.  With verify=True every
    remaining ground level equation is checked to vanish identically (over
    all elements, or class representatives only when verify_elements=False).
    """
    if kappa not in (+1, -1):
        raise ValueError("kappa must be +1 or -1")
    group = algebra.group
    n_classes = len(group.classes)
    e_of_class = {i: group.e_grading(group.class_rep[i], kappa)[0] for i in range(n_classes)}
    free_classes = [i for i in range(n_classes) if e_of_class[i] == 0]
    nparams = len(free_classes)
    table: dict[int, TraceValue] = {}
    for pi, ci in enumerate(free_classes):
        table[ci] = TraceValue(nparams, {pi: algebra.one_poly})
    order = sorted((i for i in range(n_classes) if e_of_class[i] > 0),
                   key=lambda i: (e_of_class[i], i))
    t_inv = algebra.t.inverse()
    for ci in order:
        rep = group.class_rep[ci]
        basis = group.darboux_of_eigenspace(rep, kappa)
        c1, c2 = basis[0], basis[1]
        w12 = form_value(group.omega, c1, c2)
        acc = TraceValue.zero(nparams)
        for rkey in group.reflections:
            w = group.omega_r(rkey, c1, c2)
            if w.is_zero():
                continue
            rg = group.mul(rkey, rep)
            sub = table.get(group.class_of[rg])
            assert sub is not None, "ground level recursion hit an unprocessed class"
            acc = acc + sub.scaled(algebra.eta_poly(group.eta_var_of(rkey)).scaled(w))
        table[ci] = acc.scaled(-(w12.inverse() * t_inv))
    functional = TraceFunctional(algebra, kappa, free_classes, table, e_of_class)
    if verify:
        verify_glc(functional, all_elements=verify_elements)
    return functional


def verify_glc(functional: TraceFunctional, all_elements: bool = True):
    """Check every ground level equation sp([c_i, c_j] g) = 0 identically.

    Raises InconsistentGLCError with the offending (group, g, kappa) data;
    per Theorem-level uniqueness a failure can only mean an implementation
    bug upstream.
    """
    group = functional.group
    algebra = functional.algebra
    kappa = functional.kappa
    keys = group.sorted_keys() if all_elements else list(group.class_rep)
    for key in keys:
        e_val, _ = group.e_grading(key, kappa)
        if e_val == 0:
            continue
        basis = group.darboux_of_eigenspace(key, kappa)
        spg = functional.element_value(key)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                wij = form_value(group.omega, basis[i], basis[j])
                residual = spg.scaled(algebra.t * wij)
                for rkey in group.reflections:
                    w = group.omega_r(rkey, basis[i], basis[j])
                    if w.is_zero():
                        continue
                    rg = group.mul(rkey, key)
                    residual = residual + functional.element_value(rg).scaled(
                        algebra.eta_poly(group.eta_var_of(rkey)).scaled(w))
                if not residual.is_zero():
                    raise InconsistentGLCError(
                        f"group {group.name}, kappa {kappa}: residual GLC for element "
                        f"of order {group.elements[key].order} (pair {i},{j})")


class _Evaluator:
    """Reduction engine for one functional and one pair of step strategies."""

    def __init__(self, functional: TraceFunctional, regular_strategy: str,
                 pair_strategy: str):
        if regular_strategy not in ("first", "last"):
            raise ValueError("regular_strategy must be 'first' or 'last'")
        if pair_strategy not in ("first", "last"):
            raise ValueError("pair_strategy must be 'first' or 'last'")
        self.fn = functional
        self.alg = functional.algebra
        self.group = functional.group
        self.kappa = functional.kappa
        self.kappa_scalar = Cyclotomic.from_rational(functional.kappa, self.alg.m)
        self.regular_strategy = regular_strategy
        self.pair_strategy = pair_strategy
        self.zero = TraceValue.zero(functional.nparams)
        self._mono: dict = {}
        self._bword: dict = {}
        self._vecs: dict = {}
        self._refl_vec: dict = {}
        self._front_factor: dict = {}

    # -- public -------------------------------------------------------------

    def element_value(self, f: AlgebraElement) -> TraceValue:
        if f.algebra.group is not self.group:
            raise ValueError("element from a different group's algebra")
        acc = self.zero
        for gk, poly in f.terms.items():
            for exp, coeff in poly.items():
                val = self.mono(gk, exp)
                if not val.is_zero():
                    acc = acc + val.scaled(coeff)
        return acc

    # -- monomials in the standard generators --------------------------------

    def mono(self, g_key, exp) -> TraceValue:
        got = self._mono.get((g_key, exp))
        if got is None:
            if sum(exp) % 2 == 1:
                got = self.zero          # every nonzero kappa-trace is even
            elif sum(exp) == 0:
                got = self.fn.element_value(g_key)
            else:
                chart = self.alg.chart(g_key)
                n = self.group.dim
                std = [tuple(Cyclotomic.one(self.alg.m) if i == j else Cyclotomic.zero(self.alg.m)
                             for i in range(n)) for j in range(n)]
                coords = [chart.coords(std[i]) for i in _letters(exp)]
                got = self._expand(g_key, coords)
            self._mono[(g_key, exp)] = got
        return got

    def vectors(self, g_key, vecs: tuple) -> TraceValue:
        """Trace of a word of arbitrary vector letters times g."""
        got = self._vecs.get((g_key, vecs))
        if got is None:
            chart = self.alg.chart(g_key)
            coords = [chart.coords(v) for v in vecs]
            got = self._expand(g_key, coords)
            self._vecs[(g_key, vecs)] = got
        return got

    def _expand(self, g_key, coords_list) -> TraceValue:
        """Expand sparse per-letter chart coordinates into eigen-words."""
        words = {(): Cyclotomic.one(self.alg.m)}
        for col in coords_list:
            nxt: dict = {}
            for w, c in words.items():
                for i, ci in col:
                    w2 = w + (i,)
                    p = c * ci
                    cur = nxt.get(w2)
                    s = p if cur is None else cur + p
                    if s.is_zero():
                        nxt.pop(w2, None)
                    else:
                        nxt[w2] = s
            words = nxt
        acc = self.zero
        for w, c in words.items():
            val = self.bword(g_key, w)
            if not val.is_zero():
                acc = acc + val.scaled(c)
        return acc

    # -- eigen-words ----------------------------------------------------------

    def bword(self, g_key, word: tuple[int, ...]) -> TraceValue:
        got = self._bword.get((g_key, word))
        if got is not None:
            return got
        k = len(word)
        if k == 0:
            got = self.fn.element_value(g_key)
        elif k % 2 == 1:
            got = self.zero
        else:
            chart = self.alg.chart(g_key)
            regular = [s for s, letter in enumerate(word)
                       if chart.lams[letter] != self.kappa_scalar]
            if regular:
                got = self._regular_step(g_key, word, regular)
            else:
                got = self._special_step(g_key, word)
        self._bword[(g_key, word)] = got
        return got

    def _regular_step(self, g_key, word, regular_positions) -> TraceValue:
        """Move the chosen regular letter to the front, then apply the
        degree-lowering cyclic identity."""
        s = regular_positions[0] if self.regular_strategy == "first" else regular_positions[-1]
        L = word[s]
        rest = word[:s] + word[s + 1:]
        acc = self._front(g_key, L, rest)
        for j in range(s):
            acc = acc + self._comm(g_key, word[:j], word[j], L,
                                   word[j + 1:s] + word[s + 1:])
        return acc

    def _front(self, g_key, L, rest) -> TraceValue:
        """sp(b_L rest g) for lambda_L != kappa via
        sp = kappa lambda / (1 - kappa lambda) * sp([rest, b_L] g)."""
        chart = self.alg.chart(g_key)
        lam = chart.lams[L]
        factor = self._front_factor.get((g_key, L))
        if factor is None:
            kl = self.kappa_scalar * lam
            denom = Cyclotomic.one(self.alg.m) - kl
            assert not denom.is_zero()
            factor = kl * denom.inverse()
            self._front_factor[(g_key, L)] = factor
        acc = self.zero
        for j in range(len(rest)):
            acc = acc + self._comm(g_key, rest[:j], rest[j], L, rest[j + 1:])
        return acc.scaled(factor)

    def _comm(self, g_key, prefix, x, y, suffix) -> TraceValue:
        """sp(prefix [b_x, b_y] suffix g) with the full commutator
        [b_x, b_y] = t C_xy + sum_R eta_R omega_R(b_x, b_y) R."""
        chart = self.alg.chart(g_key)
        acc = self.zero
        scal = self.alg.t * chart.gram[x][y]
        if not scal.is_zero():
            acc = acc + self.bword(g_key, prefix + suffix).scaled(scal)
        return acc + self._refl_part(g_key, prefix, x, y, suffix)

    def _refl_part(self, g_key, prefix, x, y, suffix) -> TraceValue:
        """The reflection terms of [b_x, b_y] (equivalently of f_xy) pushed
        through the suffix onto g; each contributing R g drops E by one."""
        frame = self.alg.chart_frame(g_key)
        entries = frame.refl.get((x, y))
        if not entries:
            return self.zero
        chart = self.alg.chart(g_key)
        acc = self.zero
        for rkey, w in entries:
            rg = self.group.mul(rkey, g_key)
            vecs = tuple(chart.vectors[p] for p in prefix) + \
                tuple(self._transformed(rkey, chart.vectors[sfx]) for sfx in suffix)
            val = self.vectors(rg, vecs)
            if not val.is_zero():
                acc = acc + val.scaled(
                    self.alg.eta_poly(self.group.eta_var_of(rkey)).scaled(w))
        return acc

    def _transformed(self, rkey, vec):
        got = self._refl_vec.get((rkey, vec))
        if got is None:
            got = self.group.elements[rkey].matrix.matvec(vec)
            self._refl_vec[(rkey, vec)] = got
        return got

    def _special_step(self, g_key, word) -> TraceValue:
        """All letters lie in Ker(g - kappa): reorder onto the chosen Darboux
        pair and trade the monomial for insertions that lower E."""
        chart = self.alg.chart(g_key)
        pairs = chart.kappa_pairs[self.kappa]
        present = [pq for pq in pairs if pq[0] in word or pq[1] in word]
        assert present, "special word without a Darboux pair"
        I, J = present[0] if self.pair_strategy == "first" else present[-1]
        p = word.count(I)
        q = word.count(J)
        others = tuple(l for l in word if l != I and l != J)
        target = (I,) * p + (J,) * q + others

        acc = self.zero
        cur = list(word)
        for pos in range(len(target)):
            idx = cur.index(target[pos], pos)
            while idx > pos:
                x, y = cur[idx - 1], cur[idx]
                acc = acc + self._comm(g_key, tuple(cur[:idx - 1]), x, y,
                                       tuple(cur[idx + 1:]))
                cur[idx - 1], cur[idx] = y, x
                idx -= 1

        ssum = self.zero
        for tp in range(p + 1):
            ssum = ssum + self._refl_part(
                g_key, (I,) * tp, I, J, (I,) * (p - tp) + (J,) * q + others)
        for s in range(len(others)):
            ssum = ssum + self._refl_part(
                g_key, (I,) * (p + 1) + (J,) * q + others[:s], others[s], J,
                others[s + 1:])
        scale = -(Cyclotomic.from_rational(Fraction(1, p + 1), self.alg.m)
                  * self.alg.t.inverse())
        return acc + ssum.scaled(scale)


# -- eta = 0 closed form ------------------------------------------------------


def eta0_form(group: Group, g_key, kappa: int) -> Matrix:
    """The symmetric form w~ of the undeformed skew product:
    w~_ij = omega_ki ((kappa + g)/(kappa - g))^k_j, defined when E_kappa(g) = 0."""
    if group.e_grading(g_key, kappa)[0] != 0:
        raise KappaEigenvaluePresentError(
            f"element has eigenvalue {kappa}; the form is undefined")
    m = group.exponent
    g = group.elements[g_key].matrix
    kap = Matrix.identity(group.dim, m).scaled(Cyclotomic.from_rational(kappa, m))
    ratio = inverse(kap - g) * (kap + g)
    tilde = group.omega.transpose() * ratio
    assert tilde == tilde.transpose(), "eta0 form failed to be symmetric"
    return tilde


def eta0_trace(group: Group, exp: tuple[int, ...], g_key, kappa: int,
               sp_g: Fraction = Fraction(1)) -> Cyclotomic:
    """kappa-trace of the symmetrized monomial of content `exp` times g in the
    undeformed algebra, as a multiple of sp(g).

    The symmetrized monomial is the sum over all distinct letter orderings
    (see symmetrized_monomial).  The value is |exp|! times the mu^exp
    coefficient of exp(-1/4 mu^i mu^j w~_ij) sp(g): the exponent carries an
    extra 1/2 relative to the skew-product generating-function display
    because the commutator source term is linear in the integration variable,
    which halves the quadratic form on integrating; the hand-computed
    deg-2 traces and the step-reduction route both confirm the 1/4.  Zero
    when E_kappa(g) != 0 or the degree is odd.
    """
    m = group.exponent
    zero = Cyclotomic.zero(m)
    deg = sum(exp)
    if deg % 2 == 1:
        return zero
    if group.e_grading(g_key, kappa)[0] != 0:
        return zero
    if deg == 0:
        return Cyclotomic.from_rational(sp_g, m)
    tilde = eta0_form(group, g_key, kappa)
    n = group.dim
    half = Cyclotomic.from_rational(Fraction(-1, 2), m)
    quarter = Cyclotomic.from_rational(Fraction(-1, 4), m)
    quad: dict[tuple[int, ...], Cyclotomic] = {}
    for i in range(n):
        for j in range(i, n):
            c = tilde[i, j]
            if c.is_zero():
                continue
            e = [0] * n
            e[i] += 1
            e[j] += 1
            quad[tuple(e)] = (quarter * c) if i == j else (half * c)

    # truncated exp(Q): sum Q^k / k!, degrees capped at deg
    series = {(0,) * n: Cyclotomic.one(m)}
    power = {(0,) * n: Cyclotomic.one(m)}
    for k in range(1, deg // 2 + 1):
        nxt: dict = {}
        for e1, c1 in power.items():
            if sum(e1) + 2 > deg:
                continue
            for e2, c2 in quad.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if sum(e) > deg:
                    continue
                prod = c1 * c2
                cur = nxt.get(e)
                s = prod if cur is None else cur + prod
                if s.is_zero():
                    nxt.pop(e, None)
                else:
                    nxt[e] = s
        power = nxt
        inv_fact = Cyclotomic.from_rational(Fraction(1, factorial(k)), m)
        for e, c in power.items():
            add = c * inv_fact
            cur = series.get(e)
            s = add if cur is None else cur + add
            if s.is_zero():
                series.pop(e, None)
            else:
                series[e] = s

    coeff = series.get(tuple(exp), zero)
    return coeff * Cyclotomic.from_rational(sp_g * factorial(deg), m)


def symmetrized_monomial(algebra: Algebra, exp: tuple[int, ...]) -> AlgebraElement:
    """Sum of all distinct letter orderings of the monomial with content
    `exp` (so deg-2 cross terms look like a_1 a_2 + a_2 a_1)."""
    from itertools import permutations

    base = _letters(exp)
    words = sorted(set(permutations(base)))
    cache: dict[tuple, AlgebraElement] = {(): algebra.one()}

    def product_of(word):
        got = cache.get(word)
        if got is None:
            got = product_of(word[:-1]) * algebra.generator(word[-1])
            cache[word] = got
        return got

    acc = algebra.zero()
    for w in words:
        acc = acc + product_of(w)
    return acc


# -- Gram matrices of the bilinear form B_sp ---------------------------------


@dataclass
class GramReport:
    group_name: str
    kappa: int
    cyclotomic_order: int
    degree: int
    assignment: list[Fraction]
    basis: list[tuple[tuple[int, ...], int]]   # (exponent, class index of rep)
    matrix: list[list[EtaPolynomial]]
    determinant: EtaPolynomial | None
    rational_roots: list[Fraction] | None

    def to_dict(self) -> dict:
        return {
            "group": self.group_name,
            "kappa": self.kappa,
            "cyclotomic_order": self.cyclotomic_order,
            "degree": self.degree,
            "assignment": [str(a) for a in self.assignment],
            "basis": [{"exponent": list(e), "class": f"C{ci}"} for e, ci in self.basis],
            "matrix": [[_eta_poly_json(x) for x in row] for row in self.matrix],
            "determinant": None if self.determinant is None else _eta_poly_json(self.determinant),
            "rational_roots": None if self.rational_roots is None
            else [str(r) for r in self.rational_roots],
        }


def monomials_of_degree(n: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors with n slots and total degree d, lex order."""
    if n == 1:
        return [(d,)]
    out = []
    for v in range(d + 1):
        out.extend((v,) + rest for rest in monomials_of_degree(n - 1, d - v))
    return sorted(out)


def even_monomials(n: int, max_degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of even total degree <= max_degree, grlex order."""
    out = []
    for d in range(0, max_degree + 1, 2):
        out.extend(monomials_of_degree(n, d))
    return out


def _poly_det_interpolated(rows: list[list[EtaPolynomial]], m: int) -> EtaPolynomial:
    """Univariate determinant by exact evaluation at rational nodes followed
    by Newton interpolation (much faster than polynomial Bareiss once the
    minor degrees grow)."""
    from .linalg import det as cyc_det

    n = len(rows)
    bound = sum(max((x.degree() for x in row if not x.is_zero()), default=0)
                for row in rows)
    nodes = []
    k = 0
    while len(nodes) < bound + 1:
        nodes.append(Fraction(k))
        if k > 0 and len(nodes) < bound + 1:
            nodes.append(Fraction(-k))
        k += 1
    values = []
    for x in nodes:
        mat = Matrix(n, n, [rows[i][j].evaluate([x]) for i in range(n) for j in range(n)])
        values.append(cyc_det(mat))
    # Newton divided differences over Q(zeta_m)
    coefs = list(values)
    for level in range(1, len(nodes)):
        for i in range(len(nodes) - 1, level - 1, -1):
            denom = Cyclotomic.from_rational(nodes[i] - nodes[i - level], m)
            coefs[i] = (coefs[i] - coefs[i - 1]) * denom.inverse()
    eta = EtaPolynomial.variable(0, 1, m)
    out = EtaPolynomial.zero(1, m)
    basis = EtaPolynomial.constant(1, 1, m)
    for i, c in enumerate(coefs):
        out = out + basis.scaled(c)
        if i + 1 < len(coefs):
            basis = basis * (eta - EtaPolynomial.constant(nodes[i], 1, m))
    return out


def _poly_det(rows: list[list[EtaPolynomial]], nvars: int, m: int) -> EtaPolynomial:
    """Fraction-free determinant over the eta-polynomial ring."""
    n = len(rows)
    if n == 0:
        return EtaPolynomial.constant(1, nvars, m)
    if nvars == 1 and n > 4:
        return _poly_det_interpolated(rows, m)
    a = [list(r) for r in rows]
    sign = 1
    prev = EtaPolynomial.constant(1, nvars, m)
    for c in range(n):
        sel = None
        for i in range(c, n):
            if not a[i][c].is_zero():
                sel = i
                break
        if sel is None:
            return EtaPolynomial.zero(nvars, m)
        if sel != c:
            a[c], a[sel] = a[sel], a[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * a[c][c] - a[c][j] * a[i][c]).exact_divide(prev)
            a[i][c] = EtaPolynomial.zero(nvars, m)
        prev = a[c][c]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def gram(functional: TraceFunctional, degree: int,
         assignment: list[Fraction] | None = None,
         compute_determinant: bool = True) -> GramReport:
    """Gram matrix of B_sp(f, h) = sp(f h) over even monomials of degree <=
    `degree` paired with every class representative.

    The determinant is taken after substituting the free-parameter assignment
    (default: first parameter 1, the rest 0); rational roots are reported in
    the univariate case.
    """
    if degree < 0:
        raise ValueError("degree cutoff must be >= 0")
    algebra = functional.algebra
    group = functional.group
    if assignment is None:
        assignment = [Fraction(1 if i == 0 else 0) for i in range(functional.nparams)]
    assignment = [Fraction(a) for a in assignment]
    if len(assignment) != functional.nparams:
        raise ValueError("free-parameter assignment arity mismatch")
    monos = even_monomials(group.dim, degree)
    basis = [(e, ci) for e in monos for ci in range(len(group.classes))]
    elements = []
    for e, ci in basis:
        el = algebra.group_element(group.class_rep[ci])
        for i in _letters(e):
            el = algebra.generator(i) * el
        elements.append(el)
    nvars, m = group.n_eta, group.exponent
    mat = []
    for fa in elements:
        row = []
        for fb in elements:
            val = functional.evaluate(fa * fb)
            row.append(val.substitute_or_zero(assignment, nvars, m))
        mat.append(row)
    determinant = _poly_det(mat, nvars, m) if compute_determinant else None
    roots = None
    if determinant is not None and nvars == 1 and not determinant.is_zero():
        try:
            roots = determinant.rational_roots()
        except ValueError:
            roots = None
    return GramReport(group.name, functional.kappa, m, degree, assignment,
                      basis, mat, determinant, roots)


# -- serialization -------------------------------------------------------------


def _cyc_json(c: Cyclotomic):
    return {"num": list(c.num), "den": c.den, "literal": literal(c)}


def _eta_poly_json(p: EtaPolynomial):
    return [{"exponent": list(e), "coeff": _cyc_json(c)} for e, c in p.sorted_terms()]


def _trace_value_json(v: TraceValue):
    return {f"P{i}": _eta_poly_json(c) for i, c in sorted(v.coeffs.items())}


def format_trace_value(tv: TraceValue) -> str:
    """Human rendering like '(1/2 - 1/2*eta0^2)*P0'."""
    if tv.is_zero():
        return "0"
    from .expr import _eta_poly_expr
    bits = []
    for i, c in sorted(tv.coeffs.items()):
        s, needs = _eta_poly_expr(c)
        if s == "1":
            bits.append(f"P{i}")
        elif s == "-1":
            bits.append(f"-P{i}")
        else:
            bits.append(f"({s})*P{i}" if needs else f"{s}*P{i}")
    return " + ".join(bits)


def functional_to_json(functional: TraceFunctional, indent: int | None = 2) -> str:
    return json.dumps(functional.to_dict(), indent=indent, sort_keys=True)


def gram_to_json(report: GramReport, indent: int | None = 2) -> str:
    return json.dumps(report.to_dict(), indent=indent, sort_keys=True)
