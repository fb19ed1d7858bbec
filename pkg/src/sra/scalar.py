"""Exact scalar arithmetic: rationals, the cyclotomic field Q(zeta_m), and
multivariate polynomials in the deformation parameters over cyclotomics.

Rationals are ``fractions.Fraction``.  A :class:`Cyclotomic` is stored in the
canonical power basis 1, zeta, ..., zeta^(phi(m)-1) of Q(zeta_m) as an integer
coefficient vector with a single positive denominator, fully reduced modulo
the m-th cyclotomic polynomial.  Two values are equal iff their canonical
representations coincide, which makes cyclotomics usable as dict keys and as
deterministic sort keys.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _divisors(m: int) -> list[int]:
    divs = [d for d in range(1, m + 1) if m % d == 0]
    return divs


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    dd = len(den) - 1
    while den[dd] == 0:
        dd -= 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1 - dd, -1, -1):
        c = num[i + dd]
        if c % den[dd] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[dd]
        out[i] = q
        if q:
            for j in range(dd + 1):
                num[i + j] -= q * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, ascending, monic."""
    if m < 1:
        raise ValueError("order must be >= 1")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class _CycContext:
    """Per-order tables: Phi_m, reduction rows for x^j with j >= phi, and the
    canonical coordinates of every power zeta^k."""

    def __init__(self, m: int):
        self.m = m
        self.phi_poly = cyclotomic_polynomial(m)
        self.deg = len(self.phi_poly) - 1
        # x^j mod Phi_m for j >= deg, as integer rows of length deg
        self._top = [-c for c in self.phi_poly[: self.deg]]
        self.reduce_rows = [list(self._top)]
        # zeta^k for k in [0, m)
        powers = []
        cur = [0] * self.deg
        cur[0] = 1
        for _ in range(m):
            powers.append(tuple(cur))
            cur = self._times_x(cur)
        self.powers = powers
        self.power_index = {p: k for k, p in enumerate(powers)}
        self._inverse_cache: dict[tuple, "Cyclotomic"] = {}

    def _times_x(self, vec: list[int]) -> list[int]:
        """Multiply a reduced coefficient vector by x, then reduce."""
        out = [0] + vec[:-1]
        lead = vec[-1]
        if lead:
            for i in range(self.deg):
                out[i] += lead * self._top[i]
        return out

    def _row(self, j: int) -> list[int]:
        """Coefficients of x^j mod Phi_m for j >= deg."""
        rows = self.reduce_rows
        while len(rows) <= j - self.deg:
            rows.append(self._times_x(rows[-1]))
        return rows[j - self.deg]

    def reduce(self, coeffs: list[int]) -> tuple[int, ...]:
        """Reduce an integer coefficient vector of any length mod Phi_m."""
        deg = self.deg
        out = list(coeffs[:deg]) + [0] * max(0, deg - len(coeffs))
        for j in range(len(coeffs) - 1, deg - 1, -1):
            c = coeffs[j]
            if c:
                row = self._row(j)
                for i in range(deg):
                    out[i] += c * row[i]
        return tuple(out)


@lru_cache(maxsize=None)
def _context(m: int) -> _CycContext:
    return _CycContext(m)


def _normalize(m: int, num: list[int] | tuple[int, ...], den: int):
    if den < 0:
        den = -den
        num = [-c for c in num]
    g = den
    for c in num:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class Cyclotomic:
    """Element of Q(zeta_m) in canonical reduced form."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m: int, num: tuple[int, ...], den: int = 1, _canonical=False):
        if _canonical:
            self.m, self.num, self.den = m, num, den
            return
        ctx = _context(m)
        red = ctx.reduce(list(num))
        self.num, self.den = _normalize(m, red, den)
        self.m = m

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(q, m: int = 1) -> "Cyclotomic":
        q = Fraction(q)
        ctx = _context(m)
        num = [0] * ctx.deg
        num[0] = q.numerator
        num, den = _normalize(m, num, q.denominator)
        return Cyclotomic(m, num, den, _canonical=True)

    @staticmethod
    def zero(m: int = 1) -> "Cyclotomic":
        return Cyclotomic.from_rational(0, m)

    @staticmethod
    def one(m: int = 1) -> "Cyclotomic":
        return Cyclotomic.from_rational(1, m)

    @staticmethod
    def root_of_unity(m: int, k: int = 1) -> "Cyclotomic":
        """zeta_m^k, canonical."""
        ctx = _context(m)
        return Cyclotomic(m, ctx.powers[k % m], 1, _canonical=True)

    # -- predicates & conversions -----------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def root_exponent(self) -> int | None:
        """k with self == zeta_m^k, or None if self is not a root of unity."""
        if self.den != 1:
            return None
        return _context(self.m).power_index.get(self.num)

    def key(self):
        """Deterministic sort/hash key."""
        return (self.num, self.den)

    def embed(self, big_m: int) -> "Cyclotomic":
        """Re-embed into Q(zeta_M) for m | M via zeta_m = zeta_M^(M/m)."""
        if big_m == self.m:
            return self
        if big_m % self.m != 0:
            raise ValueError(f"cannot embed order {self.m} into order {big_m}")
        step = big_m // self.m
        big = _context(big_m)
        acc = [0] * big.deg
        for j, c in enumerate(self.num):
            if c:
                row = big.powers[(j * step) % big_m]
                for i in range(big.deg):
                    acc[i] += c * row[i]
        num, den = _normalize(big_m, acc, self.den)
        return Cyclotomic(big_m, num, den, _canonical=True)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.m != self.m:
                raise ValueError("mixed cyclotomic orders; embed first")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(other, self.m)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self, other
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        n, d = _normalize(self.m, num, a.den * b.den)
        return Cyclotomic(self.m, n, d, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, tuple(-c for c in self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self, other
        if a.is_rational():
            if a.num[0] == 0:
                return Cyclotomic.zero(self.m)
            num = [a.num[0] * c for c in b.num]
            n, d = _normalize(self.m, num, a.den * b.den)
            return Cyclotomic(self.m, n, d, _canonical=True)
        if b.is_rational():
            return b * a
        deg = len(a.num)
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        red = _context(self.m).reduce(conv)
        n, d = _normalize(self.m, red, a.den * b.den)
        return Cyclotomic(self.m, n, d, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.is_rational():
            q = 1 / self.as_rational()
            return Cyclotomic.from_rational(q, self.m)
        ctx = _context(self.m)
        cached = ctx._inverse_cache.get((self.num, self.den))
        if cached is not None:
            return cached
        # extended Euclid in Q[x] against Phi_m (irreducible over Q)

        def deg_of(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        def poly_sub(p, q):
            n = max(len(p), len(q))
            p = p + [Fraction(0)] * (n - len(p))
            q = q + [Fraction(0)] * (n - len(q))
            return [a - b for a, b in zip(p, q)]

        def poly_mul(p, q):
            out = [Fraction(0)] * (len(p) + len(q) - 1)
            for i, a in enumerate(p):
                if a:
                    for j, b in enumerate(q):
                        if b:
                            out[i + j] += a * b
            return out

        def poly_divmod(p, q):
            dq = deg_of(q)
            rem = list(p)
            quo = [Fraction(0)] * max(1, len(p) - dq)
            while deg_of(rem) >= dq:
                dr = deg_of(rem)
                c = rem[dr] / q[dq]
                quo[dr - dq] = c
                for j in range(dq + 1):
                    rem[dr - dq + j] -= c * q[j]
            return quo, rem

        r0 = [Fraction(c, self.den) for c in self.num]
        r1 = [Fraction(c) for c in ctx.phi_poly]
        s0, s1 = [Fraction(1)], [Fraction(0)]
        while deg_of(r1) >= 0:
            quo, rem = poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
        if deg_of(r0) != 0:
            raise ZeroDivisionError("noninvertible cyclotomic (unexpected)")
        lead = r0[deg_of(r0)]
        inv_poly = [c / lead for c in s0]
        den = 1
        for c in inv_poly:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in inv_poly]
        red = ctx.reduce(ints)
        n, dd = _normalize(self.m, red, den)
        out = Cyclotomic(self.m, n, dd, _canonical=True)
        assert (self * out) == Cyclotomic.one(self.m)
        if len(ctx._inverse_cache) < 4096:
            ctx._inverse_cache[(self.num, self.den)] = out
        return out

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.one(self.m)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, Cyclotomic) else other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.m == other.m and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.m, self.num, self.den))

    def __repr__(self):
        return f"Cyclotomic({self.m}, {literal(self)!r})"


def cyc_normalize(power_coeffs: dict[int, Fraction] | list, m: int) -> Cyclotomic:
    """Canonical representative of a power sum sum_k c_k zeta^k modulo Phi_m.

    Exponents are first folded with zeta^m = 1, then the result is reduced
    modulo the m-th cyclotomic polynomial.
    """
    if isinstance(power_coeffs, dict):
        items = power_coeffs.items()
    else:
        items = enumerate(power_coeffs)
    acc = Cyclotomic.zero(m)
    for k, c in items:
        term = Cyclotomic.from_rational(Fraction(c), m) * Cyclotomic.root_of_unity(m, k)
        acc = acc + term
    return acc


def cyc_inverse(x: Cyclotomic) -> Cyclotomic:
    return x.inverse()


# -- cyclotomic literals ---------------------------------------------------
#
# Grammar: rat | rat '*z^' int | sums/differences thereof, e.g. "1/2 + 1/2*z^3".
# `z` denotes zeta_m with m fixed by the enclosing file or session.


def literal(x: Cyclotomic) -> str:
    """Render in the literal grammar; parse_literal round-trips exactly."""
    parts = []
    for j, c in enumerate(x.num):
        if c == 0:
            continue
        q = Fraction(c, x.den)
        parts.append((j, q))
    if not parts:
        return "0"
    out = []
    for idx, (j, q) in enumerate(parts):
        mag = abs(q)
        s = str(mag) if j == 0 else (f"{mag}*z^{j}" if mag != 1 else f"1*z^{j}")
        if idx == 0:
            out.append(s if q > 0 else "-" + s)
        else:
            out.append(("+ " if q > 0 else "- ") + s)
    return " ".join(out)


def parse_literal(text: str, m: int) -> Cyclotomic:
    """Parse the cyclotomic literal grammar; inverse of :func:`literal`."""
    s = text.strip()
    if not s:
        raise ValueError("empty cyclotomic literal")
    pos = 0
    acc = Cyclotomic.zero(m)
    sign = 1
    first = True

    def skip_ws(p):
        while p < len(s) and s[p].isspace():
            p += 1
        return p

    while True:
        pos = skip_ws(pos)
        if pos >= len(s):
            if first:
                raise ValueError(f"bad cyclotomic literal {text!r}")
            break
        if s[pos] in "+-":
            sign = 1 if s[pos] == "+" else -1
            pos += 1
            pos = skip_ws(pos)
        elif not first:
            raise ValueError(f"expected '+' or '-' at position {pos} in {text!r}")
        start = pos
        while pos < len(s) and (s[pos].isdigit() or s[pos] == "/"):
            pos += 1
        if start == pos:
            if pos < len(s) and s[pos] == "z":
                q = Fraction(sign)  # bare z^k term, unit coefficient
            else:
                raise ValueError(f"expected rational at position {start + 1} in {text!r}")
        else:
            q = Fraction(s[start:pos]) * sign
        k = 0
        pos = skip_ws(pos)
        saw_star = False
        if pos < len(s) and s[pos] == "*":
            saw_star = True
            pos += 1
            pos = skip_ws(pos)
        if saw_star and (pos >= len(s) or s[pos] != "z"):
            raise ValueError(f"expected 'z' at position {pos + 1} in {text!r}")
        if pos < len(s) and s[pos] == "z":
            pos += 1
            if pos < len(s) and s[pos] == "^":
                pos += 1
                start = pos
                while pos < len(s) and s[pos].isdigit():
                    pos += 1
                if start == pos:
                    raise ValueError(f"expected exponent at position {start + 1} in {text!r}")
                k = int(s[start:pos])
            else:
                k = 1
        acc = acc + Cyclotomic.from_rational(q, m) * Cyclotomic.root_of_unity(m, k)
        sign = 1
        first = False
    return acc


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division plus Pollard rho."""
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d < 100_000:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += steps[i]
        i = (i + 1) % 8

    def is_probable_prime(k):
        if k < 2:
            return False
        for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
            if k % a == 0:
                return k == a
        r, s = k - 1, 0
        while r % 2 == 0:
            r //= 2
            s += 1
        for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
            x = pow(a, r, k)
            if x in (1, k - 1):
                continue
            for _ in range(s - 1):
                x = x * x % k
                if x == k - 1:
                    break
            else:
                return False
        return True

    def rho(k):
        if k % 2 == 0:
            return 2
        c = 1
        while True:
            x = y = 2
            d = 1
            while d == 1:
                x = (x * x + c) % k
                y = (y * y + c) % k
                y = (y * y + c) % k
                d = gcd(abs(x - y), k)
            if d != k:
                return d
            c += 1

    stack = [n] if n > 1 else []
    while stack:
        k = stack.pop()
        if k == 1:
            continue
        if is_probable_prime(k):
            out[k] = out.get(k, 0) + 1
            continue
        f = rho(k)
        stack.extend([f, k // f])
    return out


def _divisors_of(n: int) -> list[int]:
    """All positive divisors of |n| via its prime factorization."""
    divs = [1]
    for p, e in _factorize(abs(n)).items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


# -- polynomials in the deformation parameters ------------------------------


class EtaPolynomial:
    """Sparse polynomial in the eta variables with Cyclotomic coefficients.

    Terms map exponent vectors (one slot per reflection conjugacy class) to
    nonzero coefficients.  The structural constant t of the algebra enters
    only through degree-0 terms; it is never a polynomial variable.
    """

    __slots__ = ("nvars", "m", "terms")

    def __init__(self, nvars: int, m: int, terms: dict[tuple[int, ...], Cyclotomic] | None = None):
        self.nvars = nvars
        self.m = m
        self.terms = {e: c for e, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def zero(nvars: int, m: int) -> "EtaPolynomial":
        return EtaPolynomial(nvars, m)

    @staticmethod
    def constant(c, nvars: int, m: int) -> "EtaPolynomial":
        if not isinstance(c, Cyclotomic):
            c = Cyclotomic.from_rational(Fraction(c), m)
        elif c.m != m:
            c = c.embed(m)
        return EtaPolynomial(nvars, m, {(0,) * nvars: c})

    @staticmethod
    def variable(i: int, nvars: int, m: int) -> "EtaPolynomial":
        if not 0 <= i < nvars:
            raise IndexError(f"eta variable {i} out of range (arity {nvars})")
        e = [0] * nvars
        e[i] = 1
        return EtaPolynomial(nvars, m, {tuple(e): Cyclotomic.one(m)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _check(self, other: "EtaPolynomial"):
        if self.nvars != other.nvars:
            raise ValueError("eta-polynomial arity mismatch")
        if self.m != other.m:
            raise ValueError("mixed cyclotomic orders in eta-polynomials")

    def _coerce(self, other):
        if isinstance(other, EtaPolynomial):
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return EtaPolynomial.constant(other, self.nvars, self.m)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            cur = terms.get(e)
            s = c if cur is None else cur + c
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
        return EtaPolynomial(self.nvars, self.m, terms)

    __radd__ = __add__

    def __neg__(self):
        return EtaPolynomial(self.nvars, self.m, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], Cyclotomic] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                cur = out.get(e)
                s = p if cur is None else cur + p
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return EtaPolynomial(self.nvars, self.m, out)

    __rmul__ = __mul__

    def scaled(self, c: Cyclotomic) -> "EtaPolynomial":
        if c.is_zero():
            return EtaPolynomial.zero(self.nvars, self.m)
        return EtaPolynomial(self.nvars, self.m, {e: k * c for e, k in self.terms.items()})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self.nvars, self.m, self.terms) == (other.nvars, other.m, other.terms)

    def __hash__(self):
        return hash((self.nvars, self.m, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def evaluate(self, point: list[Fraction]) -> Cyclotomic:
        """Evaluate at a rational point, one value per eta variable."""
        if len(point) != self.nvars:
            raise ValueError("evaluation point arity mismatch")
        vals = [Fraction(p) for p in point]
        acc = Cyclotomic.zero(self.m)
        for e, c in self.terms.items():
            q = Fraction(1)
            for exp, v in zip(e, vals):
                q *= v ** exp
            acc = acc + c * Cyclotomic.from_rational(q, self.m)
        return acc

    def is_univariate(self) -> bool:
        return self.nvars == 1

    def rational_roots(self) -> list[Fraction]:
        """All rational roots, via the rational root theorem on the primitive
        integer form.  Univariate with rational coefficients only."""
        if not self.is_univariate():
            raise ValueError("rational-root extraction needs a univariate polynomial")
        if self.is_zero():
            raise ValueError("zero polynomial has every root")
        coeffs: dict[int, Fraction] = {}
        for e, c in self.terms.items():
            if not c.is_rational():
                raise ValueError("rational-root extraction needs rational coefficients")
            coeffs[e[0]] = c.as_rational()
        deg = max(coeffs)
        low = min(coeffs)
        roots = []
        if low > 0:
            roots.append(Fraction(0))
        shifted = {e - low: q for e, q in coeffs.items()}
        den_lcm = 1
        for q in shifted.values():
            den_lcm = den_lcm * q.denominator // gcd(den_lcm, q.denominator)
        ints = {e: int(q * den_lcm) for e, q in shifted.items()}
        content = 0
        for v in ints.values():
            content = gcd(content, v)
        ints = {e: v // content for e, v in ints.items()}
        a0 = abs(ints.get(0, 0))
        an = abs(ints[deg - low])
        if a0 == 0:
            return sorted(set(roots))
        for p in _divisors_of(a0):
            for q in _divisors_of(an):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    val = sum(Fraction(v) * cand ** e for e, v in ints.items())
                    if val == 0:
                        roots.append(cand)
        return sorted(set(roots))

    def exact_divide(self, other: "EtaPolynomial") -> "EtaPolynomial":
        """Exact polynomial division (raises if the division is not exact)."""
        other = self._coerce(other)
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("eta-polynomial division by zero")
        rem = dict(self.terms)
        out: dict[tuple[int, ...], Cyclotomic] = {}

        def grlex_key(e):
            return (sum(e), e)

        lead_e = max(other.terms, key=grlex_key)
        lead_c_inv = other.terms[lead_e].inverse()
        while rem:
            e = max(rem, key=grlex_key)
            diff = tuple(a - b for a, b in zip(e, lead_e))
            if any(d < 0 for d in diff):
                raise ArithmeticError("non-exact eta-polynomial division")
            q = rem[e] * lead_c_inv
            out[diff] = q
            for e2, c2 in other.terms.items():
                tgt = tuple(a + b for a, b in zip(diff, e2))
                cur = rem.get(tgt, Cyclotomic.zero(self.m))
                s = cur - q * c2
                if s.is_zero():
                    rem.pop(tgt, None)
                else:
                    rem[tgt] = s
        return EtaPolynomial(self.nvars, self.m, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __repr__(self):
        if self.is_zero():
            return "EtaPolynomial(0)"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"eta{i}^{k}" if k > 1 else f"eta{i}"
                            for i, k in enumerate(e) if k)
            cs = literal(c)
            bits.append(f"({cs})*{mono}" if mono else f"({cs})")
        return "EtaPolynomial(" + " + ".join(bits) + ")"
