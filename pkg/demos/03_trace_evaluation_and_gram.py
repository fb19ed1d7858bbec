"""Evaluate kappa-traces of algebra elements and scan bilinear-form Gram
matrices for degeneracies.

Elements are entered in a small expression grammar (a1..a2N are the Weyl
generators, g0, g1, ... the group generators, eta0, ... the deformation
parameters, z the session root of unity).  Trace values come out as exact
polynomials in eta times the free parameters.  The Gram matrix of
B(f, h) = sp(f h) over a degree-filtered basis detects the parameter values
where the form degenerates and two-sided ideals appear.
"""

from fractions import Fraction

from sra import Algebra, cyclic_sp2, gram, parse, print_element, solve_glc
from sra.traces import format_trace_value as _tv_human

algebra = Algebra(cyclic_sp2(2))
group = algebra.group

print("== the deformed oscillator: cyclic_sp2(2) = {1, sigma} ==")
fn = solve_glc(algebra, -1)
for text in ("a2*a1", "a1*a2", "a1*a2*g0", "a1^2*a2^2", "a1*a2 + 1/2*g0"):
    f = parse(text, algebra)
    val = fn.evaluate(f)
    print(f"  str({text}) = {_tv_human(val)}"
          f"    [normal form: {print_element(f)}]")

print("""
The supertrace of a1*a2 is (1 - eta^2)/2 times str(1): the commutator
[a1, a2] = 1 + eta sigma first contributes (1 + eta str(sigma)/str(1))/2,
and the ground level solution str(sigma) = -eta str(1) closes the loop.""")

print("== Gram matrices of B(f, h) = str(f h), str(1) = 1 ==")
for degree in (0, 2, 4):
    report = gram(fn, degree)
    roots = ", ".join(str(r) for r in report.rational_roots)
    print(f"  degree <= {degree}: {len(report.basis)} basis elements, "
          f"determinant degree {report.determinant.degree()}, "
          f"rational roots {{{roots}}}")

print("""
The determinant at cutoff 0 is exactly 1 - eta^2.  Each deeper cutoff
exposes the next pair of degenerate couplings: eta = +-1, +-3, +-5, ...
(odd integers; with the commutator normalized as [x, y] = omega(x, y)
+ eta omega_sigma(x, y) sigma, the classical half-integer couplings of the
two-particle model appear at eta = 2(k + 1/2)).  At each root the bilinear
form acquires null vectors, which span a proper two-sided ideal.""")

print("== a numeric check at eta = 1 (degenerate) vs eta = 1/2 (regular) ==")
report = gram(fn, 0)
for eta_val in (Fraction(1), Fraction(1, 2)):
    det_val = report.determinant.evaluate([eta_val])
    print(f"  det at eta = {eta_val}: {det_val.as_rational()}")
