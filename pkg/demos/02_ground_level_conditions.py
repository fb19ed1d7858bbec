"""Solve the ground level conditions symbolically.

A kappa-trace restricted to the group algebra is a central function sp with
sp([c1, c2] g) = 0 whenever c1, c2 lie in Ker(g - kappa).  Classes whose
representative has no eigenvalue kappa carry free values; for every other
class the first Darboux pair of the kappa-eigenspace determines sp(g) from
classes of strictly smaller E-grading, with coefficients polynomial in the
deformation parameters eta.  The solver then re-checks every remaining
equation symbolically.
"""

from sra import Algebra, cyclic_sp2, doubled_coxeter, solve_glc
from sra.traces import format_trace_value as _tv_human

for make, kappa in [(lambda: cyclic_sp2(2), -1),
                    (lambda: cyclic_sp2(2), +1),
                    (lambda: doubled_coxeter("A", 3), -1),
                    (lambda: doubled_coxeter("B", 2), -1)]:
    group = make()
    algebra = Algebra(group)
    fn = solve_glc(algebra, kappa, verify=True)
    word = "trace" if kappa == 1 else "supertrace"
    print(f"\n{group.name}, kappa = {kappa:+d} ({word}):")
    print(f"  E-gradings by class: "
          + ", ".join(f"C{i}:{fn.e_of_class[i]}" for i in range(len(group.classes))))
    print(f"  free parameters: "
          + ", ".join(f"P{i} = sp(C{ci})" for i, ci in enumerate(fn.free_classes)))
    for ci in range(len(group.classes)):
        print(f"  sp(C{ci}) = {_tv_human(fn.table[ci])}")
    print("  every redundant ground level equation vanished identically.")

print("""
For cyclic_sp2(2) = {1, sigma} with sigma = -1 the supertrace satisfies
str(sigma) = -eta str(1): commuting a Darboux pair of the plane across sigma
trades sigma for the identity with one factor of eta.  The trace goes the
other way: tr(1) = -eta tr(sigma), since for kappa = +1 it is the identity
that carries the eigenvalue kappa everywhere.""")
