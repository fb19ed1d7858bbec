"""Build symplectic reflection groups and count their traces and supertraces.

A symplectic reflection group is a finite subgroup of Sp(2N) generated by
elements R with rank(R - 1) = 2.  The number of independent traces on the
deformed algebra equals the number of conjugacy classes without eigenvalue
+1, and the number of supertraces equals the number of classes without
eigenvalue -1.  Everything here is exact arithmetic over Q(zeta_m).
"""

from sra import builtin, cyclic_sp2, direct_product, doubled_coxeter


def show(group):
    t_count, s_count = group.kappa_counts()
    print(f"\n{group.name}: |G| = {len(group)}, Sp({group.dim}), "
          f"cyclotomic order m = {group.exponent}")
    print(f"  conjugacy classes: {len(group.classes)}, "
          f"reflections: {len(group.reflections)} in {group.n_eta} classes "
          f"(one deformation parameter each)")
    print(f"  independent traces T = {t_count}, supertraces S = {s_count}")
    print("  class  size  order  E+  E-")
    for i in range(len(group.classes)):
        rep = group.class_rep[i]
        print(f"  C{i:<5} {len(group.classes[i]):<5} "
              f"{group.elements[rep].order:<6} "
              f"{group.e_grading(rep, +1)[0]:<3} {group.e_grading(rep, -1)[0]:<3}")


print("== cyclic groups in Sp(2): diag(zeta_n, zeta_n^-1) ==")
for n in (2, 3, 4):
    show(cyclic_sp2(n))

print("\n== doubled symmetric groups (coordinates + momenta) ==")
print("The supertrace count for S_n equals the number of partitions of n")
print("into distinct parts: 1, 2, 2, 3 for n = 2, 3, 4, 5; the trace count")
print("is 1 throughout.")
for n in (2, 3, 4, 5):
    g = doubled_coxeter("A", n)
    t_count, s_count = g.kappa_counts()
    print(f"  S_{n} doubled: T = {t_count}, S = {s_count}")

print("\n== more constructors ==")
show(doubled_coxeter("B", 2))
show(builtin("dihedral", n=5))

print("\n== counts multiply over direct products ==")
z2, z3 = cyclic_sp2(2), cyclic_sp2(3)
prod = direct_product(z2, z3)
print(f"  Z2: {z2.kappa_counts()}  Z3: {z3.kappa_counts()}  "
      f"Z2 x Z3: {prod.kappa_counts()}")
