"""The coefficient recurrence and the constraint pipeline.

Run:  python3 demos/classification.py
"""

from fractions import Fraction

from zzlie import (
    AlgebraSpec,
    BasisElement,
    ClassificationParams,
    check_impossibility,
    derive_constraint_polys,
    enumerate_case_split,
    solve_c_window,
)
from zzlie.classify import closed_form_uniform


def main():
    # a parameter point on the beta1 = -2 - betam1 line: the solution is
    # linear in (i, j)
    params = ClassificationParams(1, 2, -4)
    sol = solve_c_window(params, 4)
    print("solve at (alpha, beta1, betam1) = (1, 2, -4):")
    print("  infeasible:", sol.infeasible, " unique:", sol.unique)
    cf = closed_form_uniform(1, 3)
    print("  c_{1,2} =", sol.values[(1, 2)], "  closed form:", cf(1, 2))
    print()

    # loop closure: the same coefficients appear as bracket structure
    # constants of the uniform family at (alpha, beta) = (1, 3)
    d = AlgebraSpec("d", 1, 3)
    br = d.basis_bracket((1, -1), (2, 1))
    print("[L(1,-1), L(2,1)] in D(1,3):", br)
    print("matches solved c_{1,2}:",
          br.terms[BasisElement("L", 3, 0)] == sol.values[(1, 2)])
    print()

    # an off-case parameter point is contradictory; the solver names a
    # minimal offending equation subset
    bad = solve_c_window(ClassificationParams(1, 1, 1), 4)
    print("solve at (1, 1, 1): infeasible =", bad.infeasible,
          " certificate size =", len(bad.certificate))
    print()

    # the constraint polynomials force the case split
    polys = derive_constraint_polys()
    print("degree of the i^6 coefficient:",
          max(sum(e for _, e in mono) for mono in polys["p6"].terms))
    split = enumerate_case_split()
    print("case split relations:", split["relations"])
    print("exceptional pairs:",
          [(str(a), str(b)) for a, b in split["exceptional_pairs"]])
    print()

    # the homogeneous auxiliary system has no nonzero solution
    for alpha in (Fraction(1), Fraction(2, 5)):
        result = check_impossibility(alpha, 3)
        print(f"auxiliary system at alpha={alpha}: only zero solution =",
              result["only_zero"], f"(rank {result['rank']}/{result['unknowns']})")


if __name__ == "__main__":
    main()
