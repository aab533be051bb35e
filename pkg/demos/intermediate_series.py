"""Intermediate-series modules: actions, subquotients, intertwiners.

Run:  python3 demos/intermediate_series.py
"""

from fractions import Fraction

from zzlie import (
    ModuleSpec,
    ModVector,
    act,
    check_module_axiom,
    find_intertwiner,
    irreducible_subquotient,
)


def main():
    m = ModuleSpec("a_ab", Fraction(1, 2), 0)
    print("A_{1/2,0}: L_1 v_0 =", act(m, 1, ModVector.basis(0)))
    print("module axiom sweep:", check_module_axiom(m, 4).ok)
    print()

    # at integral alpha with beta in {0,1} one index degenerates
    red = ModuleSpec("a_ab", 0, 0)
    sub = irreducible_subquotient(red)
    print("A_{0,0} is reducible; subquotient drops index", sub.removed)
    print("subquotient passes the axiom sweep:", check_module_axiom(sub, 4).ok)
    print()

    # diagonal intertwiner between the beta = 0 and beta = 1 members
    w = find_intertwiner(
        ModuleSpec("a_ab", Fraction(1, 2), 0),
        ModuleSpec("a_ab", Fraction(1, 2), 1),
        6,
    )
    print("A_{1/2,0} ~ A_{1/2,1} scalars (proportional to alpha + k):")
    print("  ", {k: str(v) for k, v in sorted(w.items()) if abs(k) <= 3})
    print()

    # for the degenerate full modules the map is forced to kill v_0: absent
    print(
        "full A_{0,0} vs A_{0,1}:",
        find_intertwiner(ModuleSpec("a_ab", 0, 0), ModuleSpec("a_ab", 0, 1), 6),
    )
    s1 = irreducible_subquotient(ModuleSpec("a_ab", 0, 0))
    s2 = irreducible_subquotient(ModuleSpec("a_ab", 0, 1))
    print("their subquotients are isomorphic:", find_intertwiner(s1, s2, 6) is not None)


if __name__ == "__main__":
    main()
