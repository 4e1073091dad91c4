#!/usr/bin/env python3
"""Regenerate the bundled group catalog under data/.

Every group is given by a presentation; coset enumeration over the trivial
subgroup yields the regular permutation representation, which is written as a
generator file. For each order the script checks that the listed groups are
pairwise non-isomorphic (by a vector of isomorphism invariants) and that their
number matches the known count of groups of that order, so each order class
is complete.

Usage: python3 scripts/gen_catalog.py [data_dir]
"""

import json
import os
import sys
from collections import Counter

from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group
from sympy.combinatorics.perm_groups import PermutationGroup
from sympy.combinatorics.permutations import Permutation

# Number of isomorphism types of each order used in the catalog.
KNOWN_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
                11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 18: 5, 20: 5,
                24: 15, 27: 5}


def comm(x, y):
    return x**-1 * y**-1 * x * y


def presentations():
    """Yield (name, free group, relators)."""
    out = []

    def add(name, F, rels):
        out.append((name, F, rels))

    # cyclic groups
    for n in [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 24, 27]:
        F, a = free_group("a")
        add(f"C{n}", F, [a**n])

    # abelian, non-cyclic
    def abelian(name, orders):
        names = ",".join(f"x{i}" for i in range(len(orders)))
        F, *xs = free_group(names)
        rels = [x**o for x, o in zip(xs, orders)]
        for i in range(len(xs)):
            for j in range(i + 1, len(xs)):
                rels.append(comm(xs[i], xs[j]))
        add(name, F, rels)

    abelian("C2xC2", [2, 2])
    abelian("C4xC2", [4, 2])
    abelian("C2xC2xC2", [2, 2, 2])
    abelian("C3xC3", [3, 3])
    abelian("C6xC2", [6, 2])
    abelian("C4xC4", [4, 4])
    abelian("C8xC2", [8, 2])
    abelian("C4xC2xC2", [4, 2, 2])
    abelian("C2xC2xC2xC2", [2, 2, 2, 2])
    abelian("C6xC3", [6, 3])
    abelian("C10xC2", [10, 2])
    abelian("C12xC2", [12, 2])
    abelian("C6xC2xC2", [6, 2, 2])
    abelian("C9xC3", [9, 3])
    abelian("C3xC3xC3", [3, 3, 3])

    # dihedral groups D_{2n}: <r,s | r^n, s^2, (sr)^2>
    for n in [3, 4, 5, 6, 7, 8, 9, 10, 12]:
        F, r, s = free_group("r,s")
        name = "S3" if n == 3 else f"D{2 * n}"
        add(name, F, [r**n, s**2, (s * r)**2])

    # quaternion / dicyclic: <a,b | a^{2n}, b^2 a^{-n}, b^-1 a b a>
    for n, name in [(2, "Q8"), (3, "Dic3"), (4, "Q16"), (5, "Dic5"), (6, "Dic6")]:
        F, a, b = free_group("a,b")
        add(name, F, [a**(2 * n), b**2 * a**-n, b**-1 * a * b * a])

    F, a, b, c = free_group("a,b,c")
    add("A4", F, [a**2, b**2, comm(a, b), c**3, c**-1 * a * c * b**-1, c**-1 * b * c * (a * b)**-1])

    # order 16
    F, a, b, c = free_group("a,b,c")
    add("C4xC2:C2", F, [a**4, b**2, c**2, comm(a, b), comm(b, c), c**-1 * a * c * (a * b)**-1])
    F, a, b = free_group("a,b")
    add("C4:C4", F, [a**4, b**4, b**-1 * a * b * a])
    F, a, b = free_group("a,b")
    add("M16", F, [a**8, b**2, b**-1 * a * b * a**-5])
    F, r, s = free_group("r,s")
    add("SD16", F, [r**8, s**2, s * r * s * r**-3])
    F, r, s, z = free_group("r,s,z")
    add("D8xC2", F, [r**4, s**2, (s * r)**2, z**2, comm(r, z), comm(s, z)])
    F, a, b, z = free_group("a,b,z")
    add("Q8xC2", F, [a**4, b**2 * a**-2, b**-1 * a * b * a, z**2, comm(a, z), comm(b, z)])
    F, x, y, z = free_group("x,y,z")
    add("C4oD8", F, [x**4, y**2, (y * x)**2, z**2 * x**-2, comm(x, z), comm(y, z)])

    # order 18
    F, a, r, s = free_group("a,r,s")
    add("C3xS3", F, [a**3, r**3, s**2, (s * r)**2, comm(a, r), comm(a, s)])
    F, x, y, s = free_group("x,y,s")
    add("C3xC3:C2", F, [x**3, y**3, comm(x, y), s**2, s * x * s * x, s * y * s * y])

    # order 20
    F, a, b = free_group("a,b")
    add("F20", F, [a**5, b**4, b**-1 * a * b * a**-2])

    # order 24
    F, a, b = free_group("a,b")
    add("C3:C8", F, [a**3, b**8, b**-1 * a * b * a])
    F, a, b = free_group("a,b")
    add("SL(2,3)", F, [a**3 * b**-3, a**3 * (a * b)**-2])
    F, r, s, c = free_group("r,s,c")
    add("C4xS3", F, [r**3, s**2, (s * r)**2, c**4, comm(r, c), comm(s, c)])
    F, a, b, z = free_group("a,b,z")
    add("C2xDic3", F, [a**6, b**2 * a**-3, b**-1 * a * b * a, z**2, comm(a, z), comm(b, z)])
    F, a, r, s = free_group("a,r,s")
    add("C3:D8", F, [a**3, r**4, s**2, (s * r)**2, r**-1 * a * r * a, comm(s, a)])
    F, a, r, s = free_group("a,r,s")
    add("C3xD8", F, [a**3, r**4, s**2, (s * r)**2, comm(a, r), comm(a, s)])
    F, a, b, c = free_group("a,b,c")
    add("C3xQ8", F, [a**4, b**2 * a**-2, b**-1 * a * b * a, c**3, comm(a, c), comm(b, c)])
    F, a, b = free_group("a,b")
    add("S4", F, [a**4, b**2, (a * b)**3])
    F, a, b, c, z = free_group("a,b,c,z")
    add("C2xA4", F, [a**2, b**2, comm(a, b), c**3, c**-1 * a * c * b**-1,
                     c**-1 * b * c * (a * b)**-1, z**2, comm(a, z), comm(b, z), comm(c, z)])
    F, r, s, u, v = free_group("r,s,u,v")
    add("C2xC2xS3", F, [r**3, s**2, (s * r)**2, u**2, v**2, comm(u, v),
                        comm(r, u), comm(s, u), comm(r, v), comm(s, v)])

    # order 27, non-abelian
    F, x, y, z = free_group("x,y,z")
    add("He3", F, [x**3, y**3, z**3, comm(x, y) * z**-1, comm(x, z), comm(y, z)])
    F, a, b = free_group("a,b")
    add("C9:C3", F, [a**9, b**3, b**-1 * a * b * a**-4])

    return out


def regular_rep(F, rels):
    G = FpGroup(F, rels)
    C = G.coset_enumeration([])
    C.compress()
    C.standardize()
    n = len(C.table)
    gens = []
    for x in F.generators:
        col = C.A_dict[x]
        gens.append([C.table[i][col] + 1 for i in range(n)])
    return n, gens


def invariants(n, gens):
    if n == 1:
        return ("trivial",)
    P = PermutationGroup([Permutation([g - 1 for g in gen]) for gen in gens])
    elems = list(P.elements)
    orders = tuple(sorted(Counter(e.order() for e in elems).items()))
    center = P.center().order()
    derived = P.derived_subgroup().order()
    nclasses = len(list(P.conjugacy_classes()))
    squares = len({e**2 for e in elems})
    return (orders, center, derived, nclasses, squares)


def main():
    data = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data")
    groups_dir = os.path.join(data, "groups")
    os.makedirs(groups_dir, exist_ok=True)

    by_order = {}
    for name, F, rels in presentations():
        n, gens = regular_rep(F, rels)
        if n == 1:
            gens = []
        by_order.setdefault(n, []).append((name, gens))
        fname = name.replace(":", "_").replace("(", "").replace(")", "").replace(",", "_") + ".json"
        with open(os.path.join(groups_dir, fname), "w") as f:
            json.dump({"name": name, "generators": gens}, f, separators=(",", ":"))
            f.write("\n")
        print(f"{name:12s} order {n:3d} -> groups/{fname}")

    for n, groups in sorted(by_order.items()):
        want = KNOWN_COUNTS.get(n)
        if want is not None and len(groups) != want:
            sys.exit(f"order {n}: {len(groups)} groups listed, expected {want}")
        sigs = {}
        for name, gens in groups:
            sig = invariants(n, gens)
            if sig in sigs:
                sys.exit(f"order {n}: {name} and {sigs[sig]} share invariants")
            sigs[sig] = name

    def fname_of(name):
        return name.replace(":", "_").replace("(", "").replace(")", "").replace(",", "_") + ".json"

    for p, sub in [(2, "p2"), (3, "p3")]:
        os.makedirs(os.path.join(data, sub), exist_ok=True)
        for d in range(1, 4):
            names = [name for name, _ in by_order[p**d]]
            manifest = {"p": p, "d": d, "complete": True,
                        "groups": ["../groups/" + fname_of(x) for x in names]}
            with open(os.path.join(data, sub, f"order{p**d}.json"), "w") as f:
                json.dump(manifest, f, indent=2)
                f.write("\n")


if __name__ == "__main__":
    main()
