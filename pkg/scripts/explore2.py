#!/usr/bin/env python3
"""Exploration phase 2: flower kinds, chirality, rays, parenthood."""

import sys
import time
from collections import Counter, defaultdict

sys.path.insert(0, "src")
sys.path.insert(0, "scripts")

from heptalab.heptagrid import (  # noqa: E402
    CENTER, WHITE, BLACK, Address, ball, circle, global_neighbors, sides,
    side_of, status, father,
)
from explore_mantilla import solve_roles, flower_word, canon_cyclic  # noqa: E402


def oriented_word(assign, c, region):
    """Word over outer vertices 1..7 where vertex k sits between sides
    k and k+1 (side 1 = father side).  Entry None if unknowable."""
    w, thirds = flower_word(assign, c, region)
    return tuple(w), thirds


def classify(word):
    """kind by number of outer centres; orientation info kept."""
    ones = sum(1 for x in word if x == 1)
    return ones


def main():
    r = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    nsol = int(sys.argv[2]) if len(sys.argv) > 2 else 6
    reg = ball(CENTER, r)
    interior = set(reg.interior())
    print(f"ball r={r}: {len(reg.tiles)} tiles, {len(interior)} interior")

    t0 = time.time()
    sols = []
    for sol in solve_roles(reg, limit=nsol):
        sols.append(sol)
    print(f"{len(sols)} solutions in {time.time()-t0:.1f}s")

    for si, sol in enumerate(sols):
        centres = [a for a, x in sol.items() if x == "C"]
        full = {}
        for c in centres:
            if c in interior:
                w, thirds = oriented_word(sol, c, reg)
                if all(x is not None for x in w):
                    full[c] = (w, thirds)
        # oriented pattern census, with status
        cens = Counter()
        for c, (w, _) in full.items():
            cens[(sum(w), w, status(c))] += 1
        print(f"--- sol {si}: {len(full)} fully-known interior flowers")
        for (ones, w, st), n in sorted(cens.items()):
            print(f"    k={ones} {w} status={st}: {n}")

        # vertical ray test from k=6 centres: side5-son, then side4, then side6
        print("    ray test from k=6 flowers:")
        for c, (w, _) in sorted(full.items()):
            if sum(w) != 6:
                continue
            sd = sides(c)
            x = sd[5]
            if x not in reg:
                continue
            sx = sides(x)
            y = sx.get(4)
            if y is None or y not in reg:
                continue
            sy = sides(y)
            z = sy.get(6)
            if z is None or z not in reg:
                continue
            roles = (sol.get(x), sol.get(y), sol.get(z))
            zw = None
            if sol.get(z) == "C" and z in full:
                zw = sum(full[z][0])
            print(f"      {c} -> roles {roles}, next k={zw}, st(z)={status(z)}")

        # parenthood: for each interior centre, which centres lie among the
        # "upper" third tiles (outer-vertex centres) and at what vertices
        print("    relative placement of each centre's outer centres (k, vertex indices):")
        pat = Counter()
        for c, (w, thirds) in sorted(full.items()):
            idx = tuple(i + 1 for i, x in enumerate(w) if x == 1)
            pat[(sum(w), idx, status(c))] += 1
        for key, n in sorted(pat.items()):
            print("     ", key, "x", n)
        if si >= 2:
            break


if __name__ == "__main__":
    main()
