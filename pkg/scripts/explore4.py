#!/usr/bin/env python3
"""Exploration phase 4: visual dump of the rigid structure, per circle."""

import sys
import time
from collections import Counter, defaultdict

sys.setrecursionlimit(1000000)
sys.path.insert(0, "src")
sys.path.insert(0, "scripts")

from heptalab.heptagrid import (  # noqa: E402
    CENTER, WHITE, BLACK, Address, ball, circle, global_neighbors, sides,
    side_of, status, father, sons,
)
from explore_mantilla import solve_roles, flower_word  # noqa: E402

SIG_NAMES = {}


def sig_of(sol, c, reg):
    w, _ = flower_word(sol, c, reg)
    if any(x is None for x in w):
        return "?"
    ones = tuple(i + 1 for i, x in enumerate(w) if x == 1)
    key = (len(ones), ones)
    if key not in SIG_NAMES:
        SIG_NAMES[key] = chr(ord("a") + len(SIG_NAMES))
    return SIG_NAMES[key]


def main():
    r = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    force_role = sys.argv[2] if len(sys.argv) > 2 else "C"
    reg = ball(CENTER, r)
    sol = None
    for s in solve_roles(reg, forced={CENTER: force_role}, limit=1):
        sol = s
    assert sol

    # map per circle for sector 0 wedge; mark status case (upper=black)
    print("legend: letter=flower signature (uppercase=black tile), .=petal black, ,=petal white")
    for circ in range(0, min(r, 7) + 1):
        row = []
        if circ == 0:
            tiles = [CENTER]
        else:
            tiles = sorted(
                [a for a in reg.tiles if not a.is_center()
                 and a.sector == 0 and len(a.path) == circ - 1])
        for a in tiles:
            role = sol.get(a)
            if role == "C":
                s = sig_of(sol, a, reg)
                row.append(s.upper() if status(a) == BLACK else s)
            elif role == "P":
                row.append("." if status(a) == BLACK else ",")
            else:
                row.append("?")
        print(f"circle {circ}: {''.join(row)}")
    print()
    for key, name in sorted(SIG_NAMES.items(), key=lambda kv: kv[1]):
        print(f"  {name} = {key}")

    # petal census: for each petal, the sides (local numbering) that face
    # its centres, plus status -> the beta prototile candidates
    pc = Counter()
    interior = set(reg.interior())
    for a in reg.tiles:
        if sol.get(a) != "P" or a not in interior:
            continue
        cs = tuple(sorted(k for k, nb in sides(a).items() if sol.get(nb) == "C"))
        if len(cs) == 3:
            pc[(cs, status(a))] += 1
    print("\npetal (centre-side-set, status) census:")
    for k, n in sorted(pc.items()):
        print("   ", k, "x", n)
    print("distinct petal classes:", len(pc))


if __name__ == "__main__":
    main()
