#!/usr/bin/env python3
"""Exploration phase 3: seed recurrence, rays, anchoring variants."""

import sys
import time
from collections import Counter, defaultdict

sys.setrecursionlimit(1000000)
sys.path.insert(0, "src")
sys.path.insert(0, "scripts")

from heptalab.heptagrid import (  # noqa: E402
    CENTER, WHITE, BLACK, Address, ball, circle, global_neighbors, sides,
    side_of, status, father,
)
from explore_mantilla import solve_roles, flower_word  # noqa: E402


def full_interior_flowers(sol, reg, interior):
    out = {}
    for a, role in sol.items():
        if role != "C" or a not in interior:
            continue
        w, thirds = flower_word(sol, a, reg)
        if all(x is not None for x in w):
            out[a] = tuple(w)
    return out


def sig(word, st):
    ones = tuple(i + 1 for i, x in enumerate(word) if x == 1)
    return (len(ones), ones, st)


def descendants_at(c, depth, reg):
    """Strict tree descendants of c exactly `depth` levels down, in region."""
    from heptalab.heptagrid import sons
    cur = [c]
    for _ in range(depth):
        nxt = []
        for t in cur:
            for s, _ in sons(t):
                if s in reg:
                    nxt.append(s)
        cur = nxt
    return cur


def area_at(c, depth, reg):
    """Between-rays area slice at given depth: strict cone of c plus the
    cones of the nephew chain (right border drift)."""
    from heptalab.heptagrid import sons, lateral_succ
    # nephew chain: N0=c, N_{k+1} = black son of succ(N_k) = succ(rightmost son)
    chain = [c]
    cur = c
    ok = True
    for _ in range(depth):
        try:
            kids = [s for s, _ in sons(cur)]
            nxt = lateral_succ(kids[-1])
        except Exception:
            ok = False
            break
        chain.append(nxt)
        cur = nxt
    out = []
    for j, n in enumerate(chain):
        if j > depth:
            break
        out.extend(descendants_at(n, depth - j, reg))
    return out


def ray_step(c):
    """Follow the vertical-ray side pattern from a black centre c:
    exit side 5, then side 4, then side 6; returns the landing tile."""
    sd = sides(c)
    x = sd.get(5)
    if x is None:
        return None
    y = sides(x).get(4)
    if y is None:
        return None
    z = sides(y).get(6)
    return z


def analyze_solution(sol, reg, interior, tag):
    flowers = full_interior_flowers(sol, reg, interior)
    cen = Counter(sig(w, status(c)) for c, w in flowers.items())
    print(f"=== {tag}: {len(flowers)} interior flowers")
    for k, n in sorted(cen.items()):
        print("   ", k, "x", n)

    # ray scan: which centres have ray_step landing on another centre?
    print("  ray chains (centre -> centre via 5/4/6):")
    chains = Counter()
    for c, w in flowers.items():
        z = ray_step(c)
        if z is not None and sol.get(z) == "C":
            zw = flowers.get(z)
            key = (sig(w, status(c)), sig(zw, status(z)) if zw else None)
            chains[key] += 1
    for k, n in sorted(chains.items(), key=str):
        print("   ", k, "->", n)

    # seed recurrence: for each signature class, members at depth 5 in cone
    print("  depth-5 recurrence per signature (cone | area):")
    by_sig = defaultdict(list)
    for c, w in flowers.items():
        by_sig[sig(w, status(c))].append(c)
    for sg, cs in sorted(by_sig.items()):
        rows = []
        for c in cs:
            if circle(c) > reg.radius - 6:
                continue
            cone5 = descendants_at(c, 5, reg)
            area5 = area_at(c, 5, reg)
            n_cone = sum(1 for t in cone5 if flowers.get(t) is not None
                         and sig(flowers[t], status(t)) == sg)
            n_area = sum(1 for t in area5 if flowers.get(t) is not None
                         and sig(flowers[t], status(t)) == sg)
            rows.append((n_cone, n_area))
        if rows:
            print("   ", sg, Counter(rows))


def main():
    r = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    t0 = time.time()
    reg = ball(CENTER, r)
    interior = set(reg.interior())
    print(f"ball r={r}: {len(reg.tiles)} tiles ({time.time()-t0:.1f}s)")

    for role in ["C", "P"]:
        t1 = time.time()
        got = None
        for s in solve_roles(reg, forced={CENTER: role}, limit=1):
            got = s
        print(f"solve center={role}: {time.time()-t1:.1f}s")
        if got:
            analyze_solution(got, reg, interior, f"center={role}")


if __name__ == "__main__":
    main()
