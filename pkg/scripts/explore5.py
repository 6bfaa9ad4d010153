#!/usr/bin/env python3
"""Exploration phase 5: cone determinism, flower parenthood, seed hunt."""

import sys
import time
from collections import Counter, defaultdict

sys.setrecursionlimit(1000000)
sys.path.insert(0, "src")
sys.path.insert(0, "scripts")

from heptalab.heptagrid import (  # noqa: E402
    CENTER, WHITE, BLACK, Address, ball, circle, global_neighbors, sides,
    status, father, sons,
)
from explore_mantilla import solve_roles, flower_word  # noqa: E402


def classify_all(sol, reg):
    """signature (k, ones, status) per centre with full word knowledge."""
    out = {}
    for a, role in sol.items():
        if role != "C":
            continue
        w, _ = flower_word(sol, a, reg)
        if any(x is None for x in w):
            continue
        ones = tuple(i + 1 for i, x in enumerate(w) if x == 1)
        out[a] = (len(ones), ones, status(a))
    return out


def cone_pattern(sol, c, depth, reg):
    """role pattern of strict descendants down to `depth`, as a tuple of
    (relative-path, role); None if the cone exits the region."""
    pat = []
    cur = [c]
    base = len(c.path)
    for d in range(1, depth + 1):
        nxt = []
        for t in cur:
            for s, _ in sons(t):
                if s not in reg or s not in sol:
                    return None
                nxt.append(s)
                pat.append((s.path[base:], sol[s]))
        cur = nxt
    return tuple(pat)


def main():
    r = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    force_role = sys.argv[2] if len(sys.argv) > 2 else "C"
    reg = ball(CENTER, r)
    sol = None
    for s in solve_roles(reg, forced={CENTER: force_role}, limit=1):
        sol = s
    assert sol
    sig = classify_all(sol, reg)
    print(f"{len(sig)} classified centres")

    # 1. cone determinism per class
    print("\n== cone determinism (depth 4) ==")
    by_class = defaultdict(list)
    for c, sg in sig.items():
        by_class[sg].append(c)
    for sg, cs in sorted(by_class.items()):
        pats = {}
        for c in cs:
            p = cone_pattern(sol, c, 4, reg)
            if p is not None:
                pats.setdefault(p, []).append(c)
        if pats:
            print(f"  {sg}: {len(pats)} distinct cone patterns over {sum(len(v) for v in pats.values())} centres")

    # 2. flower parenthood: nearest centre ancestor
    def parent_centre(c):
        p = father(c)
        while p is not None and not p.is_center():
            if sol.get(p) == "C":
                return p
            p = father(p)
        return None

    print("\n== parent relation: (class, parent class, depth gap, relative path) ==")
    rel = Counter()
    for c, sg in sorted(sig.items()):
        pc = parent_centre(c)
        if pc is None or pc not in sig:
            continue
        gap = circle(c) - circle(pc)
        relpath = c.path[len(pc.path):]
        rel[(sig[pc], gap, relpath, sg)] += 1
    for k, n in sorted(rel.items(), key=str):
        print("   ", k, "x", n)

    # 3. seed hunt: classes keyed by (own class, parent class); count members
    #    of the same keyed class exactly 5 levels down in the cone
    print("\n== depth-5 recurrence for (class,parentclass) keys ==")
    keyed = defaultdict(list)
    for c, sg in sig.items():
        pc = parent_centre(c)
        if pc is not None and pc in sig:
            keyed[(sg, sig[pc])].append(c)
    members = {}
    for key, cs in keyed.items():
        members[key] = set(cs)
    for key, cs in sorted(keyed.items(), key=str):
        counts = Counter()
        for c in cs:
            if circle(c) + 5 > r - 2:
                continue  # need classified flowers at depth 5
            n5 = 0
            cur = [c]
            for _ in range(5):
                nxt = []
                for t in cur:
                    for s, _ in sons(t):
                        nxt.append(s)
                cur = nxt
            for t in cur:
                if t in members[key]:
                    n5 += 1
            counts[n5] += 1
        if counts:
            print(f"   {key}: {dict(sorted(counts.items()))}")


if __name__ == "__main__":
    main()
