#!/usr/bin/env python3
"""Exploration phase 6: complete child table at r=11, closure, recurrences."""

import sys
import time
from collections import Counter, defaultdict

sys.setrecursionlimit(2000000)
sys.path.insert(0, "src")
sys.path.insert(0, "scripts")

from heptalab.heptagrid import (  # noqa: E402
    CENTER, WHITE, BLACK, Address, ball, circle, global_neighbors, sides,
    status, father, sons,
)
from explore_mantilla import solve_roles, flower_word  # noqa: E402

NAME = {
    (4, (1, 2, 4, 6)): "X",   # P1
    (5, (1, 2, 4, 6, 7)): "x",  # P4 (same tile, extra context vertex)
    (4, (1, 3, 5, 6)): "Y",   # P2
    (5, (1, 3, 5, 6, 7)): "y",  # P5
    (4, (2, 4, 6, 7)): "Z",   # P3
}


def main():
    r = int(sys.argv[1]) if len(sys.argv) > 1 else 11
    t0 = time.time()
    reg = ball(CENTER, r)
    print(f"ball r={r}: {len(reg.tiles)} tiles ({time.time()-t0:.1f}s)", flush=True)
    sol = None
    for s in solve_roles(reg, forced={CENTER: "C"}, limit=1):
        sol = s
    print(f"solved ({time.time()-t0:.1f}s)", flush=True)

    sig = {}
    for a, role in sol.items():
        if role != "C":
            continue
        w, _ = flower_word(sol, a, reg)
        if any(x is None for x in w):
            continue
        ones = tuple(i + 1 for i, x in enumerate(w) if x == 1)
        nm = NAME.get((len(ones), ones))
        if nm is None:
            nm = f"?{(len(ones), ones)}"
        sig[a] = nm + ("b" if status(a) == BLACK else "w")
    print(f"{len(sig)} classified ({time.time()-t0:.1f}s)", flush=True)
    print("class census:", dict(sorted(Counter(sig.values()).items())))

    def parent_centre(c):
        p = father(c)
        while p is not None and not p.is_center():
            if sol.get(p) == "C":
                return p
            p = father(p)
        return None

    # complete child table: only use parents at circle >= 3 (avoid the
    # anchoring anomaly near the centre) with full visibility to gap 6
    table = defaultdict(Counter)
    counted_parents = Counter()
    for c, sg in sorted(sig.items()):
        pc = parent_centre(c)
        if pc is None or pc not in sig:
            continue
        table[sig[pc]][(len(c.path) - len(pc.path), c.path[len(pc.path):], sg)] += 1
    # normalize: find parents with full gap-6 visibility
    vis_parents = defaultdict(int)
    for c, sg in sig.items():
        if circle(c) >= 3 and circle(c) + 6 <= r - 2:
            vis_parents[sg] += 1
    print("\nfully-visible parents per class:", dict(sorted(vis_parents.items())))

    # per-class child table from visible parents only
    table2 = defaultdict(Counter)
    for c, sg in sorted(sig.items()):
        pc = parent_centre(c)
        if pc is None or pc not in sig:
            continue
        if circle(pc) >= 3 and circle(pc) + 6 <= r - 2:
            gap = len(c.path) - len(pc.path)
            table2[sig[pc]][(gap, c.path[len(pc.path):], sig[c])] += 1
    print("\n== child tables (visible parents only; count/parents must be integral) ==")
    for sg in sorted(table2):
        n = vis_parents[sg]
        print(f"  {sg}  ({n} parents):")
        for (gap, rel, csg), cnt in sorted(table2[sg].items()):
            flag = "" if n and cnt % n == 0 else "  <-- NON-UNIFORM"
            per = cnt / n if n else 0
            print(f"     gap{gap} {rel} -> {csg}  x{cnt} (/{n} = {per:.2f}){flag}")

    # coverage check per class at each depth
    print("\n== coverage of cone slices by child cones ==")
    fib_b = [1, 2, 5, 13, 34, 89, 233]
    fib_w = [1, 3, 8, 21, 55, 144, 377]

    def slice_size(cls, d):
        return (fib_b if cls.endswith("b") else fib_w)[d]

    for sg in sorted(table2):
        n = vis_parents[sg]
        if not n:
            continue
        for depth in range(2, 7):
            total = slice_size(sg, depth)
            cov = 0
            ncentres = 0
            for (gap, rel, csg), cnt in table2[sg].items():
                if cnt % n:
                    continue
                mult = cnt // n
                if gap <= depth:
                    cov += mult * slice_size(csg, depth - gap)
                    if gap == depth:
                        ncentres += mult
            print(f"  {sg} depth {depth}: slice {total}, covered {cov}, "
                  f"direct-centres@depth {ncentres}")
        print()


if __name__ == "__main__":
    main()
