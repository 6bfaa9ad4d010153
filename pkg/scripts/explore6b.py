#!/usr/bin/env python3
"""Phase 6b: iterative solver, complete child table at r=11."""

import sys
import time
from collections import Counter, defaultdict

sys.path.insert(0, "src")
sys.path.insert(0, "scripts")

from heptalab.heptagrid import (  # noqa: E402
    CENTER, WHITE, BLACK, Address, ball, circle, global_neighbors, sides,
    status, father, sons,
)
from explore_mantilla import flower_word  # noqa: E402

NAME = {
    (4, (1, 2, 4, 6)): "X",
    (5, (1, 2, 4, 6, 7)): "x",
    (4, (1, 3, 5, 6)): "Y",
    (5, (1, 3, 5, 6, 7)): "y",
    (4, (2, 4, 6, 7)): "Z",
}


def solve_first(region, forced):
    """Iterative DFS with local consistency; returns one full assignment."""
    tiles = sorted(region.tiles, key=lambda a: (circle(a), a))
    nbrs = {a: [n for n in global_neighbors(a) if n in region] for a in tiles}
    full = {a: len(nbrs[a]) == 7 for a in tiles}
    assign = {}

    def ok(a):
        ra = assign.get(a)
        if ra is None:
            return True
        cc = sum(1 for n in nbrs[a] if assign.get(n) == "C")
        ud = sum(1 for n in nbrs[a] if n not in assign)
        if ra == "C":
            return cc == 0
        if cc > 3:
            return False
        if full[a] and cc + ud < 3:
            return False
        return True

    def consistent(a):
        if not ok(a):
            return False
        return all(ok(n) for n in nbrs[a])

    # stack of (tile_index, choices_remaining)
    stack = [(0, None)]
    i = 0
    choice_stack = []
    while True:
        if i == len(tiles):
            return assign
        a = tiles[i]
        opts = [forced[a]] if a in forced else ["C", "P"]
        placed = False
        while opts:
            ch = opts.pop(0)
            assign[a] = ch
            if consistent(a):
                choice_stack.append((i, a, opts))
                i += 1
                placed = True
                break
            del assign[a]
        if not placed:
            # backtrack
            while choice_stack:
                j, b, rem = choice_stack.pop()
                del assign[b]
                if rem:
                    i = j
                    ch = rem.pop(0)
                    assign[b] = ch
                    if consistent(b):
                        choice_stack.append((j, b, rem))
                        i = j + 1
                        break
                    del assign[b]
            else:
                return None


def main():
    r = int(sys.argv[1]) if len(sys.argv) > 1 else 11
    t0 = time.time()
    reg = ball(CENTER, r)
    print(f"ball r={r}: {len(reg.tiles)} tiles ({time.time()-t0:.1f}s)", flush=True)
    sol = solve_first(reg, {CENTER: "C"})
    print(f"solved ({time.time()-t0:.1f}s)", flush=True)

    sig = {}
    for a, role in sol.items():
        if role != "C":
            continue
        w, _ = flower_word(sol, a, reg)
        if any(x is None for x in w):
            continue
        ones = tuple(i + 1 for i, x in enumerate(w) if x == 1)
        nm = NAME.get((len(ones), ones), f"?{(len(ones), ones)}")
        sig[a] = nm + ("b" if status(a) == BLACK else "w")
    print(f"{len(sig)} classified ({time.time()-t0:.1f}s)", flush=True)
    print("class census:", dict(sorted(Counter(sig.values()).items())), flush=True)

    def parent_centre(c):
        p = father(c)
        while p is not None and not p.is_center():
            if sol.get(p) == "C":
                return p
            p = father(p)
        return None

    vis_parents = defaultdict(list)
    for c, sg in sig.items():
        if 3 <= circle(c) and circle(c) + 6 <= r - 2:
            vis_parents[sg].append(c)
    print("visible parents:", {k: len(v) for k, v in sorted(vis_parents.items())}, flush=True)

    table2 = defaultdict(Counter)
    for c, sg in sorted(sig.items()):
        pc = parent_centre(c)
        if pc is None or pc not in sig:
            continue
        if 3 <= circle(pc) and circle(pc) + 6 <= r - 2:
            gap = len(c.path) - len(pc.path)
            table2[sig[pc]][(gap, c.path[len(pc.path):], sig[c])] += 1
    print("\n== child tables ==", flush=True)
    for sg in sorted(table2):
        n = len(vis_parents[sg])
        print(f"  {sg}  ({n} parents):")
        for (gap, rel, csg), cnt in sorted(table2[sg].items()):
            flag = "" if n and cnt == n else f"  <-- {cnt}/{n}"
            print(f"     gap{gap} {rel} -> {csg}{flag}")

    fib_b = {0: 1, 1: 2, 2: 5, 3: 13, 4: 34, 5: 89, 6: 233}
    fib_w = {0: 1, 1: 3, 2: 8, 3: 21, 4: 55, 5: 144, 6: 377}

    def slice_size(cls, d):
        return (fib_b if cls.endswith("b") else fib_w)[d]

    print("\n== coverage ==")
    for sg in sorted(table2):
        n = len(vis_parents[sg])
        if not n:
            continue
        for depth in range(2, 7):
            total = slice_size(sg, depth)
            cov = 0
            direct = 0
            for (gap, rel, csg), cnt in table2[sg].items():
                if cnt != n:
                    continue
                if gap <= depth:
                    cov += slice_size(csg, depth - gap)
                    if gap == depth:
                        direct += 1
            print(f"  {sg} d{depth}: slice {total} covered {cov} direct {direct}")
        print()


if __name__ == "__main__":
    main()
