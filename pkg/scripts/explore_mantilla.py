#!/usr/bin/env python3
"""Exploration: search for centre/petal structures on heptagrid balls.

A mantilla role assignment must satisfy, on every interior tile:
  * a centre's 7 neighbors are all petals (no two centres adjacent);
  * a petal is adjacent to exactly 3 centres.
Rim tiles are only constrained not to exceed these bounds.

The script enumerates solutions on a ball, then reports the local
structure of each flower: the cyclic pattern of "outer vertex leads to
a centre" around the flower, chains of special centres along rays, and
the father/son structure between flowers.  This is the ground data for
the production tables in heptalab.mantilla.
"""

import sys
import time
from collections import Counter, defaultdict

sys.setrecursionlimit(200000)
sys.path.insert(0, "src")

from heptalab.heptagrid import (  # noqa: E402
    CENTER, WHITE, BLACK, Address, ball, circle, global_neighbors, sides,
    side_of, status, lateral_pred, lateral_succ,
)


def check_grid(r=5):
    reg = ball(CENTER, r)
    idx = set(reg.tiles)
    # degree and symmetry
    for a in reg.tiles:
        nbs = global_neighbors(a)
        assert len(nbs) == 7 and len(set(nbs)) == 7, (a, nbs)
        for n in nbs:
            assert a in global_neighbors(n), (a, n)
    # circle sizes: 7 * F(1,3,8,21,55...) pattern
    per = Counter(circle(a) for a in reg.tiles)
    print("ball sizes:", dict(sorted(per.items())), "total", len(reg.tiles))
    # BFS distance equals circle index
    from heptalab.heptagrid import distance
    for a in list(reg.tiles)[::101]:
        if circle(a) <= r - 0:
            try:
                d = distance(CENTER, a, reg)
                assert d == circle(a), (a, d, circle(a))
            except Exception as e:
                print("dist issue", a, e)
    print("grid checks OK")


def solve_roles(region, forced=None, limit=None, require=None):
    """Enumerate role assignments: role[tile] in {'C','P'}.

    forced: dict tile->role. require: callable(assign, tile) -> bool extra
    filter applied when a tile becomes fully decided (all nbrs assigned).
    Yields complete dicts.
    """
    tiles = sorted(region.tiles, key=lambda a: (circle(a), a))
    idx = {a: i for i, a in enumerate(tiles)}
    nbrs = {a: [n for n in global_neighbors(a) if n in region] for a in tiles}
    full = {a: len(nbrs[a]) == 7 for a in tiles}
    assign = {}
    out_count = 0

    def centre_count(a):
        return sum(1 for n in nbrs[a] if assign.get(n) == "C")

    def undecided(a):
        return sum(1 for n in nbrs[a] if n not in assign)

    def ok(a):
        """Local consistency of tile a given current partial assignment."""
        ra = assign.get(a)
        if ra is None:
            return True
        cc = centre_count(a)
        ud = undecided(a)
        if ra == "C":
            if cc > 0:
                return False
        else:
            if cc > 3:
                return False
            if full[a] and cc + ud < 3:
                return False
        return True

    def propagate_ok(a):
        # check a and all its neighbors
        if not ok(a):
            return False
        for n in nbrs[a]:
            if not ok(n):
                return False
        return True

    order = tiles

    def rec(i):
        nonlocal out_count
        if limit is not None and out_count >= limit:
            return
        if i == len(order):
            yield dict(assign)
            out_count += 1
            return
        a = order[i]
        choices = ["C", "P"]
        if forced and a in forced:
            choices = [forced[a]]
        for ch in choices:
            assign[a] = ch
            if propagate_ok(a) and (require is None or require(assign, a)):
                yield from rec(i + 1)
            del assign[a]

    yield from rec(0)


def flower_word(assign, c, region):
    """Cyclic word over the 7 outer vertices of flower c: 1 if the third
    tile at that vertex is a centre.  Outer vertex k sits between petals
    at sides k and k+1; the third tile there is side k+2 of petal k
    relative to its side facing c... computed directly via geometry:
    the tile at the outer vertex between sides k,k+1 of c is the tile
    adjacent to both petals."""
    sd = sides(c)
    word = []
    third_tiles = []
    for k in range(1, 8):
        p1 = sd[k]
        p2 = sd[1 + (k % 7)]
        # common neighbors of p1,p2 other than c
        common = (set(global_neighbors(p1)) & set(global_neighbors(p2))) - {c}
        assert len(common) == 1, (c, k, common)
        t = common.pop()
        third_tiles.append(t)
        if t not in region or t not in assign:
            word.append(None)
        else:
            word.append(1 if assign[t] == "C" else 0)
    return word, third_tiles


def canon_cyclic(word):
    """Canonical rotation (and note chirality classes separately)."""
    n = len(word)
    rots = [tuple(word[i:] + word[:i]) for i in range(n)]
    return min(rots)


def analyze(assign, region, tag=""):
    centres = [a for a, r in assign.items() if r == "C"]
    interior = set(region.interior())
    words = {}
    kinds = Counter()
    for c in centres:
        if c not in interior:
            continue
        w, thirds = flower_word(assign, c, region)
        if any(x is None for x in w):
            continue
        words[c] = (tuple(w), thirds)
        kinds[canon_cyclic(list(w))] += 1
    print(f"--- analysis {tag}: {len(centres)} centres, "
          f"{len(words)} full interior flowers; patterns:")
    for k, n in sorted(kinds.items()):
        print("   ", k, "x", n, " (ones:", sum(k), ")")
    return words


def main():
    t0 = time.time()
    check_grid(4)
    reg = ball(CENTER, 5)
    print(f"ball r=5: {len(reg.tiles)} tiles ({time.time()-t0:.1f}s)")
    n = 0
    sols = []
    for sol in solve_roles(reg, limit=4):
        sols.append(sol)
        n += 1
    print(f"found {n} solutions (limited) in {time.time()-t0:.1f}s")
    for i, sol in enumerate(sols[:2]):
        analyze(sol, reg, tag=str(i))


if __name__ == "__main__":
    main()
