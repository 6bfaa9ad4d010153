"""Combinatorial model of the ternary heptagrid {7,3}.

A fixed central tile is surrounded by seven sectors, each spanned by a
Fibonacci tree: a black node has two sons, a white node three, and the
black son is always the leftmost one.  A tile is addressed by its sector
id and the sequence of child indices from the sector root; the central
tile carries the reserved sector id -1.

Everything in this module is exact integer combinatorics.  The ambient
circle through a tile is its hop distance from the central tile, and
lateral ("same circle") adjacency is derived from the left-to-right
order of each tree level, glued cyclically across the seven sectors.
The Poincare-disc embedding lives in the render module and is never
consulted here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

BLACK = "black"
WHITE = "white"

#: child count of a node, by status
ARITY = {BLACK: 2, WHITE: 3}


class AddressError(ValueError):
    """Raised for malformed addresses (bad sector or child index)."""


class RegionError(ValueError):
    """Raised when an operation needs tiles outside the given region."""


@dataclass(frozen=True, order=True)
class Address:
    """Path coordinate of a heptagrid tile inside a sector tree.

    ``sector`` is 0..6 for the seven trees around the central tile and
    -1 for the central tile itself (whose path must be empty).  The
    empty path denotes the sector root, which is a white node.
    """

    sector: int
    path: tuple[int, ...] = ()

    def __post_init__(self):
        if self.sector == -1:
            if self.path:
                raise AddressError("central tile takes no path")
            return
        if not 0 <= self.sector <= 6:
            raise AddressError(f"sector out of range: {self.sector}")
        st = WHITE
        for i, c in enumerate(self.path):
            if not 0 <= c < ARITY[st]:
                raise AddressError(f"child index {c} invalid at step {i} ({st} node)")
            st = BLACK if c == 0 else WHITE

    def is_center(self) -> bool:
        return self.sector == -1

    def to_json(self) -> dict:
        return {"sector": self.sector, "path": list(self.path)}

    @staticmethod
    def from_json(obj: dict) -> "Address":
        return Address(obj["sector"], tuple(obj["path"]))


CENTER = Address(-1, ())


@lru_cache(maxsize=None)
def status(a: Address) -> str:
    """Black/white status of a tile; the sector roots and the central
    tile are white, the leftmost son of any node is black."""
    if a.is_center() or not a.path:
        return WHITE
    return BLACK if a.path[-1] == 0 else WHITE


def circle(a: Address) -> int:
    """Hop distance from the central tile (0 for the centre itself)."""
    return 0 if a.is_center() else len(a.path) + 1


def father(a: Address) -> Address | None:
    if a.is_center():
        return None
    if not a.path:
        return CENTER
    return Address(a.sector, a.path[:-1])


def sons(a: Address) -> list[tuple[Address, str]]:
    """Sons of a node, leftmost first, with their statuses.

    A black node yields [black, white]; a white node [black, white,
    white].  The central tile yields the seven white sector roots.
    """
    if a.is_center():
        return [(Address(s, ()), WHITE) for s in range(7)]
    out = []
    for c in range(ARITY[status(a)]):
        child = Address(a.sector, a.path + (c,))
        out.append((child, status(child)))
    return out


def _rightmost_path(depth: int) -> tuple[int, ...]:
    # rightmost chain from a white root stays white: child index 2 each step
    return (2,) * depth


def lateral_succ(a: Address) -> Address:
    """Next tile on the same circle, in left-to-right order, wrapping
    from the last tile of sector s to the first tile of sector s+1."""
    if a.is_center():
        raise AddressError("central tile has no lateral neighbors")
    path = list(a.path)
    statuses = [WHITE]
    for c in a.path:
        statuses.append(BLACK if c == 0 else WHITE)
    for i in range(len(path) - 1, -1, -1):
        if path[i] < ARITY[statuses[i]] - 1:
            path[i] += 1
            for j in range(i + 1, len(path)):
                path[j] = 0
            return Address(a.sector, tuple(path))
    return Address((a.sector + 1) % 7, (0,) * len(a.path))


def lateral_pred(a: Address) -> Address:
    """Previous tile on the same circle (inverse of lateral_succ)."""
    if a.is_center():
        raise AddressError("central tile has no lateral neighbors")
    path = list(a.path)
    statuses = [WHITE]
    for c in a.path:
        statuses.append(BLACK if c == 0 else WHITE)
    for i in range(len(path) - 1, -1, -1):
        if path[i] > 0:
            path[i] -= 1
            st = statuses[i]
            st = BLACK if path[i] == 0 else WHITE
            for j in range(i + 1, len(path)):
                path[j] = ARITY[st] - 1
                st = WHITE  # a rightmost son is always white
            return Address(a.sector, tuple(path))
    return Address((a.sector - 1) % 7, _rightmost_path(len(a.path)))


def sides(a: Address) -> dict[int, Address]:
    """Local numbering of the seven sides, mapping side -> neighbor.

    Side 1 faces the father and the numbering proceeds counter-clockwise
    (left first).  For a white tile: 1 father, 2 left lateral, 3..5 sons,
    6 nephew, 7 right lateral.  For a black tile the uncle (the tile on
    the left-hand side of the father) takes side 2, pushing the left
    lateral to side 3 and leaving sides 4,5 for the two sons.  The
    nephew is the black son of the right lateral neighbor.  The central
    tile maps side k to sector root k-1.
    """
    if a.is_center():
        return {s + 1: Address(s, ()) for s in range(7)}
    f = father(a)
    pred = lateral_pred(a)
    succ = lateral_succ(a)
    kids = [c for c, _ in sons(a)]
    nephew = sons(succ)[0][0]
    if status(a) == WHITE:
        return {1: f, 2: pred, 3: kids[0], 4: kids[1], 5: kids[2], 6: nephew, 7: succ}
    uncle = lateral_pred(f) if not f.is_center() else Address((a.sector - 1) % 7, ())
    return {1: f, 2: uncle, 3: pred, 4: kids[0], 5: kids[1], 6: nephew, 7: succ}


def global_neighbors(a: Address) -> list[Address]:
    """The seven tiles sharing an edge with ``a`` on the full grid."""
    return [sides(a)[k] for k in range(1, 8)]


def side_of(a: Address, b: Address) -> int | None:
    """Local side number of ``a`` facing ``b``, or None if not adjacent."""
    for k, nb in sides(a).items():
        if nb == b:
            return k
    return None


@dataclass(frozen=True)
class TileRegion:
    """A finite, explicitly materialized, connected set of tiles.

    Regions are the working universe for every bounded check: mantilla
    generation, isocline tracing, distance oracles.  ``tiles`` is sorted
    lexicographically on (sector, path) so serialization is stable.
    """

    center: Address
    radius: int
    tiles: tuple[Address, ...]

    def __contains__(self, a: Address) -> bool:
        return a in self._index

    @property
    def _index(self) -> frozenset:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = frozenset(self.tiles)
            object.__setattr__(self, "_idx", idx)
        return idx

    def interior(self) -> list[Address]:
        """Tiles whose whole flower (all 7 neighbors) lies in the region."""
        return [a for a in self.tiles if all(n in self for n in global_neighbors(a))]

    def to_json(self) -> dict:
        return {
            "center": self.center.to_json(),
            "radius": self.radius,
            "tiles": [t.to_json() for t in self.tiles],
        }

    @staticmethod
    def from_json(obj: dict) -> "TileRegion":
        return TileRegion(
            Address.from_json(obj["center"]),
            obj["radius"],
            tuple(sorted(Address.from_json(t) for t in obj["tiles"])),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def ball(center: Address, r: int) -> TileRegion:
    """All tiles within hop distance r of ``center`` (BFS metric)."""
    if r < 0:
        raise ValueError("radius must be >= 0")
    seen = {center}
    frontier = [center]
    for _ in range(r):
        nxt = []
        for a in frontier:
            for n in global_neighbors(a):
                if n not in seen:
                    seen.add(n)
                    nxt.append(n)
        frontier = nxt
    return TileRegion(center, r, tuple(sorted(seen)))


def neighbors(a: Address, region: TileRegion) -> list[Address]:
    """Neighbors of ``a`` that lie inside ``region``."""
    if a not in region:
        raise RegionError(f"{a} not in region")
    return [n for n in global_neighbors(a) if n in region]


def distance(a: Address, b: Address, region: TileRegion) -> int:
    """Shortest adjacent-tile path length from a to b inside the region.

    The region must be large enough to contain a geodesic; otherwise a
    RegionError is raised rather than silently overestimating.
    """
    if a not in region or b not in region:
        raise RegionError("both endpoints must lie in the region")
    if a == b:
        return 0
    dist = {a: 0}
    frontier = [a]
    while frontier:
        nxt = []
        for t in frontier:
            for n in global_neighbors(t):
                if n in region and n not in dist:
                    dist[n] = dist[t] + 1
                    if n == b:
                        return dist[n]
                    nxt.append(n)
        frontier = nxt
    raise RegionError("region too small: endpoints not connected inside it")
