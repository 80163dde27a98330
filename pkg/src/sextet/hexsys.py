"""Hexagonal systems as sets of cells on the hexagonal lattice.

Cells use axial coordinates (q, r) for pointy-top hexagons; the six
neighbours of (q, r) are (q±1, r), (q, r±1), (q+1, r-1), (q-1, r+1).
Vertices live on an integer grid: the centre of cell (q, r) is at
X = 2q + r (units of sqrt(3)/2), Y = 3r (units of 1/2), with Y pointing up.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional


class Cell(NamedTuple):
    q: int
    r: int


Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


class HexSystemError(ValueError):
    pass


class DisconnectedCells(HexSystemError):
    pass


class HasHole(HexSystemError):
    pass


class UnknownFamily(HexSystemError):
    pass


NEIGHBOUR_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))

# top vertex first, then clockwise
VERTEX_OFFSETS = ((0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1))


def neighbours(c: Cell) -> list[Cell]:
    return [Cell(c.q + dq, c.r + dr) for dq, dr in NEIGHBOUR_STEPS]


def cell_center(c: Cell) -> tuple[int, int]:
    return (2 * c.q + c.r, 3 * c.r)


def hexagon_vertices(c: Cell) -> tuple[Vertex, ...]:
    x, y = cell_center(c)
    return tuple((x + dx, y + dy) for dx, dy in VERTEX_OFFSETS)


@dataclass(frozen=True)
class HexSystem:
    cells: frozenset
    vertices: tuple
    edges: frozenset
    hexagons: tuple  # ((Cell, (v0..v5)), ...) sorted by cell

    @property
    def n_hexagons(self) -> int:
        return len(self.cells)

    @cached_property
    def code(self) -> str:
        return canonical_code(self)

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> list[list[int]]:
        idx = self.index
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, v in self.edges:
            adj[idx[u]].append(idx[v])
            adj[idx[v]].append(idx[u])
        for a in adj:
            a.sort()
        return adj

    def hexagon_index_tuples(self) -> list[tuple[int, ...]]:
        idx = self.index
        return [tuple(idx[v] for v in verts) for _, verts in self.hexagons]

    def __repr__(self):
        return f"HexSystem(h={len(self.cells)}, code={self.code!r})"


def _components(cells: frozenset) -> int:
    start = next(iter(cells))
    seen = {start}
    todo = [start]
    while todo:
        c = todo.pop()
        for nb in neighbours(c):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen)


def _has_hole(cells: frozenset) -> bool:
    qs = [c.q for c in cells]
    rs = [c.r for c in cells]
    q0, q1, r0, r1 = min(qs) - 1, max(qs) + 1, min(rs) - 1, max(rs) + 1
    start = Cell(q0, r0)
    seen = {start}
    todo = deque([start])
    while todo:
        c = todo.popleft()
        for nb in neighbours(c):
            if q0 <= nb.q <= q1 and r0 <= nb.r <= r1 and nb not in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    empty_inside = (q1 - q0 + 1) * (r1 - r0 + 1) - len(cells)
    return len(seen) != empty_inside


def _articulation_points(n: int, adj: list[list[int]]) -> set[int]:
    disc = [-1] * n
    low = [0] * n
    out: set[int] = set()
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(adj[w])))
                    if v == root:
                        children += 1
                    advanced = True
                    break
                elif w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if u != root and low[v] >= disc[u]:
                    out.add(u)
        if children > 1:
            out.add(root)
    return out


def build_from_cells(cells: Iterable) -> HexSystem:
    """Build and validate the hexagonal system spanned by the given cells."""
    cs = frozenset(Cell(*c) for c in cells)
    if not cs:
        raise HexSystemError("empty cell set")
    if _components(cs) != len(cs):
        raise DisconnectedCells("cells are not edge-connected")
    if _has_hole(cs):
        raise HasHole("an empty cell is enclosed by the system")
    verts: set[Vertex] = set()
    edges: set[Edge] = set()
    edge_use: dict[Edge, int] = {}
    hexes = []
    for c in sorted(cs):
        hv = hexagon_vertices(c)
        hexes.append((c, hv))
        verts.update(hv)
        for i in range(6):
            e = tuple(sorted((hv[i], hv[(i + 1) % 6])))
            edges.add(e)
            edge_use[e] = edge_use.get(e, 0) + 1
    h = HexSystem(
        cells=cs,
        vertices=tuple(sorted(verts)),
        edges=frozenset(edges),
        hexagons=tuple(hexes),
    )
    _check_invariants(h, edge_use)
    return h


def _check_invariants(h: HexSystem, edge_use: dict) -> None:
    n = len(h.cells)
    if len(h.vertices) > 4 * n + 2:
        raise AssertionError("too many vertices for a hexagonal system")
    if any(k not in (1, 2) for k in edge_use.values()):
        raise AssertionError("an edge lies on more than two hexagons")
    if len(h.edges) != (6 * n + sum(1 for k in edge_use.values() if k == 1)) // 2:
        raise AssertionError("edge count inconsistent with cell sharing")
    # the lattice is bipartite by Y mod 3: top-type vertices have Y = 2 mod 3
    for u, v in h.edges:
        if (u[1] % 3) == (v[1] % 3):
            raise AssertionError("vertex graph is not bipartite")
    if _articulation_points(len(h.vertices), h.adjacency):
        raise AssertionError("vertex graph has a cut vertex")


def is_bipartite(h: HexSystem) -> bool:
    colour = [-1] * len(h.vertices)
    for s in range(len(h.vertices)):
        if colour[s] != -1:
            continue
        colour[s] = 0
        todo = [s]
        while todo:
            v = todo.pop()
            for w in h.adjacency[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    todo.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def is_two_connected(h: HexSystem) -> bool:
    return len(h.vertices) >= 3 and not _articulation_points(len(h.vertices), h.adjacency)


# ---------------------------------------------------------------------------
# symmetry and canonical codes


def _rotate(c: Cell) -> Cell:
    # cube (x, y, z) -> (-z, -x, -y) with x = q, z = r
    return Cell(-c.r, c.q + c.r)


def _reflect(c: Cell) -> Cell:
    # cube (x, y, z) -> (x, z, y)
    return Cell(c.q, -c.q - c.r)


def symmetry_images(cells: Iterable) -> list[frozenset]:
    """The 12 images of a cell set under rotations and reflections (not translated)."""
    base = [Cell(*c) for c in cells]
    out = []
    for flip in (False, True):
        cur = [_reflect(c) for c in base] if flip else list(base)
        for _ in range(6):
            out.append(frozenset(cur))
            cur = [_rotate(c) for c in cur]
    return out


def normalize(cells: Iterable) -> frozenset:
    cs = [Cell(*c) for c in cells]
    q0 = min(c.q for c in cs)
    r0 = min(c.r for c in cs)
    return frozenset(Cell(c.q - q0, c.r - r0) for c in cs)


def serialize(cells: Iterable) -> str:
    """`q,r` pairs joined by `;`, sorted, after shifting min q and min r to 0."""
    return ";".join(f"{c.q},{c.r}" for c in sorted(normalize(cells)))


def canonical_code_of_cells(cells: Iterable) -> str:
    return min(serialize(img) for img in symmetry_images(cells))


def canonical_code(h: HexSystem) -> str:
    return canonical_code_of_cells(h.cells)


def parse_code(code: str) -> frozenset:
    """Inverse of ``serialize``: a cell set from a `q,r;q,r;...` string."""
    cells = []
    for part in code.strip().split(";"):
        part = part.strip()
        if not part:
            continue
        q, r = part.split(",")
        cells.append(Cell(int(q), int(r)))
    if not cells:
        raise HexSystemError(f"empty cell code {code!r}")
    return frozenset(cells)


def from_code(code: str) -> HexSystem:
    return build_from_cells(parse_code(code))


# ---------------------------------------------------------------------------
# enumeration


def enumerate_polyhexes(h_max: int) -> Iterator[HexSystem]:
    """One representative per congruence class of hole-free polyhexes, h <= h_max.

    Grows level by level from canonical representatives only.  Systems with
    holes are kept for growth (a hole-free system may only be reachable
    through one) but never yielded.  Output is ordered by size, then code.
    """
    if h_max < 1:
        raise ValueError("h_max must be positive")
    level = {canonical_code_of_cells([Cell(0, 0)]): frozenset([Cell(0, 0)])}
    size = 1
    while True:
        for code in sorted(level):
            cells = level[code]
            if not _has_hole(cells):
                yield build_from_cells(cells)
        if size == h_max:
            return
        nxt: dict[str, frozenset] = {}
        for cells in level.values():
            frontier = {nb for c in cells for nb in neighbours(c)} - cells
            for nb in frontier:
                grown = cells | {nb}
                code = canonical_code_of_cells(grown)
                if code not in nxt:
                    nxt[code] = parse_code(code)
        level = nxt
        size += 1


def count_by_size(h_max: int) -> dict[int, int]:
    counts = {k: 0 for k in range(1, h_max + 1)}
    for h in enumerate_polyhexes(h_max):
        counts[len(h.cells)] += 1
    return counts


# ---------------------------------------------------------------------------
# named systems and families

NAMED = {
    "benzene": [(0, 0)],
    "naphthalene": [(0, 0), (1, 0)],
    "anthracene": [(0, 0), (1, 0), (2, 0)],
    "phenanthrene": [(0, 0), (1, 0), (1, 1)],
    "triphenylene": [(0, 0), (1, 0), (-1, 1), (0, -1)],
    "pyrene": [(0, 0), (1, 0), (0, 1), (1, -1)],
    "coronene": [(0, 0)] + [s for s in NEIGHBOUR_STEPS],
}


def _pyrene_chain(n: int) -> list:
    # a row of 2n cells with caps alternating above and below
    return (
        [(i, 0) for i in range(2 * n)]
        + [(2 * i, 1) for i in range(n)]
        + [(2 * i + 1, -1) for i in range(n)]
    )


def _line(n: int) -> list:
    return [(i, 0) for i in range(n)]


def _line_m(n: int, m: int) -> list:
    """Zigzag of linear segments (m-1 cells, then m, m, ...) sharing kink cells."""
    steps = ((1, 0), (0, 1))
    cur = (0, 0)
    cells = [cur]
    for _ in range(m - 2):
        cur = (cur[0] + 1, cur[1])
        cells.append(cur)
    for seg in range(1, n):
        dq, dr = steps[seg % 2]
        for _ in range(m - 1):
            cur = (cur[0] + dq, cur[1] + dr)
            cells.append(cur)
    return cells


def _u_chain(n: int) -> list:
    # pyrene units glued along a diagonal, consecutive units sharing one cell
    return (
        [(i, i) for i in range(n)]
        + [(i + 1, i) for i in range(n - 1)]
        + [(i, i + 1) for i in range(n - 1)]
    )


def _v_chain(n: int) -> list:
    return _u_chain(n) + [(n, n - 1)]


FAMILIES = {
    "pyrene": _pyrene_chain,
    "line": _line,
    "u": _u_chain,
    "v": _v_chain,
}


def families_builder(name: str, n: int, m: Optional[int] = None) -> HexSystem:
    """Cell realization of a family member: pyrene, line, line_m (needs m), u, v, or a NAMED system."""
    key = name.replace("-", "_").lower()
    if key in NAMED and key not in FAMILIES:
        return build_from_cells(NAMED[key])
    if n < 1:
        raise ValueError("n must be at least 1")
    if key == "line_m":
        if m is None or m < 2:
            raise ValueError("line_m needs m >= 2")
        return build_from_cells(_line_m(n, m))
    if key not in FAMILIES:
        raise UnknownFamily(f"no cell construction for family {name!r}")
    return build_from_cells(FAMILIES[key](n))
