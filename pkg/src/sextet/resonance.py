"""Kekulé structures, Clar covers and the sextet-type polynomials of a system.

Everything here is exhaustive enumeration with exact integers.  Matching
recursions always cover the lowest-numbered free vertex first, with
vertices numbered along the longer axis of the drawing so the set of
partially covered vertices stays narrow.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .hexsys import HexSystem, neighbours
from .polyx import Polynomial

ORIENTATIONS = ("odd", "even")


class NotKekulean(ValueError):
    """The system has no perfect matching, so the polynomial is undefined."""


@dataclass(frozen=True)
class _Graph:
    adj: tuple  # neighbour bitmasks
    hexes: tuple  # hexagon vertex masks, same order as HexSystem.hexagons
    hex_cycles: tuple  # per hexagon: the 6 vertex indices from the top, clockwise
    full: int


def _graph(h: HexSystem) -> _Graph:
    order = _vertex_order(h)
    idx = {v: i for i, v in enumerate(order)}
    adj = [0] * len(order)
    for u, v in h.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    cycles = tuple(tuple(idx[v] for v in hv) for _, hv in h.hexagons)
    masks = tuple(sum(1 << i for i in cyc) for cyc in cycles)
    return _Graph(tuple(adj), masks, cycles, (1 << len(order)) - 1)


def _hexes_at(g: _Graph) -> list[list[int]]:
    at: list[list[int]] = [[] for _ in g.adj]
    for j, cyc in enumerate(g.hex_cycles):
        for v in cyc:
            at[v].append(j)
    return at


def _lowbit(x: int) -> int:
    return (x & -x).bit_length() - 1


def _count_matchings(adj, free: int) -> int:
    @lru_cache(maxsize=None)
    def go(free: int) -> int:
        if not free:
            return 1
        v = _lowbit(free)
        rest = free & ~(1 << v)
        cand = adj[v] & rest
        total = 0
        while cand:
            w = cand & -cand
            total += go(rest & ~w)
            cand ^= w
        return total

    return go(free)


def kekule_count(h: HexSystem) -> int:
    """Number of perfect matchings."""
    g = _graph(h)
    return _count_matchings(g.adj, g.full)


def _require_kekulean(g: _Graph) -> None:
    if _count_matchings(g.adj, g.full) == 0:
        raise NotKekulean("system has no Kekulé structure")


def perfect_matchings(h: HexSystem) -> Iterator[frozenset]:
    """Every perfect matching, as a frozenset of (u, v) vertex-coordinate edges."""
    g = _graph(h)
    order = _vertex_order(h)
    yield from (
        frozenset(tuple(sorted((order[a], order[b]))) for a, b in m)
        for m in _matchings(g.adj, g.full)
    )


def _vertex_order(h: HexSystem) -> list:
    verts = h.vertices
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    # X steps by 2 per column, Y by 3 per row
    if (max(xs) - min(xs)) * 3 >= (max(ys) - min(ys)) * 2:
        return sorted(verts, key=lambda v: (v[0], v[1]))
    return sorted(verts, key=lambda v: (v[1], v[0]))


def _matchings(adj, free: int) -> Iterator[list[tuple[int, int]]]:
    stack: list[tuple[int, int]] = []

    def go(free):
        if not free:
            yield list(stack)
            return
        v = _lowbit(free)
        rest = free & ~(1 << v)
        cand = adj[v] & rest
        while cand:
            w = cand & -cand
            stack.append((v, w.bit_length() - 1))
            yield from go(rest & ~w)
            stack.pop()
            cand ^= w

    yield from go(free)


def _independent_hexagon_sets(g: _Graph) -> Iterator[tuple[int, int]]:
    """(hexagon-index bitmask, covered-vertex mask) for every vertex-disjoint set."""
    n = len(g.hexes)

    def go(start, chosen, covered):
        yield chosen, covered
        for j in range(start, n):
            if not g.hexes[j] & covered:
                yield from go(j + 1, chosen | (1 << j), covered | g.hexes[j])

    yield from go(0, 0, 0)


def _coeffs_from_counts(counts: dict) -> Polynomial:
    deg = max(counts) if counts else 0
    return Polynomial([counts.get(k, 0) for k in range(deg + 1)])


def resonant_patterns(h: HexSystem) -> list[frozenset]:
    """All resonant patterns as sets of cells (the empty pattern included)."""
    g = _graph(h)
    _require_kekulean(g)
    cells = [c for c, _ in h.hexagons]
    out = []
    for chosen, covered in _independent_hexagon_sets(g):
        if _count_matchings(g.adj, g.full & ~covered):
            out.append(frozenset(cells[j] for j in range(len(cells)) if chosen >> j & 1))
    return out


def sextet_polynomial(h: HexSystem) -> Polynomial:
    """Counts resonant patterns by size: disjoint hexagon sets whose removal leaves a perfectly matchable rest."""
    g = _graph(h)
    _require_kekulean(g)
    counts: dict[int, int] = {}
    for chosen, covered in _independent_hexagon_sets(g):
        if _count_matchings(g.adj, g.full & ~covered):
            k = bin(chosen).count("1")
            counts[k] = counts.get(k, 0) + 1
    return _coeffs_from_counts(counts)


def clar_covering_polynomial(h: HexSystem) -> Polynomial:
    """Clar covers counted by number of hexagons.

    The lowest free vertex is covered either by an edge or by a whole free
    hexagon through it, so each cover is produced exactly once.
    """
    g = _graph(h)
    _require_kekulean(g)
    at = _hexes_at(g)
    adj, hexes = g.adj, g.hexes

    @lru_cache(maxsize=None)
    def go(free: int) -> tuple:
        if not free:
            return (1,)
        v = _lowbit(free)
        rest = free & ~(1 << v)
        acc: list[int] = []
        cand = adj[v] & rest
        while cand:
            w = cand & -cand
            _acc(acc, go(rest & ~w), 0)
            cand ^= w
        for j in at[v]:
            if hexes[j] & free == hexes[j]:
                _acc(acc, go(free & ~hexes[j]), 1)
        return tuple(acc)

    return Polynomial(list(go(g.full)))


def _acc(acc: list, poly: tuple, shift: int) -> None:
    need = len(poly) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i, c in enumerate(poly):
        acc[i + shift] += c


def clar_covers(h: HexSystem) -> Iterator[tuple[frozenset, frozenset]]:
    """Explicit Clar covers as (hexagon cells, matching edges) pairs."""
    g = _graph(h)
    order = _vertex_order(h)
    cells = [c for c, _ in h.hexagons]
    at = _hexes_at(g)
    hex_stack: list[int] = []
    edge_stack: list[tuple[int, int]] = []

    def go(free):
        if not free:
            yield (
                frozenset(cells[j] for j in hex_stack),
                frozenset(tuple(sorted((order[a], order[b]))) for a, b in edge_stack),
            )
            return
        v = _lowbit(free)
        rest = free & ~(1 << v)
        cand = g.adj[v] & rest
        while cand:
            w = cand & -cand
            edge_stack.append((v, w.bit_length() - 1))
            yield from go(rest & ~w)
            edge_stack.pop()
            cand ^= w
        for j in at[v]:
            if g.hexes[j] & free == g.hexes[j]:
                hex_stack.append(j)
                yield from go(free & ~g.hexes[j])
                hex_stack.pop()

    yield from go(g.full)


def sextet_polynomial_from_covers(h: HexSystem) -> Polynomial:
    """σ recomputed by grouping explicit Clar covers by their hexagon sets."""
    patterns = {hexes for hexes, _ in clar_covers(h)}
    if not patterns:
        raise NotKekulean("system has no Kekulé structure")
    counts: dict[int, int] = {}
    for p in patterns:
        counts[len(p)] = counts.get(len(p), 0) + 1
    return _coeffs_from_counts(counts)


def _proper_edge_masks(g: _Graph, orientation: str) -> list[list[tuple[int, int]]]:
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    # edge e_i joins v_{i-1} and v_i with v_0 the top vertex; "odd" = {e1, e3, e5}
    start = 0 if orientation == "odd" else 1
    out = []
    for cyc in g.hex_cycles:
        out.append([(cyc[i], cyc[(i + 1) % 6]) for i in range(start, 6, 2)])
    return out


def phi_polynomial(h: HexSystem, orientation: str = "odd") -> Polynomial:
    """Perfect matchings counted by their number of proper sextets."""
    g = _graph(h)
    _require_kekulean(g)
    triples = _proper_edge_masks(g, orientation)
    n = len(g.adj)
    counts: dict[int, int] = {}
    for m in _matchings(g.adj, g.full):
        mate = [-1] * n
        for a, b in m:
            mate[a], mate[b] = b, a
        k = sum(1 for tri in triples if all(mate[a] == b for a, b in tri))
        counts[k] = counts.get(k, 0) + 1
    return _coeffs_from_counts(counts)


def clar_number(h: HexSystem) -> int:
    return sextet_polynomial(h).degree


def is_thin(h: HexSystem) -> bool:
    """True unless removing some coronene leaves nothing or a perfectly matchable rest."""
    g = _graph(h)
    cells = [c for c, _ in h.hexagons]
    pos = {c: j for j, c in enumerate(cells)}
    for c in cells:
        ring = neighbours(c)
        if all(nb in pos for nb in ring):
            mask = g.hexes[pos[c]]
            for nb in ring:
                mask |= g.hexes[pos[nb]]
            rest = g.full & ~mask
            if rest == 0 or _count_matchings(g.adj, rest):
                return False
    return True


def matching_generating_polynomial(n_vertices: int, edges: Iterable[tuple[int, int]]) -> Polynomial:
    """Σ_k m(g,k) x^k over k-edge matchings of an abstract simple graph."""
    adj = [0] * n_vertices
    for u, v in edges:
        if u == v:
            raise ValueError("loops are not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    @lru_cache(maxsize=None)
    def go(free: int) -> tuple:
        if not free:
            return (1,)
        v = _lowbit(free)
        rest = free & ~(1 << v)
        acc: list[int] = []
        _acc(acc, go(rest), 0)
        cand = adj[v] & rest
        while cand:
            w = cand & -cand
            _acc(acc, go(rest & ~w), 1)
            cand ^= w
        return tuple(acc)

    return Polynomial(list(go((1 << n_vertices) - 1)))


@dataclass(frozen=True)
class ResonanceProfile:
    code: str
    kekule: int
    clar: int
    s: tuple
    c: tuple
    p: tuple

    def to_json(self) -> dict:
        return {
            "code": self.code,
            "kekule": str(self.kekule),
            "clar": self.clar,
            "s": [str(v) for v in self.s],
            "c": [str(v) for v in self.c],
            "p": [str(v) for v in self.p],
        }


def resonance_profile(h: HexSystem, orientation: str = "odd") -> ResonanceProfile:
    sigma = sextet_polynomial(h)
    chi = clar_covering_polynomial(h)
    phi = phi_polynomial(h, orientation)
    return ResonanceProfile(
        code=h.code,
        kekule=kekule_count(h),
        clar=sigma.degree,
        s=sigma.coeffs,
        c=chi.coeffs,
        p=phi.coeffs,
    )


if sys.getrecursionlimit() < 10000:
    sys.setrecursionlimit(10000)
