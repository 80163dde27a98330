"""Slow, independent reference implementations used only by the tests.

None of these share code paths with the package: polyhex orbits are found by
explicit congruence tests between fixed polyhexes, matchings by include or
exclude recursion over an edge list, and polynomials as plain lists.
"""

from __future__ import annotations

from decimal import Decimal, getcontext
from itertools import combinations

# ---------------------------------------------------------------------------
# polynomials as coefficient lists


def pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def padd(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def recurrence_list(f0, f1, a, b, n):
    seq = [f0, f1]
    while len(seq) <= n:
        seq.append(padd(pmul(a, seq[-1]), pmul(b, seq[-2])))
    return seq[n]


def binomial_expand_shift(coeffs, t):
    """Coefficients of f(x + t) via explicit Pascal rows."""
    out = [0] * len(coeffs)
    for k, c in enumerate(coeffs):
        row = [1]
        for _ in range(k):
            row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        for j, r in enumerate(row):
            out[j] += c * r * t ** (k - j)
    return out


# ---------------------------------------------------------------------------
# polyhexes without canonical codes

STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


def _translate_to_origin(cells):
    q0 = min(q for q, _ in cells)
    r0 = min(r for _, r in cells)
    return frozenset((q - q0, r - r0) for q, r in cells)


def fixed_polyhexes(n):
    """All polyhexes with n cells up to translation only."""
    level = {frozenset([(0, 0)])}
    for _ in range(n - 1):
        nxt = set()
        for cells in level:
            for q, r in cells:
                for dq, dr in STEPS:
                    c = (q + dq, r + dr)
                    if c not in cells:
                        nxt.add(_translate_to_origin(cells | {c}))
        level = nxt
    return level


def _cube_images(cells):
    """12 images via cube coordinates (x, y, z) = (q, -q-r, r): signed permutations."""
    out = []
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    for p in perms:
        for sign in (1, -1):
            img = []
            for q, r in cells:
                cube = (q, -q - r, r)
                x, _, z = (sign * cube[p[0]], sign * cube[p[1]], sign * cube[p[2]])
                img.append((x, z))
            out.append(_translate_to_origin(img))
    return out


def congruent(a, b) -> bool:
    return len(a) == len(b) and any(img == b for img in _cube_images(a))


def has_hole(cells) -> bool:
    qs = [q for q, _ in cells]
    rs = [r for _, r in cells]
    box = {(q, r) for q in range(min(qs) - 2, max(qs) + 3) for r in range(min(rs) - 2, max(rs) + 3)}
    empty = box - set(cells)
    start = (min(qs) - 2, min(rs) - 2)
    seen = {start}
    stack = [start]
    while stack:
        q, r = stack.pop()
        for dq, dr in STEPS:
            c = (q + dq, r + dr)
            if c in empty and c not in seen:
                seen.add(c)
                stack.append(c)
    return len(seen) != len(empty)


def free_polyhex_count(n) -> int:
    """Hole-free polyhexes with n cells up to congruence, by pairwise testing."""
    reps = []
    for cells in fixed_polyhexes(n):
        if has_hole(cells):
            continue
        if not any(congruent(cells, r) for r in reps):
            reps.append(cells)
    return len(reps)


# ---------------------------------------------------------------------------
# graphs from cells (own geometry: hexagon corners on a doubled grid)


def hexagon_corners(q, r):
    cx, cy = 2 * q + r, 3 * r
    return [(cx, cy + 2), (cx + 1, cy + 1), (cx + 1, cy - 1), (cx, cy - 2), (cx - 1, cy - 1), (cx - 1, cy + 1)]


def graph_of(cells):
    verts, edges = set(), set()
    hexes = []
    for q, r in cells:
        corners = hexagon_corners(q, r)
        hexes.append(frozenset(corners))
        verts.update(corners)
        for i in range(6):
            edges.add(frozenset((corners[i], corners[(i + 1) % 6])))
    return verts, [tuple(e) for e in edges], hexes


def count_perfect_matchings(verts, edges) -> int:
    """Include/exclude recursion over the edge list."""
    verts = set(verts)
    if len(verts) % 2:
        return 0
    edges = [e for e in edges if e[0] in verts and e[1] in verts]

    def go(i, used, k):
        if 2 * k == len(verts):
            return 1
        if i == len(edges):
            return 0
        u, v = edges[i]
        total = go(i + 1, used, k)
        if u not in used and v not in used:
            total += go(i + 1, used | {u, v}, k + 1)
        return total

    return go(0, frozenset(), 0)


def sextet_coeffs(cells):
    verts, edges, hexes = graph_of(cells)
    counts = {}
    for k in range(len(hexes) + 1):
        for combo in combinations(hexes, k):
            covered = set()
            ok = True
            for h in combo:
                if covered & h:
                    ok = False
                    break
                covered |= h
            if not ok:
                continue
            rest = verts - covered
            if not rest or count_perfect_matchings(rest, edges):
                counts[k] = counts.get(k, 0) + 1
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


def clar_cover_coeffs(cells):
    verts, edges, hexes = graph_of(cells)
    counts = {}
    for k in range(len(hexes) + 1):
        for combo in combinations(hexes, k):
            covered = set()
            ok = True
            for h in combo:
                if covered & h:
                    ok = False
                    break
                covered |= h
            if not ok:
                continue
            rest = verts - covered
            m = count_perfect_matchings(rest, edges) if rest else 1
            if m:
                counts[k] = counts.get(k, 0) + m
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


def matching_poly_bruteforce(n_vertices, edges):
    coeffs = [0] * (n_vertices // 2 + 1)
    for k in range(len(coeffs)):
        for combo in combinations(edges, k):
            ends = [v for e in combo for v in e]
            if len(set(ends)) == len(ends):
                coeffs[k] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


# ---------------------------------------------------------------------------
# numbers


def kekule_pyrene_decimal(n, digits=200) -> int:
    """floor((sqrt2+1)^(2n+2) / (4 sqrt2)) in high-precision decimal arithmetic."""
    getcontext().prec = digits
    r2 = Decimal(2).sqrt()
    v = (r2 + 1) ** (2 * n + 2) / (4 * r2)
    return int(v)  # positive, so truncation is the floor
