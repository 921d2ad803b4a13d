"""Independent brute-force oracles used by the tests.

None of these call into the code paths they check: paths come from a
recursive walk, generators from direct predicates on vertex subsets, and
disjoint pairs from filtering a full Cartesian product.
"""
import itertools

from jetcomplex.grid import Layer


def walk_paths(start, end):
    """Step strings of all monotone paths by recursive walking."""
    out = []

    def rec(cell, steps):
        if cell == end:
            out.append(steps)
            return
        r, c = cell
        if c < end[1]:
            rec((r, c + 1), steps + "R")
        if r < end[0]:
            rec((r + 1, c), steps + "D")

    rec(start, "")
    return out


def cells_of(start, steps):
    r, c = start
    out = [(r, c)]
    for s in steps:
        r, c = (r, c + 1) if s == "R" else (r + 1, c)
        out.append((r, c))
    return out


def disjoint_pairs(upper_end, lower_end):
    ups = walk_paths((1, 1), upper_end)
    lows = walk_paths((2, 1), lower_end)
    return [
        (u, l)
        for u, l in itertools.product(ups, lows)
        if not set(cells_of((1, 1), u)) & set(cells_of((2, 1), l))
    ]


def generator_family(vs):
    """Family tag of a 2- or 3-vertex subset, or ``None``."""
    xs = [v for v in vs if v.layer is Layer.X]
    ys = [v for v in vs if v.layer is Layer.Y]
    if len(vs) == 2:
        if len(xs) == 2:
            a, b = sorted(xs, key=lambda v: v.row)
            if a.row < b.row and a.col > b.col:
                return "A"
        if len(xs) == 1:
            if xs[0].row < ys[0].row and xs[0].col < ys[0].col:
                return "B"
    if len(vs) == 3:
        if len(xs) == 1:
            X = xs[0]
            a, b = sorted(ys, key=lambda v: (v.row, v.col))
            if a.row < b.row <= X.row and X.col < b.col < a.col:
                return "C"
            if X.row < a.row < b.row and b.col < a.col <= X.col:
                return "D"
        if len(ys) == 3:
            a, b, c = sorted(ys, key=lambda v: v.row)
            if a.row < b.row < c.row and a.col > b.col > c.col:
                return "E"
    return None


def brute_generators(shape):
    found = {t: set() for t in "ABCDE"}
    verts = shape.vertices()
    for k in (2, 3):
        for combo in itertools.combinations(verts, k):
            tag = generator_family(combo)
            if tag:
                found[tag].add(frozenset(combo))
    return found


def brute_is_face(shape, vertex_set):
    vs = list(vertex_set)
    for k in (2, 3):
        for combo in itertools.combinations(vs, k):
            if generator_family(combo):
                return False
    return True
