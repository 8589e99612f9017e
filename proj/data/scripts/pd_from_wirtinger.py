#!/usr/bin/env python3
"""Rebuild a PD code from a Wirtinger presentation whose arcs x1..xn are
numbered along the knot, and keep the choices that give a planar diagram.

Each relator "xa xb xa^-1 xc^-1" with {b, c} = {i, i+1} is the crossing
where arc i passes under arc a into arc i+1. The order in which an arc
passes over its crossings is not recorded in the presentation, so every
ordering is tried and kept when the PD code has n + 2 faces.

usage: pd_from_wirtinger.py "x4 x2 x4^-1 x1^-1" ...
"""
import itertools
import json
import re
import sys


def parse(rel):
    letters = [(int(g), int(e or 1)) for g, e in re.findall(r"x(\d+)(?:\^(-?\d+))?", rel)]
    (a, ea), (b, eb), (a2, ea2), (c, ec) = letters
    assert a == a2 and ea == 1 and eb == 1 and ea2 == -1 and ec == -1, rel
    return a, b, c


def faces(pd):
    where = {}
    for x, cr in enumerate(pd):
        for i, e in enumerate(cr):
            where.setdefault(e, []).append((x, i))
    seen = set()
    count = 0
    for x in range(len(pd)):
        for i in range(4):
            if (x, i) in seen:
                continue
            count += 1
            cur = (x, i)
            while cur not in seen:
                seen.add(cur)
                e = pd[cur[0]][cur[1]]
                other = [p for p in where[e] if p != cur]
                y, j = other[0] if other else cur
                cur = (y, (j + 1) % 4)
    return count


def build(rels, n, over_order):
    # crossings: (under_arc_in, over_arc, sign); under arc i -> i+1
    crossings = []
    for a, b, c in rels:
        if (b % n) + 1 == c:
            crossings.append((b, a, 1))
        elif (c % n) + 1 == b:
            crossings.append((c, a, -1))
        else:
            raise ValueError(f"arcs {b}, {c} are not consecutive")
    # walk: arc i passes over its crossings in over_order[i], then ends
    # going under at the crossing whose under_arc_in is i
    events = []
    for i in range(1, n + 1):
        for x in over_order[i]:
            events.append(("over", x))
        under = [x for x, cr in enumerate(crossings) if cr[0] == i]
        events.append(("under", under[0]))
    m = len(events)
    inc = {}
    for k, ev in enumerate(events):
        edge_in = k if k > 0 else m
        edge_out = k + 1
        inc[ev] = (edge_in, edge_out)
    pd = []
    for x, (_, _, s) in enumerate(crossings):
        ui, uo = inc[("under", x)]
        oi, oo = inc[("over", x)]
        pd.append([ui, oi, uo, oo] if s == 1 else [ui, oo, uo, oi])
    return pd


def main(argv):
    rels = [parse(r) for r in argv]
    n = len(rels)
    over = {i: [x for x, (a, _, _) in enumerate(rels) if a == i] for i in range(1, n + 1)}
    found = []
    for perm in itertools.product(*[list(itertools.permutations(over[i])) for i in range(1, n + 1)]):
        order = {i: perm[i - 1] for i in range(1, n + 1)}
        pd = build(rels, n, order)
        if faces(pd) == n + 2:
            found.append(pd)
    for pd in found:
        print(json.dumps(pd))
    if not found:
        print("no planar ordering", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
