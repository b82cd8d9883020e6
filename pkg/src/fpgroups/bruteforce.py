"""Exhaustive search for small permutation representations.

Independent of the coset enumerator: generator images are built point by
point by backtracking, trying every admissible image, and a candidate is
kept only if every relator fixes every point.  For a group of order ``n``
the regular action (its multiplication table by generators) is transitive
of degree ``n`` and no transitive action has larger degree, so when the
group has order at most ``max_degree`` the largest degree found is the
group order.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterator, Optional

if TYPE_CHECKING:
    from .presentation import Presentation


def transitive_actions(p: "Presentation", max_degree: int) -> Iterator[list[list[int]]]:
    """Yield each transitive action of degree ``<= max_degree`` once per labelling.

    Points are numbered in order of first appearance, which makes the
    labelling canonical for a given base point.  Each action is returned as
    one image list per generator.  A relator traced from a point with a
    single undefined letter forces that entry; forced entries are recorded
    on a trail and undone on backtrack.
    """
    ngens = len(p.alphabet)
    rels = [list(r.code) for r in p.relators if r.code]
    fwd = [[-1] * max_degree for _ in range(ngens)]
    back = [[-1] * max_degree for _ in range(ngens)]
    trail: list[tuple[int, int, int]] = []

    def image(x: int, pt: int) -> int:
        return fwd[x - 1][pt] if x > 0 else back[-x - 1][pt]

    def assign(g: int, src: int, dst: int):
        fwd[g][src] = dst
        back[g][dst] = src
        trail.append((g, src, dst))

    def undo(mark: int):
        while len(trail) > mark:
            g, src, dst = trail.pop()
            fwd[g][src] = -1
            back[g][dst] = -1

    def propagate(npoints: int) -> bool:
        changed = True
        while changed:
            changed = False
            for start in range(npoints):
                for r in rels:
                    f, i = start, 0
                    while i < len(r):
                        nxt = image(r[i], f)
                        if nxt < 0:
                            break
                        f, i = nxt, i + 1
                    if i == len(r):
                        if f != start:
                            return False
                        continue
                    b, j = start, len(r)
                    while j > i:
                        prv = image(-r[j - 1], b)
                        if prv < 0:
                            break
                        b, j = prv, j - 1
                    if j == i:
                        if f != b:
                            return False
                    elif j == i + 1:
                        x = r[i]
                        g, src, dst = (x - 1, f, b) if x > 0 else (-x - 1, b, f)
                        if fwd[g][src] >= 0 or back[g][dst] >= 0:
                            return False
                        assign(g, src, dst)
                        changed = True
        return True

    def search(npoints: int):
        hole = None
        for pt in range(npoints):
            for g in range(ngens):
                if fwd[g][pt] < 0:
                    hole = (g, pt)
                    break
            if hole:
                break
        if hole is None:
            yield [row[:npoints] for row in fwd]
            return
        g, pt = hole
        targets = [t for t in range(npoints) if back[g][t] < 0]
        if npoints < max_degree:
            targets.append(npoints)
        for t in targets:
            mark = len(trail)
            assign(g, pt, t)
            n2 = max(npoints, t + 1)
            if propagate(n2):
                yield from search(n2)
            undo(mark)

    if ngens == 0:
        yield []
        return
    if propagate(1):
        yield from search(1)


def max_transitive_degree(p: "Presentation", max_degree: int = 13) -> int:
    """Largest degree of a transitive action with at most ``max_degree`` points."""
    best = 0
    for action in transitive_actions(p, max_degree):
        degree = len(action[0]) if action else 1
        best = max(best, degree)
    return best or 1


def order_by_search(p: "Presentation", max_degree: int = 13) -> Optional[int]:
    """Group order, for groups known to have order below ``max_degree``.

    Returns the degree of the largest transitive action found if that action
    is regular (its image group has order equal to its degree), else
    ``None``; also ``None`` when an action of degree ``max_degree`` exists.
    The answer is the order of the largest regular quotient below the bound,
    which equals the group order only under the precondition.  A larger
    group can still get an answer: ``< a | a^20 >`` gives 10.
    """
    best_degree, best_action = 0, None
    for action in transitive_actions(p, max_degree):
        degree = len(action[0]) if action else 1
        if degree > best_degree:
            best_degree, best_action = degree, action
    if best_degree >= max_degree:
        return None
    if best_action and _closure_size(best_action) != best_degree:
        return None
    return best_degree


def _closure_size(action: list[list[int]]) -> int:
    n = len(action[0])
    identity = tuple(range(n))
    gens = [tuple(a) for a in action]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for perm in frontier:
            for g in gens:
                q = tuple(g[perm[i]] for i in range(n))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)
