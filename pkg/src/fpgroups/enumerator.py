"""HLT coset enumeration with immediate coincidence processing.

Columns of the coset table are ``2*i`` for generator ``i`` and ``2*i + 1``
for its inverse.  Undefined entries hold ``-1``.  Coset ids are never
reused; a coset is live iff it is its own union-find root.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional, Sequence

from .word import IncompatibleAlphabetsError

if TYPE_CHECKING:
    from .presentation import Presentation
    from .word import Word

DEFAULT_MAX_COSETS = 1_000_000


class _Exhausted(Exception):
    pass


def _columns(w: "Word") -> list[int]:
    return [2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1 for x in w.code]


@dataclass
class Stats:
    defined: int = 1
    coincidences: int = 0
    scans: int = 0


class CosetTable:
    def __init__(self, ngens: int, max_cosets: int = DEFAULT_MAX_COSETS,
                 max_live: Optional[int] = None):
        self.ngens = ngens
        self.width = 2 * ngens
        self.rows: list[list[int]] = [[-1] * self.width]
        self.parent: list[int] = [0]
        self.max_cosets = max_cosets
        self.max_live = max_live if max_live is not None else max_cosets
        self.live = 1
        self.stats = Stats()

    @property
    def next_unused(self) -> int:
        return len(self.rows)

    def rep(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def live_cosets(self) -> list[int]:
        return [c for c in range(len(self.rows)) if self.parent[c] == c]

    def define(self, c: int, x: int) -> int:
        if len(self.rows) >= self.max_cosets or self.live >= self.max_live:
            raise _Exhausted
        d = len(self.rows)
        self.rows.append([-1] * self.width)
        self.parent.append(d)
        self.rows[c][x] = d
        self.rows[d][x ^ 1] = c
        self.live += 1
        self.stats.defined += 1
        return d

    def _merge(self, k: int, l: int, queue: list[int]):
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        lo, hi = (k, l) if k < l else (l, k)
        self.parent[hi] = lo
        queue.append(hi)
        self.live -= 1
        self.stats.coincidences += 1

    def coincidence(self, a: int, b: int):
        rows = self.rows
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = rows[g]
            for x in range(self.width):
                d = row[x]
                if d < 0:
                    continue
                rows[d][x ^ 1] = -1
                mu, nu = self.rep(g), self.rep(d)
                if rows[mu][x] >= 0:
                    self._merge(nu, rows[mu][x], queue)
                elif rows[nu][x ^ 1] >= 0:
                    self._merge(mu, rows[nu][x ^ 1], queue)
                else:
                    rows[mu][x] = nu
                    rows[nu][x ^ 1] = mu

    def scan_and_fill(self, c: int, w: Sequence[int]):
        rows = self.rows
        self.stats.scans += 1
        f = b = c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and rows[f][w[i]] >= 0:
                f = rows[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and rows[b][w[j] ^ 1] >= 0:
                b = rows[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                rows[f][w[i]] = b
                rows[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def compact(self) -> "CosetTable":
        """Renumber live cosets 0..n-1, keeping the order of their ids."""
        live = self.live_cosets()
        index = {c: k for k, c in enumerate(live)}
        t = CosetTable(self.ngens, self.max_cosets, self.max_live)
        t.rows = [[index.get(e, -1) if e >= 0 else -1 for e in self.rows[c]] for c in live]
        t.parent = list(range(len(live)))
        t.live = len(live)
        t.stats = self.stats
        return t

    def dump(self, names: Sequence[str]) -> str:
        """Text dump: a header, then ``id`` followed by the image under each column."""
        cols = []
        for n in names:
            cols += [n, f"{n}^-1"]
        lines = [f"# cosets {self.live}", "# coset " + " ".join(cols)]
        for c in self.live_cosets():
            lines.append(" ".join(str(x) for x in [c] + self.rows[c]))
        return "\n".join(lines) + "\n"


@dataclass
class EnumerationResult:
    completed: bool
    index: Optional[int]
    live: int
    stats: Stats
    table: Optional[CosetTable] = field(default=None, repr=False)

    @property
    def outcome(self) -> str:
        return f"completed({self.index})" if self.completed else \
            f"exhausted(live={self.live}, defined={self.stats.defined})"


def enumerate_cosets(p: "Presentation", subgroup: Sequence["Word"] = (),
                     max_cosets: int = DEFAULT_MAX_COSETS,
                     max_live: Optional[int] = None) -> EnumerationResult:
    """Enumerate cosets of the subgroup generated by ``subgroup``.

    Relators are scanned in presentation order at each coset in increasing
    id.  Hitting a limit gives an exhausted result, which proves nothing.
    """
    for w in subgroup:
        if w.alphabet != p.alphabet:
            raise IncompatibleAlphabetsError(f"subgroup generator {w} is not over {p.alphabet!r}")
    rels = [_columns(r) for r in p.relators if r.code]
    t = CosetTable(len(p.alphabet), max_cosets, max_live)
    try:
        for w in subgroup:
            if w.code:
                t.scan_and_fill(0, _columns(w))
        c = 0
        while c < len(t.rows):
            for r in rels:
                if t.parent[c] != c:
                    break
                t.scan_and_fill(c, r)
            if t.parent[c] == c:
                row = t.rows[c]
                for x in range(t.width):
                    if row[x] < 0:
                        t.define(c, x)
            c += 1
    except _Exhausted:
        return EnumerationResult(False, None, t.live, t.stats, t)
    return EnumerationResult(True, t.live, t.live, t.stats, t)


@dataclass
class TableCheck:
    ok: bool
    message: str = ""

    def __bool__(self):
        return self.ok


def verify_table(t: CosetTable, p: "Presentation", subgroup: Sequence["Word"] = ()) -> TableCheck:
    """Re-check a finished table: complete, inverse-closed, every relator closes everywhere."""
    if t.width != 2 * len(p.alphabet):
        return TableCheck(False, "table width does not match the alphabet")
    live = [c for c in range(len(t.rows)) if t.parent[c] == c]
    live_set = set(live)
    if 0 not in live_set:
        return TableCheck(False, "coset 0 is not live")
    for c in live:
        for x in range(t.width):
            d = t.rows[c][x]
            if d not in live_set:
                return TableCheck(False, f"coset {c} column {x} is {d}, not a live coset")
            if t.rows[d][x ^ 1] != c:
                return TableCheck(False, f"coset {c} column {x} -> {d} has no inverse entry")
    for k, r in enumerate(p.relators, 1):
        cols = _columns(r)
        for c in live:
            e = c
            for x in cols:
                e = t.rows[e][x]
            if e != c:
                return TableCheck(False, f"relator r{k} does not close at coset {c}")
    for w in subgroup:
        e = 0
        for x in _columns(w):
            e = t.rows[e][x]
        if e != 0:
            return TableCheck(False, f"subgroup generator {w} does not fix coset 0")
    return TableCheck(True, f"{len(live)} cosets verified")
