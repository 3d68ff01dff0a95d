"""Oriented link diagrams in planar-diagram (PD) code form.

A diagram is a sequence of crossings ``X(a,b,c,d)``: the four edge labels
incident to the crossing, listed counterclockwise starting from the
incoming under-strand edge ``a``.  The under-strand runs a -> c; the two
remaining slots b and d belong to the over-strand.  Edge labels run
1..2*N and increase by one (cyclically) along the orientation of each
link component.  Crossingless unknot components, which PD codes cannot
express, are tracked by an explicit ``free_loops`` counter.

Sign convention: a crossing is positive exactly when the over-strand
enters at slot b (so the over-strand, followed along its orientation,
crosses the under-strand from right to left).  With this convention the
table code ``X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)`` is a trefoil of writhe +3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "PDError",
    "PDDiagram",
    "FrontDiagram",
    "parse_pd",
    "render_pd",
    "tb_from_front",
    "cancel_adjacent_r2",
]


class PDError(ValueError):
    """Malformed or inconsistent PD data."""


class _Rec(NamedTuple):
    """A crossing in strand form: who enters/leaves under and over, plus sign."""

    u_in: int
    o_in: int
    u_out: int
    o_out: int
    sign: int

    def tuple4(self) -> tuple[int, int, int, int]:
        # positive crossings have the over-strand entering at slot b
        if self.sign > 0:
            return (self.u_in, self.o_in, self.u_out, self.o_out)
        return (self.u_in, self.o_out, self.u_out, self.o_in)


def _infer_runs(crossings: Sequence[tuple[int, int, int, int]]) -> list[tuple[int, int]]:
    """Partition labels 1..2N into cyclic component runs."""
    n_edges = 2 * len(crossings)
    labels = [lab for x in crossings for lab in x]
    seen: dict[int, int] = {}
    for lab in labels:
        if not isinstance(lab, int) or lab < 1:
            raise PDError(f"edge labels must be positive integers, got {lab!r}")
        seen[lab] = seen.get(lab, 0) + 1
    for lab in range(1, n_edges + 1):
        if seen.get(lab, 0) != 2:
            raise PDError(
                f"edge label {lab} occurs {seen.get(lab, 0)} times, expected exactly 2 "
                f"(labels must cover 1..{n_edges})"
            )
    if set(seen) != set(range(1, n_edges + 1)):
        extra = sorted(set(seen) - set(range(1, n_edges + 1)))
        raise PDError(f"labels outside 1..{n_edges}: {extra}")

    def adjacent(e: int) -> bool:
        # is e+1 the successor of e along some strand?
        for a, b, c, d in crossings:
            if a == e and c == e + 1:
                return True
            if {b, d} == {e, e + 1}:
                return True
        return False

    runs = []
    lo = 1
    for e in range(1, n_edges + 1):
        if e == n_edges or not adjacent(e):
            runs.append((lo, e))
            lo = e + 1
    # validate the cyclic wrap of every run
    for lo, hi in runs:
        ok = False
        for a, b, c, d in crossings:
            if (a == hi and c == lo) or {b, d} == {hi, lo}:
                ok = True
                break
        if not ok:
            raise PDError(
                f"labels {lo}..{hi} do not close up into a component "
                f"(no crossing joins {hi} back to {lo})"
            )
    return runs


class PDDiagram:
    """An oriented link diagram given by PD code plus free unknot loops.

    Immutable; every operation returns a new diagram.
    """

    __slots__ = ("crossings", "free_loops", "_runs", "_over_slot", "_signs")

    def __init__(self, crossings: Iterable[Sequence[int]], free_loops: int = 0):
        crossings = tuple(tuple(x) for x in crossings)
        for i, x in enumerate(crossings):
            if len(x) != 4:
                raise PDError(f"crossing {i}: expected 4 edge labels, got {len(x)}")
        if free_loops < 0:
            raise PDError("free_loops must be non-negative")
        self.crossings = crossings
        self.free_loops = int(free_loops)
        self._runs = tuple(_infer_runs(crossings))
        self._over_slot, self._signs = self._resolve_over_strands()

    # -- orientation bookkeeping ------------------------------------------

    def _succ(self, e: int) -> int:
        for lo, hi in self._runs:
            if lo <= e <= hi:
                return e + 1 if e < hi else lo
        raise PDError(f"label {e} not in any component run")

    def _resolve_over_strands(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Decide for each crossing whether the over-strand enters at b or d."""
        succ = self._succ
        over_slot: list[int | None] = [None] * len(self.crossings)
        used_heads: set[int] = set()

        for i, (a, b, c, d) in enumerate(self.crossings):
            if succ(a) != c:
                raise PDError(
                    f"crossing {i} {self.crossings[i]}: under-strand must run "
                    f"{a} -> succ({a}) = {succ(a)}, not {c}"
                )
            used_heads.add(a)

        ambiguous = []
        for i, (a, b, c, d) in enumerate(self.crossings):
            cand = []
            if succ(b) == d:
                cand.append(1)
            if succ(d) == b:
                cand.append(3)
            if not cand:
                raise PDError(
                    f"crossing {i} {self.crossings[i]}: over-strand slots {b},{d} "
                    f"are not consecutive along any component"
                )
            if len(cand) == 1:
                over_slot[i] = cand[0]
                used_heads.add(self.crossings[i][cand[0]])
            else:
                ambiguous.append(i)

        # two-edge components satisfy both directions; pick the one that keeps
        # every edge entering exactly one crossing (verified globally below)
        for i in ambiguous:
            _, b, _, d = self.crossings[i]
            pick = 1 if b not in used_heads else 3
            over_slot[i] = pick
            used_heads.add(self.crossings[i][pick])

        # final degree check: every edge has one head and one tail occurrence
        head_count: dict[int, int] = {}
        tail_count: dict[int, int] = {}
        for i, (a, b, c, d) in enumerate(self.crossings):
            slot = over_slot[i]
            o_in = self.crossings[i][slot]
            o_out = self.crossings[i][4 - slot]
            for e in (a, o_in):
                head_count[e] = head_count.get(e, 0) + 1
            for e in (c, o_out):
                tail_count[e] = tail_count.get(e, 0) + 1
        for e in range(1, 2 * len(self.crossings) + 1):
            if head_count.get(e, 0) != 1 or tail_count.get(e, 0) != 1:
                raise PDError(
                    f"edge {e} is consumed {head_count.get(e, 0)} times and produced "
                    f"{tail_count.get(e, 0)} times; orientations are inconsistent"
                )
        signs = tuple(1 if s == 1 else -1 for s in over_slot)
        return tuple(over_slot), signs  # type: ignore[arg-type]

    # -- basic queries ------------------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def runs(self) -> tuple[tuple[int, int], ...]:
        return self._runs

    def component_count(self) -> int:
        return len(self._runs) + self.free_loops

    @property
    def is_knot(self) -> bool:
        return self.component_count() == 1

    def crossing_sign(self, index: int) -> int:
        if not 0 <= index < len(self.crossings):
            raise IndexError(f"crossing index {index} out of range")
        return self._signs[index]

    def signs(self) -> tuple[int, ...]:
        return self._signs

    def writhe(self) -> int:
        return sum(self._signs)

    def record(self, index: int) -> _Rec:
        a, b, c, d = self.crossings[index]
        slot = self._over_slot[index]
        return _Rec(a, self.crossings[index][slot], c, self.crossings[index][4 - slot],
                    self._signs[index])

    def records(self) -> list[_Rec]:
        return [self.record(i) for i in range(len(self.crossings))]

    # -- crossing surgeries -------------------------------------------------

    def switch_crossing(self, index: int) -> "PDDiagram":
        """Exchange over and under strands at one crossing (sign negates)."""
        if not 0 <= index < len(self.crossings):
            raise IndexError(f"crossing index {index} out of range")
        new = list(self.crossings)
        a, b, c, d = self.crossings[index]
        if self._over_slot[index] == 1:
            new[index] = (b, c, d, a)  # new under-in is the old over-in b
        else:
            new[index] = (d, a, b, c)
        return PDDiagram(new, self.free_loops)

    def smooth_crossing(self, index: int) -> "PDDiagram":
        """Oriented resolution of one crossing; edges are relabeled from scratch."""
        if not 0 <= index < len(self.crossings):
            raise IndexError(f"crossing index {index} out of range")
        recs = self.records()
        target = recs.pop(index)
        # the oriented smoothing joins under-in with over-out and over-in
        # with under-out, for either sign
        uf = _UnionFind(range(1, 2 * len(self.crossings) + 1))
        uf.union(target.u_in, target.o_out)
        uf.union(target.o_in, target.u_out)
        return _rebuild_from_records(recs, uf, self.free_loops)

    def mirror(self) -> "PDDiagram":
        """Switch every crossing (the mirror-image diagram)."""
        d = self
        for i in range(len(self.crossings)):
            d = d.switch_crossing(i)
        return d

    def reduce_r1(self) -> "PDDiagram":
        """Remove Reidemeister-I curls, iterated to a fixpoint."""
        d = self
        while True:
            idx = None
            for i, r in enumerate(d.records()):
                if r.u_out == r.o_in or r.u_in == r.o_out:
                    idx = i
                    break
            if idx is None:
                return d
            recs = d.records()
            target = recs.pop(idx)
            uf = _UnionFind(range(1, 2 * len(d.crossings) + 1))
            uf.union(target.u_in, target.o_in)
            uf.union(target.u_in, target.u_out)
            uf.union(target.u_in, target.o_out)
            d = _rebuild_from_records(recs, uf, d.free_loops)

    def insert_full_twists(self, site: tuple[int, int], n: int) -> "PDDiagram":
        """Insert n full twists of the two strands carrying the given edges.

        The band is antiparallel: the second site edge's strand traverses
        the twist region opposite to the first, each full twist is a clasp
        of two equal-sign crossings, and the over-strand role alternates
        between the two strands (the pattern of the alternating (2,2n)
        diagram).  The sign of n selects the handedness; n followed by -n
        at the same site cancels by Reidemeister-II moves.
        """
        x, y = site
        if x == y:
            raise PDError("twist site edges must be distinct")
        n_edges = 2 * len(self.crossings)
        for e in (x, y):
            if not 1 <= e <= n_edges:
                raise PDError(f"edge {e} not present in diagram")
        if n == 0:
            return self
        twist_sign = 1 if n > 0 else -1
        k = 2 * abs(n)
        # fresh ids beyond the existing labels
        xs = [x] + [n_edges + 1 + j for j in range(k)]
        ys = [y] + [n_edges + 1 + k + j for j in range(k)]
        recs = []
        for r in self.records():
            # the tail halves keep the old ids; re-point the heads of x and y
            # to the last new segment
            recs.append(_Rec(
                xs[-1] if r.u_in == x else (ys[-1] if r.u_in == y else r.u_in),
                xs[-1] if r.o_in == x else (ys[-1] if r.o_in == y else r.o_in),
                r.u_out, r.o_out, r.sign))
        for j in range(k):
            # the second strand meets the clasp crossings in reverse order,
            # and the over-strand role alternates crossing by crossing; the
            # opposite handedness is the mirror (roles swapped, arrangement
            # reversed), which keeps the same planar 4-valent graph
            if (j % 2 == 0) == (n > 0):
                recs.append(_Rec(ys[k - 1 - j], xs[j], ys[k - j], xs[j + 1],
                                 twist_sign))
            else:
                recs.append(_Rec(xs[j], ys[k - 1 - j], xs[j + 1], ys[k - j],
                                 twist_sign))
        uf = _UnionFind(range(1, n_edges + 2 * k + 1))
        return _rebuild_from_records(recs, uf, self.free_loops)

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        parts = []
        if self.free_loops:
            parts.append(f"loops={self.free_loops}")
        parts.extend("X({},{},{},{})".format(*x) for x in self.crossings)
        return " ".join(parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PDDiagram):
            return NotImplemented
        return self.crossings == other.crossings and self.free_loops == other.free_loops

    def __hash__(self) -> int:
        return hash((self.crossings, self.free_loops))

    def __repr__(self) -> str:
        return f"PDDiagram({self.render()!r})"


class _UnionFind:
    def __init__(self, ids: Iterable[int]):
        self.parent = {i: i for i in ids}

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller id as representative for determinism
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _rebuild_from_records(recs: list[_Rec], uf: _UnionFind, free_loops: int) -> PDDiagram:
    """Relabel an abstract crossing list into a valid PDDiagram.

    Edge ids are first collapsed through the union-find (gluing), strands
    are then traced to assign fresh consecutive labels per component.
    Glued classes that touch no crossing become free loops.
    """
    mapped = [_Rec(uf.find(r.u_in), uf.find(r.o_in), uf.find(r.u_out), uf.find(r.o_out), r.sign)
              for r in recs]
    used = set()
    for r in mapped:
        used.update((r.u_in, r.o_in, r.u_out, r.o_out))
    all_reps = {uf.find(i) for i in uf.parent}
    free_loops += len(all_reps - used)

    heads: dict[int, tuple[int, str]] = {}
    for idx, r in enumerate(mapped):
        for e, kind in ((r.u_in, "u"), (r.o_in, "o")):
            if e in heads:
                raise PDError(f"internal rebuild error: edge id {e} consumed twice")
            heads[e] = (idx, kind)

    def next_edge(e: int) -> int:
        idx, kind = heads[e]
        r = mapped[idx]
        return r.u_out if kind == "u" else r.o_out

    label: dict[int, int] = {}
    nxt = 1
    for start in sorted(used):
        if start in label:
            continue
        e = start
        while e not in label:
            label[e] = nxt
            nxt += 1
            e = next_edge(e)

    tuples = []
    for r in mapped:
        relabeled = _Rec(label[r.u_in], label[r.o_in], label[r.u_out], label[r.o_out], r.sign)
        tuples.append(relabeled.tuple4())
    return PDDiagram(tuples, free_loops)


def cancel_adjacent_r2(d: PDDiagram) -> PDDiagram:
    """Cancel immediately adjacent opposite-sign crossing pairs, to a fixpoint.

    Detects pairs where one strand passes under the other at two consecutive
    crossings with opposite signs (a Reidemeister-II bigon) and removes them.
    """
    while True:
        recs = d.records()
        hit = None
        for i, ri in enumerate(recs):
            for j, rj in enumerate(recs):
                if i == j or ri.sign == rj.sign:
                    continue
                if ri.u_out != rj.u_in:
                    continue
                if ri.o_out == rj.o_in or rj.o_out == ri.o_in:
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            return d
        i, j = hit
        ri, rj = recs[i], recs[j]
        keep = [r for k, r in enumerate(recs) if k not in (i, j)]
        uf = _UnionFind(range(1, 2 * len(d.crossings) + 1))
        uf.union(ri.u_in, ri.u_out)          # under strand: in, shared edge, out
        uf.union(ri.u_in, rj.u_out)
        if ri.o_out == rj.o_in:              # over strand runs the same way
            uf.union(ri.o_in, ri.o_out)
            uf.union(ri.o_in, rj.o_out)
        else:                                # over strand runs the other way
            uf.union(rj.o_in, rj.o_out)
            uf.union(rj.o_in, ri.o_out)
        d = _rebuild_from_records(keep, uf, d.free_loops)


# -- text format ------------------------------------------------------------


def parse_pd(text: str) -> PDDiagram:
    """Parse the PD text format.

    Whitespace-separated tokens ``X(a,b,c,d)``, an optional ``loops=k``
    header, and ``#`` comments running to end of line.
    """
    crossings = []
    loops = 0
    lines = text.splitlines() if text else []
    tokens: list[tuple[str, int, int]] = []
    for ln, line in enumerate(lines, start=1):
        body = line.split("#", 1)[0]
        for tn, tok in enumerate(body.split(), start=1):
            tokens.append((tok, ln, tn))
    for tok, ln, tn in tokens:
        where = f"line {ln}, token {tn}"
        if tok.startswith("loops="):
            try:
                loops = int(tok[len("loops="):])
            except ValueError:
                raise PDError(f"{where}: malformed loop count {tok!r}") from None
            continue
        if not (tok.startswith("X(") and tok.endswith(")")):
            raise PDError(f"{where}: malformed token {tok!r}, expected X(a,b,c,d)")
        fields = tok[2:-1].split(",")
        if len(fields) != 4:
            raise PDError(f"{where}: crossing needs 4 labels, got {len(fields)}")
        try:
            crossings.append(tuple(int(f) for f in fields))
        except ValueError:
            raise PDError(f"{where}: non-integer label in {tok!r}") from None
    try:
        return PDDiagram(crossings, loops)
    except PDError as exc:
        raise PDError(f"invalid PD code: {exc}") from None


def render_pd(d: PDDiagram) -> str:
    return d.render()


# -- Legendrian front bookkeeping -------------------------------------------


@dataclass(frozen=True)
class FrontDiagram:
    """Writhe and cusp count of a Legendrian front projection."""

    writhe: int
    cusps: int

    def __post_init__(self):
        if self.cusps % 2 != 0:
            raise ValueError("cusp count must be even")
        if self.cusps < 2:
            raise ValueError("a nonempty front has at least 2 cusps")


def tb_from_front(front: FrontDiagram) -> int:
    """Thurston-Bennequin number: writhe minus half the number of cusps."""
    return front.writhe - front.cusps // 2
