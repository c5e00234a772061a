"""Combinatorial hexagon complexes.

A complex is a set of colored hexagons with their y-sides glued in
pairs.  Slots are numbered 0..5 counterclockwise around each hexagon,
even slots being x-sides (boundary arcs) and odd slots y-sides (seams).
Gluing a pair of y-slots identifies their endpoints: with
``reversed=False`` the two sides are matched start-to-start (the
natural identification of two hexagons facing each other), with
``reversed=True`` start-to-end.

Derived structure: one edge per glued pair, one x-arc per x-slot,
boundary components traced through the identified corners, and the
embedded-normal-curve edge cycles used by the feasibility polytope.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

Slot = tuple[int, int]  # (hexagon index, position 0..5)

Y_POSITIONS = (1, 3, 5)
X_POSITIONS = (0, 2, 4)


class InvalidComplexError(ValueError):
    """Gluing description does not define a valid complex."""


def opposite_position(p: int) -> int:
    return (p + 3) % 6


@dataclass(frozen=True)
class BoundaryCycle:
    """One boundary circle: its x-arcs in cyclic order and the induced
    boundary edge cycle (edge between consecutive arcs)."""

    arcs: tuple[int, ...]
    edges: tuple[int, ...]
    # step i joins edges[i] and edges[i+1]; steps[i] = (hexagon, y-pos, y-pos)
    steps: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class EdgeCycle:
    """Closed edge cycle realized by a normal curve.

    ``edges[i]`` is crossed between steps i-1 and i; ``steps[i]`` is the
    corner arc (hexagon, y-position entered, y-position left) joining
    edges[i] and edges[i+1].  ``corner_arcs[i]`` is the x-arc cut off by
    that corner, the arc adjacent to both edges of the step.
    """

    edges: tuple[int, ...]
    steps: tuple[tuple[int, int, int], ...]
    corner_arcs: tuple[int, ...]

    def multiplicities(self, num_edges: int) -> tuple[int, ...]:
        counts = [0] * num_edges
        for e in self.edges:
            counts[e] += 1
        return tuple(counts)

    @property
    def fundamental(self) -> bool:
        counts: dict[int, int] = {}
        for e in self.edges:
            counts[e] = counts.get(e, 0) + 1
        return all(c <= 2 for c in counts.values())

    def canonical_key(self, num_edges: int) -> tuple[int, ...]:
        return self.multiplicities(num_edges)


@dataclass(frozen=True)
class CycleEnumeration:
    cycles: tuple[EdgeCycle, ...]
    truncated: bool


@dataclass
class HexComplex:
    """Immutable (after construction) hexagon complex."""

    n: int
    gluings: list[tuple[Slot, Slot, bool]]
    labels: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.n <= 0 or self.n % 2 != 0:
            raise InvalidComplexError(f"hexagon count must be positive even, got {self.n}")
        if len(self.gluings) != 3 * self.n // 2:
            raise InvalidComplexError(
                f"expected {3 * self.n // 2} gluing pairs, got {len(self.gluings)}"
            )
        self._edge_of_yslot: dict[Slot, int] = {}
        for e, (a, b, rev) in enumerate(self.gluings):
            for s in (a, b):
                h, p = s
                if not (0 <= h < self.n):
                    raise InvalidComplexError(f"hexagon index out of range in slot {s}")
                if p % 2 == 0:
                    raise InvalidComplexError(f"x-slot {s} cannot appear in a gluing")
                if not (0 <= p < 6):
                    raise InvalidComplexError(f"slot position out of range in slot {s}")
                if s in self._edge_of_yslot:
                    raise InvalidComplexError(f"y-slot {s} glued twice")
                self._edge_of_yslot[s] = e
            if a == b:
                raise InvalidComplexError(f"slot {a} glued to itself")
        if len(self._edge_of_yslot) != 3 * self.n:
            raise InvalidComplexError("some y-slot left unglued")
        if not self.labels:
            self.labels = [f"e{i}" for i in range(self.num_edges)]
        elif len(self.labels) != self.num_edges:
            raise InvalidComplexError("label list length differs from edge count")
        elif len(set(self.labels)) != self.num_edges:
            raise InvalidComplexError("duplicate edge labels")
        self._check_connected()
        # corner identifications: hexagon-vertex -> its partner vertex
        self._vertex_partner: dict[Slot, Slot] = {}
        for (h1, q1), (h2, q2), rev in self.gluings:
            if rev:
                pairs = [((h1, q1), (h2, (q2 + 1) % 6)), ((h1, (q1 + 1) % 6), (h2, q2))]
            else:
                pairs = [((h1, q1), (h2, q2)), ((h1, (q1 + 1) % 6), (h2, (q2 + 1) % 6))]
            for u, v in pairs:
                self._vertex_partner[u] = v
                self._vertex_partner[v] = u
        self._boundary = self._trace_boundary()

    # -- basic counts ------------------------------------------------

    @property
    def num_edges(self) -> int:
        return 3 * self.n // 2

    @property
    def num_arcs(self) -> int:
        return 3 * self.n

    def euler_characteristic(self) -> int:
        return -self.n // 2

    # -- indexing ----------------------------------------------------

    def arc_index(self, slot: Slot) -> int:
        h, p = slot
        if p % 2 != 0:
            raise InvalidComplexError(f"slot {slot} is not an x-slot")
        return 3 * h + p // 2

    def arc_slot(self, arc: int) -> Slot:
        return (arc // 3, 2 * (arc % 3))

    def arcs_of_hexagon(self, h: int) -> tuple[int, int, int]:
        return (3 * h, 3 * h + 1, 3 * h + 2)

    def edge_of_yslot(self, slot: Slot) -> int:
        return self._edge_of_yslot[slot]

    def edge_slots(self, e: int) -> tuple[Slot, Slot]:
        a, b, _ = self.gluings[e]
        return a, b

    def edges_of_hexagon(self, h: int) -> tuple[int, int, int]:
        """Edges at y-positions 1, 3, 5 (with repetition if self-glued)."""
        return tuple(self._edge_of_yslot[(h, q)] for q in Y_POSITIONS)

    def label_index(self, label: str) -> int:
        return self.labels.index(label)

    # -- facing / adjacency -------------------------------------------

    def opposite_x_slot(self, slot: Slot) -> Slot:
        h, p = slot
        if p % 2 == 0:
            raise InvalidComplexError(f"slot {slot} is not a y-slot")
        return (h, opposite_position(p))

    def facing_arcs(self, e: int) -> tuple[int, int]:
        """The two x-arcs opposite the glued y-slots of edge e; always
        distinct slots, even for a self-glued hexagon."""
        a, b = self.edge_slots(e)
        return (self.arc_index(self.opposite_x_slot(a)), self.arc_index(self.opposite_x_slot(b)))

    def arc_to_edge(self, arc: int) -> tuple[int, int]:
        """Inverse of facing_arcs: the (edge, side) pair an x-arc faces."""
        h, p = self.arc_slot(arc)
        y = (h, opposite_position(p))
        e = self._edge_of_yslot[y]
        return e, 0 if self.gluings[e][0] == y else 1

    def adjacent_arcs(self, e: int) -> list[int]:
        """The four x-arcs at positions +-1 of the glued y-slots, with
        multiplicity."""
        out = []
        for h, q in self.edge_slots(e):
            out.append(self.arc_index((h, (q - 1) % 6)))
            out.append(self.arc_index((h, (q + 1) % 6)))
        return out

    # -- boundary ------------------------------------------------------

    def _x_slot_at_vertex(self, v: Slot) -> Slot:
        h, p = v
        return (h, p if p % 2 == 0 else (p - 1) % 6)

    def _y_slot_at_vertex(self, v: Slot) -> Slot:
        h, p = v
        return (h, p if p % 2 == 1 else (p - 1) % 6)

    def _trace_boundary(self) -> list[BoundaryCycle]:
        seen: set[int] = set()
        cycles = []
        for start in range(self.num_arcs):
            if start in seen:
                continue
            arcs: list[int] = []
            edges: list[int] = []
            steps: list[tuple[int, int, int]] = []
            arc = start
            h, p = self.arc_slot(arc)
            exit_vertex = (h, (p + 1) % 6)
            # each step leaves the current arc through exit_vertex, jumps
            # to its identified partner corner, and enters the x-arc there
            while True:
                arcs.append(arc)
                seen.add(arc)
                partner = self._vertex_partner[exit_vertex]
                edges.append(self._edge_of_yslot[self._y_slot_at_vertex(exit_vertex)])
                next_arc = self.arc_index(self._x_slot_at_vertex(partner))
                nh, np_ = self.arc_slot(next_arc)
                entered_y = self._y_slot_at_vertex(partner)[1]
                if partner == (nh, np_):
                    next_exit = (nh, (np_ + 1) % 6)
                else:
                    next_exit = (nh, np_)
                other_y = self._y_slot_at_vertex(next_exit)[1]
                # corner containing the next arc, joining this edge and
                # the next one
                steps.append((nh, entered_y, other_y))
                if next_arc == start:
                    break
                arc = next_arc
                exit_vertex = next_exit
            # edges[i] sits between arcs[i] and arcs[i+1]; steps[i] is the
            # corner containing arcs[i+1], joining edges[i] and edges[i+1].
            cycles.append(
                BoundaryCycle(arcs=tuple(arcs), edges=tuple(edges), steps=tuple(steps))
            )
        return cycles

    def boundary_components(self) -> list[BoundaryCycle]:
        return list(self._boundary)

    def boundary_edge_cycles(self) -> list[EdgeCycle]:
        """Boundary components as edge cycles (always fundamental)."""
        out = []
        for bc in self._boundary:
            k = len(bc.edges)
            corner_arcs = tuple(bc.arcs[(i + 1) % k] for i in range(k))
            out.append(EdgeCycle(edges=bc.edges, steps=bc.steps, corner_arcs=corner_arcs))
        return out

    def _check_connected(self) -> None:
        adj: dict[int, set[int]] = {h: set() for h in range(self.n)}
        for (h1, _), (h2, _), _ in self.gluings:
            adj[h1].add(h2)
            adj[h2].add(h1)
        seen = {0}
        stack = [0]
        while stack:
            h = stack.pop()
            for g in adj[h]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        if len(seen) != self.n:
            raise InvalidComplexError("complex is disconnected")

    # -- normal-curve edge cycles ---------------------------------------

    def _resolve_weights(self, w: tuple[int, ...]) -> list[EdgeCycle] | None:
        """Canonical embedded multicurve with edge crossing counts w.

        Returns None when w is not realizable (a corner count would be
        negative or fractional); otherwise the list of components as
        edge cycles.
        """
        # corner counts per hexagon: corner (q, q+2) between y-slots
        corner: dict[tuple[int, int], int] = {}
        for h in range(self.n):
            wq = {q: w[self._edge_of_yslot[(h, q)]] for q in Y_POSITIONS}
            for q in Y_POSITIONS:
                q2 = (q + 2) % 6
                q4 = (q + 4) % 6
                twice = wq[q] + wq[q2] - wq[q4]
                if twice < 0 or twice % 2 != 0:
                    return None
                corner[(h, q)] = twice // 2
        # crossing points: (yslot, position ordered from the slot's ccw
        # start vertex).  Connect them within hexagons (corner arcs) and
        # across edges (the gluing identification).
        def corner_partner(slot: Slot, pos: int) -> tuple[Slot, int, tuple[int, int, int]]:
            h, q = slot
            q_prev = (q - 2) % 6
            a_prev = corner[(h, q_prev)]  # corner (q-2, q)
            a_next = corner[(h, q)]       # corner (q, q+2)
            if pos < a_prev:
                # j-th innermost arc of corner (q-2, q): here at position
                # j counted from vertex q, i.e. pos = j
                j = pos
                other = (h, q_prev)
                wq = corner[(h, (q_prev - 2) % 6)] + a_prev
                return other, wq - 1 - j, (h, q, q_prev)
            j = a_prev + a_next - 1 - pos
            other = (h, (q + 2) % 6)
            return other, j, (h, q, (q + 2) % 6)

        def cross_partner(slot: Slot, pos: int) -> tuple[Slot, int, int]:
            e = self._edge_of_yslot[slot]
            a, b, rev = self.gluings[e]
            other = b if slot == a else a
            we = w[e]
            return other, (we - 1 - pos) if rev else pos, e

        visited: set[tuple[Slot, int]] = set()
        components: list[EdgeCycle] = []
        for h in range(self.n):
            for q in Y_POSITIONS:
                slot = (h, q)
                for pos in range(w[self._edge_of_yslot[slot]]):
                    if (slot, pos) in visited:
                        continue
                    edges: list[int] = []
                    steps: list[tuple[int, int, int]] = []
                    corner_arcs: list[int] = []
                    cur = (slot, pos)
                    while cur not in visited:
                        visited.add(cur)
                        nxt_slot, nxt_pos, step = corner_partner(*cur)
                        sh, q_in, q_out = step
                        steps.append(step)
                        # the x-slot between y-slots q_in and q_out is the
                        # even position strictly between them
                        mid = (q_in + 1) % 6 if (q_in + 2) % 6 == q_out else (q_out + 1) % 6
                        corner_arcs.append(self.arc_index((sh, mid)))
                        visited.add((nxt_slot, nxt_pos))
                        cslot, cpos, e = cross_partner(nxt_slot, nxt_pos)
                        edges.append(e)
                        cur = (cslot, cpos)
                    # edges[i] is crossed after steps[i]; rotate so that
                    # steps[i] joins edges[i] and edges[i+1]
                    k = len(edges)
                    edges_rot = tuple(edges[(i - 1) % k] for i in range(k))
                    components.append(
                        EdgeCycle(
                            edges=edges_rot,
                            steps=tuple(steps),
                            corner_arcs=tuple(corner_arcs),
                        )
                    )
        return components

    def enumerate_fundamental_cycles(self, limit: int = 200) -> CycleEnumeration:
        """All connected embedded normal curves crossing each edge at
        most twice, one per crossing-weight vector (this quotients by
        rotation and reversal).  Includes every boundary edge cycle.
        Stops after `limit` cycles and flags the truncation."""
        m = self.num_edges
        if 3 ** m > 2_000_000:
            raise ValueError(
                "cycle enumeration is exponential; use the LP feasibility test"
            )
        cycles: list[EdgeCycle] = []
        truncated = False
        for w in itertools.product((0, 1, 2), repeat=m):
            if not any(w):
                continue
            comps = self._resolve_weights(w)
            if comps is None or len(comps) != 1:
                continue
            if len(cycles) >= limit:
                truncated = True
                break
            cycles.append(comps[0])
        return CycleEnumeration(cycles=tuple(cycles), truncated=truncated)


def build(doc: dict) -> HexComplex:
    """Build a complex from the triangulation-file dictionary:
    {"hexagons": n, "gluings": [{"a": [h,p], "b": [h,p], "reversed": bool}],
     "labels": [...] optional}."""
    try:
        n = int(doc["hexagons"])
        raw = doc["gluings"]
    except (KeyError, TypeError) as exc:
        raise InvalidComplexError(f"malformed triangulation description: {exc}") from exc
    gluings = []
    for g in raw:
        try:
            a = (int(g["a"][0]), int(g["a"][1]))
            b = (int(g["b"][0]), int(g["b"][1]))
            rev = bool(g.get("reversed", False))
        except (KeyError, TypeError, IndexError) as exc:
            raise InvalidComplexError(f"malformed gluing entry {g!r}") from exc
        gluings.append((a, b, rev))
    labels = list(doc.get("labels", []))
    return HexComplex(n=n, gluings=gluings, labels=labels)
