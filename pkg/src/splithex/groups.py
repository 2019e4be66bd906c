"""Graph automorphisms and permutation groups.

The automorphism search is a deterministic individualization-refinement
backtracker: colorings are refined to the coarsest equitable refinement,
the first smallest non-singleton color class is chosen as target cell, and
its vertices are individualized in ascending order.  Candidate
automorphisms are read off discrete colorings by comparison with the first
leaf; discovered automorphisms prune later branches by orbits.

Group orders come from a deterministic Schreier-Sims construction of a base
and strong generating set; the order is the product of the fundamental
orbit lengths.  Permutations are tuples ``p`` with ``p[i]`` the image of
``i``; ``compose(p, q)`` applies p first, then q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hexagon import Graph, IncidenceStructure

Permutation = tuple


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p, then q."""
    return tuple(map(q.__getitem__, p))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def orbits(generators, degree: int) -> tuple:
    """Orbits of <generators> on 0..degree-1, sorted by smallest member."""
    seen = [False] * degree
    out = []
    for start in range(degree):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for g in generators:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
                    frontier.append(y)
        out.append(tuple(sorted(orbit)))
    return tuple(out)


def is_transitive(generators, degree: int) -> bool:
    return len(orbits(generators, degree)) == 1


# ---------------------------------------------------------------------------
# equitable refinement


def refine(graph: Graph, coloring) -> tuple:
    """Coarsest equitable coloring finer than the given one.

    Each round recolors every vertex by the pair (current color, sorted
    multiset of neighbor colors) and renumbers the palette in sorted order,
    so the result commutes with graph relabelings.
    """
    adjacency = graph.adjacency
    n = len(adjacency)
    colors = list(coloring)
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in adjacency[v])))
            for v in range(n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new = [palette[sig] for sig in signatures]
        if new == colors:
            return tuple(new)
        colors = new


def is_equitable(graph: Graph, coloring) -> bool:
    """Every vertex of class i sees the same multiset of classes."""
    per_class = {}
    for v in range(graph.vertex_count):
        profile = tuple(sorted(coloring[w] for w in graph.adjacency[v]))
        prev = per_class.setdefault(coloring[v], profile)
        if prev != profile:
            return False
    return True


# ---------------------------------------------------------------------------
# automorphism search


def is_automorphism(graph: Graph, coloring, p: Permutation) -> bool:
    """Does p preserve both the coloring and the adjacency?"""
    adjacency = graph.adjacency
    if any(coloring[p[v]] != coloring[v] for v in range(len(p))):
        return False
    neighbor_sets = [set(nbrs) for nbrs in adjacency]
    return all(
        {p[w] for w in adjacency[v]} == neighbor_sets[p[v]] for v in range(len(p))
    )


def automorphism_generators(graph: Graph, coloring) -> list:
    """Generators of the color-preserving automorphism group.

    Deterministic: the target cell is the first smallest non-singleton
    class and vertices branch in ascending order, so the generator list is
    reproducible.  Branches reaching a vertex in the same orbit as an
    already-explored sibling (under the automorphisms found so far that fix
    the current individualized prefix) are skipped; off-spine subtrees are
    abandoned as soon as they deliver one automorphism.
    """
    n = graph.vertex_count
    initial = list(coloring)
    found: list[Permutation] = []
    first_leaf: list = [None]

    def individualize(colors, v):
        doubled = [2 * c for c in colors]
        doubled[v] -= 1
        return doubled

    def orbit_of(v, gens):
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return orbit

    def search(colors, prefix, on_spine) -> bool:
        colors = refine(graph, colors)
        cells = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        non_singleton = [c for c in sorted(cells) if len(cells[c]) > 1]

        if not non_singleton:
            ordering = [0] * n
            for v in range(n):
                ordering[colors[v]] = v
            if first_leaf[0] is None:
                first_leaf[0] = ordering
                return False
            candidate = [0] * n
            for i in range(n):
                candidate[first_leaf[0][i]] = ordering[i]
            candidate = tuple(candidate)
            if candidate != identity(n) and is_automorphism(graph, initial, candidate):
                found.append(candidate)
                return True
            return False

        target = min(non_singleton, key=lambda c: (len(cells[c]), c))
        cell = sorted(cells[target])
        explored = []
        delivered = False
        for v in cell:
            if explored:
                stabilizing = [g for g in found if all(g[u] == u for u in prefix)]
                if stabilizing and orbit_of(v, stabilizing) & set(explored):
                    continue
            child_on_spine = on_spine and not explored
            got = search(individualize(colors, v), prefix + [v], child_on_spine)
            explored.append(v)
            delivered = delivered or got
            if got and not on_spine:
                return True
        return delivered

    search(initial, [], True)
    return found


# ---------------------------------------------------------------------------
# Schreier-Sims


class PermutationGroup:
    """A permutation group with a base and strong generating set.

    Built deterministically from the generator list; the order is the
    product of the fundamental orbit lengths along the base.  ``base_hint``
    pre-seeds base points, which makes the stabilizer of a chosen point
    directly available as the second level of the chain.
    """

    def __init__(self, degree: int, generators, base_hint=()):
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"not a permutation of degree {degree}: {g}")
        self.base: list[int] = []
        self._level_gens: list[list] = []
        self._transversals: list[dict] = []
        self._identity = identity(degree)
        for b in base_hint:
            self._append_level(b)
        for g in self.generators:
            self._add(g, 0)

    def _append_level(self, point: int) -> None:
        self.base.append(point)
        self._level_gens.append([])
        self._transversals.append({point: self._identity})

    def _rebuild_orbit(self, level: int) -> None:
        b = self.base[level]
        transversal = {b: self._identity}
        frontier = [b]
        gens = self._level_gens[level]
        while frontier:
            new = []
            for x in frontier:
                ux = transversal[x]
                for s in gens:
                    y = s[x]
                    if y not in transversal:
                        transversal[y] = compose(ux, s)
                        new.append(y)
            frontier = new
        self._transversals[level] = transversal

    def _strip(self, g: Permutation, start: int):
        for i in range(start, len(self.base)):
            x = g[self.base[i]]
            u = self._transversals[i].get(x)
            if u is None:
                return g, i
            g = compose(g, inverse(u))
        return g, len(self.base)

    def _add(self, g: Permutation, start: int) -> None:
        h, level = self._strip(g, start)
        if h == self._identity:
            return
        if level == len(self.base):
            self._append_level(min(i for i in range(self.degree) if h[i] != i))
        for j in range(start, level + 1):
            self._level_gens[j].append(h)
        # Re-close the Schreier condition on every touched level, deepest
        # first; residues found on the way are inserted recursively.
        for j in range(level, start - 1, -1):
            self._rebuild_orbit(j)
            transversal = self._transversals[j]
            for x in sorted(transversal):
                ux = transversal[x]
                for s in self._level_gens[j]:
                    schreier = compose(compose(ux, s), inverse(transversal[s[x]]))
                    self._add(schreier, j + 1)

    @property
    def order(self) -> int:
        n = 1
        for transversal in self._transversals:
            n *= len(transversal)
        return n

    def __contains__(self, g) -> bool:
        h, _ = self._strip(tuple(g), 0)
        return h == self._identity

    def orbits(self) -> tuple:
        return orbits(self.generators, self.degree)

    def stabilizer_generators(self, point: int) -> list:
        """Strong generators of the stabilizer of a point."""
        if self.base and self.base[0] == point:
            chain = self
        else:
            chain = PermutationGroup(self.degree, self.generators, base_hint=(point,))
        return list(chain._level_gens[1]) if len(chain.base) > 1 else []

    def stabilizer_orbit_sizes(self, point: int) -> tuple:
        """Sorted orbit sizes of the point stabilizer (the subdegrees)."""
        gens = self.stabilizer_generators(point)
        return tuple(sorted(len(o) for o in orbits(gens, self.degree)))

    def elements(self):
        """Iterate all group elements, deterministically."""

        def rec(level):
            if level == len(self.base):
                yield self._identity
                return
            transversal = self._transversals[level]
            keys = sorted(transversal)
            for rest in rec(level + 1):
                for x in keys:
                    yield compose(rest, transversal[x])

        return rec(0)


def group_order(generators) -> int:
    """Exact order of the group generated by the given permutations."""
    gens = [tuple(g) for g in generators]
    if not gens:
        return 1
    return PermutationGroup(len(gens[0]), gens).order


# ---------------------------------------------------------------------------
# the two degree-63 actions


@dataclass(frozen=True)
class CharacterWitness:
    """A group element whose fixed-point counts on points and lines differ.

    Its existence separates the two permutation characters, so the two
    degree-63 actions are not equivalent.
    """

    on_points: Permutation
    on_lines: Permutation
    fixed_points: int
    fixed_lines: int


def preserves_incidence(
    structure: IncidenceStructure, point_perm: Permutation, line_perm: Permutation
) -> bool:
    """Post-hoc check that a (point, line) permutation pair maps every line
    onto the line its index is sent to, preserving all incidences."""
    index = structure.point_index()
    as_indices = [frozenset(index[p] for p in line) for line in structure.lines]
    return all(
        frozenset(point_perm[i] for i in line) == as_indices[line_perm[j]]
        for j, line in enumerate(as_indices)
    )


def induced_actions(group: PermutationGroup, structure: IncidenceStructure):
    """Split incidence-graph automorphisms into the point and line actions.

    Generators must preserve the bipartition (points first, then lines);
    a part-swapping generator raises ``duality detected``.
    """
    npts = len(structure.points)
    nlines = len(structure.lines)
    if group.degree != npts + nlines:
        raise ValueError(
            f"degree {group.degree} does not match {npts} points + {nlines} lines"
        )
    point_gens, line_gens = [], []
    for g in group.generators:
        if any(g[i] >= npts for i in range(npts)):
            raise ValueError("duality detected: a generator exchanges points and lines")
        point_gens.append(g[:npts])
        line_gens.append(tuple(x - npts for x in g[npts:]))
    return (
        PermutationGroup(npts, point_gens, base_hint=(0,)),
        PermutationGroup(nlines, line_gens, base_hint=(0,)),
    )


def nonequivalence_certificate(point_action, line_action):
    """Scan the group for an element with differing fixed-point counts.

    The two actions must carry corresponding generator lists.  Elements are
    enumerated in a fixed order and the first separating element is
    returned; if the scan exhausts the group without finding one, returns
    None (no certificate -- not a proof of equivalence).
    """
    if len(point_action.generators) != len(line_action.generators):
        raise ValueError("generator lists do not correspond")
    npts = point_action.degree
    nlines = line_action.degree
    diagonal = [
        gp + tuple(x + npts for x in gl)
        for gp, gl in zip(point_action.generators, line_action.generators)
    ]
    joint = PermutationGroup(npts + nlines, diagonal)
    for g in joint.elements():
        fixed_points = sum(1 for i in range(npts) if g[i] == i)
        fixed_lines = sum(1 for i in range(npts, npts + nlines) if g[i] == i)
        if fixed_points != fixed_lines:
            return CharacterWitness(
                on_points=g[:npts],
                on_lines=tuple(x - npts for x in g[npts:]),
                fixed_points=fixed_points,
                fixed_lines=fixed_lines,
            )
    return None
