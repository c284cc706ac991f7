"""Finite subsets of F as subgraphs of its Cayley graph on {x0, x1}.

A finite set of elements spans a subgraph of the Cayley graph; its
density is the average number of the four oriented generator edges that
stay inside the set, an exact rational strictly below 4.  This module
builds balls by breadth-first search, computes densities and per-class
histograms, translates and filters sets, and checks the vertex-deletion
density bound.  All arithmetic uses fractions.Fraction; nothing here
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .classify import ClassLabel, class_of
from .words import NormalForm, nf_multiply

DEFAULT_ELEMENT_LIMIT = 1_000_000

# right-multiplication alphabet, in fixed BFS order
GENERATORS: tuple[NormalForm, ...] = (
    NormalForm((0,), ()),
    NormalForm((), (0,)),
    NormalForm((1,), ()),
    NormalForm((), (1,)),
)


class ResourceLimitError(RuntimeError):
    """Raised when a ball would exceed the configured element limit."""


def _sort_key(nf: NormalForm) -> str:
    return str(nf)


@dataclass(frozen=True)
class ElementSet:
    """A finite set of group elements keyed by their normal forms."""

    members: frozenset[NormalForm]

    @classmethod
    def of(cls, elements: Iterable[NormalForm]) -> "ElementSet":
        return cls(frozenset(elements))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[NormalForm]:
        return iter(self.members)

    def __contains__(self, nf: NormalForm) -> bool:
        return nf in self.members

    def __le__(self, other: "ElementSet") -> bool:
        return self.members <= other.members

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.members & other.members)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.members | other.members)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.members - other.members)

    def sorted_members(self) -> list[NormalForm]:
        """Members ordered by formatted normal form; the order every
        output format uses."""
        return sorted(self.members, key=_sort_key)


@dataclass(frozen=True)
class SubgraphStats:
    """Vertex count, oriented edge count, and their exact quotient."""

    vertex_count: int
    oriented_edge_count: int
    density: Fraction

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("vertex count must be positive")
        if self.density != Fraction(self.oriented_edge_count, self.vertex_count):
            raise ValueError("density must equal oriented_edge_count/vertex_count")
        if not 0 <= self.density < 4:
            raise ValueError(f"density {self.density} outside [0, 4)")


@lru_cache(maxsize=8)
def _ball_members(n: int, limit: int) -> frozenset[NormalForm]:
    identity = NormalForm()
    seen: dict[NormalForm, None] = {identity: None}
    frontier = [identity]
    for radius in range(1, n + 1):
        next_frontier: list[NormalForm] = []
        for v in frontier:
            for g in GENERATORS:
                w = nf_multiply(v, g)
                if w not in seen:
                    if len(seen) >= limit:
                        raise ResourceLimitError(
                            f"element limit {limit} exceeded at radius {radius} "
                            f"(radius {radius - 1} completed)"
                        )
                    seen[w] = None
                    next_frontier.append(w)
        frontier = next_frontier
    return frozenset(seen)


def ball(n: int, limit: int = DEFAULT_ELEMENT_LIMIT) -> ElementSet:
    """All elements of word length at most n in {x0^+-1, x1^+-1}, by
    breadth-first search from the identity.  Deterministic content;
    raises ResourceLimitError when the set would exceed `limit`."""
    if n < 0:
        raise ValueError("radius must be non-negative")
    return ElementSet(_ball_members(n, limit))


def subgraph_density(s: ElementSet) -> SubgraphStats:
    """Density of the subgraph spanned by s: each vertex contributes one
    oriented edge per generator image that stays inside s."""
    if not s.members:
        raise ValueError("density of the empty set is undefined")
    members = s.members
    edges = 0
    for v in members:
        for g in GENERATORS:
            if nf_multiply(v, g) in members:
                edges += 1
    return SubgraphStats(len(members), edges, Fraction(edges, len(members)))


def class_histogram(s: ElementSet) -> dict[ClassLabel, int]:
    """Element count per class, with every label present in M1..M7 order."""
    counts = {label: 0 for label in ClassLabel}
    for v in s.members:
        counts[class_of(v)] += 1
    return counts


def mu_hat(s: ElementSet, z: ElementSet) -> Fraction:
    """The exact quotient |s intersect z| / |s|."""
    if not s.members:
        raise ValueError("mu_hat needs a nonempty reference set")
    return Fraction(len(s.members & z.members), len(s.members))


def drop_classes(s: ElementSet, classes: Iterable[ClassLabel]) -> ElementSet:
    """Remove every element whose class lies in `classes`."""
    dropped = set(classes)
    if not dropped:
        return s
    return ElementSet(frozenset(v for v in s.members if class_of(v) not in dropped))


def translate_set(s: ElementSet, g: NormalForm) -> ElementSet:
    """Right-translate: {v*g for v in s}.  A bijection, so the size is kept."""
    return ElementSet(frozenset(nf_multiply(v, g) for v in s.members))


@dataclass(frozen=True)
class DeletionBoundReport:
    """Densities before and after deleting K, and the guaranteed bound
    density(S) - 4*|K|/|S|."""

    density_before: Fraction
    density_after: Fraction
    bound: Fraction
    holds: bool


def deletion_bound_check(s: ElementSet, k: ElementSet) -> DeletionBoundReport:
    """Delete the vertices of k from s and compare the new density against
    the bound.  `holds` is true for every valid input; a false value would
    disprove the bound."""
    if not k.members <= s.members:
        raise ValueError("deleted vertices must form a subset of the graph")
    if k.members == s.members:
        raise ValueError("cannot delete every vertex; the remainder has no density")
    before = subgraph_density(s)
    after = subgraph_density(s - k)
    bound = before.density - Fraction(4 * len(k.members), len(s.members))
    return DeletionBoundReport(
        density_before=before.density,
        density_after=after.density,
        bound=bound,
        holds=after.density >= bound,
    )


# -- CSV and DOT output --------------------------------------------------------


def histogram_csv(counts: dict[ClassLabel, int]) -> str:
    lines = ["class,count"]
    lines.extend(f"{label},{counts.get(label, 0)}" for label in ClassLabel)
    return "\n".join(lines) + "\n"


def density_csv(label: str, stats: SubgraphStats) -> str:
    return (
        "label,vertices,oriented_edges,density_num,density_den\n"
        f"{label},{stats.vertex_count},{stats.oriented_edge_count},"
        f"{stats.density.numerator},{stats.density.denominator}\n"
    )


def elements_csv(s: ElementSet) -> str:
    lines = ["element"]
    lines.extend(str(v) for v in s.sorted_members())
    return "\n".join(lines) + "\n"


def subgraph_dot(s: ElementSet) -> str:
    """DOT digraph of the spanned subgraph: vertices labelled by normal
    forms, one arrow per x0 and x1 edge staying inside the set."""
    members = s.members
    lines = ["digraph cayley_subgraph {"]
    ordered = s.sorted_members()
    for v in ordered:
        lines.append(f'  "{v}";')
    for v in ordered:
        for g, name in ((GENERATORS[0], "x0"), (GENERATORS[2], "x1")):
            w = nf_multiply(v, g)
            if w in members:
                lines.append(f'  "{v}" -> "{w}" [label="{name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
