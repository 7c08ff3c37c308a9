"""Exact-3-Cover instances and their reduction to Steiner tree.

The reduction is the hardness side of the solver's dichotomy: ground
elements become the independent set (all terminals), triples become a
clique, and membership becomes the cross edges. The resulting graph is
always K_{1,5}-free but generally not K_{1,4}-free, and an exact cover
of size q exists iff q clique vertices suffice to connect the terminals.

Vertex layout of the reduced graph: ground element j (1-based) is vertex
j-1, the l-th triple (0-based) is vertex 3q + l.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import X3CParseError
from .graph import Graph
from .sstp import SteinerInstance


@dataclass(frozen=True)
class X3CInstance:
    """Ground set {1..ground_size} and a deduplicated collection of
    3-element subsets, both held in sorted canonical form."""

    ground_size: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.ground_size < 3 or self.ground_size % 3 != 0:
            raise ValueError(
                f"ground size must be a positive multiple of 3, got {self.ground_size}")
        norm = []
        for t in self.triples:
            if len(t) != 3 or len(set(t)) != 3:
                raise ValueError(f"triple {t} must have exactly 3 distinct elements")
            for e in t:
                if not 1 <= e <= self.ground_size:
                    raise ValueError(
                        f"element {e} outside ground set 1..{self.ground_size}")
            norm.append(tuple(sorted(t)))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate triple {a}")
        object.__setattr__(self, "triples", tuple(norm))

    @property
    def q(self) -> int:
        return self.ground_size // 3


def parse_x3c(text: str) -> X3CInstance:
    """Parse the x3c format: `x3c <3q> <n>` then n lines `c <a> <b> <c>`,
    1-indexed; blank lines and `#` comments are skipped."""
    header: tuple[int, int] | None = None
    triples: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int, int]] = set()
    ground = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "x3c":
            if header is not None:
                raise X3CParseError("duplicate header", line=lineno)
            if len(parts) != 3:
                raise X3CParseError("header must be 'x3c <3q> <n>'", line=lineno)
            try:
                ground, count = int(parts[1]), int(parts[2])
            except ValueError:
                raise X3CParseError("non-integer header field", line=lineno) from None
            if ground < 3 or ground % 3 != 0:
                raise X3CParseError(
                    f"ground size {ground} is not a positive multiple of 3",
                    line=lineno)
            if count < 0:
                raise X3CParseError("negative triple count", line=lineno)
            header = (ground, count)
        elif parts[0] == "c":
            if header is None:
                raise X3CParseError("triple line before header", line=lineno)
            if len(parts) != 4:
                raise X3CParseError("triple line must be 'c <a> <b> <c>'", line=lineno)
            try:
                elems = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise X3CParseError("non-integer element", line=lineno) from None
            if len(set(elems)) != 3:
                raise X3CParseError(f"triple {elems} has repeated elements",
                                    line=lineno)
            for e in elems:
                if not 1 <= e <= ground:
                    raise X3CParseError(
                        f"element {e} outside ground set 1..{ground}", line=lineno)
            key = tuple(sorted(elems))
            if key in seen:
                raise X3CParseError(f"duplicate triple {key}", line=lineno)
            seen.add(key)
            triples.append(key)  # type: ignore[arg-type]
        else:
            raise X3CParseError(f"unrecognized line {line!r}", line=lineno)
    if header is None:
        raise X3CParseError("missing 'x3c' header")
    if len(triples) != header[1]:
        raise X3CParseError(
            f"header declares {header[1]} triples, found {len(triples)}")
    return X3CInstance(ground_size=header[0], triples=tuple(triples))


def serialize_x3c(x: X3CInstance) -> str:
    lines = [f"x3c {x.ground_size} {len(x.triples)}"]
    lines.extend(f"c {a} {b} {c}" for a, b, c in x.triples)
    return "\n".join(lines) + "\n"


def reduce_x3c(x: X3CInstance) -> tuple[SteinerInstance, int]:
    """Steiner instance whose minimum Steiner set has size q iff x has an
    exact cover. Rejects instances with an uncovered ground element,
    since those reduce to a disconnected graph."""
    covered: set[int] = set()
    for t in x.triples:
        covered.update(t)
    missing = [e for e in range(1, x.ground_size + 1) if e not in covered]
    if missing:
        raise ValueError(
            f"ground elements {missing} appear in no triple; "
            "the reduced graph would be disconnected")
    nz = x.ground_size
    n = nz + len(x.triples)
    edges: list[tuple[int, int]] = []
    for l in range(len(x.triples)):
        for m in range(l + 1, len(x.triples)):
            edges.append((nz + l, nz + m))
        for e in x.triples[l]:
            edges.append((e - 1, nz + l))
    inst = SteinerInstance(graph=Graph.from_edges(n, edges),
                           terminals=tuple(range(nz)))
    return inst, x.q


def solve_x3c_bruteforce(x: X3CInstance) -> tuple[tuple[int, int, int], ...] | None:
    """An exact cover (q pairwise-disjoint triples covering the ground
    set) or None. Branches on the lowest uncovered element, trying its
    triples in ascending order. Requires at most 20 triples."""
    if len(x.triples) > 20:
        raise ValueError(f"{len(x.triples)} triples exceeds the limit of 20")
    by_element: dict[int, list[int]] = {e: [] for e in range(1, x.ground_size + 1)}
    for i, t in enumerate(x.triples):
        for e in t:
            by_element[e].append(i)

    chosen: list[int] = []

    def extend(covered: set[int]) -> bool:
        if len(covered) == x.ground_size:
            return True
        lowest = min(e for e in range(1, x.ground_size + 1) if e not in covered)
        for i in by_element[lowest]:
            t = x.triples[i]
            if covered.isdisjoint(t):
                chosen.append(i)
                if extend(covered | set(t)):
                    return True
                chosen.pop()
        return False

    if extend(set()):
        return tuple(x.triples[i] for i in sorted(chosen))
    return None
