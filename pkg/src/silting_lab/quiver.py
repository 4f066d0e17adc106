"""Bound quiver algebras with monomial relations.

Paths are written left to right: the path ``x1,y2`` first traverses ``x1``
and then ``y2``.  The indecomposable projective P(i) has as basis the nonzero
paths starting at i, and a map P(j) -> P(i) is a combination of nonzero
paths from i to j acting by left concatenation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property


_MAX_PATH_LENGTH = 256


class AlgebraError(ValueError):
    pass


class UnknownVertex(AlgebraError):
    pass


class NotComposable(AlgebraError):
    pass


class ParseError(AlgebraError):
    pass


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[int, ...]
    arrows: tuple[tuple[str, int, int], ...]

    def __post_init__(self):
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("arrow names must be unique")
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("vertices must be unique")
        for name, src, tgt in self.arrows:
            if src not in self.vertices or tgt not in self.vertices:
                raise UnknownVertex(f"arrow {name} uses an undeclared vertex")

    @cached_property
    def arrow_ends(self) -> dict[str, tuple[int, int]]:
        return {name: (src, tgt) for name, src, tgt in self.arrows}


@dataclass(frozen=True, order=True)
class Path:
    """A path in a quiver; ``arrows == ()`` is the lazy path at ``source``."""

    source: int
    target: int
    arrows: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    def sort_key(self):
        return (len(self.arrows), self.arrows, self.source, self.target)

    def __str__(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return ",".join(self.arrows)


def lazy(i: int) -> Path:
    return Path(i, i, ())


@dataclass(frozen=True, eq=False)
class GentleAlgebra:
    """A quiver modulo monomial relations.

    Gentleness is not enforced; only finiteness of the set of nonzero paths
    is required, which is checked at construction.
    """

    quiver: Quiver
    relations: frozenset[tuple[str, ...]] = field(default_factory=frozenset)

    def __post_init__(self):
        ends = self.quiver.arrow_ends
        for rel in self.relations:
            if len(rel) < 2:
                raise AlgebraError(f"relation {rel} has length < 2")
            for a in rel:
                if a not in ends:
                    raise AlgebraError(f"relation {rel} uses unknown arrow {a}")
            for a, b in zip(rel, rel[1:]):
                if ends[a][1] != ends[b][0]:
                    raise NotComposable(f"relation {rel} is not a path")
        self._paths  # builds and checks finiteness

    def __eq__(self, other):
        if not isinstance(other, GentleAlgebra):
            return NotImplemented
        return self.quiver == other.quiver and self.relations == other.relations

    def __hash__(self):
        return hash((self.quiver, self.relations))

    def __reduce__(self):
        return (GentleAlgebra, (self.quiver, self.relations))

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.quiver.vertices

    def _is_zero(self, arrows: tuple[str, ...]) -> bool:
        for rel in self.relations:
            k = len(rel)
            for s in range(len(arrows) - k + 1):
                if arrows[s:s + k] == rel:
                    return True
        return False

    @cached_property
    def _paths(self) -> tuple[Path, ...]:
        out = [lazy(v) for v in self.vertices]
        frontier = list(out)
        depth = 0
        while frontier:
            depth += 1
            if depth > _MAX_PATH_LENGTH:
                raise AlgebraError("algebra appears to be infinite dimensional")
            nxt = []
            for p in frontier:
                for name, src, tgt in self.quiver.arrows:
                    if src != p.target:
                        continue
                    arrows = p.arrows + (name,)
                    if not self._is_zero(arrows):
                        nxt.append(Path(p.source, tgt, arrows))
            out.extend(nxt)
            frontier = nxt
        return tuple(sorted(out, key=Path.sort_key))

    @cached_property
    def _basis(self) -> dict[tuple[int, int], tuple[Path, ...]]:
        table: dict[tuple[int, int], list[Path]] = {
            (i, j): [] for i in self.vertices for j in self.vertices
        }
        for p in self._paths:
            table[(p.source, p.target)].append(p)
        return {k: tuple(v) for k, v in table.items()}

    def nonzero_paths(self) -> tuple[Path, ...]:
        return self._paths

    def path_basis(self, i: int, j: int) -> tuple[Path, ...]:
        """Nonzero paths from i to j ordered by length, then arrow names."""
        if i not in self.vertices or j not in self.vertices:
            raise UnknownVertex(f"unknown vertex in ({i}, {j})")
        return self._basis[(i, j)]

    def paths_from(self, i: int) -> tuple[Path, ...]:
        if i not in self.vertices:
            raise UnknownVertex(str(i))
        return tuple(p for p in self._paths if p.source == i)

    def dimension(self) -> int:
        return len(self._paths)

    @cached_property
    def _products(self) -> dict[tuple[Path, Path], Path | None]:
        table = {}
        for p in self._paths:
            for q in self._paths:
                if p.target == q.source:
                    arrows = p.arrows + q.arrows
                    table[(p, q)] = None if self._is_zero(arrows) else Path(p.source, q.target, arrows)
        return table

    def mul(self, p: Path, q: Path) -> Path | None:
        """Product of two nonzero paths, looked up in a precomputed table."""
        try:
            return self._products[(p, q)]
        except KeyError:
            return self.compose(p, q)

    def compose(self, p: Path, q: Path) -> Path | None:
        """Concatenate p then q; ``None`` is the zero path."""
        if p.target != q.source:
            raise NotComposable(f"{p} ends at {p.target}, {q} starts at {q.source}")
        arrows = p.arrows + q.arrows
        if self._is_zero(arrows):
            return None
        return Path(p.source, q.target, arrows)

    def path(self, text: str) -> Path:
        """Parse ``e3`` or a comma-separated arrow list such as ``x1,y2``."""
        text = text.strip()
        if text.startswith("e") and text[1:].lstrip("-").isdigit():
            v = int(text[1:])
            if v not in self.vertices:
                raise UnknownVertex(text)
            return lazy(v)
        names = tuple(a.strip() for a in text.split(","))
        ends = self.quiver.arrow_ends
        for a in names:
            if a not in ends:
                raise ParseError(f"unknown arrow {a!r}")
        for a, b in zip(names, names[1:]):
            if ends[a][1] != ends[b][0]:
                raise NotComposable(f"{a} and {b} do not compose")
        return Path(ends[names[0]][0], ends[names[-1]][1], names)

    def to_text(self) -> str:
        lines = [f"vertex {v}" for v in self.vertices]
        lines += [f"arrow {n} {s} {t}" for n, s, t in self.quiver.arrows]
        lines += ["relation " + ",".join(r) for r in sorted(self.relations)]
        return "\n".join(lines) + "\n"


def parse_algebra(text: str) -> GentleAlgebra:
    """Read ``vertex``, ``arrow`` and ``relation`` declarations, one per line."""
    vertices: list[int] = []
    arrows: list[tuple[str, int, int]] = []
    relations: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        parts = rest.split()
        try:
            if head == "vertex" and len(parts) == 1:
                vertices.append(int(parts[0]))
            elif head == "arrow" and len(parts) == 3:
                arrows.append((parts[0], int(parts[1]), int(parts[2])))
            elif head == "relation" and rest.strip():
                relations.append(tuple(a.strip() for a in rest.split(",")))
            else:
                raise ParseError(f"line {lineno}: cannot read {raw!r}")
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return GentleAlgebra(Quiver(tuple(vertices), tuple(arrows)), frozenset(relations))


_LAMBDA: GentleAlgebra | None = None


def lambda_fixed() -> GentleAlgebra:
    """The algebra 1 => 2 => 3 with arrows x1, y1, x2, y2 and relations x1x2, y1y2."""
    global _LAMBDA
    if _LAMBDA is None:
        quiver = Quiver(
            (1, 2, 3),
            (("x1", 1, 2), ("y1", 1, 2), ("x2", 2, 3), ("y2", 2, 3)),
        )
        _LAMBDA = GentleAlgebra(quiver, frozenset({("x1", "x2"), ("y1", "y2")}))
    return _LAMBDA
