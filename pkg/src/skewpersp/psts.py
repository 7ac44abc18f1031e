"""Partial Steiner triple systems with named points.

A structure here is a finite set of points and a set of 3-element lines in
which two distinct lines meet in at most one point.  Points are plain
strings; all geometry below identifies structures only up to renaming, so
nothing downstream may depend on what the names look like.

Construction validates; an invalid line set raises ``PstsError`` carrying
the full list of problems found, not just the first.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

NAME_CHARS = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


class PstsError(ValueError):
    """Invalid structure; ``problems`` lists every violation found."""

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


def _check_name(name: str, problems: list[str]) -> None:
    if not name or not set(name) <= NAME_CHARS:
        problems.append(f"bad point name {name!r} (need [A-Za-z0-9_]+)")


class Psts:
    """Immutable partial Steiner triple system.

    ``points`` is a sorted tuple of names, ``lines`` a sorted tuple of sorted
    3-tuples of names.  Incidence lookups are precomputed:

    * ``lines_through[x]``   tuple of lines containing x,
    * ``collinear[x]``       frozenset of points collinear with x (x excluded),
    * ``third[(x, y)]``      the third point of the line through x and y,
                             present only when that line exists.
    """

    __slots__ = ("points", "lines", "lines_through", "collinear", "third", "_hash")

    def __init__(self, points, lines):
        problems: list[str] = []
        pts = sorted(points)
        for x in pts:
            _check_name(x, problems)
        dup = [x for x, n in Counter(pts).items() if n > 1]
        if dup:
            problems.append(f"duplicate points: {sorted(dup)}")
        pset = set(pts)

        norm: list[tuple[str, str, str]] = []
        for ln in lines:
            ln = tuple(ln)
            if len(set(ln)) != 3:
                problems.append(f"line is not a 3-set: {ln}")
                continue
            missing = [x for x in ln if x not in pset]
            if missing:
                problems.append(f"line {tuple(sorted(ln))} uses unknown points {missing}")
                continue
            norm.append(tuple(sorted(ln)))
        dup_lines = [ln for ln, n in Counter(norm).items() if n > 1]
        if dup_lines:
            problems.append(f"duplicate lines: {sorted(dup_lines)}")
        norm = sorted(set(norm))

        third: dict[tuple[str, str], str] = {}
        for ln in norm:
            for x, y in itertools.permutations(ln, 2):
                z = next(w for w in ln if w != x and w != y)
                prev = third.get((x, y))
                if prev is not None and prev != z:
                    problems.append(
                        f"points {x}, {y} lie on two lines (third points {min(prev, z)} and {max(prev, z)})"
                    )
                third[(x, y)] = z

        if problems:
            raise PstsError(sorted(set(problems)))

        self.points = tuple(pts)
        self.lines = tuple(norm)
        through: dict[str, list] = {x: [] for x in self.points}
        coll: dict[str, set] = {x: set() for x in self.points}
        for ln in self.lines:
            for x in ln:
                through[x].append(ln)
                coll[x].update(w for w in ln if w != x)
        self.lines_through = {x: tuple(v) for x, v in through.items()}
        self.collinear = {x: frozenset(v) for x, v in coll.items()}
        self.third = third
        self._hash = hash((self.points, self.lines))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Psts)
            and self.points == other.points
            and self.lines == other.lines
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Psts({len(self.points)} points, {len(self.lines)} lines)"

    def degree(self, x: str) -> int:
        return len(self.lines_through[x])

    def are_collinear(self, x: str, y: str) -> bool:
        return y in self.collinear[x]

    def third_point(self, x: str, y: str) -> str | None:
        """Third point of the line joining x and y, or None if they are not
        collinear.  Symmetric in x and y; x == y is an error."""
        if x == y:
            raise ValueError(f"third_point needs two distinct points, got {x!r} twice")
        return self.third.get((x, y))

    def relabel(self, mapping: dict[str, str]) -> "Psts":
        """Structure with every point renamed through ``mapping``."""
        missing = [x for x in self.points if x not in mapping]
        if missing:
            raise ValueError(f"relabel mapping misses points {missing}")
        return Psts(
            [mapping[x] for x in self.points],
            [tuple(mapping[x] for x in ln) for ln in self.lines],
        )


@dataclass(frozen=True)
class ConfigSignature:
    """Point/line counts with uniform degrees: an (n_r m_k) configuration."""

    point_count: int
    point_degree: int
    line_count: int
    line_size: int

    def __str__(self) -> str:
        return (
            f"({self.point_count}_{self.point_degree} "
            f"{self.line_count}_{self.line_size})"
        )


def signature(s: Psts) -> ConfigSignature | None:
    """The (n_r m_k) signature when degrees are uniform, else None."""
    degs = {s.degree(x) for x in s.points}
    if len(degs) != 1:
        return None
    return ConfigSignature(len(s.points), degs.pop(), len(s.lines), 3)


def validate_configuration(s: Psts, point_degree: int, line_size: int) -> bool:
    """True when every point lies on exactly ``point_degree`` lines and every
    line has exactly ``line_size`` points.  Line size 3 is structural here,
    so any other requested size is False."""
    if line_size != 3:
        return False
    return all(s.degree(x) == point_degree for x in s.points)


def free_complete_subgraphs(s: Psts, n: int) -> tuple[frozenset[str], ...]:
    """All n-point sets that are pairwise collinear with no line of the
    structure containing three of them.

    Since lines have 3 points, freeness is equivalent to the joining lines
    of the n points being pairwise distinct.  Returned sorted by the sorted
    point tuple.
    """
    if n < 0:
        raise ValueError(f"subgraph size must be nonnegative, got {n}")
    found: list[frozenset[str]] = []

    def grow(chosen: list[str], start: int) -> None:
        if len(chosen) == n:
            used = set()
            for x, y in itertools.combinations(chosen, 2):
                ln = frozenset((x, y, s.third[(x, y)]))
                if ln in used:
                    return
                used.add(ln)
            found.append(frozenset(chosen))
            return
        for k in range(start, len(s.points)):
            x = s.points[k]
            if all(s.are_collinear(x, y) for y in chosen):
                chosen.append(x)
                grow(chosen, k + 1)
                chosen.pop()

    grow([], 0)
    return tuple(sorted(found, key=lambda f: tuple(sorted(f))))


def to_text(s: Psts) -> str:
    """Serialize:  header 'psts <points> <lines>', then the point names on
    one line, then one line of the structure per text line."""
    rows = [f"psts {len(s.points)} {len(s.lines)}", " ".join(s.points)]
    rows.extend(" ".join(ln) for ln in s.lines)
    return "\n".join(rows) + "\n"


def from_text(text: str) -> Psts:
    """Inverse of ``to_text``.  Raises PstsError on malformed input."""
    rows = [r for r in (row.strip() for row in text.splitlines()) if r]
    if not rows:
        raise PstsError(["empty input"])
    head = rows[0].split()
    if len(head) != 3 or head[0] != "psts" or not head[1].isdigit() or not head[2].isdigit():
        raise PstsError([f"bad header {rows[0]!r} (expected 'psts <points> <lines>')"])
    np_, nl = int(head[1]), int(head[2])
    if len(rows) != 2 + nl:
        raise PstsError([f"expected {nl} line rows after the points row, got {len(rows) - 2}"])
    points = rows[1].split()
    if len(points) != np_:
        raise PstsError([f"header promises {np_} points, names row has {len(points)}"])
    lines = []
    for row in rows[2:]:
        names = row.split()
        if len(names) != 3:
            raise PstsError([f"line row needs 3 names: {row!r}"])
        lines.append(tuple(names))
    return Psts(points, lines)
