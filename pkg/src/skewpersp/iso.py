"""Exact isomorphism machinery for small partial Steiner triple systems.

Three layers, all deterministic:

* ``canonical_key``       a complete relabeling invariant, computed by
                          individualization-refinement backtracking; equal
                          keys if and only if isomorphic,
* ``find_isomorphism``    explicit witness search (optionally pinning one
                          point pair), sound and complete; this is the
                          ground-truth oracle the algebraic criteria are
                          audited against,
* ``perm_family_iso`` / ``kappa_family_iso``
                          the closed-form criteria for the two perspective
                          families, phrased entirely over S4 and the axis.

Everything here treats structures as abstract incidence data; point names
never influence the outcome, only the formatting of witnesses.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .indices import ALL_PERMS, CORRELATION, Perm4, extend
from .perspective import PerspectiveSpec, SkewFamily
from .psts import Psts, free_complete_subgraphs

MAX_POINTS = 32


class _Indexed:
    """Integer view of a Psts: points 0..n-1, plus per-point line partners
    and free-K5 membership counts (the cheap isomorphism-invariant seed
    coloring)."""

    __slots__ = (
        "psts", "n", "names", "index", "lines", "partners",
        "degree", "k5_count", "coll", "third",
    )

    def __init__(self, s: Psts):
        self.psts = s
        self.names = s.points
        self.n = len(self.names)
        self.index = {x: i for i, x in enumerate(self.names)}
        self.lines = tuple(
            frozenset(self.index[x] for x in ln) for ln in s.lines
        )
        partners: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        coll = [[False] * self.n for _ in range(self.n)]
        third: dict[tuple[int, int], int] = {}
        for ln in self.lines:
            for i in ln:
                j, k = sorted(ln - {i})
                partners[i].append((j, k))
                coll[i][j] = coll[i][k] = True
                third[(j, k)] = i
                third[(k, j)] = i
        self.partners = tuple(tuple(sorted(v)) for v in partners)
        self.degree = tuple(len(v) for v in self.partners)
        self.coll = tuple(tuple(row) for row in coll)
        self.third = third
        k5 = [0] * self.n
        for clique in free_complete_subgraphs(s, 5):
            for x in clique:
                k5[self.index[x]] += 1
        self.k5_count = tuple(k5)


@lru_cache(maxsize=None)
def _indexed(s: Psts) -> _Indexed:
    return _Indexed(s)


def _signatures(st: _Indexed, colors: list[int]) -> list[tuple]:
    # line partners packed as (lo << 10) | hi: cheap flat int tuples
    sigs = []
    for i in range(st.n):
        part = sorted(
            (colors[j] << 10) | colors[k]
            if colors[j] <= colors[k]
            else (colors[k] << 10) | colors[j]
            for j, k in st.partners[i]
        )
        sigs.append((colors[i], *part))
    return sigs


def _refine(st: _Indexed, colors: list[int]) -> list[int]:
    while True:
        sigs = _signatures(st, colors)
        rank = {sig: r for r, sig in enumerate(sorted(set(sigs)))}
        new = [rank[sig] for sig in sigs]
        if new == colors:
            return colors
        colors = new


def _refine_pair(
    a: _Indexed, ca: list[int], b: _Indexed, cb: list[int]
) -> tuple[list[int], list[int]] | None:
    """Joint refinement with shared ranks so colors stay comparable across
    the two structures; returns None as soon as the color histograms
    diverge (a sound non-isomorphism refutation)."""
    while True:
        sa, sb = _signatures(a, ca), _signatures(b, cb)
        rank = {sig: r for r, sig in enumerate(sorted(set(sa) | set(sb)))}
        na, nb = [rank[s] for s in sa], [rank[s] for s in sb]
        if sorted(na) != sorted(nb):
            return None
        if na == ca and nb == cb:
            return ca, cb
        ca, cb = na, nb


def _rank_raw(raw: list[tuple]) -> list[int]:
    rank = {t: r for r, t in enumerate(sorted(set(raw)))}
    return [rank[t] for t in raw]


def _cells(colors: list[int]) -> list[list[int]]:
    by: dict[int, list[int]] = {}
    for i, c in enumerate(colors):
        by.setdefault(c, []).append(i)
    return [by[c] for c in sorted(by)]


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Totally ordered complete invariant.  ``encoding`` is the least
    incidence relabeling found; the digest is a stable short display form."""

    point_count: int
    line_count: int
    encoding: tuple

    @property
    def digest(self) -> str:
        return hashlib.sha256(repr((self.point_count, self.line_count, self.encoding)).encode()).hexdigest()[:12]

    def __str__(self) -> str:
        return self.digest


def _encode_leaf(st: _Indexed, colors: list[int]) -> tuple:
    return tuple(sorted(tuple(sorted(colors[i] for i in ln)) for ln in st.lines))


def _is_automorphism(st: _Indexed, g: tuple[int, ...]) -> bool:
    lines = set(st.lines)
    return all(frozenset(g[i] for i in ln) in lines for ln in st.lines)


class _Canonicalizer:
    def __init__(self, st: _Indexed):
        self.st = st
        self.best: tuple | None = None
        self.first_leaf: dict[tuple, list[int]] = {}
        self.auts: list[tuple[int, ...]] = []

    def run(self) -> tuple:
        raw = [(self.st.degree[i], self.st.k5_count[i]) for i in range(self.st.n)]
        self._descend(_rank_raw(raw), ())
        assert self.best is not None
        return self.best

    def _descend(self, colors: list[int], path: tuple[int, ...]) -> None:
        colors = _refine(self.st, colors)
        cells = _cells(colors)
        target = None
        for cell in cells:
            if len(cell) > 1 and (target is None or len(cell) > len(target)):
                target = cell
        if target is None:
            self._leaf(colors)
            return
        explored: list[int] = []
        for x in target:
            if self._pruned(x, explored, path):
                continue
            explored.append(x)
            child = list(colors)
            child[x] = self.st.n + len(path)  # fresh color above all ranks
            self._descend(child, path + (x,))

    def _leaf(self, colors: list[int]) -> None:
        enc = _encode_leaf(self.st, colors)
        seen = self.first_leaf.get(enc)
        if seen is None:
            self.first_leaf[enc] = colors
        else:
            # two labelings with one encoding compose to an automorphism
            inv = [0] * self.st.n
            for i, c in enumerate(seen):
                inv[c] = i
            g = tuple(inv[colors[i]] for i in range(self.st.n))
            if _is_automorphism(self.st, g):
                self.auts.append(g)
        if self.best is None or enc < self.best:
            self.best = enc

    def _pruned(self, x: int, explored: list[int], path: tuple[int, ...]) -> bool:
        # only automorphisms fixing every individualized point so far are
        # guaranteed to permute the current cell structure
        if not explored:
            return False
        usable = [g for g in self.auts if all(g[v] == v for v in path)]
        if not usable:
            return False
        parent = list(range(self.st.n))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for g in usable:
            for i in range(self.st.n):
                ri, rj = find(i), find(g[i])
                if ri != rj:
                    parent[ri] = rj
        root = find(x)
        return any(find(y) == root for y in explored)


@lru_cache(maxsize=None)
def canonical_key(s: Psts) -> CanonicalKey:
    """Relabeling-invariant complete invariant of a structure.

    Structures compare isomorphic exactly when their keys are equal; keys
    are totally ordered and stable across runs and processes.
    """
    if len(s.points) > MAX_POINTS:
        raise ValueError(f"canonical_key capped at {MAX_POINTS} points, got {len(s.points)}")
    return CanonicalKey(len(s.points), len(s.lines), _Canonicalizer(_indexed(s)).run())


# ---------------------------------------------------------------------------
# witness search


def _search(x: _Indexed, y: _Indexed, fix: tuple[str, str] | None):
    """Backtracking isomorphism search; yields mappings as name dicts."""
    if x.n != y.n or len(x.lines) != len(y.lines):
        return
    raw_x = [[x.degree[i], x.k5_count[i], 0] for i in range(x.n)]
    raw_y = [[y.degree[i], y.k5_count[i], 0] for i in range(y.n)]
    if fix is not None:
        px, py = fix
        if px not in x.index or py not in y.index:
            raise ValueError(f"fix points {fix!r} not present")
        raw_x[x.index[px]][2] = 1
        raw_y[y.index[py]][2] = 1
    raw = [tuple(t) for t in raw_x + raw_y]
    ranked = _rank_raw(raw)
    refined = _refine_pair(x, ranked[: x.n], y, ranked[x.n :])
    if refined is None:
        return
    cx, cy = refined

    by_color: dict[int, list[int]] = {}
    for j, c in enumerate(cy):
        by_color.setdefault(c, []).append(j)

    n = x.n
    mapping = [-1] * n
    inverse = [-1] * n
    y_lines = set(y.lines)

    coll_x, coll_y = x.coll, y.coll
    third_x, third_y = x.third, y.third

    def ok(i: int, j: int) -> bool:
        for i2 in range(n):
            j2 = mapping[i2]
            if j2 == -1:
                continue
            if coll_x[i][i2] != coll_y[j][j2]:
                return False
            if coll_x[i][i2]:
                t = mapping[third_x[(i, i2)]]
                ty = third_y[(j, j2)]
                if t != -1 and t != ty:
                    return False
                if t == -1 and inverse[ty] != -1:
                    return False
        return True

    # static smallest-cell-first order; cells are near-singletons after
    # refinement, so dynamic reordering buys nothing here
    order = sorted(range(n), key=lambda i: (len(by_color.get(cx[i], ())), cx[i], i))

    def dfs(depth: int):
        if depth == n:
            image = {frozenset(mapping[i] for i in ln) for ln in x.lines}
            if image == y_lines:
                yield {x.names[i]: y.names[mapping[i]] for i in range(n)}
            return
        i = order[depth]
        for j in by_color.get(cx[i], ()):
            if inverse[j] != -1 or not ok(i, j):
                continue
            mapping[i], inverse[j] = j, i
            yield from dfs(depth + 1)
            mapping[i], inverse[j] = -1, -1

    yield from dfs(0)


def find_isomorphism(
    x: Psts, y: Psts, fix: tuple[str, str] | None = None
) -> dict[str, str] | None:
    """First isomorphism of x onto y under a fixed deterministic search
    order, honoring the optional constraint fix = (px, py) meaning
    f(px) = py.  Returns None exactly when no such isomorphism exists."""
    for m in _search(_indexed(x), _indexed(y), fix):
        return m
    return None


def all_isomorphisms(x: Psts, y: Psts, fix: tuple[str, str] | None = None):
    """Every isomorphism of x onto y, deterministically ordered."""
    yield from _search(_indexed(x), _indexed(y), fix)


def verify_point_map(x: Psts, y: Psts, mapping: dict[str, str]) -> bool:
    """Check a claimed isomorphism: bijection on points carrying the lines
    of x exactly onto the lines of y."""
    if sorted(mapping) != list(x.points):
        return False
    if sorted(mapping.values()) != list(y.points):
        return False
    image = {tuple(sorted(mapping[p] for p in ln)) for ln in x.lines}
    return image == set(y.lines)


def point_map_text(mapping: dict[str, str]) -> str:
    """Serialize a witness map, one 'x -> y' row per point, by point name."""
    return "\n".join(f"{p} -> {mapping[p]}" for p in sorted(mapping))


def automorphism_group(s: Psts) -> tuple[tuple[dict[str, str], ...], int]:
    """Generators and exact order of the automorphism group.

    The full group is enumerated by the witness search; the generating set
    is then greedily thinned (smallest maps first) until it regenerates the
    group, which keeps the printed output short."""
    auts = list(all_isomorphisms(s, s))
    order = len(auts)
    identity = {p: p for p in s.points}
    rest = sorted(
        (a for a in auts if a != identity),
        key=lambda a: tuple(a[p] for p in s.points),
    )
    gens: list[dict[str, str]] = []
    reach: set[tuple[str, ...]] = {tuple(identity[p] for p in s.points)}
    for a in rest:
        if tuple(a[p] for p in s.points) in reach:
            continue
        gens.append(a)
        frontier = [identity]
        reach = {tuple(identity[p] for p in s.points)}
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = {p: g[cur[p]] for p in s.points}
                key = tuple(nxt[p] for p in s.points)
                if key not in reach:
                    reach.add(key)
                    frontier.append(nxt)
        if len(reach) == order:
            break
    return tuple(gens), order


# ---------------------------------------------------------------------------
# family criteria


class IsoCase(Enum):
    A = "A"
    B = "B"


def perm_family_iso(
    s1: PerspectiveSpec, s2: PerspectiveSpec
) -> tuple[Perm4, IsoCase] | None:
    """Decide center-fixing isomorphism inside the plain permutation family.

    Case A keeps the two tetrahedra apart: some phi has extend(phi) carrying
    axis1 onto axis2 with phi after sigma1 equal to sigma2 after phi.  Case
    B swaps them: the conjugation condition runs through sigma2's inverse
    and the axis is carried by extend(sigma2^-1 phi).  The first witness in
    (case, phi) scan order is returned; None means no center-fixing
    isomorphism exists, which the oracle audit confirms pair by pair.
    """
    if s1.skew.family is not SkewFamily.PERM or s2.skew.family is not SkewFamily.PERM:
        raise ValueError("perm_family_iso expects two PERM-family specs")
    sg1, sg2 = s1.skew.perm, s2.skew.perm
    for phi in ALL_PERMS:
        if phi.compose(sg1) == sg2.compose(phi) and s1.axis.apply(extend(phi)) == s2.axis:
            return phi, IsoCase.A
    sg2_inv = sg2.inverse()
    for phi in ALL_PERMS:
        if phi.compose(sg1) == sg2_inv.compose(phi) and s1.axis.apply(
            extend(sg2_inv.compose(phi))
        ) == s2.axis:
            return phi, IsoCase.B
    return None


def kappa_family_iso(
    s1: PerspectiveSpec, s2: PerspectiveSpec
) -> tuple[Perm4, IsoCase] | None:
    """Decide isomorphism inside the boolean-complementing family.

    Case A: extend(alpha) carries axis1 onto axis2 and conjugates phi1 to
    phi2.  Case B: the complement involution composed with
    extend(phi2^-1 alpha) carries axis1 onto axis2 and alpha conjugates
    phi1 to phi2's inverse.  Every isomorphism in this family fixes the
    center, so no constraint argument exists here.
    """
    if (
        s1.skew.family is not SkewFamily.PERM_KAPPA
        or s2.skew.family is not SkewFamily.PERM_KAPPA
    ):
        raise ValueError("kappa_family_iso expects two PERM_KAPPA-family specs")
    f1, f2 = s1.skew.perm, s2.skew.perm
    for alpha in ALL_PERMS:
        if f1.conjugate_by(alpha) == f2 and s1.axis.apply(extend(alpha)) == s2.axis:
            return alpha, IsoCase.A
    f2_inv = f2.inverse()
    for alpha in ALL_PERMS:
        if f1.conjugate_by(alpha) == f2_inv and s1.axis.apply(
            CORRELATION.compose(extend(f2_inv.compose(alpha)))
        ) == s2.axis:
            return alpha, IsoCase.B
    return None


def kappa_self_witness_count(s: PerspectiveSpec) -> int:
    """Number of (alpha, case) witnesses of kappa_family_iso(s, s); equals
    the automorphism group order of the built structure."""
    f = s.skew.perm
    count = 0
    for alpha in ALL_PERMS:
        if f.conjugate_by(alpha) == f and s.axis.apply(extend(alpha)) == s.axis:
            count += 1
    f_inv = f.inverse()
    for alpha in ALL_PERMS:
        if f.conjugate_by(alpha) == f_inv and s.axis.apply(
            CORRELATION.compose(extend(f_inv.compose(alpha)))
        ) == s.axis:
            count += 1
    return count
