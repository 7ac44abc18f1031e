"""Command-line front end.

Subcommands:

* ``build``      construct a perspective and write it in PSTS text (or as a
                 Levi incidence graph in DOT),
* ``census``     the labeling census with its orbit table,
* ``iso``        decide isomorphism of two structures, printing a witness,
* ``aut``        automorphism group generators and order,
* ``classify``   isomorphism classes of one family,
* ``audit``      the full published-claim audit report.

Structures are given either as spec text (``perm:<cycles>@<axis>`` or
``kappa:<cycles>@<axis>``, axis a canonical kind name, ``census:<n>``, or a
PSTS file path) or as a PSTS file path directly.

Exit codes: 0 success (for ``iso``: isomorphic), 1 proven non-isomorphic,
2 audit found a MISMATCH, 64 usage, 65 bad data, 66 missing input file,
70 internal oracle inconsistency, 74 output write failure.  stdout carries
data; diagnostics go to stderr.  The environment variable ``SPL_SEED`` is
reserved and unused: every computation here is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classify as cls
from . import psts as psts_mod
from .iso import automorphism_group, find_isomorphism, point_map_text
from .perspective import PerspectiveSpec, Role, build, parse_spec_text, spec_text
from .psts import Psts, PstsError
from .veblen import (
    CanonicalKind,
    PARTNER,
    aut_perms,
    canonical,
    enumerate_labelings,
    extend_orbit,
    from_psts,
    star_triangles,
)

EX_OK = 0
EX_NONISO = 1
EX_MISMATCH = 2
EX_USAGE = 64
EX_DATAERR = 65
EX_NOINPUT = 66
EX_ORACLE = 70
EX_IOERR = 74


class _UsageError(Exception):
    pass


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; we want 64
        raise _UsageError(message)


def _load_axis_file(path: str):
    p = Path(path)
    if not p.is_file():
        raise _CliError(EX_NOINPUT, f"axis file not found: {path}")
    try:
        return from_psts(psts_mod.from_text(p.read_text()))
    except (PstsError, ValueError) as e:
        raise _CliError(EX_DATAERR, f"bad axis file {path}: {e}") from e


def parse_spec(text: str) -> PerspectiveSpec:
    """Spec text to PerspectiveSpec, resolving file-path axes."""
    try:
        return parse_spec_text(text, load_axis=_load_axis_file)
    except ValueError as e:
        raise _CliError(EX_DATAERR, str(e)) from e


def _load_structure(text: str) -> Psts:
    if text.startswith(("perm:", "kappa:")):
        return build(parse_spec(text)).psts
    p = Path(text)
    if not p.is_file():
        raise _CliError(EX_NOINPUT, f"no such file (and not spec text): {text}")
    try:
        return psts_mod.from_text(p.read_text())
    except PstsError as e:
        raise _CliError(EX_DATAERR, f"bad PSTS file {text}: {e}") from e


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as e:
        raise _CliError(EX_IOERR, f"cannot write {out}: {e}") from e


def emit_levi_dot(s: Psts, roles: dict[str, Role] | None = None) -> str:
    """Bipartite point/line incidence graph in DOT, deterministic order."""
    rows = ["graph levi {", "  node [fontsize=10];"]
    for x in s.points:
        attrs = ['shape=circle']
        if roles and x in roles:
            attrs.append(f'role="{roles[x].label}"')
        rows.append(f'  "{x}" [{", ".join(attrs)}];')
    for k, ln in enumerate(s.lines, 1):
        rows.append(f'  "L{k:02d}" [shape=box, label="{" ".join(ln)}"];')
    for k, ln in enumerate(s.lines, 1):
        for x in ln:
            rows.append(f'  "{x}" -- "L{k:02d}";')
    rows.append("}")
    return "\n".join(rows) + "\n"


def _cmd_build(args) -> int:
    spec = parse_spec(args.spec)
    labeled = build(spec)
    if args.levi:
        _emit(emit_levi_dot(labeled.psts, labeled.roles), args.out)
    else:
        _emit(psts_mod.to_text(labeled.psts), args.out)
    return EX_OK


def _cmd_census(args) -> int:
    census = enumerate_labelings()
    rows = [f"census: {len(census)} labelings of the six pairs"]
    rows.append(f"{'kind':<8} {'orbit':>5} {'star_triangles':>14} {'aut_order':>9}")
    ext_sizes = []
    for kind in CanonicalKind:
        v = canonical(kind)
        orbit = len(extend_orbit(v))
        ext_sizes.append(orbit)
        rows.append(
            f"{str(kind):<8} {orbit:>5} {len(star_triangles(v)):>14} {len(aut_perms(v)):>9}"
        )
    full = sorted(
        len(extend_orbit(canonical(k))) + len(extend_orbit(canonical(PARTNER[k])))
        for k in (CanonicalKind.G2, CanonicalKind.B2, CanonicalKind.V5)
    )
    rows.append(f"orbit sizes under the 24 extended maps: {sorted(ext_sizes)}")
    rows.append(f"orbit sizes under all 48 candidate maps: {full}")
    covered = sum(ext_sizes)
    rows.append(f"coverage: {covered} of {len(census)} labelings in canonical orbits")
    _emit("\n".join(rows) + "\n", args.out)
    return EX_OK


def _cmd_iso(args) -> int:
    x = _load_structure(args.first)
    y = _load_structure(args.second)
    witness = find_isomorphism(x, y)
    if witness is None:
        print("not isomorphic", file=sys.stderr)
        return EX_NONISO
    _emit(point_map_text(witness) + "\n", args.out)
    return EX_OK


def _point_perm_cycles(mapping: dict[str, str]) -> str:
    seen: set[str] = set()
    parts = []
    for start in sorted(mapping):
        if start in seen or mapping[start] == start:
            seen.add(start)
            continue
        cyc = [start]
        seen.add(start)
        x = mapping[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = mapping[x]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) if parts else "id"


def _cmd_aut(args) -> int:
    s = _load_structure(args.structure)
    gens, order = automorphism_group(s)
    rows = [f"order {order}"]
    rows.extend(f"generator: {_point_perm_cycles(g)}" for g in gens)
    _emit("\n".join(rows) + "\n", args.out)
    return EX_OK


def _cmd_classify(args) -> int:
    axes = cls.canonical_axes() if args.axes == "canonical" else enumerate_labelings()
    tag = cls.FamilyTag.PERM_FAMILY if args.family == "perm" else cls.FamilyTag.KAPPA_FAMILY
    classes = cls.partition_into_classes(cls.enumerate_family(tag, axes), jobs=args.jobs)
    if args.format == "structured":
        doc = {
            "family": args.family,
            "axes": args.axes,
            "classes": [c.to_dict() for c in classes],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        title = (
            "plain family (perm)" if args.family == "perm" else "boolean-complementing family (kappa)"
        )
        rows = [f"{title}, {args.axes} axes: {len(classes)} classes"]
        rows.append(f"{'id':<5} {'representative':<24} {'size':>4} {'k5':>3} {'aut':>4} br")
        for c in classes:
            rows.append(
                f"{c.class_id:<5} {spec_text(c.representative):<24} {len(c.members):>4} "
                f"{c.free_k5_count:>3} {c.aut_order:>4} {c.branch}"
            )
        _emit("\n".join(rows) + "\n", args.out)
    return EX_OK


def _cmd_audit(args) -> int:
    report = cls.audit_claims(axes_mode=args.axes, jobs=args.jobs)
    text = (
        cls.render_structured(report)
        if args.format == "structured"
        else cls.render_text(report)
    )
    _emit(text, args.out)
    return EX_OK if report.all_match else EX_MISMATCH


def _build_parser() -> _Parser:
    p = _Parser(
        prog="skewpersp",
        description="construction, isomorphism and classification of skew perspectives between two tetrahedra",
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a perspective and print it as PSTS text")
    b.add_argument("spec", help="perm:<cycles>@<axis> or kappa:<cycles>@<axis>")
    b.add_argument("--levi", action="store_true", help="emit the Levi incidence graph in DOT instead")
    b.add_argument("--out", default=None, help="write to a file instead of stdout")
    b.set_defaults(fn=_cmd_build)

    c = sub.add_parser("census", help="labeling census and orbit table")
    c.add_argument("--out", default=None)
    c.set_defaults(fn=_cmd_census)

    i = sub.add_parser("iso", help="isomorphism test; exit 0 with witness, 1 if none")
    i.add_argument("first", help="spec text or PSTS file")
    i.add_argument("second", help="spec text or PSTS file")
    i.add_argument("--out", default=None)
    i.set_defaults(fn=_cmd_iso)

    a = sub.add_parser("aut", help="automorphism group generators and order")
    a.add_argument("structure", help="spec text or PSTS file")
    a.add_argument("--out", default=None)
    a.set_defaults(fn=_cmd_aut)

    k = sub.add_parser("classify", help="isomorphism classes of one family")
    k.add_argument("family", choices=("perm", "kappa"))
    k.add_argument("--axes", choices=("canonical", "census"), default="canonical")
    k.add_argument("--jobs", type=int, default=1)
    k.add_argument("--format", choices=("text", "structured"), default="text")
    k.add_argument("--out", default=None)
    k.set_defaults(fn=_cmd_classify)

    d = sub.add_parser("audit", help="full audit of the published classification claims")
    d.add_argument("--axes", choices=("canonical", "census"), default="census")
    d.add_argument("--jobs", type=int, default=1)
    d.add_argument("--format", choices=("text", "structured"), default="text")
    d.add_argument("--out", default=None)
    d.set_defaults(fn=_cmd_audit)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EX_USAGE
    try:
        return args.fn(args)
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except cls.OracleInconsistencyError as e:
        print(f"internal oracle inconsistency: {e}", file=sys.stderr)
        return EX_ORACLE
    except PstsError as e:
        print(f"invalid structure: {e}", file=sys.stderr)
        return EX_DATAERR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
