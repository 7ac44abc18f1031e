#!/usr/bin/env python3
"""Export the isomorphism-class tables of both families.

For each family this writes <family>_classes.json (full member lists and
invariants) into --outdir and prints the summary table: representative,
orbit size, free-K5 count, automorphism order, branch.  Axis choice
matters only for class membership bookkeeping; the class sets themselves
coincide between canonical and census axes, which `pytest tests` checks.
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from skewpersp.classify import FamilyTag, canonical_axes, enumerate_family, partition_into_classes
from skewpersp.perspective import spec_text
from skewpersp.veblen import enumerate_labelings


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--axes", choices=("canonical", "census"), default="canonical")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--outdir", type=Path, default=Path("out"))
    args = ap.parse_args()

    axes = canonical_axes() if args.axes == "canonical" else enumerate_labelings()
    args.outdir.mkdir(parents=True, exist_ok=True)

    for tag in (FamilyTag.PERM_FAMILY, FamilyTag.KAPPA_FAMILY):
        classes = partition_into_classes(enumerate_family(tag, axes), jobs=args.jobs)
        path = args.outdir / f"{tag.value}_classes.json"
        path.write_text(json.dumps([c.to_dict() for c in classes], indent=2) + "\n")
        print(f"{tag.value}: {len(classes)} classes ({sum(len(c.members) for c in classes)} specs)")
        for c in classes:
            print(f"  {c.class_id:<4} {spec_text(c.representative):<24} size={len(c.members):<3} "
                  f"k5={c.free_k5_count:<3} aut={c.aut_order:<4} branch={c.branch}")
        print(f"  -> {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
