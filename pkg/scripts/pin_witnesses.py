"""Regenerate src/graphdesigns/data/witnesses.json by exhaustive search.

Each claim records a graph, a subset size and the strength claimed for it.
The published drawings do not list vertex labels, so the fixture pins the
designs that brute force finds, under both counting rules.  Designs read
off two drawings are stored as well, under ``drawn``.

    python scripts/pin_witnesses.py [--workers 4]
"""

import argparse
from pathlib import Path

from graphdesigns.catalog import catalog_get
from graphdesigns.export import dumps
from graphdesigns.search import brute_force
from graphdesigns.spectral import spectrum

OUT = Path(__file__).resolve().parents[1] / "src" / "graphdesigns" / "data" / "witnesses.json"
KEEP = 64

# (id, graph, size, claimed K, kind, neighbourhood fact, drawn design)
CLAIMS = [
    ("nauru-6", "nauru", 6, 19, "figure", "perfect_code", [6, 9, 13, 16, 20, 23]),
    ("truncated-tetrahedral-4", "truncated-tetrahedral", 4, 11, "figure", "perfect_code", None),
    ("mcgee-8", "mcgee", 8, 21, "figure", "perfect_code", None),
    ("gp-12-4-8", "gp-12-4", 8, 22, "figure", "dominating", None),
    ("sylvester-6", "sylvester", 6, 26, "figure", "dominating", None),
    ("pappus-6", "pappus", 6, 14, "figure", "dominating", None),
    ("frucht-4", "frucht", 4, 11, "figure", "dominating", None),
    ("dyck-8", "dyck", 8, 16, "figure", "dominating", None),
    ("wong-5", "wong", 5, 25, "figure", "dominating", [2, 9, 14, 21, 26]),
    ("24-cell-3", "24-cell", 3, 8, "table", None, None),
    ("icosidodecahedral-6", "icosidodecahedral", 6, 24, "table", None, None),
    ("gewirtz-1", "gewirtz", 1, 19, "table", None, None),
    ("gosset-4", "gosset", 4, 29, "table", None, None),
    ("meringer-6", "meringer", 6, 25, "remark", None, None),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()
    claims = []
    for cid, name, size, claimed, kind, fact, drawn in CLAIMS:
        g = catalog_get(name)
        s = spectrum(g)
        entry = {"id": cid, "graph": name, "size": size, "claimed_K": claimed, "kind": kind,
                 "neighbourhood": fact}
        for rule in ("admissible", "complete"):
            r = brute_force(g, s, size, budget=2 * 10**7, workers=args.workers,
                            max_witnesses=KEEP, rule=rule)
            entry[rule] = {"best_K": r.best_K, "witness_count": r.witness_count,
                           "witnesses": [list(w) for w in r.witnesses]}
        if drawn is not None:
            entry["drawn"] = drawn
        claims.append(entry)
        print(f"{cid}: claimed {claimed}, best {entry['admissible']['best_K']} "
              f"(complete {entry['complete']['best_K']})")
    OUT.write_text(dumps({"version": 1, "claims": claims}), encoding="utf-8")


if __name__ == "__main__":
    main()
