#!/usr/bin/env python3
"""Rebuild the catalog biproducts from scratch and print their antipode
tables next to the stored reference tables.

Usage: python scripts/reproduce_tables.py [--field Q|GF7] [--param 2]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from homhopf import GF, QQ, check_antipode, check_radford_conditions  # noqa: E402
from homhopf.catalog import (  # noqa: E402
    antipode_table_of,
    dual_number_biproduct,
    dual_number_biproduct_antipode_table,
    dual_number_bundle,
    taft_biproduct,
    taft_biproduct_antipode_table,
    taft_bundle,
)


def show(hopf, reference):
    computed = antipode_table_of(hopf)
    field = hopf.field
    for label in hopf.basis:
        terms = " + ".join(
            f"{field.format(c)}*{target}" for target, c in computed[label].items()
        )
        mark = "ok" if computed[label] == reference[label] else "MISMATCH"
        print(f"  S({label}) = {terms:24} [{mark}]")
    print(f"  table match: {computed == reference}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--field", default="Q")
    parser.add_argument("--param", type=int, default=2)
    args = parser.parse_args()
    field = QQ if args.field == "Q" else GF(int(args.field[2:]))
    p = field.coerce(args.param)

    for name, bundle, build, table in (
        ("twisted Taft biproduct", taft_bundle(field, p), taft_biproduct,
         taft_biproduct_antipode_table(field)),
        ("dual-number biproduct", dual_number_bundle(field, p), dual_number_biproduct,
         dual_number_biproduct_antipode_table(field)),
    ):
        print(f"== {name} over {field}, parameter {field.format(p)}")
        gate = check_radford_conditions(bundle)
        print("  gate:", " ".join(f"{c.name}={c.verdict}" for c in gate.checks))
        hopf = build(field, p)
        show(hopf, table)
        print("  antipode axioms:", check_antipode(hopf.bialgebra, hopf.antipode).passed)
        print()


if __name__ == "__main__":
    main()
