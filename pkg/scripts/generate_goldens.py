#!/usr/bin/env python3
"""Regenerate committed artifacts derived from the bundled catalog:

- data/paper_catalog.json      (reference catalog file)
- tests/golden/capacity_paper.txt
- tests/golden/matrix_paper.txt

Run from the repository root after changing the dataset or the renderers,
then review the diff before committing.
"""

from pathlib import Path

from llm_tco.breakeven import break_even_matrix
from llm_tco.catalog import serialize_catalog
from llm_tco.dataset import builtin_catalog
from llm_tco.engine import WorkloadProfile
from llm_tco.reporting import RenderSpec, render_breakeven_matrix, render_capacity_table

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    catalog = builtin_catalog()
    w = WorkloadProfile()
    r = RenderSpec(format="paper")

    (ROOT / "data").mkdir(exist_ok=True)
    (ROOT / "tests" / "golden").mkdir(parents=True, exist_ok=True)

    targets = {
        ROOT / "data" / "paper_catalog.json": serialize_catalog(catalog),
        ROOT / "tests" / "golden" / "capacity_paper.txt":
            render_capacity_table(catalog, w, r),
        ROOT / "tests" / "golden" / "matrix_paper.txt":
            render_breakeven_matrix(
                break_even_matrix(catalog, w), r,
                {o.id: o.name for o in catalog.offerings},
                {d.id: d.name for d in catalog.deployments}),
    }
    for path, content in targets.items():
        path.write_text(content, encoding="utf-8")
        print(f"wrote {path.relative_to(ROOT)} ({len(content)} bytes)")


if __name__ == "__main__":
    main()
