"""Shared fixtures: deterministic input documents for CLI tests."""

import json
import os
from pathlib import Path

import pytest

from comonoids.exact import GF, Mat, Subspace
from comonoids.coalgebras import comatrix_coalgebra, ground_coalgebra, grouplikes_coalgebra
from comonoids.corings import Bimodule, sweedler_coring
from comonoids.documents import (
    canonical_bytes,
    doc_for,
    doc_for_bimodule,
    doc_for_comodule,
    doc_for_comodule_coalgebra,
    doc_for_coring,
    doc_for_diagram,
    doc_for_module_coalgebra,
    doc_for_morphism,
)
from comonoids.families import (
    cyclic_group_bialgebra,
    cyclic_group_hopf,
    idempotent_monoid_bialgebra,
    left_multiplication_action,
    truncated_polynomial_algebra,
)
from comonoids.hopf import (
    ComoduleCoalgebra,
    regular_comodule,
    trivial_coaction,
)
from comonoids.limits import Diagram

GOLDEN_DIR = Path(__file__).parent / "golden"

F2 = GF(2)


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    """Chdir into a temp dir pre-populated with standard input documents."""
    monkeypatch.chdir(tmp_path)

    def write(doc, fname):
        (tmp_path / fname).write_bytes(canonical_bytes(doc))

    m2c = comatrix_coalgebra(2, F2)
    g2 = grouplikes_coalgebra(F2, 2)
    k = ground_coalgebra(F2)
    write(doc_for(m2c, "m2c"), "m2c.doc")
    write(doc_for(g2, "g2"), "g2.doc")
    write(doc_for(k, "k"), "k.doc")
    write(doc_for(Subspace.from_vectors(F2, 4, [(1, 0, 0, 0)]), "span-e11"),
          "span-e11.doc")
    write(doc_for(Subspace.from_vectors(F2, 4, [(1, 0, 0, 0), (0, 1, 0, 0),
                                                (0, 0, 1, 0)]), "window3"),
          "window3.doc")
    write(doc_for_morphism(Mat.identity(F2, 2), "g2", "g2", "idmap"), "idmap.doc")
    write(doc_for_morphism(Mat(F2, [[0, 1], [1, 0]]), "g2", "g2", "swapmap"),
          "swapmap.doc")

    a = truncated_polynomial_algebra(F2, 2)
    write(doc_for(a, "A"), "A.doc")
    reg = Bimodule.regular(a)
    write(doc_for_bimodule(reg, "A", "regA"), "regA.doc")
    sw = sweedler_coring(a)
    write(doc_for_bimodule(sw.carrier, "A", "sw-carrier"), "sw-carrier.doc")
    write(doc_for_coring(sw, "sw-carrier", "sweedler"), "sweedler.doc")
    write(doc_for(Subspace.from_vectors(F2, 2, [(0, 1)]), "span-x"), "span-x.doc")
    write(doc_for(Subspace.from_vectors(F2, 4, [(1, 0, 0, 0)]), "seed-1x1"),
          "seed-1x1.doc")

    kc2 = cyclic_group_bialgebra(F2, 2)
    write(doc_for(kc2, "kc2"), "kc2.doc")
    write(doc_for(cyclic_group_hopf(F2, 2), "kc2h"), "kc2h.doc")
    write(doc_for(idempotent_monoid_bialgebra(F2), "im"), "im.doc")
    mc = left_multiplication_action(kc2)
    write(doc_for_module_coalgebra(mc, "kc2", "mc"), "mc.doc")
    write(doc_for(Subspace.from_vectors(F2, 2, [(0, 1)]), "span-g"), "span-g.doc")
    cc = ComoduleCoalgebra(kc2, m2c, trivial_coaction(kc2, m2c))
    write(doc_for_comodule_coalgebra(cc, "kc2", "cc"), "cc.doc")
    vreg = regular_comodule(kc2)
    write(doc_for_comodule(vreg, "kc2", "vreg"), "vreg.doc")

    dia = Diagram([("a", g2), ("b", g2)],
                  [("f", "a", "b", Mat.identity(F2, 2)),
                   ("g", "a", "b", Mat(F2, [[0, 1], [1, 0]]))])
    write(doc_for_diagram(dia, "dia"), "dia.doc")
    write(doc_for(g2, "a"), "a.doc")
    write(doc_for(g2, "b"), "b.doc")
    span = Diagram([("apex", k), ("l", g2), ("r", g2)],
                   [("f", "apex", "l", Mat(F2, [[1], [0]])),
                    ("g", "apex", "r", Mat(F2, [[1], [0]]))])
    write(doc_for_diagram(span, "span"), "span.doc")
    write(doc_for(k, "apex"), "apex.doc")
    write(doc_for(g2, "l"), "l.doc")
    write(doc_for(g2, "r"), "r.doc")
    return tmp_path


def compare_with_golden(report: dict, name: str):
    """Normalize and compare a run report against its golden file."""
    report = dict(report)
    report["wall_time_s"] = 0.0
    GOLDEN_DIR.mkdir(exist_ok=True)
    path = GOLDEN_DIR / f"{name}.json"
    if os.environ.get("REGEN_GOLDEN"):
        path.write_text(json.dumps(report, sort_keys=True, indent=2) + "\n")
    expected = json.loads(path.read_text())
    assert report == expected
