#!/usr/bin/env python3
"""Smoke test for the sylvester_py extension module.

Builds nothing itself: expects `cargo build -p sylvester-py` (debug or
release) to have produced the cdylib, copies it next to a temp dir under
the importable name, and exercises the bindings end to end.
"""

import json
import shutil
import sys
import sysconfig
import tempfile
from fractions import Fraction
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_cdylib() -> Path:
    names = ["libsylvester_py.so", "sylvester_py.dll", "libsylvester_py.dylib"]
    candidates = [
        REPO / "target" / profile / name
        for profile in ("release", "debug")
        for name in names
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "sylvester_py cdylib not found; run `cargo build -p sylvester-py` first"
    )


def import_module():
    src = locate_cdylib()
    tmp = Path(tempfile.mkdtemp(prefix="sylvester_py_"))
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(src, tmp / f"sylvester_py{suffix}")
    sys.path.insert(0, str(tmp))
    import sylvester_py  # noqa: E402

    return sylvester_py


def main() -> None:
    sp = import_module()

    # exact evaluation
    w = sp.PartitionFunction([2, 3, 5])
    assert w.eval(0) == 1
    assert w.eval(10) == 4
    assert w.period == 30
    assert w.wave_indices == [1, 2, 3, 5]
    assert w.weight(5) == 1

    # closed form vs the DP oracle
    assert w.table(80) == sp.count_partitions([2, 3, 5], 80)

    # natural sets and big integers
    nat = sp.PartitionFunction.natural(10)
    oracle = sp.count_partitions(list(range(1, 11)), 300)
    assert nat.eval(300) == oracle[300]
    assert nat.eval(300) > 10**9  # leaves 32-bit range, stays exact

    # negative arguments return the quasi-polynomial value
    two = sp.PartitionFunction([1, 2])
    assert two.eval(-4) == -1

    # trigonometric extension agrees at integers
    for s in range(0, 40):
        assert abs(w.eval_real(float(s)) - w.eval(s)) < 1e-9 * max(1, w.eval(s))
    assert abs(two.eval_real(0.5) - 1.0) < 1e-9

    # wave decomposition schema
    doc = json.loads(two.waves_json())
    assert doc["parts"] == [1, 2]
    assert doc["period"] == 2
    assert [wv["j"] for wv in doc["waves"]] == [1, 2]
    assert doc["waves"][0]["residues"][0]["coeffs"] == ["3/4", "1/2"]
    assert Fraction(doc["waves"][1]["residues"][1]["coeffs"][0]) == Fraction(-1, 4)

    # two-prime closed form: W(a·p1·p2) = a + 1
    for a in range(6):
        assert sp.two_prime(3, 5, 15 * a) == a + 1

    # Molien counts: catalog and JSON spec ingestion
    assert sp.molien_catalog("dihedral", 4).count(4) == 2
    q8 = sp.molien_catalog("quaternion", 2)
    assert q8.counts(6) == [1, 0, 0, 0, 2, 0, 1]
    spec = sp.MolienSpec(
        '{"name": "Q8", "numerator": {"0": 1, "6": 1}, "degrees": [4, 4]}'
    )
    assert spec.counts(6) == q8.counts(6)

    # validation surfaces as ValueError
    for bad in (lambda: sp.PartitionFunction([]),
                lambda: sp.PartitionFunction([0, 2]),
                lambda: sp.molien_catalog("nope", 3),
                lambda: sp.two_prime(4, 6, 1)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("sylvester_py smoke test passed")


if __name__ == "__main__":
    main()
