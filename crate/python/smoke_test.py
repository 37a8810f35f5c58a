"""Smoke test for the powergraph_py extension module.

Build first with `cargo build -p powergraph-py --release` (or without
--release). If the module is not importable, the built library is copied
into a temporary directory under the importable name.
"""

import importlib
import shutil
import sys
import sysconfig
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    try:
        return importlib.import_module("powergraph_py")
    except ImportError:
        pass
    for profile in ("release", "debug"):
        lib = ROOT / "target" / profile / "libpowergraph_py.so"
        if lib.exists():
            break
    else:
        sys.exit("libpowergraph_py.so not found; run `cargo build -p powergraph-py` first")
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    tmp = Path(tempfile.mkdtemp())
    shutil.copy(lib, tmp / f"powergraph_py{suffix}")
    sys.path.insert(0, str(tmp))
    return importlib.import_module("powergraph_py")


def main():
    pg = load()

    a5 = pg.Group("A5")
    assert a5.order == 60 and len(a5) == 60
    orders = [a5.element_order(g) for g in range(a5.order)]
    assert (orders.count(2), orders.count(3), orders.count(5)) == (15, 20, 24)
    c = a5.find("(abcde)")
    assert (c, a5.power(c, 2)) in a5.power_graph([2])
    assert len(a5.power_graph([2, 3, 5])) == 92

    z12 = pg.Group("Z3 x Z4")
    names, edges = z12.quotient([3])
    assert len(names) == 6 and all(label % 3 != 0 for _, _, label in edges)

    d18 = pg.Group("D18")
    assert d18.classify_undirected(2)["verdict"] == "pass"
    r = d18.classify_undirected(3)
    assert (r["hypothesis_holds"], r["conclusion_holds"]) == (False, False)

    f5 = pg.Group("sdp(Z7, Z3, mult=2)")
    assert all(r["verdict"] == "pass" for r in f5.sdp_components())
    assert f5.to_dot([3]).startswith('digraph "sdp(Z7, Z3, mult=2)"')

    assert pg.canonical("Z3xZ4") == "Z3 x Z4"
    try:
        pg.Group("sdp(Z6, Z3, mult=2)")
    except ValueError:
        pass
    else:
        raise AssertionError("invalid action accepted")

    summary = pg.run_catalog(24, [2, 3])
    assert summary["counterexample"] == 0 and summary["resource_exhausted"] == 0
    assert summary["failures"] == []
    print(f"ok: {summary['groups']} groups, {summary['pass']} passing checks")


if __name__ == "__main__":
    main()
