"""Smoke test for the eisenforest extension module.

Builds the cdylib with cargo unless EISENFOREST_LIB points at a built
library, then imports it from a temporary directory.
"""

import importlib.util
import os
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    try:
        import eisenforest  # installed with maturin

        return eisenforest
    except ImportError:
        pass
    lib = os.environ.get("EISENFOREST_LIB")
    if lib is None:
        subprocess.run(
            ["cargo", "build", "--release", "-p", "eisenstein-forest-py"],
            cwd=ROOT,
            check=True,
        )
        lib = ROOT / "target" / "release" / "libeisenforest.so"
    tmp = pathlib.Path(tempfile.mkdtemp())
    target = tmp / "eisenforest.so"
    shutil.copy(lib, target)
    spec = importlib.util.spec_from_file_location("eisenforest", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    ef = load()
    T, P = ef.Triple, ef.Pair

    assert ef.is_eisenstein((7, 8, 5))
    assert ef.is_eisenstein(T(7, 8, 3))
    assert not ef.is_eisenstein((3, 4, 5))
    assert ef.is_primitive_eisenstein((1, 1, 1))
    assert not ef.is_primitive_eisenstein((14, 16, 10))

    assert ef.twin((7, 8, 5)) == T(7, 8, 3)
    assert ef.triple_from_pair((1, 2)) == (T(7, 8, 5), T(7, 8, 3))
    assert ef.pair_from_triple((7, 8, 3)) == (P(1, 2), "twin")
    assert ef.roots() == (T(7, 8, 5), T(13, 15, 7))

    assert ef.children_pair((1, 2))[0] == P(1, 5)
    assert ef.parent_pair((3, 4)) == (P(2, 3), 5)
    assert ef.parent_pair(P(1, 3)) is None
    assert ef.path_of_pair((5, 16)) == "A:1.2"
    assert ef.pair_of_path("A:1.2") == P(5, 16)

    assert ef.path_of_triple((49, 55, 39)) == "B:5"
    assert ef.path_of_triple((49, 55, 16)) == "B:5"
    assert ef.parent_triple((37, 40, 33)) == (T(19, 21, 16), 5)
    node = ef.triple_of_path("A:5.5")
    assert node.tree_triple == T(37, 40, 33)
    assert node.twin_triple == T(37, 40, 7)
    assert (node.pair.astuple(), node.depth) == ((3, 4), 2)
    for child in ef.children_triple(node.tree_triple):
        assert ef.parent_triple(child)[0] == node.tree_triple

    nodes = ef.enumerate_forest(50)
    assert [n.path for n in nodes] == ["A", "B", "A:1", "A:5", "B:1", "B:5", "A:5.5"]
    triples = ef.enumerate_all_triples(1000, include_equilateral=True)
    assert T(1, 1, 1) in triples
    assert sorted(t for t in triples if t != T(1, 1, 1)) == ef.brute_triples(1000)
    assert all(ef.is_forest_pair(p) for p in ef.brute_pairs(200))

    report = ef.verify_bijection(2000)
    assert report and report.missing == [] and report.duplicated == []
    assert report.forest_count == report.oracle_count == 2 * report.node_count

    for bad, exc in [
        (lambda: ef.twin((3, 4, 5)), ValueError),
        (lambda: ef.path_of_triple((1, 1, 1)), ValueError),
        (lambda: ef.pair_of_path("C:1"), ValueError),
        (lambda: ef.triple_from_pair((2, 5)), ValueError),
        (lambda: ef.triple_of_path("A:" + ".".join(["3"] * 100)), OverflowError),
    ]:
        try:
            bad()
        except exc:
            pass
        else:
            raise AssertionError(f"expected {exc.__name__}")

    print(f"smoke test OK ({len(nodes)} nodes <= 50, {report})")


if __name__ == "__main__":
    sys.exit(main())
