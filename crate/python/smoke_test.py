"""Smoke test for the `zerosquare` extension module.

Build first with `cargo build --release -p zerosquare-py`, then run
`python3 python/smoke_test.py`. The script copies the compiled library into a
temporary directory under the importable name `zerosquare.so`.
"""

import importlib
import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    for profile in ("release", "debug"):
        lib = ROOT / "target" / profile / "libzerosquare_py.so"
        if lib.exists():
            break
    else:
        sys.exit("libzerosquare_py.so not found; run `cargo build --release -p zerosquare-py`")
    tmp = pathlib.Path(tempfile.mkdtemp())
    shutil.copy(lib, tmp / "zerosquare.so")
    sys.path.insert(0, str(tmp))
    return importlib.import_module("zerosquare")


def main():
    zs = load_module()

    t = zs.Matrix([[-180, -300, -450], [90, 150, 225], [12, 20, 30]])
    assert t.is_zero_square()
    assert t.trace() == 0 and t.det() == 0
    assert t.nonzero_minor() is None
    assert t.square() == zs.Matrix.zeros(3)

    cert = zs.normalize(t)
    assert cert.n == 3 and cert.r == 1 and cert.det_unit == 1
    assert cert.verify(t) == (True, None)
    e = zs.Matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    assert t @ cert.U == cert.U @ e

    hand = zs.Certificate(3, 1, zs.Matrix([[-30, 5, -14], [15, -3, 7], [2, 0, 1]]), 1)
    assert zs.verify(t, hand) == (True, None)
    tampered = zs.Certificate(3, 1, zs.Matrix([[-30, 6, -14], [15, -3, 7], [2, 0, 1]]), 1)
    assert not zs.verify(t, tampered)[0]

    round_trip = zs.Certificate.from_json(cert.to_json())
    assert round_trip.U == cert.U
    assert json.loads(cert.to_json())["verified"] is True

    two = zs.Matrix([[2, 4], [-1, -2]])
    c2 = zs.normalize(two)
    assert c2.r == 1 and c2.U.rows() == [[2, 1], [-1, 0]]

    big = zs.Matrix([[str(10**30), str(-(10**30))], [str(10**30), str(-(10**30))]])
    assert zs.normalize(big).r == 10**30

    c4 = zs.counterexample(4)
    assert c4.is_zero_square()
    rows, cols, value = c4.obstruction_witness()
    assert (rows, cols) == ((1, 3), (1, 3)) and value != 0

    f7 = zs.Matrix([[3, 2], [6, 4]], ring="fp:7")
    assert f7.ring == "fp:7" and zs.normalize(f7).verify(f7)[0]

    nil = zs.Matrix([["X", "XY"], ["0", "X"]], ring="nil16")
    assert nil.rows() == [["X", "XY"], ["0", "X"]]

    assert zs.xgcd(240, 46) == (2, -9, 47)
    assert zs.Matrix.from_json(t.to_json()) == t

    g = zs.random_zero_square(3, 1000, 42, 4)
    assert g.is_zero_square() and zs.normalize(g).verify(g)[0]

    summary = zs.oracle_summary(2, 3)
    assert summary["zero_square_count"] == 22 and summary["mismatches"] == 0

    try:
        zs.normalize(zs.Matrix([[1, 0], [0, 0]]))
    except zs.ZeroSquareError:
        pass
    else:
        raise AssertionError("normalize accepted a matrix with nonzero square")

    try:
        zs.Matrix([[1.5]])
    except TypeError:
        pass
    else:
        raise AssertionError("float entry accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
