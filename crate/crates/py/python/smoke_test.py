"""Smoke test for the jacobi extension module.

Build and install first, e.g. ``pip install -e crates/py --no-build-isolation``
or ``maturin develop -m crates/py/Cargo.toml``, then run this file.
"""

import json
import tempfile

import jacobi


def main():
    with tempfile.TemporaryDirectory() as cache:
        e = jacobi.Engine(cache_dir=cache)
        assert e.dims(6) == [1, 0, 1, 1, 3, 4, 9]
        assert e.dims(3, framed=True) == [1, 1, 2, 3]

        k = e.torus_knot(2, -3, 4)
        assert (k.m, k.p) == (2, -3)
        assert k.z.terms() == [
            (0, "1", "1"),
            (2, "w2", "-1/2"),
            (3, "tw2", "-1/2"),
            (4, "t2w2", "-31/48"),
            (4, "w4", "5/24"),
            (4, "w2w2", "1/8"),
        ]
        assert e.is_group_like(k.z)
        assert e.exp(k.log) == k.z
        assert k.z * e.inverse(k.z) == e.unit(4, False)
        assert e.torus_knot(3, 1, 4).z == e.unit(4, False)

        theta = e.theta(2)
        assert e.adams(3, theta).terms() == [(1, "I", "9")]
        assert e.project_unframed(theta).is_zero()

        sym = e.to_symmetrized(e.omega(4))
        assert sym[2]["w2B"] == "1/48"
        assert sym[4]["w4B"] == "-1/5760"
        assert sym[4]["w2B^2"] == "1/4608"

        rows, cols, m = e.appendix_a(2)
        assert (rows, cols, m) == (["w2", "I^2"], ["w2B", "strut^2"], [["1", "0"], ["1/6", "1"]])

        t = e.torus_knot(2, 3, 6)
        assert e.w_ac(t.z) == jacobi.alexander_torus(2, 3, 6)
        assert e.wheel_coefficients(t.z) == {2: "-1/2", 4: "5/24", 6: "-91/720"}

        x = e.element_from_json(k.log.to_json())
        assert x == k.log
        assert json.loads(x.to_json())["framed"] is False

        try:
            e.torus_knot(2, 4, 2)
        except ValueError:
            pass
        else:
            raise AssertionError("non-coprime parameters accepted")

        passed, report = e.verify(["omega", "appendix-a"])
        assert passed, report
    print("ok")


if __name__ == "__main__":
    main()
