import json
import os
import random
import subprocess
import sys

import pytest

from bvlattice import _backend, _pycore
from helpers import cofactor_det, naive_minor_gcd

compiled = pytest.mark.skipif("cython" not in _backend.available(), reason="compiled kernels not built")


def rand_rows(rng, k, n, lo, hi):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(k)]


@pytest.fixture(params=_backend.available())
def core(request):
    return _backend.get(request.param)


class TestEachBackend:
    def test_det_matches_cofactor(self, core, rng):
        for _ in range(300):
            n = rng.randint(1, 4)
            m = rand_rows(rng, n, n, -9, 9)
            assert core.det(m) == cofactor_det(m)

    def test_det_big_entries(self, core):
        big = 2**80
        m = [[big, 1, 0], [3, big, 2], [0, 5, big]]
        assert core.det(m) == cofactor_det(m)

    def test_det_near_guard(self, core, rng):
        # products of minors land close to 2**126
        for _ in range(50):
            m = rand_rows(rng, 3, 3, -(2**40), 2**40)
            assert core.det(m) == cofactor_det(m)

    def test_minor_gcd(self, core, rng):
        for _ in range(100):
            n = rng.randint(1, 6)
            k = rng.randint(1, n)
            m = rand_rows(rng, k, n, -9, 9)
            assert core.minor_gcd_scan(m, k) == naive_minor_gcd(m)

    def test_minor_gcd_big(self, core):
        m = [[2**70, 3 * 2**70, 5], [7, 11, 2**65]]
        assert core.minor_gcd_scan(m, 2) == naive_minor_gcd(m)

    def test_enumerate_box(self, core):
        basis = [[1, -1, 0], [0, 1, -1]]
        got = core.enumerate_box(basis, [2, 2], 1)
        assert set(got) == {
            (1, -1, 0), (-1, 1, 0), (0, 1, -1), (0, -1, 1), (1, 0, -1), (-1, 0, 1)
        }  # fmt: skip

    def test_enumerate_box_big_basis_falls_back(self, core):
        basis = [[2**70, 1]]
        assert core.enumerate_box(basis, [1], 1) == []
        assert set(core.enumerate_box([[2**70, 1], [2**70, 0]], [1, 1], 1)) == {(0, -1), (0, 1)}


@compiled
class TestCompiledAgreesWithPython:
    def test_same_outputs(self):
        from bvlattice import _core

        rng = random.Random(5)
        for _ in range(300):
            n = rng.randint(1, 7)
            k = rng.randint(1, n)
            m = rand_rows(rng, k, n, -20, 20)
            assert _core.minor_gcd_scan(m, k) == _pycore.minor_gcd_scan(m, k)
            sq = m[:k]
            sq = [r[:k] for r in sq]
            assert _core.det(sq) == _pycore.det(sq)
        for _ in range(50):
            basis = rand_rows(rng, 2, 4, -3, 3)
            bounds = [rng.randint(0, 3), rng.randint(0, 3)]
            assert _core.enumerate_box(basis, bounds, 3) == _pycore.enumerate_box(basis, bounds, 3)


def test_env_var_forces_python():
    env = dict(os.environ, BVLATTICE_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import bvlattice; print(bvlattice.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        _backend.get("fortran")


@compiled
def test_backend_benchmark_script(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).parents[1] / "benchmarks" / "bench_backends.py"
    spec = importlib.util.spec_from_file_location("bench_backends", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--repeat", "1", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert {r["workload"] for r in rows} >= {"minor gcd C(16,8)"}
