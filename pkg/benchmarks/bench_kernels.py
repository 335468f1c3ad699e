"""Benchmark the compiled polynomial kernel against the pure-Python fallback.

Two views:

* micro: padd/pmul on randomly generated sparse Laurent-polynomial dicts,
  calling the compiled extension and the fallback side by side in-process;
* end-to-end: wall time for a representative symbolic workload (all
  seminormal idempotents F_t at (r, n) = (2, 2)) in a subprocess, with the
  backend forced via the AK_PURE_PYTHON environment variable.

Run with:  python3 benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from arikikoike import _poly_py  # noqa: E402
from arikikoike.kernel import BACKEND  # noqa: E402

try:
    from arikikoike import _poly_c
except ImportError:
    _poly_c = None


def random_poly(rng, nvars, terms, span=6):
    out = {}
    for _ in range(terms):
        mono = tuple(rng.randint(-span, span) for _ in range(nvars))
        out[mono] = rng.randint(-50, 50) or 1
    return out


def bench_micro(mod, polys, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        for a, b in polys:
            mod.padd(a, b)
            mod.pmul(a, b)
            mod.pneg(a)
            mod.pscale(a, 3)
    return time.perf_counter() - t0


def run_micro():
    rng = random.Random(42)
    cases = {
        "small (4 terms, 3 vars)": [(random_poly(rng, 3, 4), random_poly(rng, 3, 4))
                                    for _ in range(40)],
        "medium (20 terms, 3 vars)": [(random_poly(rng, 3, 20), random_poly(rng, 3, 20))
                                      for _ in range(20)],
        "large (80 terms, 4 vars)": [(random_poly(rng, 4, 80), random_poly(rng, 4, 80))
                                     for _ in range(5)],
    }
    print(f"active kernel backend: {BACKEND}")
    if _poly_c is None:
        print("compiled kernel not available; micro benchmark skipped")
        return
    print(f"{'case':<28} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, polys in cases.items():
        repeat = 50
        t_py = bench_micro(_poly_py, polys, repeat)
        t_c = bench_micro(_poly_c, polys, repeat)
        print(f"{name:<28} {t_py:>9.3f}s {t_c:>9.3f}s {t_py / t_c:>7.2f}x")


END_TO_END = """
import time
from arikikoike.algebra import shared_spec
from arikikoike.kernel import BACKEND
from arikikoike.seminormal import F_t, all_tableaux
spec = shared_spec(2, 2)
t0 = time.perf_counter()
for t in all_tableaux(spec):
    F_t(spec, t)
print(f"{BACKEND} {time.perf_counter() - t0:.3f}")
"""


def run_end_to_end():
    print()
    print("end-to-end: all F_t at (r, n) = (2, 2), symbolic backend")
    for env_val, label in (("", "compiled"), ("1", "pure python")):
        env = dict(os.environ, AK_PURE_PYTHON=env_val)
        out = subprocess.run(
            [sys.executable, "-c", END_TO_END], env=env,
            capture_output=True, text=True, check=True,
        ).stdout.strip()
        backend, seconds = out.split()
        print(f"  {label:<12} (backend={backend}): {seconds}s")


if __name__ == "__main__":
    run_micro()
    run_end_to_end()
