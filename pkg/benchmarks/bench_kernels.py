"""Compare the numba and numpy rank kernels, then time a full orbit count.

    python3 benchmarks/bench_kernels.py [--batch 20000] [--repeat 3]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from arcorder.finite_field.kernels import HAVE_NUMBA, rank_batch


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--batch", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    for p, shape in [(2, (10, 14)), (3, (10, 14)), (2, (20, 21))]:
        mats = rng.integers(0, p, (args.batch,) + shape)
        t_np, r_np = best_of(lambda: rank_batch(mats, p, "numpy"), args.repeat)
        line = f"p={p} {shape[0]}x{shape[1]} x{args.batch}: numpy {t_np * 1e3:8.1f} ms"
        if HAVE_NUMBA:
            rank_batch(mats[:2], p, "numba")  # compile
            t_nb, r_nb = best_of(lambda: rank_batch(mats, p, "numba"), args.repeat)
            assert (r_nb == r_np).all()
            line += f"   numba {t_nb * 1e3:8.1f} ms   speedup {t_np / t_nb:5.1f}x"
        print(line)

    code = (
        "import time; from arcorder.finite_field.oracle import orbit_identity_check as f;"
        "t=time.perf_counter(); r=f((2,1,1),(4,3,2,1),(3,2,1),2); "
        "print(f'{time.perf_counter()-t:.2f}', r.ok)"
    )
    for flag in ("0", "1"):
        env = dict(os.environ, ARCORDER_NO_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True).stdout.split()
        backend = "numpy" if flag == "1" else "numba"
        print(f"orbit check (2^15 points), {backend}: {out[0]} s, identity ok: {out[1]}")


if __name__ == "__main__":
    main()
