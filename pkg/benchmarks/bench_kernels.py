"""Wall-clock comparison of the compiled and NumPy kernels.

    python benchmarks/bench_kernels.py [--repeat 20]

Prints the median time per call for each kernel and backend, plus the
speed-up of the compiled version. Shapes match what the filter and the
training loop actually use.
"""

import argparse
import statistics
import time

import numpy as np

from pdanse import _kernels_py as py

try:
    from pdanse import _ckernels as cy
except ImportError:  # extension not built
    cy = None


def _time(fn, args, repeat):
    fn(*args)
    out = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        out.append(time.perf_counter() - t0)
    return statistics.median(out)


def cases(rng):
    L = 300
    X = rng.normal(scale=8, size=(L, 3))
    noise = rng.normal(scale=0.3, size=(L, 3))
    w = rng.dirichlet(np.ones(L))
    logl = rng.normal(scale=50, size=(128, L))
    logl_pdanse = rng.normal(scale=50, size=(128, 10))
    Y = rng.normal(size=(3,))
    HX = rng.normal(size=(128, L, 3))
    T, B, H = 200, 128, 80
    A = rng.normal(scale=0.5, size=(T, B, 3 * H))
    U = rng.normal(scale=0.1, size=(3 * H, H))
    hs, rs, zs, cs, _ = py.gru_layer_forward(A, U)
    dout = rng.normal(size=(T, B, H))
    return {
        "lorenz_step_batch (300 particles)": ("lorenz_step_batch", (X, noise, 0.02, 5)),
        "log_normalize (300)": ("log_normalize", (logl[0],)),
        "log_normalize (128 x 10)": ("log_normalize", (logl_pdanse,)),
        "log_normalize (128 x 300)": ("log_normalize", (logl,)),
        "systematic_resample (300)": ("systematic_resample", (w, 0.37)),
        "iso_gauss_loglik (128 x 300 x 3)": ("iso_gauss_loglik", (Y, HX, 2.0)),
        "gru_layer_forward (T=200, B=128, H=80)": ("gru_layer_forward", (A, U)),
        "gru_layer_backward (T=200, B=128, H=80)": ("gru_layer_backward", (dout, hs, rs, zs, cs, U)),
    }


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(0)
    print(f"{'kernel':42s} {'numpy ms':>10s} {'cython ms':>10s} {'speed-up':>9s}")
    for label, (name, a) in cases(rng).items():
        rep = max(3, args.repeat // 5) if name.startswith("gru") else args.repeat
        tp = _time(getattr(py, name), a, rep)
        if cy is None:
            print(f"{label:42s} {tp * 1e3:10.3f} {'n/a':>10s}")
            continue
        tc = _time(getattr(cy, name), a, rep)
        print(f"{label:42s} {tp * 1e3:10.3f} {tc * 1e3:10.3f} {tp / tc:8.2f}x")


if __name__ == "__main__":
    main()
