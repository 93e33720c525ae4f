"""Compare the compiled and pure-Python eigensolver kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--steps 51]

Times the raw 4x4 and symmetric 3x3 kernels on the Wootters and discord
matrices of a damped-state grid, then a full channel sweep per backend.
"""
import argparse
import time

import numpy as np

from noisygrover import linalg
from noisygrover.channels import damped_state, make_channel
from noisygrover.core import GateParameter
from noisygrover.experiments import sweep_channel
from noisygrover.measures import bloch_decompose, spin_flip


def workload(steps):
    products, sym = [], []
    for a2 in np.linspace(0, 1, steps):
        param = GateParameter.from_alpha_sq(a2)
        for p in np.linspace(0, 1, steps):
            rho = damped_state(param, make_channel("amplitude", p))
            products.append(np.ascontiguousarray(rho @ spin_flip(rho)))
            b = bloch_decompose(rho)
            sym.append(np.ascontiguousarray(np.outer(b.s, b.s) + b.t.T @ b.t))
    return products, sym


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--steps", type=int, default=51)
    args = parser.parse_args(argv)

    products, sym = workload(args.steps)
    backends = linalg.available_backends()
    print("%d matrices per kernel, best of %d" % (len(products), args.repeat))
    print("%-10s %12s %12s %12s" % ("backend", "eig 4x4 (s)", "sym 3x3 (s)", "sweep (s)"))
    results = {}
    for name in backends:
        k = linalg.get_kernels(name)
        t_gen = best_of(args.repeat, lambda: [k.eigvals_general(m) for m in products])
        t_sym = best_of(args.repeat, lambda: [k.eigvals_sym(m) for m in sym])
        previous = linalg.set_backend(name)
        try:
            t_sweep = best_of(args.repeat, lambda: sweep_channel("amplitude", args.steps, args.steps))
        finally:
            linalg.set_backend(previous)
        results[name] = (t_gen, t_sym, t_sweep)
        print("%-10s %12.4f %12.4f %12.4f" % (name, t_gen, t_sym, t_sweep))
    if "compiled" in results:
        c, p = results["compiled"], results["python"]
        print("speedup    %11.1fx %11.1fx %11.1fx" % tuple(pv / cv for pv, cv in zip(p, c)))
    else:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
