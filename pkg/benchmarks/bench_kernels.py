"""Compare the compiled and pure-Python GF(p) kernels.

    python3 benchmarks/bench_kernels.py --primes 7 13 31 --repeat 5
"""
import argparse
import random
import sys
import timeit

from bisectorfields import GF, AffineMap
from bisectorfields.core import field_polynomials
from bisectorfields.errors import InvalidQuadrilateral, SingularMap
from bisectorfields.kernels import affine_ints, compiled_kernels, py_kernels, side_ints
from bisectorfields.plane import Line, Quadrilateral


def random_quad(F, rng):
    while True:
        try:
            return Quadrilateral(*(Line.of(rng.randrange(F.p), 1, rng.randrange(F.p), F) for _ in range(4)))
        except InvalidQuadrilateral:
            pass


def random_map(F, rng):
    while True:
        try:
            return AffineMap.of(F, *(rng.randrange(F.p) for _ in range(6)))
        except SingularMap:
            pass


def workload(p, n, seed):
    F = GF(p)
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        q = random_quad(F, rng)
        fp = field_polynomials(q)
        out.append((side_ints(q), [c.value for c in fp.Phi.coeffs], [c.value for c in fp.Psi.coeffs],
                    affine_ints(random_map(F, rng))))
    return out


def run(impl, p, jobs):
    for sides, phi, psi, m in jobs:
        mask = impl.bisector_mask(p, sides)
        impl.dual_mask(p, phi, psi)
        impl.transport_mask(p, mask, *m)
        impl.slope_counts(p, mask)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[7, 13, 31])
    ap.add_argument("--quads", type=int, default=50, help="quadrilaterals per prime")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if compiled_kernels is None:
        print("compiled extension not built; run: python3 setup.py build_ext --inplace", file=sys.stderr)
        return 1
    print(f"{'p':>4} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for p in args.primes:
        jobs = workload(p, args.quads, args.seed)
        for sides, phi, psi, m in jobs:
            a, b = py_kernels.bisector_mask(p, sides), compiled_kernels.bisector_mask(p, sides)
            assert bytes(a) == bytes(b), "backends disagree"
        t_py = min(timeit.repeat(lambda: run(py_kernels, p, jobs), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: run(compiled_kernels, p, jobs), number=1, repeat=args.repeat))
        print(f"{p:>4} {t_py:>10.4f} {t_c:>10.4f} {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
