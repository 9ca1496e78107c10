"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit
from fractions import Fraction

from intuitionist import _pykernels
from intuitionist.subject import SyntheticOracle, vesley_x

try:
    from intuitionist import _ckernels
except ImportError:
    _ckernels = None


def margin_case():
    # an undecided Vesley sequence never clears the margin: the search runs to the end
    x = vesley_x(SyntheticOracle())
    zero = lambda v: Fraction(0)
    x.trace(400)
    return (x.approx, zero, 400)


def product_case(dim=3, terms=40, seed=0):
    rng = random.Random(seed)

    def point():
        return [
            (tuple(rng.randint(-4, 4) for _ in range(dim)), Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
            for _ in range(terms)
        ]

    return (point(), point(), Fraction(2), dim)


def lex_case(size=400, seed=1):
    rng = random.Random(seed)
    xs = {(rng.randint(-50, 50), rng.randint(-50, 50)): Fraction(rng.randint(1, 9)) for _ in range(size)}
    ys = dict(xs)
    ys[max(ys)] += 1
    return (xs, ys)


CASES = {
    "margin_search": margin_case,
    "twisted_product": product_case,
    "lex_first_difference": lex_case,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=20)
    args = ap.parse_args()

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the fallback only")

    print(f"{'kernel':<22}{'backend':<9}{'best ms/call':>14}{'speedup':>10}")
    for name, make in CASES.items():
        case = make()
        base = None
        for label, module in backends:
            fn = getattr(module, name)
            best = min(timeit.repeat(lambda: fn(*case), repeat=args.repeat, number=args.number)) / args.number
            base = base or best
            print(f"{name:<22}{label:<9}{best * 1e3:>14.3f}{base / best:>9.2f}x")


if __name__ == "__main__":
    main()
