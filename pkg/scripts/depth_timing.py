"""Time simplicial depth on random integer points in R^d for growing n."""
import argparse
import random
import time

from wheelsets.depth import DepthConfig, simplicial_depth


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, default=3)
    parser.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 500, 1000, 2000])
    parser.add_argument("--method", choices=("auto", "fast", "naive"), default="auto")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    origin = (0,) * args.dim
    for n in args.sizes:
        pts = [tuple(rng.randint(-10**9, 10**9) for _ in range(args.dim)) for _ in range(n)]
        start = time.perf_counter()
        depth = simplicial_depth(pts, origin, DepthConfig(seed=args.seed, method=args.method))
        print(f"d={args.dim} n={n:>6} depth={depth} time={time.perf_counter() - start:.2f}s", flush=True)


if __name__ == "__main__":
    main()
