"""Print order-type and frequency-vector counts for n = 1..N, with list lengths."""
import argparse

from wheelsets.wheel import (
    count_frequency_vectors,
    count_order_types,
    enumerate_frequency_vectors,
    enumerate_order_types,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--no-enumerate", action="store_true", help="skip the enumeration cross-check")
    args = parser.parse_args()
    print(f"{'n':>3} {'types':>8} {'oriented':>9} {'freqvecs':>9}  enum")
    for n in range(1, args.max_n + 1):
        row = (count_order_types(n, True), count_order_types(n, False), count_frequency_vectors(n))
        check = ""
        if not args.no_enumerate:
            lens = (len(enumerate_order_types(n, True)), len(enumerate_order_types(n, False)),
                    len(enumerate_frequency_vectors(n)))
            check = "ok" if lens == row else f"MISMATCH {lens}"
        print(f"{n:>3} {row[0]:>8} {row[1]:>9} {row[2]:>9}  {check}")


if __name__ == "__main__":
    main()
