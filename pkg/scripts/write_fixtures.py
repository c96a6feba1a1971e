"""Regenerate fixtures/*.pts from the frozen reference configurations."""
import argparse
from pathlib import Path

from wheelsets.fixtures import FIXTURE_NAMES, fixture

PREFIX = {"fig1_trio": "fig1", "appendix_b_pair": "appendix_b", "appendix_c_pair": "appendix_c"}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=Path(__file__).resolve().parent.parent / "fixtures", type=Path)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name in FIXTURE_NAMES:
        fx = fixture(name)
        for label in fx.point_sets:
            path = args.out / f"{PREFIX[name]}_{label}.pts"
            path.write_text(fx.pointfile(label), encoding="utf-8")
            print(path)


if __name__ == "__main__":
    main()
