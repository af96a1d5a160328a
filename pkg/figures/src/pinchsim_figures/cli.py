"""Command-line front end: render one CSV file into one image.

Exit codes: 0 success, 2 unreadable input, schema mismatch, or unwritable
output.
"""

from __future__ import annotations

import argparse
import sys

from .loader import FigureDataError, load_csv
from .render import RENDERERS, save_figure


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pinchsim-figures",
        description="Render pinchsim experiment CSV files into figures.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    render = subparsers.add_parser("render", help="render one CSV into one image")
    render.add_argument(
        "--kind",
        required=True,
        choices=sorted(RENDERERS),
        help="which experiment layout the CSV holds",
    )
    render.add_argument(
        "--in",
        dest="source",
        required=True,
        metavar="CSV",
        help="input CSV file (as written by the simulator CLI)",
    )
    render.add_argument(
        "--out",
        required=True,
        metavar="IMAGE",
        help="output image path (format from the extension, e.g. .png)",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        figure = RENDERERS[args.kind](load_csv(args.source))
        save_figure(figure, args.out)
    except (OSError, FigureDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
