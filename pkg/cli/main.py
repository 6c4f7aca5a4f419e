#!/usr/bin/env python3
"""Command-line entry point for inextensible domain analysis.

Usage:
    inextensible analyze disk:1
    inextensible profile ngon:6:1 --n 360
    inextensible render square:1 --triangles 2 --lattice --output square.svg
    inextensible family --s 0.1 --domain-out family.json
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

# Allow running as `python3 cli/main.py` from a source checkout
_SCRIPT_DIR = Path(__file__).parent.resolve()
_PACKAGE_ROOT = _SCRIPT_DIR.parent
if str(_PACKAGE_ROOT) not in sys.path:
    sys.path.insert(0, str(_PACKAGE_ROOT))

from cli.base import EXIT_INPUT, exit_code_for  # noqa: E402
from cli.commands import COMMANDS  # noqa: E402
from utils.config import load_settings  # noqa: E402
from utils.errors import InextensibleError  # noqa: E402
from utils.log import log_error, log_info, log_warning, set_verbose  # noqa: E402

LOG_PREFIX = "inextensible"

DOMAIN_HELP = """\
Domains are given as a JSON domain file or as shorthand "kind:arg:arg".
An existing file always takes precedence over shorthand parsing.

  disk:r                     disk of radius r
  ellipse:a:b:phi            ellipse with semi-axes a, b rotated by phi radians
  ngon:n:r                   regular n-gon (n even, n >= 4), circumradius r,
                             first vertex at angle 0 degrees
  square:side                axis-parallel square
  parallelogram:ux:uy:vx:vy  parallelogram spanned by edge vectors u, v

All machine-readable output is in radians.
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inextensible",
        description="Critical lattices and inextensibility of symmetric convex domains",
        epilog=DOMAIN_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--config", help="YAML settings file (default: ./inextensible.config.yaml)")
    parser.add_argument("--verbose", "-v", action="store_true", help="Write progress diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, epilog=DOMAIN_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("input", help="Domain file or shorthand")
        p.add_argument("--n", type=int, default=None, help="A(θ) grid size over [0, π) (default from settings)")
        return p

    analyze = with_input("analyze", "Area, Δ, A_max, inextensibility verdict and Sas ratio as JSON")
    analyze.add_argument(
        "--witness",
        type=float,
        default=None,
        metavar="EPS",
        help="For extensible domains, also build the superdomain pushed out by EPS",
    )

    profile = with_input("profile", "A(θ) as CSV with header theta_rad,area")
    profile.add_argument("--output", "-o", help="Write CSV here instead of stdout")

    with_input("lattice", "Critical lattice basis, determinant and covering density as JSON")

    cover = with_input("cover-check", "Check that the critical lattice covers the plane")
    cover.add_argument("--resolution", type=int, default=None, help="Samples per side of the fundamental cell")

    family = sub.add_parser("family", help="Solve for a member of the disk-square family")
    family.add_argument("--s", type=float, required=True, help="Log semi-axis s >= 0 of the family's ellipses")
    family.add_argument(
        "--domain-out", help="Domain file for the member (default: family_s<s>.json in the working directory)"
    )

    render = with_input("render", "SVG of the domain (1000x1000 by default)")
    render.add_argument("--triangles", type=int, default=0, metavar="K", help="Draw the first K critical triangles")
    render.add_argument("--lattice", action="store_true", help="Draw translates by the critical lattice")
    render.add_argument("--output", "-o", help="Write SVG here instead of stdout")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors; bad usage is an input error here
        return EXIT_INPUT if e.code else 0

    if args.verbose:
        set_verbose(True)

    try:
        settings = load_settings(args.config)
    except InextensibleError as e:
        log_error(LOG_PREFIX, str(e))
        return exit_code_for(e.error_code)

    command = COMMANDS[args.command](args, settings)
    log_info(LOG_PREFIX, f"running {command.name}")
    result = command.run()

    for warning in result.warnings:
        log_warning(LOG_PREFIX, warning)
    if not result.success:
        log_error(LOG_PREFIX, f"{command.name} failed: {result.message}")
        return result.exit_code

    if result.output:
        sys.stdout.write(result.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
