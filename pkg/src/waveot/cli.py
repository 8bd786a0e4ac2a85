"""Command-line interface.

Subcommands:
  simulate   run a benchmark sweep and write a CSV
  distance   print one wavelet distance between a base density and its
             transform at a given parameter
  embed      write the sparse coefficient vector of a transformed density
  constants  print the estimated a11/a12/a13 constants for a wavelet

All parameters come from flags; exit code 0 on success, 1 with a
diagnostic line on stderr otherwise.
"""

import argparse
import sys

from .cascade import estimate_constants
from .distance import DistanceConfig, wavelet_distance
from .embedding import embed, write_wlot
from .errors import WaveotError
from .filters import build_wavelet_system, catalog_names
from .simulate import FAMILIES, SimulationSpec, emit_csv, run_simulation

# translations wander further than dilations, so they default to a wider
# dyadic domain (larger 2^-j0)
_DEFAULT_J0 = {"uniform_translate": -11, "bump_translate": -11,
               "uniform_dilate": -9, "bump_dilate": -9}
_DEFAULT_M = 18
_FULL_M = 22


def _add_cfg_flags(p, with_s_list):
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    if with_s_list:
        p.add_argument("--s", type=float, nargs="+", default=[1.0, 0.5, 0.25],
                       help="exponent values (default: 1 0.5 0.25)")
    else:
        p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--j0", type=int, default=None,
                   help="lowest level (default: -11 for translations, -9 for dilations)")
    p.add_argument("--levels", type=int, default=None, metavar="M",
                   help=f"number of DWT levels (default {_DEFAULT_M}; {_FULL_M} with --full)")
    p.add_argument("--wavelet", default="db10", choices=catalog_names())
    p.add_argument("--formulation", default="new",
                   choices=["new", "original", "alternative"])
    p.add_argument("--c0", default=None,
                   help="approximation weight; 'auto' gives 3^s for the "
                        "alternative formulation (default: 0 / auto)")
    p.add_argument("--c1", type=float, default=1.0)
    p.add_argument("--full", action="store_true",
                   help="full-size parameters (M = 22, 1000 exact grid points)")


def _resolve_cfg(args, s):
    j0 = args.j0 if args.j0 is not None else _DEFAULT_J0[args.family]
    M = args.levels if args.levels is not None else (_FULL_M if args.full else _DEFAULT_M)
    auto_c0 = False
    if args.formulation == "alternative":
        if args.c0 is None or args.c0 == "auto":
            auto_c0 = True
            c0 = 3.0 ** s  # resolved per s group when auto
        else:
            c0 = float(args.c0)
    else:
        c0 = 0.0 if args.c0 in (None, "auto") else float(args.c0)
    cfg = DistanceConfig(s=s, j0=j0, M=M, wavelet=args.wavelet,
                         formulation=args.formulation, C0=c0, C1=args.c1)
    return cfg, auto_c0


def _cmd_simulate(args):
    cfg, auto_c0 = _resolve_cfg(args, args.s[0])
    exact_points = args.exact_points
    if args.full and args.exact_points is None:
        exact_points = 1000
    spec = SimulationSpec(
        family=args.family, cfg=cfg, s_values=tuple(args.s),
        count=args.count, param_range=tuple(args.range) if args.range else None,
        exact_grid_points=exact_points if exact_points else 1000,
        auto_c0=auto_c0)
    rows = run_simulation(spec)
    emit_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def _transformed_density(args, param):
    _base, transform, _rng = FAMILIES[args.family]
    return transform(param)


def _cmd_distance(args):
    cfg, _ = _resolve_cfg(args, args.s)
    base = FAMILIES[args.family][0]()
    other = _transformed_density(args, args.param)
    print(f"{wavelet_distance(base, other, cfg):.12g}")
    return 0


def _cmd_embed(args):
    cfg, _ = _resolve_cfg(args, args.s)
    density = _transformed_density(args, args.param)
    vec = embed(density, cfg)
    write_wlot(vec, args.out)
    print(f"wrote {len(vec)} coefficients to {args.out}")
    return 0


def _cmd_constants(args):
    system = build_wavelet_system(args.wavelet)
    c = estimate_constants(system, args.s)
    print(f"a11 {c.a11:.12g}")
    print(f"a12 {c.a12:.12g}")
    print(f"a13 {c.a13:.12g}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="waveot",
                                     description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a sweep and write a CSV")
    _add_cfg_flags(p, with_s_list=True)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--range", type=float, nargs=2, default=None,
                   metavar=("LO", "HI"))
    p.add_argument("--exact-points", dest="exact_points", type=int, default=None,
                   help="exact-solver grid points on [0, 3] (default 1000)")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("distance", help="print one pairwise distance")
    _add_cfg_flags(p, with_s_list=False)
    p.add_argument("--param", type=float, required=True,
                   help="transform parameter (translation a or dilation b)")
    p.set_defaults(fn=_cmd_distance)

    p = sub.add_parser("embed", help="write an embedded coefficient vector")
    _add_cfg_flags(p, with_s_list=False)
    p.add_argument("--param", type=float, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_embed)

    p = sub.add_parser("constants", help="print a11/a12/a13 for a wavelet")
    p.add_argument("--wavelet", default="db10", choices=catalog_names())
    p.add_argument("--s", type=float, default=1.0)
    p.set_defaults(fn=_cmd_constants)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except WaveotError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
