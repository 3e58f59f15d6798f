"""
Command-line interface of drgibbs.

Results go to stdout as JSON (default), plain text or CSV; diagnostics and
errors go to stderr. Exit codes: 0 success, 2 invalid parameters,
3 numerical failure, 1 any other error.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from . import __version__
from .embedding import EmbeddingSequence, accumulation_set, coefficient_convergence
from .exceptions import BadParam, DrgibbsError, NumericalFailure
from .families import parse_family
from .hypergroup import dual_space, haar_weights
from .measures import letac_measure, sample_density, tree_orthogonality_measure
from .oracle import enumerate_family, kernel_psd
from .positivity import (
    gibbs_check_finite,
    gram_matrix,
    gram_psd_check,
    positivity_region,
    truncated_region,
)
from .utils import to_fraction, to_json, write_csv, write_distance_csv

logger = logging.getLogger(__name__)

DEFAULT_TRUNCATION = 12
DEFAULT_RADIUS = 3
DESCRIBE_PREFIX = 6

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BAD_PARAM = 2
EXIT_NUMERICAL = 3

# options accepted by a batch job, mapped to their command-line flags
BATCH_OPTIONS = {
    "x": "--x",
    "method": "--method",
    "trunc": "--trunc",
    "radius": "--radius",
    "nmax": "--nmax",
    "eps": "--eps",
    "letac": "--letac",
    "samples": "--samples",
    "tolerance": "--tolerance",
}


def _parse_x(text):
    try:
        return to_fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as err:
        raise BadParam(f"cannot parse x = {text!r}") from err


def _kwargs(tolerance, name="tolerance"):
    return {} if tolerance is None else {name: tolerance}


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "csv"), default="json",
                        help="Output format, by default json")
    common.add_argument("--tolerance", type=float, default=None,
                        help="Override the primary slack of the operation")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for INFO, -vv for DEBUG logging on stderr")

    parser = argparse.ArgumentParser(prog="drgibbs", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", parents=[common], help="Coefficients, Haar weights and dual points")
    p.add_argument("family")

    p = sub.add_parser("check", parents=[common], help="Positive definiteness of x^d at one x")
    p.add_argument("family")
    p.add_argument("--x", required=True)
    p.add_argument("--method", choices=("bochner", "gram", "oracle"), default=None)
    p.add_argument("--trunc", type=int, default=None)
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)

    p = sub.add_parser("region", parents=[common], help="Positivity region over [-1, 1]")
    p.add_argument("family")
    p.add_argument("--trunc", type=int, default=None)
    p.add_argument("--plot", default=None, help="Save a figure of the region")

    p = sub.add_parser("oracle", parents=[common], help="Vertex-level kernel test")
    p.add_argument("family")
    p.add_argument("--x", required=True)
    p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
    p.add_argument("--export", default=None, help="Write the distance matrix as CSV")

    p = sub.add_parser("embed", parents=[common], help="Accumulation of dual supports")
    p.add_argument("family")
    p.add_argument("--nmax", type=int, default=200)
    p.add_argument("--eps", type=float, default=0.01)
    p.add_argument("--export", default=None, help="Write the dual cloud as CSV")
    p.add_argument("--plot", default=None, help="Save a figure of the dual cloud")

    p = sub.add_parser("measure", parents=[common], help="Spectral measures of gamma families")
    p.add_argument("family")
    p.add_argument("--letac", type=float, default=None, help="Parameter x of mu_x (b = 2 only)")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--export", default=None, help="Write the density samples as CSV")
    p.add_argument("--plot", default=None, help="Save a figure of the density")

    p = sub.add_parser("batch", parents=[common], help="Run JSON jobs, one per line")
    p.add_argument("file")

    return parser


def _describe(args):
    spec = parse_family(args.family)
    H = spec.build()
    last = H.diameter if H.finite else DESCRIBE_PREFIX
    result = {
        "family": spec.to_dict(),
        "diameter": H.diameter,
        "coefficients": [list(H.coefficients(i)) for i in range(last + 1)],
        "haar": haar_weights(H, last),
    }
    if H.finite:
        result["dual"] = dual_space(H).to_dict()
    else:
        result["tree_constants"] = spec.tree_constants().to_dict()
    predicted = spec.predicted_region()
    if predicted is not None:
        result["predicted_region"] = predicted.to_dict()
    return result, None


def _check(args):
    spec = parse_family(args.family)
    x = _parse_x(args.x)
    if not -1 <= x <= 1:
        raise BadParam(f"x must lie in [-1, 1], got {args.x}")
    method = args.method or ("bochner" if spec.finite else "gram")

    if method == "oracle":
        graph = enumerate_family(spec, radius=args.radius)
        return kernel_psd(graph, float(x), **_kwargs(args.tolerance)).to_dict(), None

    H = spec.build()
    if method == "bochner":
        if not H.finite:
            raise BadParam("the Bochner test needs a finite family; use --method gram")
        return gibbs_check_finite(H, x, **_kwargs(args.tolerance)).to_dict(), None

    n = args.trunc if args.trunc is not None else (H.diameter if H.finite else DEFAULT_TRUNCATION)
    M = gram_matrix(H, lambda i: x ** i, n)
    certificate = gram_psd_check(M, x=x, **_kwargs(args.tolerance))
    return certificate.to_dict(), None


def _region(args):
    spec = parse_family(args.family)
    H = spec.build()
    if H.finite and args.trunc is None:
        region = positivity_region(H, **_kwargs(args.tolerance))
    else:
        n = DEFAULT_TRUNCATION if args.trunc is None else args.trunc
        region = truncated_region(H, n, **_kwargs(args.tolerance))
    if args.plot:
        from .visualization import plot_region
        plot_region(region, H if H.finite else None, output_file=args.plot)
    return region.to_dict(), None


def _oracle(args):
    graph = enumerate_family(args.family, radius=args.radius)
    certificate = kernel_psd(graph, float(_parse_x(args.x)), **_kwargs(args.tolerance))
    if args.export:
        write_distance_csv(graph, args.export)
    result = {"graph": graph.to_dict(), "certificate": certificate.to_dict()}
    return result, None


def _embed(args):
    seq = EmbeddingSequence.from_descriptor(args.family, n_max=args.nmax)
    if not seq.base.finite:
        report = coefficient_convergence(seq, n_max=args.nmax)
        if args.export:
            write_csv(report.frame, args.export)
        return report.to_dict(), report.frame

    estimate = accumulation_set(seq, args.nmax, args.eps)
    if args.export:
        write_csv(estimate.cloud, args.export)
    if args.plot:
        from .visualization import plot_accumulation
        plot_accumulation(estimate, output_file=args.plot)
    result = estimate.to_dict()
    result["verdict"] = "match" if estimate.covers_prediction else "mismatch"
    return result, estimate.cloud


def _measure(args):
    spec = parse_family(args.family)
    if spec.kind != "gamma":
        raise BadParam("spectral measures are available for gamma families only")
    a, b = spec.params["a"], spec.params["b"]
    if args.letac is not None:
        if b != 2:
            raise BadParam("mu_x is known for the homogeneous tree (b = 2) only")
        measure = letac_measure(a, args.letac)
    else:
        measure = tree_orthogonality_measure(a, b)

    frame = sample_density(measure, args.samples) if measure.support[1] > measure.support[0] else None
    mass = measure.mass(**_kwargs(args.tolerance, "tol"))
    if args.export and frame is not None:
        write_csv(frame, args.export)
    if args.plot:
        from .visualization import plot_density
        plot_density(measure, args.samples, output_file=args.plot)
    result = measure.to_dict()
    result.update({"mass": float(mass), "atom_mass": measure.atom_mass})
    return result, frame


COMMANDS = {
    "describe": _describe,
    "check": _check,
    "region": _region,
    "oracle": _oracle,
    "embed": _embed,
    "measure": _measure,
}


def _as_text(value, indent=0):
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key in sorted(value):
            item = value[key]
            if isinstance(item, dict) and item:
                lines.append(f"{pad}{key}:")
                lines.append(_as_text(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.loads(to_json(item))}")
        return "\n".join(lines)
    return f"{pad}{json.loads(to_json(value))}"


def _render(result, table, fmt):
    if fmt == "csv":
        if table is None:
            raise BadParam("csv output is available for embed and measure only")
        return table.to_csv(index=False).rstrip("\n")
    if fmt == "text":
        return _as_text(result)
    return to_json(result, indent=2)


def exit_code(err):
    """Exit code of a drgibbs error."""
    if isinstance(err, BadParam):
        return EXIT_BAD_PARAM
    if isinstance(err, NumericalFailure):
        return EXIT_NUMERICAL
    return EXIT_ERROR


def _job_argv(job):
    if not isinstance(job, dict):
        raise BadParam("a batch job must be a JSON object")
    unknown = set(job) - set(BATCH_OPTIONS) - {"command", "family"}
    if unknown:
        raise BadParam(f"unknown job keys {sorted(unknown)}")
    command = job.get("command")
    if command not in COMMANDS:
        raise BadParam(f"unknown or missing command {command!r}")
    if "family" not in job:
        raise BadParam("a batch job needs a family")
    argv = [command, str(job["family"])]
    for key in sorted(set(job) & set(BATCH_OPTIONS)):
        argv += [BATCH_OPTIONS[key], str(job[key])]
    return argv


def _batch(args, parser):
    codes = []
    with open(args.file, "r", encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if line.strip()]
    for number, line in enumerate(lines, start=1):
        record = {"job": number}
        try:
            job = json.loads(line)
            job_args = _parse_job(parser, _job_argv(job))
            record["result"], _ = COMMANDS[job_args.command](job_args)
            codes.append(EXIT_OK)
        except json.JSONDecodeError as err:
            record["error"] = f"invalid JSON: {err}"
            codes.append(EXIT_BAD_PARAM)
        except DrgibbsError as err:
            logger.warning("job %d failed: %s", number, err)
            record["error"] = str(err)
            codes.append(exit_code(err))
        print(to_json(record))
    return next((code for code in codes if code != EXIT_OK), EXIT_OK)


def _parse_job(parser, argv):
    try:
        return parser.parse_args(argv)
    except SystemExit as err:
        raise BadParam(f"invalid job arguments {argv}") from err


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        if args.command == "batch":
            return _batch(args, parser)
        result, table = COMMANDS[args.command](args)
        print(_render(result, table, args.format))
    except DrgibbsError as err:
        print(f"drgibbs: {err}", file=sys.stderr)
        return exit_code(err)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
