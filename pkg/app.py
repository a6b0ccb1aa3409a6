#!/usr/bin/env python3
"""
Simplicial Homeology Toolkit - Main Application Entry Point

Computes cohomeology and homeology tables of finite simplicial complexes, together with the
constructions and self-checks that go with them
"""

import sys
import argparse
from pathlib import Path
from typing import Any, Dict, List, Optional

# Add src directory to Python path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from src.logging_config import setup_logging, get_logger
from src.config import config
from src.abelian_groups import Coefficients
from src.bigraded_table import BigradedGroupTable, graded_to_json, graded_to_markdown, nonzero_graded
from src.block_complex import block_cohomeology, block_homeology, product_block_complex
from src.chain_complexes import cohomology, homology
from src.complex_io import (
    blocks_to_dict,
    dump_json,
    load_block_complex,
    load_complex,
    load_vertex_map,
)
from src.errors import (
    BlockComplexError,
    CoefficientError,
    ComplexError,
    ComplexTooLargeError,
    ConfigError,
    HomeologyError,
    HypothesisViolation,
    SimplicialMapError,
)
from src.homeology import build_N, build_N_dual, e_infinity, spectral_page, total_cohomology
from src.homeology import cohomeology as compute_cohomeology
from src.homeology import homeology as compute_homeology
from src.invariance import verify_invariance
from src.simplicial_complex import cartesian_product, join, stellar_subdivide
from src.structure_checks import (
    CheckReport,
    check_collapse,
    check_components,
    check_euler,
    check_glue,
    check_kunneth_join,
    check_kunneth_product,
)

EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_INPUT_ERROR = 2

INPUT_ERRORS = (ComplexError, BlockComplexError, SimplicialMapError, HypothesisViolation,
                ComplexTooLargeError, ConfigError, CoefficientError, OSError)

COMPUTE_TARGETS = ["homology", "cohomology", "homeology", "cohomeology", "page", "e-infinity", "total"]
CHECKS = ["euler", "components", "kunneth-join", "kunneth-product", "glue", "collapse"]
TWO_COMPLEX_CHECKS = {"kunneth-join", "kunneth-product", "glue"}


class CommandFailed(Exception):
    """A property the command evaluated does not hold; the payload is still printed"""

    def __init__(self, payload: Dict[str, Any], text: str):
        super().__init__(text)
        self.payload = payload
        self.text = text


def _page_number(value: str) -> int:
    r = int(value)
    if r < 1:
        raise argparse.ArgumentTypeError(f"page must be at least 1, got {r}")
    return r


def _non_negative(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def _positive(value: str) -> int:
    n = int(value)
    if n <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--coeffs",
        type=Coefficients.parse,
        default=config.DEFAULT_COEFFS,
        help="Coefficients: z, q or zp:<prime>"
    )
    common.add_argument(
        "--format",
        choices=sorted(config.SUPPORTED_FORMATS),
        default=config.OUTPUT_FORMAT,
        help="Output format"
    )
    common.add_argument(
        "--output",
        default=None,
        help="Write the result to this file instead of stdout"
    )
    common.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=config.LOG_LEVEL if config.LOG_LEVEL in ("DEBUG", "INFO", "WARNING", "ERROR") else "INFO",
        help="Logging level"
    )

    parser = argparse.ArgumentParser(
        description="Simplicial Homeology Toolkit - cohomeology and homeology of simplicial complexes"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", parents=[common], help="Compute a table for one complex")
    compute.add_argument("target", choices=COMPUTE_TARGETS, help="What to compute")
    compute.add_argument("input", help="Complex JSON file")
    compute.add_argument("--reduced", action="store_true", help="Use the reduced complexes")
    compute.add_argument("--page", type=_page_number, default=2, help="Page number for 'page'")
    compute.add_argument("--dual", action="store_true",
                         help="Use the dual complex N_{*,*} for page, e-infinity and total")

    invariance = commands.add_parser("verify-invariance", parents=[common],
                                     help="Check that random stellar subdivisions keep all four tables")
    invariance.add_argument("input", help="Complex JSON file")
    invariance.add_argument("--seed", type=int, required=True, help="Random seed (required)")
    invariance.add_argument("--count", type=_non_negative, default=5, help="Number of subdivisions")
    invariance.add_argument("--budget", type=_positive, default=None, help="Face budget (overrides config)")

    check = commands.add_parser("check", parents=[common], help="Evaluate a structural identity")
    check.add_argument("check", choices=CHECKS, help="Which identity")
    check.add_argument("input", help="Complex JSON file")
    check.add_argument("second", nargs="?", default=None,
                       help="Second complex JSON file (kunneth-join, kunneth-product, glue)")
    check.add_argument("--map", default=None,
                       help="Map JSON identifying vertices of the second complex with the first (glue)")
    check.add_argument("--budget", type=_positive, default=None,
                       help="Face budget for the exhaustive component search")
    check.add_argument("--dim", type=_non_negative, default=None, help="Manifold dimension for collapse")

    subdivide = commands.add_parser("subdivide", parents=[common], help="Stellar subdivision at a simplex")
    subdivide.add_argument("input", help="Complex JSON file")
    subdivide.add_argument("--simplex", required=True, help="Comma-separated vertex labels")
    subdivide.add_argument("--label", default=None, help="Label of the new vertex")

    product = commands.add_parser("product", parents=[common], help="Staircase triangulation of a product")
    product.add_argument("input", help="First complex JSON file")
    product.add_argument("second", help="Second complex JSON file")
    product.add_argument("--blocks", action="store_true", help="Also emit the product block complex")

    join_parser = commands.add_parser("join", parents=[common], help="Join of two complexes")
    join_parser.add_argument("input", help="First complex JSON file")
    join_parser.add_argument("second", help="Second complex JSON file")

    blocks = commands.add_parser("blocks", parents=[common], help="Block complexes")
    blocks.add_argument("action", choices=["validate", "compute"], help="What to do with the blocks")
    blocks.add_argument("input", help="Ambient complex JSON file")
    blocks.add_argument("blocks", help="Block JSON file")
    blocks.add_argument("--reduced", action="store_true", help="Use the reduced complexes")
    blocks.add_argument("--dual", action="store_true", help="Compute block homeology instead of cohomeology")
    blocks.add_argument("--compare", action="store_true",
                        help="Fail unless the block table equals the ambient complex's table")

    return parser.parse_args(argv)


# -- rendering ----------------------------------------------------------------------

def _table_output(args, name: str, table: BigradedGroupTable, page: Optional[int] = None):
    payload = {
        "command": args.command,
        "input": args.input,
        "coeffs": str(args.coeffs),
        "result": name,
        "table": table.to_json(page=page),
    }
    title = f"{name} over {args.coeffs.label}"
    return payload, table.to_markdown(title)


def _graded_output(args, name: str, groups):
    groups = nonzero_graded(groups)
    payload = {
        "command": args.command,
        "input": args.input,
        "coeffs": str(args.coeffs),
        "result": name,
        "groups": graded_to_json(groups),
    }
    return payload, graded_to_markdown(groups, f"{name} over {args.coeffs.label}")


def _report_output(report: CheckReport):
    lines = [f"### {report.summary()}", ""]
    lines.extend(f"- {detail}" for detail in report.details)
    return report.to_json(), "\n".join(lines) + "\n"


def _emit(args, payload: Dict[str, Any], text: str):
    rendered = dump_json(payload) + "\n" if args.format == "json" else text
    if args.output:
        Path(args.output).write_text(rendered, encoding="utf-8")
        get_logger(__name__).info(f"💾 Wrote result to {args.output}")
    else:
        sys.stdout.write(rendered)


# -- commands -----------------------------------------------------------------------

def cmd_compute(args):
    """Print one table of one complex"""
    logger = get_logger(__name__)
    K = load_complex(args.input)
    coeffs, reduced = args.coeffs, args.reduced
    prefix = "reduced " if reduced else ""

    if args.target == "homology":
        return _graded_output(args, prefix + "homology", homology(K, coeffs, reduced))
    if args.target == "cohomology":
        return _graded_output(args, prefix + "cohomology", cohomology(K, coeffs, reduced))
    if args.target == "cohomeology":
        return _table_output(args, prefix + "cohomeology", compute_cohomeology(K, coeffs, reduced))
    if args.target == "homeology":
        return _table_output(args, prefix + "homeology", compute_homeology(K, coeffs, reduced))

    F = build_N_dual(K, reduced) if args.dual else build_N(K, reduced)
    flavour = prefix + ("dual N" if args.dual else "N")
    if args.target == "page":
        logger.info(f"🔄 Computing page {args.page} of {flavour}...")
        page = spectral_page(F, args.page, coeffs)
        return _table_output(args, f"page {args.page} of {flavour}", page.table(), page=args.page)
    if args.target == "e-infinity":
        return _table_output(args, f"E-infinity of {flavour}", e_infinity(F, coeffs))
    return _graded_output(args, f"total of {flavour}", total_cohomology(F, coeffs))


def cmd_verify_invariance(args):
    """Seeded subdivisions; fails on the first changed cell"""
    K = load_complex(args.input)
    report = verify_invariance(K, args.count, args.seed, args.coeffs, budget=args.budget)
    payload = report.to_json()
    lines = [f"### invariance: {'PASS' if report.passed else 'FAIL'}", "",
             f"- seed {report.seed}, {len(report.steps)} of {report.requested} subdivisions"]
    lines.extend(f"- step {s.index}: subdivided {s.simplex} with apex {s.apex} ({s.n_faces} faces)"
                 for s in report.steps)
    if report.mismatch is not None:
        lines.append(f"- {report.mismatch}")
    text = "\n".join(lines) + "\n"
    if not report.passed:
        raise CommandFailed(payload, text)
    return payload, text


def cmd_check(args):
    """One structural identity, both sides reported"""
    K = load_complex(args.input)
    if args.check in TWO_COMPLEX_CHECKS:
        if args.second is None:
            raise HypothesisViolation(f"'{args.check}' needs a second complex")
        L = load_complex(args.second)

    if args.check == "euler":
        report = check_euler(K)
    elif args.check == "components":
        report = check_components(K, face_budget=args.budget)
    elif args.check == "kunneth-join":
        report = check_kunneth_join(K, L, args.coeffs)
    elif args.check == "kunneth-product":
        report = check_kunneth_product(K, L, args.coeffs)
    elif args.check == "glue":
        if args.map is None:
            raise HypothesisViolation("'glue' needs --map with the vertex identification")
        report = check_glue(K, L, load_vertex_map(args.map))
    else:
        report = check_collapse(K, args.dim)

    payload, text = _report_output(report)
    if not report.passed:
        raise CommandFailed(payload, text)
    return payload, text


def _complex_output(args, name: str, K, extra: Optional[Dict[str, Any]] = None):
    payload = {"command": args.command, "result": name, "complex": K.to_dict()}
    payload.update(extra or {})
    lines = [f"### {name}", "", f"- vertices: {' '.join(K.vertices)}"]
    lines.extend(f"- facet {facet}" for facet in K.facets)
    return payload, "\n".join(lines) + "\n"


def cmd_subdivide(args):
    K = load_complex(args.input)
    sigma = K.require_face(K.simplex(label.strip() for label in args.simplex.split(",") if label.strip()))
    subdivided = stellar_subdivide(K, sigma, args.label)
    return _complex_output(args, f"stellar subdivision at {sigma}", subdivided)


def cmd_product(args):
    K, L = load_complex(args.input), load_complex(args.second)
    if args.blocks:
        product, blocks = product_block_complex(K, L)
        return _complex_output(args, "product", product, {"blocks": blocks_to_dict(blocks)["blocks"]})
    return _complex_output(args, "product", cartesian_product(K, L))


def cmd_join(args):
    return _complex_output(args, "join", join(load_complex(args.input), load_complex(args.second)))


def cmd_blocks(args):
    K = load_complex(args.input)
    B = load_block_complex(args.blocks, K)
    if args.action == "validate":
        counts = {str(n): len(B.blocks_of_dim(n)) for n in range(B.dim + 1)}
        payload = {"command": args.command, "input": args.input, "blocks": args.blocks,
                   "valid": True, "blocks_per_dimension": counts}
        text = "### blocks: valid\n\n" + "".join(f"- dimension {n}: {c} blocks\n" for n, c in counts.items())
        return payload, text

    prefix = "reduced " if args.reduced else ""
    if args.dual:
        name, table = prefix + "block homeology", block_homeology(B, args.coeffs, args.reduced)
        ambient = compute_homeology(K, args.coeffs, args.reduced) if args.compare else None
    else:
        name, table = prefix + "block cohomeology", block_cohomeology(B, args.coeffs, args.reduced)
        ambient = compute_cohomeology(K, args.coeffs, args.reduced) if args.compare else None
    payload, text = _table_output(args, name, table)
    if ambient is not None:
        payload["matches_ambient"] = table == ambient
        if table != ambient:
            raise CommandFailed(payload, text + "\nBlock table differs from the ambient table\n")
    return payload, text


COMMANDS = {
    "compute": cmd_compute,
    "verify-invariance": cmd_verify_invariance,
    "check": cmd_check,
    "subdivide": cmd_subdivide,
    "product": cmd_product,
    "join": cmd_join,
    "blocks": cmd_blocks,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point"""
    # Parse arguments; argparse reports usage errors with exit code 2
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

    # Setup logging
    setup_logging(log_level=args.log_level, log_to_file=config.LOG_TO_FILE, log_dir=config.get_log_dir())
    logger = get_logger(__name__)

    # Show startup banner
    logger.info("=" * 60)
    logger.info("🔺 SIMPLICIAL HOMEOLOGY TOOLKIT")
    logger.info("   Cohomeology and homeology of simplicial complexes")
    logger.info("=" * 60)

    try:
        payload, text = COMMANDS[args.command](args)
        _emit(args, payload, text)
        logger.info(f"✅ {args.command} completed")
        return EXIT_OK

    except CommandFailed as e:
        _emit(args, e.payload, e.text)
        logger.error(f"❌ {args.command}: property failed")
        return EXIT_PROPERTY_FAILED
    except INPUT_ERRORS as e:
        logger.error(f"❌ Invalid input: {e}")
        return EXIT_INPUT_ERROR
    except HomeologyError as e:
        logger.error(f"❌ Computation failed: {e}")
        return EXIT_PROPERTY_FAILED
    except KeyboardInterrupt:
        logger.info("👋 Interrupted by user")
        return EXIT_PROPERTY_FAILED


if __name__ == "__main__":
    sys.exit(main())
