"""alpharank command line.

Exit codes: 0 success or verified, 1 refuted, incomplete or failed check,
2 data or usage error, a skipped claim, or a required table missing.

Usage:
    python -m cli_app.app verify data/claims/m11_2A.claim.json
    python -m cli_app.app structconst m11 2A 2A 4A
    python -m cli_app.app brute alpha data/groups/a5.grp --element "(1,2)(3,4)"
"""

import argparse
import json
import logging
import os
import re
import sys
from dataclasses import dataclass, field, replace

# Ensure project root is on sys.path regardless of cwd.
_project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if _project_root not in sys.path:
    sys.path.insert(0, _project_root)

from cli_app import view_components as vc  # noqa: E402
from core.certify import ClaimStructureError  # noqa: E402
from core.certify.steps.structural import check_transposition_bound  # noqa: E402
from core.chartab import (  # noqa: E402
    CharacterSelectionError,
    CorruptTableError,
    FusionError,
    UnknownClassError,
    brauer_inequality,
    find_character,
    product_classes,
    restriction_inner_product,
    struct_const,
)
from core.config import AlphaRankConfig  # noqa: E402
from core.cyclo import CycloSyntaxError  # noqa: E402
from core.dataio import DataLoadError, export_trace  # noqa: E402
from core.dataio.check_data import check_data, check_exit_code, missing_required_tables  # noqa: E402
from core.domain import CharacterSelector, ValueConstraint  # noqa: E402
from core.permgrp import (  # noqa: E402
    DegreeMismatchError,
    ResourceBoundExceeded,
    WordSyntaxError,
    brute_alpha,
    brute_struct_const,
    classify_two_generated,
    conjugacy_class,
    pair_orbit_count,
)
from core.pipeline import AlphaRankEngine  # noqa: E402

logger = logging.getLogger("alpharank.cli")

# Errors that mean the input could not be resolved, as opposed to a failed check.
_USAGE_ERRORS = (
    DataLoadError,
    ClaimStructureError,
    UnknownClassError,
    CharacterSelectionError,
    CorruptTableError,
    FusionError,
    CycloSyntaxError,
    WordSyntaxError,
    DegreeMismatchError,
    ResourceBoundExceeded,
    OSError,
    ValueError,
)


@dataclass
class CommandOutcome:
    exit_code: int
    text: str
    payload: dict | list = field(default_factory=dict)
    as_json: bool = False


# Argument helpers


def _selector(args) -> CharacterSelector:
    constraints = []
    for item in args.where or []:
        name, sep, condition = item.partition(":")
        if not sep or not name or not condition:
            raise ValueError(f"--where expects CLASS:positive|negative|zero|VALUE, got {item!r}")
        if condition in ("positive", "negative", "zero"):
            constraints.append(ValueConstraint(class_name=name, sign=condition))
        else:
            constraints.append(ValueConstraint(class_name=name, value=condition))
    return CharacterSelector(degree=args.degree, constraints=constraints)


def _class_in(engine: AlphaRankEngine, group_file, text: str):
    """A class of the group by computed name (e.g. '3A') or by a member element."""
    if re.fullmatch(r"\d+[A-Z]+", text):
        for c in engine.classes(group_file):
            if c.name == text:
                return c
        raise ValueError(f"{group_file.name} has no class named {text!r}")
    bound, _ = engine.config.oracle_bounds()
    return conjugacy_class(group_file.group, group_file.element(text), bound=bound)


# Commands


def cmd_verify(engine: AlphaRankEngine, args) -> CommandOutcome:
    verdicts = engine.verify(args.path)
    if not verdicts:
        return CommandOutcome(2, f"no claim files in {args.path}", {"error": "no claim files"})
    if args.out:
        if len(verdicts) == 1:
            export_trace(verdicts[0], args.out)
        else:
            os.makedirs(args.out, exist_ok=True)
            for v in verdicts:
                name = os.path.basename(v.source).replace(".claim.json", "")
                export_trace(v, os.path.join(args.out, f"{name}.verdict.json"))
    text = "\n\n".join(vc.render_verdict(v) for v in verdicts)
    if len(verdicts) > 1:
        text += "\n\n" + vc.render_summary(verdicts)
    payload = [v.model_dump(mode="json", by_alias=True) for v in verdicts]
    return CommandOutcome(verify_exit_code(verdicts), text, payload if len(payload) != 1 else payload[0])


def verify_exit_code(verdicts) -> int:
    """1 if any claim failed, 2 if any was skipped for missing data, else 0."""
    statuses = {v.status for v in verdicts}
    if statuses & {"refuted", "incomplete"}:
        return 1
    if "skipped" in statuses:
        return 2
    return 0


def cmd_structconst(engine: AlphaRankEngine, args) -> CommandOutcome:
    t = engine.table(args.table)
    m = struct_const(t, args.a, args.b, args.c)
    return CommandOutcome(
        0, f"m({args.a},{args.b},{args.c}) = {m}",
        {"group": t.group_name, "a": args.a, "b": args.b, "c": args.c, "m": str(m)},
    )


def cmd_products(engine: AlphaRankEngine, args) -> CommandOutcome:
    t = engine.table(args.table)
    products = product_classes(t, args.a, args.b)
    return CommandOutcome(
        0, vc.render_mapping(f"{args.a}*{args.b} in {t.group_name}:", products),
        {"group": t.group_name, "a": args.a, "b": args.b, "products": {k: str(v) for k, v in products.items()}},
    )


def cmd_restriction(engine: AlphaRankEngine, args) -> CommandOutcome:
    t = engine.table(args.table)
    chi = find_character(t, _selector(args))
    f = engine.fusion(args.fusion)
    value = restriction_inner_product(t, t.characters[chi], f)
    label = f.subgroup_name or args.fusion
    return CommandOutcome(
        0, f"(chi_{label}, 1_{label}) = {value}  [character {chi}]",
        {"group": t.group_name, "character": chi, "fusion": args.fusion, "value": value},
    )


def cmd_brauer(engine: AlphaRankEngine, args) -> CommandOutcome:
    t = engine.table(args.table)
    chi = find_character(t, _selector(args))
    ab = engine.fusion(args.fusion_ab) if args.fusion_ab else None
    products = brauer_inequality(
        t, t.characters[chi], engine.fusion(args.fusion_a), engine.fusion(args.fusion_b), ab
    )
    relation = ">" if products.holds else "<="
    return CommandOutcome(
        0 if products.holds else 1,
        f"{products.a} + {products.b} {relation} {products.ab}: "
        f"{'A and B generate a proper subgroup' if products.holds else 'inconclusive'}",
        {"character": chi, "a": products.a, "b": products.b, "ab": products.ab, "holds": products.holds},
    )


def cmd_transposition_bound(engine: AlphaRankEngine, args) -> CommandOutcome:
    t = engine.table(args.table)
    r = check_transposition_bound(t, args.cls, args.k)
    return CommandOutcome(0 if r.passed else 1, r.summary, r.model_dump(mode="json"))


def cmd_brute(engine: AlphaRankEngine, args) -> CommandOutcome:
    group_file = engine.group(args.group)
    g = group_file.group
    bound, subgroup_bound = engine.config.oracle_bounds()
    if args.brute_command == "order":
        return CommandOutcome(0, f"|{group_file.name}| = {g.order}", {"group": group_file.name, "order": str(g.order)})

    if args.brute_command == "m":
        a, b, c = (_class_in(engine, group_file, x) for x in (args.a, args.b, args.c))
        m = brute_struct_const(a, b, c.representative)
        return CommandOutcome(0, f"m({args.a},{args.b},{args.c}) = {m}", {"m": m})

    if args.brute_command == "alpha":
        socle = g if args.socle == "self" else engine.group(args.socle).group
        x = group_file.element(args.element)
        max_k = args.max_k or engine.config.max_alpha_k
        k = brute_alpha(g, socle, x, max_k=max_k, bound=bound)
        if k is None:
            return CommandOutcome(1, f"alpha > {max_k}", {"element": str(x), "alpha": None, "max_k": max_k})
        return CommandOutcome(0, f"alpha({x}) = {k}", {"element": str(x), "alpha": k})

    x = group_file.element(args.class_rep)
    cls = conjugacy_class(g, x, bound=bound)
    centralizer_gens = group_file.centralizer_generators(args.class_rep)
    if args.brute_command == "pair-orbits":
        fixed = group_file.element(args.fixed) if args.fixed else x
        count = pair_orbit_count(g, cls, fixed, centralizer_gens)
        return CommandOutcome(0, f"{count} orbit(s) of C({fixed}) on the class of {x}", {"orbits": count})

    labels = classify_two_generated(
        g, cls, centralizer_gens, bound=subgroup_bound
    )
    return CommandOutcome(
        0, vc.render_mapping(f"<{cls.representative}, y> for y in the class of {x}:", dict(sorted(labels.items()))),
        {"labels": dict(labels)},
    )


def cmd_check_data(engine: AlphaRankEngine, args) -> CommandOutcome:
    bundle, lines = check_data(engine.config.data_dir)
    code = check_exit_code(bundle)
    payload = {
        "ok": code == 0,
        "loaded": bundle is not None,
        "missing_required": missing_required_tables(bundle) if bundle is not None else [],
        "report": lines,
    }
    return CommandOutcome(code, "\n".join(lines), payload)


COMMANDS = {
    "verify": cmd_verify,
    "structconst": cmd_structconst,
    "products": cmd_products,
    "restriction": cmd_restriction,
    "brauer": cmd_brauer,
    "transposition-bound": cmd_transposition_bound,
    "brute": cmd_brute,
    "check-data": cmd_check_data,
}


def _add_selector(p: argparse.ArgumentParser) -> None:
    p.add_argument("--degree", type=int, required=True, help="character degree")
    p.add_argument(
        "--where", action="append", metavar="CLASS:COND",
        help="value constraint, COND is positive, negative, zero or a value (repeatable)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alpharank", description="Conjugate-generation rank certificates")
    parser.add_argument("--data", default=None, help="data bundle directory (default ./data)")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--out", default=None, help="write verdict trace(s) here")
    parser.add_argument("--bound", type=int, default=None, help="enumeration bound for brute-force oracles")
    parser.add_argument("--extended", action="store_true", help="allow full-scale runs")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a claim file or a directory of claims")
    p.add_argument("path")

    p = sub.add_parser("structconst", help="class multiplication coefficient m(a,b,c)")
    p.add_argument("table", help="table file or bundle name")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")

    p = sub.add_parser("products", help="classes met by products a*b")
    p.add_argument("table")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("restriction", help="(chi_A, 1_A) through a fusion map")
    p.add_argument("table")
    p.add_argument("fusion", help="fusion file or bundle name")
    _add_selector(p)

    p = sub.add_parser("brauer", help="Brauer's inequality for subgroups A and B")
    p.add_argument("table")
    _add_selector(p)
    p.add_argument("--fusion-a", required=True)
    p.add_argument("--fusion-b", required=True)
    p.add_argument("--fusion-ab", default=None, help="omit when A and B meet trivially")

    p = sub.add_parser("transposition-bound", help="products of two class elements have order <= k")
    p.add_argument("table")
    p.add_argument("cls", metavar="class")
    p.add_argument("k", type=int)

    p = sub.add_parser("brute", help="brute-force oracles on a permutation group")
    brute = p.add_subparsers(dest="brute_command", required=True)
    q = brute.add_parser("order")
    q.add_argument("group", help="group file or bundle name")
    q = brute.add_parser("m")
    q.add_argument("group")
    q.add_argument("a", help="class name or element")
    q.add_argument("b")
    q.add_argument("c")
    q = brute.add_parser("alpha")
    q.add_argument("group")
    q.add_argument("--socle", default="self")
    q.add_argument("--element", required=True)
    q.add_argument("--max-k", type=int, default=None)
    q = brute.add_parser("classify-pairs")
    q.add_argument("group")
    q.add_argument("--class-rep", required=True)
    q = brute.add_parser("pair-orbits")
    q.add_argument("group")
    q.add_argument("--class-rep", required=True)
    q.add_argument("--fixed", default=None, help="class member whose centralizer acts (default: the rep)")

    sub.add_parser("check-data", help="load and validate the whole bundle")
    return parser


def _config_from(args) -> AlphaRankConfig:
    cfg = AlphaRankConfig()
    changes = {"extended": args.extended}
    if args.data:
        changes["data_dir"] = os.path.abspath(args.data)
    if args.bound:
        changes["enumeration_bound"] = args.bound
    return replace(cfg, **changes)


def run(argv: list[str] | None = None, engine: AlphaRankEngine | None = None) -> CommandOutcome:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return CommandOutcome(0 if e.code == 0 else 2, "")
    engine = engine or AlphaRankEngine(_config_from(args))
    try:
        outcome = COMMANDS[args.command](engine, args)
    except DataLoadError as e:
        lines = [f"data error: {len(e.errors)} problem(s)"] + [f"  {err}" for err in e.errors]
        outcome = CommandOutcome(2, "\n".join(lines), {"errors": [str(err) for err in e.errors]})
    except _USAGE_ERRORS as e:
        logger.debug("Command %s failed", args.command, exc_info=True)
        outcome = CommandOutcome(2, f"error: {e}", {"error": str(e)})
    outcome.as_json = args.json
    return outcome


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    logging.basicConfig(
        level=logging.DEBUG if ("--verbose" in argv or "-v" in argv) else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    outcome = run(argv)
    if outcome.as_json:
        print(json.dumps(outcome.payload, indent=2))
    elif outcome.text:
        print(outcome.text)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
