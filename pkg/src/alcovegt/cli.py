"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .crystal import (
    CrystalGraph,
    character,
    edge_set,
    relabel,
    string_datum,
    to_dot,
    to_json,
    verify_crystal_axioms,
)
from .gallery import (
    alcove_crystal,
    alcove_model,
    format_subset,
    verify_extended_props,
    verify_ordinary_props,
    verify_psi,
)
from .isomorphism import (
    gt_from_admissible,
    is_almost_decreasing,
    n_stats,
    verify_decreasing_props,
    verify_iso,
)
from .paths import (
    EXTENDED,
    ORDINARY,
    GammaSequence,
    extend_path,
    gamma_lambda,
    lex_path,
    read_gamma,
)
from .roots import check_partition, iA_word
from .tableaux import gt_crystal, ssyt_count, ssyt_crystal

MODELS = ("gt", "ssyt", "alcove-ordinary", "alcove-extended", "canonical")
SUITES = ("axioms", "character", "iso", "props")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    n: int
    lam: tuple[int, ...]
    model: str = "canonical"
    path_file: str | None = None
    output: str = "text"
    word: tuple[int, ...] | None = None


def parse_lambda(text: str, n: int | None) -> tuple[int, ...]:
    try:
        parts = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"cannot parse --lambda {text!r}") from None
    if n is None:
        n = len(parts) if parts and parts[-1] == 0 else len(parts) + 1
    if len(parts) == n - 1:
        parts.append(0)
    if len(parts) != n:
        raise UsageError(f"--lambda {text!r} does not have n={n} (or n-1) parts")
    try:
        return check_partition(parts, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_word(text: str | None) -> tuple[int, ...] | None:
    if not text:
        return None
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"cannot parse --word {text!r}") from None


def config_from_args(args) -> RunConfig:
    if args.n is not None and args.n < 2:
        raise UsageError("--n must be at least 2")
    lam = parse_lambda(args.lam, args.n)
    return RunConfig(len(lam), lam, args.model, args.path_file, args.output, parse_word(args.word))


def _read_path(cfg: RunConfig, kind: str) -> GammaSequence:
    try:
        with open(cfg.path_file) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read path file: {exc}") from None
    try:
        return read_gamma(text, cfg.n, cfg.lam, kind)
    except ValueError as exc:
        raise UsageError(f"invalid path in {cfg.path_file}: {exc}") from None


def build_path(cfg: RunConfig) -> GammaSequence | None:
    if cfg.model == "canonical":
        return gamma_lambda(cfg.n, cfg.lam)
    if cfg.model == "alcove-ordinary":
        return _read_path(cfg, ORDINARY) if cfg.path_file else lex_path(cfg.n, cfg.lam)
    if cfg.model == "alcove-extended":
        if cfg.path_file:
            return _read_path(cfg, EXTENDED)
        try:
            return extend_path(lex_path(cfg.n, cfg.lam), cfg.word or iA_word(cfg.n))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return None


def build_graph(cfg: RunConfig) -> tuple[CrystalGraph, GammaSequence | None]:
    if cfg.model == "gt":
        return gt_crystal(cfg.lam), None
    if cfg.model == "ssyt":
        return ssyt_crystal(cfg.lam), None
    path = build_path(cfg)
    return alcove_crystal(path), path


def element_record(G: CrystalGraph, path: GammaSequence | None, b, k: int) -> dict:
    word = iA_word(G.n)
    if path is None:
        return {
            "id": k,
            "label": G.label(b),
            "weight": list(G.weights[b]),
            "string_datum": list(string_datum(G, b, word)),
        }
    F = alcove_model(path).fold(b)
    rec = {
        "indices": list(b),
        "weight": list(G.weights[b]),
        "string_datum": list(string_datum(G, b, word)),
        "folded": {"roots": [list(r) for r in F.roots], "levels": list(F.levels)},
    }
    if path.kind == EXTENDED:
        if is_almost_decreasing(path, b):
            rec["N_stats"] = {f"{i},{j}": v for (i, j), v in n_stats(path, b).items()}
        rec["gt_pattern"] = [list(r) for r in gt_from_admissible(path, b).rows]
    return rec


def cmd_enumerate(cfg: RunConfig, out) -> int:
    G, path = build_graph(cfg)
    records = [element_record(G, path, b, k) for k, b in enumerate(G.elements)]
    if cfg.output == "json":
        out.write(json.dumps(records, indent=2) + "\n")
        return 0
    for b, rec in zip(G.elements, records):
        line = f"{G.label(b)}\twt={tuple(rec['weight'])}\tstr={tuple(rec['string_datum'])}"
        if "gt_pattern" in rec:
            line += "\tgt=(" + " / ".join(" ".join(map(str, r)) for r in rec["gt_pattern"]) + ")"
        out.write(line + "\n")
    out.write(f"# {len(records)} elements\n")
    return 0


def cmd_graph(cfg: RunConfig, out) -> int:
    G, _ = build_graph(cfg)
    out.write(to_json(G) + "\n" if cfg.output == "json" else to_dot(G))
    return 0


def run_suite(cfg: RunConfig, suite: str) -> list[str]:
    G, path = build_graph(cfg)
    fails: list[str] = []
    if suite == "axioms":
        fails += [f"{v.axiom} at {v.element!r} color {v.color}: {v.detail}" for v in verify_crystal_axioms(G)]
        if path is not None:
            enumerated = alcove_model(path).enumerate_admissible()
            if sorted(G.elements) != enumerated:
                fails.append("crystal closure differs from the admissible subsets")
    elif suite == "character":
        reference = character(gt_crystal(cfg.lam))
        for name, H in (("selected", G), ("ssyt", ssyt_crystal(cfg.lam)),
                        ("canonical", alcove_crystal(gamma_lambda(cfg.n, cfg.lam)))):
            if character(H) != reference:
                fails.append(f"{name} character differs from the GT character")
        if len(G) != ssyt_count(cfg.lam):
            fails.append(f"{len(G)} elements, brute-force tableau count {ssyt_count(cfg.lam)}")
    elif suite == "iso":
        if path is None or path.kind == EXTENDED:
            fails += verify_iso(cfg.lam)
        if path is not None and path.kind == EXTENDED:
            labelled = relabel(G, lambda J: gt_from_admissible(path, J))
            if edge_set(labelled) != edge_set(gt_crystal(cfg.lam)):
                fails.append("GT-labelled graph of the selected path differs from the GT crystal")
        elif path is not None:
            fails.append("iso suite needs an extended or canonical model")
    elif suite == "props":
        if path is None:
            path = gamma_lambda(cfg.n, cfg.lam)
        if path.kind == ORDINARY:
            findings = verify_ordinary_props(path)
        else:
            findings = verify_extended_props(path) + verify_psi(path)
            if path == gamma_lambda(cfg.n, cfg.lam):
                for J in alcove_model(path).enumerate_admissible():
                    findings += verify_decreasing_props(path, J)
        fails += [f"{f.item} J={format_subset(f.J)} p={f.p}: {f.detail}" for f in findings]
    else:
        raise UsageError(f"unknown suite {suite!r}")
    return fails


def cmd_verify(cfg: RunConfig, suite: str, out) -> int:
    fails = run_suite(cfg, suite)
    for line in fails:
        out.write(f"FAIL {line}\n")
    out.write(f"{suite}: {'ok' if not fails else f'{len(fails)} failure(s)'}\n")
    return 0 if not fails else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="rank + 1")
    common.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1,0 (last 0 optional)")
    common.add_argument("--model", choices=MODELS, default="canonical")
    common.add_argument("--path-file", dest="path_file", default=None, help="roots 'i j', one per line")
    common.add_argument("--word", default=None, help="reduced word for the extension tail, e.g. 2,1,2")

    parser = argparse.ArgumentParser(prog="alcovegt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("enumerate", parents=[common], help="list all crystal elements")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p = sub.add_parser("graph", parents=[common], help="print the crystal graph")
    p.add_argument("--output", choices=("dot", "json"), default="dot")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite_pos", nargs="?", choices=SUITES, metavar="SUITE")
    p.add_argument("--suite", choices=SUITES, default=None)
    p.add_argument("--output", choices=("text",), default="text")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "enumerate":
            return cmd_enumerate(cfg, out)
        if args.command == "graph":
            return cmd_graph(cfg, out)
        suite = args.suite or args.suite_pos
        if suite is None:
            raise UsageError("verify needs a suite: " + ", ".join(SUITES))
        return cmd_verify(cfg, suite, out)
    except UsageError as exc:
        print(f"alcovegt: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
