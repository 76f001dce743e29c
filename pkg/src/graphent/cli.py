"""Command-line frontend: scriptable JSON/CSV reports over the library.

Exit codes: 0 success; 1 input error; 2 bounds do not coincide (analyze; the
interval report is still emitted); 3 CSS construction disagreement; 4 verify
failures.  Identical configuration (including --seed) yields byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import dense, measures, separable
from .graphs import (
    DEFAULT_ORBIT_CAP,
    Graph,
    GraphFormatError,
    lc_orbit,
    local_complement,
    max_independent_set,
    parse_graph,
)
from .lattices import KINDS, gap_scan
from .pauli import generators_from_graph

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BOUNDS_OPEN = 2
EXIT_CSS_MISMATCH = 3
EXIT_VERIFY_FAILED = 4

DENSE_TOL = 1e-12
REE_TOL = 1e-9


@dataclass
class RunConfig:
    """One CLI invocation; the seed fully determines any randomized behaviour."""

    command: str
    graph_input: str | None = None
    fmt: str = "edgelist"
    orbit_cap: int = DEFAULT_ORBIT_CAP
    oracle: bool = False
    method: str = "all"
    exact: bool = False
    seed: int = 0
    out: str | None = None
    timeout: float | None = None
    kind: str | None = None
    sizes: tuple[int, ...] = ()
    threads: int | None = None


def _read_threads() -> int | None:
    raw = os.environ.get("GRAPHENT_THREADS")
    if raw is None:
        return None
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        print(f"warning: ignoring invalid GRAPHENT_THREADS={raw!r}", file=sys.stderr)
        return None
    return value


def _load_graph(cfg: RunConfig) -> Graph:
    if cfg.graph_input == "-":
        text = sys.stdin.read()
    else:
        with open(cfg.graph_input, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_graph(text, fmt=cfg.fmt)


def _emit(cfg: RunConfig, payload: str):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_analyze(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    report = measures.evaluate(g, orbit_cap=cfg.orbit_cap)
    doc = report.to_dict()
    if cfg.oracle:
        doc["oracle"] = _oracle_block(g, report)
    _emit(cfg, _json(doc))
    return EXIT_OK if report.bounds.coincide else EXIT_BOUNDS_OPEN


def _oracle_block(g: Graph, report) -> dict:
    if g.n > dense.DENSE_OP_CAP:
        return {"skipped": f"dense oracle limited to n <= {dense.DENSE_OP_CAP}"}
    psi = dense.statevector(g)
    omega = dense.mixture_density(report.css.components)
    ree = dense.relative_entropy_pure(psi, omega)
    base = g
    for a in report.lc_path:  # the decomposition belongs to the lc_path target
        base = local_complement(base, a)
    base_psi = dense.statevector(base)
    rec = sum(
        sign * report.decomposition.normalization * dense.product_state_vector(state)
        for sign, state in report.decomposition.terms
    )
    rec_err = float(np.abs(rec - base_psi).max())
    cps_overlap = dense.overlap2(psi, report.cps)
    upper = report.bounds.upper
    verified = (
        abs(ree - upper) < REE_TOL
        and rec_err < DENSE_TOL
        and abs(cps_overlap - 2.0**-upper) < DENSE_TOL
    )
    return {
        "ree": ree,
        "reconstruction_max_err": rec_err,
        "cps_overlap2": cps_overlap,
        "verified": bool(verified),
    }


def cmd_css(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    alpha = max_independent_set(g)
    methods = ("stabilizer", "peps", "noise") if cfg.method == "all" else (cfg.method,)
    descriptions = []
    dense_forms = {}
    for method in methods:
        if method == "stabilizer":
            css = measures.closest_separable_state(g, alpha)
            desc = {"method": "stabilizer", "components": list(css.components), "weight": css.weight}
            if g.n <= dense.DENSE_OP_CAP:
                dense_forms["stabilizer"] = dense.mixture_density(css.components)
                form = measures.css_stabilizer_form(g, alpha)
                desc["group_sum"] = {
                    "elements": [p.text() for p in form.elements],
                    "scale": form.scale,
                }
        elif method == "peps":
            res = separable.peps_css(g, alpha)
            desc = {"method": "peps", "components": list(res.components), "weight": res.weight}
            dense_forms["peps"] = res.dense
        elif method == "noise":
            res = separable.noise_css(g, beta=frozenset(range(1, g.n + 1)) - alpha)
            desc = {"method": "noise", "components": list(res.components), "weight": res.weight}
            dense_forms["noise"] = res.dense
        else:
            raise GraphFormatError(f"unknown css method {cfg.method!r}")
        descriptions.append(desc)
    doc: dict = {"n": g.n, "methods": descriptions}
    exit_code = EXIT_OK
    if cfg.method == "all":
        if g.n <= dense.DENSE_OP_CAP:
            ref = dense_forms["stabilizer"]
            sum_form = measures.css_stabilizer_form(g, alpha)
            eq6 = sum(dense.pauli_dense(p) for p in sum_form.elements) * sum_form.scale
            errs = {
                "stabilizer_sum": float(np.abs(eq6 - ref).max()),
                "peps": float(np.abs(dense_forms["peps"] - ref).max()),
                "noise": float(np.abs(dense_forms["noise"] - ref).max()),
            }
            equal = all(v < DENSE_TOL for v in errs.values())
            doc["verdict"] = "equal" if equal else "unequal"
            doc["max_errors"] = errs
            if not equal:
                exit_code = EXIT_CSS_MISMATCH
        else:
            doc["verdict"] = "skipped"
    _emit(cfg, _json(doc))
    return exit_code


def cmd_orbit(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    summary = lc_orbit(g, cap=cfg.orbit_cap)
    doc = {
        "n": g.n,
        "size": summary.size,
        "min_matching": summary.min_matching,
        "min_vertex_cover": summary.min_vertex_cover,
        "truncated": summary.truncated,
        "representative": {
            "edges": [list(e) for e in summary.representative.edges()],
        },
        "lc_path": list(summary.lc_path),
    }
    _emit(cfg, _json(doc))
    return EXIT_OK


def cmd_lattice(cfg: RunConfig) -> int:
    rows = gap_scan(cfg.kind, cfg.sizes, exact=cfg.exact, timeout=cfg.timeout)
    lines = ["kind,size,n,matching,vertex_cover,gap_exact,gap_formula,difference"]
    for r in rows:
        if r.timed_out:
            matching = cover = exact_gap = diff = "TIMEOUT"
        else:
            matching = "" if r.matching is None else str(r.matching)
            cover = "" if r.vertex_cover is None else str(r.vertex_cover)
            exact_gap = "" if r.gap_exact is None else str(r.gap_exact)
            diff = ""
            if r.gap_exact is not None and r.gap_formula is not None:
                diff = repr(r.gap_exact - r.gap_formula)
        formula = "" if r.gap_formula is None else repr(r.gap_formula)
        lines.append(
            f"{r.kind},{r.size},{r.n},{matching},{cover},{exact_gap},{formula},{diff}"
        )
    _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    if g.n > dense.DENSE_OP_CAP:
        raise GraphFormatError(f"verify needs n <= {dense.DENSE_OP_CAP}")
    report = measures.evaluate(g, orbit_cap=cfg.orbit_cap)
    checks = run_verification(g, orbit_cap=cfg.orbit_cap, seed=cfg.seed, report=report)
    doc = {
        "n": g.n,
        "measures": report.to_dict()["measures"],
        "maximally_entangled": report.maximally_entangled,
        "checks": [
            {"name": name, "passed": passed, "detail": detail}
            for name, passed, detail in checks
        ],
        "all_passed": all(passed for _, passed, _ in checks),
    }
    _emit(cfg, _json(doc))
    return EXIT_OK if doc["all_passed"] else EXIT_VERIFY_FAILED


def run_verification(g: Graph, orbit_cap: int = DEFAULT_ORBIT_CAP, seed: int = 0, report=None):
    """Oracle cross-checks for one graph; returns (name, passed, detail) triples."""
    import random

    checks: list[tuple[str, bool, str]] = []
    psi = dense.statevector(g)
    if report is None:
        report = measures.evaluate(g, orbit_cap=orbit_cap)
    alpha = max_independent_set(g)

    fix_err = 0.0
    for gen in generators_from_graph(g).generators:
        fix_err = max(fix_err, float(np.abs(dense.pauli_dense(gen) @ psi - psi).max()))
    checks.append(("generators_fix_statevector", fix_err < DENSE_TOL, f"max_err={fix_err:.3e}"))

    own = measures.minimal_decomposition(g, alpha)
    rec = sum(s * own.normalization * dense.product_state_vector(st) for s, st in own.terms)
    rec_err = float(np.abs(rec - psi).max())
    checks.append(("decomposition_reconstructs", rec_err < DENSE_TOL, f"max_err={rec_err:.3e}"))

    omega = dense.mixture_density(report.css.components)
    ree = dense.relative_entropy_pure(psi, omega)
    ree_err = abs(ree - report.bounds.upper)
    checks.append(
        ("relative_entropy_equals_upper", ree_err < REE_TOL, f"ree={ree:.12f} upper={report.bounds.upper}")
    )

    sum_form = measures.css_stabilizer_form(g, alpha)
    eq6 = sum(dense.pauli_dense(p) for p in sum_form.elements) * sum_form.scale
    own_css = measures.closest_separable_state(g, alpha)
    eq5 = dense.mixture_density(own_css.components)
    eq_err = float(np.abs(eq6 - eq5).max())
    checks.append(("group_sum_equals_mixture", eq_err < DENSE_TOL, f"max_err={eq_err:.3e}"))

    peps_err = float(np.abs(separable.peps_css(g, alpha).dense - eq5).max())
    checks.append(("peps_equals_stabilizer", peps_err < DENSE_TOL, f"max_err={peps_err:.3e}"))
    noise_err = float(
        np.abs(separable.noise_css(g, frozenset(range(1, g.n + 1)) - alpha).dense - eq5).max()
    )
    checks.append(("noise_equals_stabilizer", noise_err < DENSE_TOL, f"max_err={noise_err:.3e}"))

    cps_overlap = dense.overlap2(psi, report.cps)
    cps_err = abs(cps_overlap - 2.0 ** -report.bounds.upper)
    checks.append(("cps_overlap_certificate", cps_err < DENSE_TOL, f"overlap2={cps_overlap:.12f}"))

    rng = random.Random(seed)
    cut_ok = True
    detail = ""
    cuts = [[a] for a in range(1, g.n + 1)]
    for _ in range(3):
        size = rng.randrange(1, g.n)
        cuts.append(sorted(rng.sample(range(1, g.n + 1), size)))
    from .graphs import cut_rank

    for cut in cuts:
        want = cut_rank(g, cut)
        got = dense.reduced_entropy(psi, cut, g.n)
        if abs(got - want) > REE_TOL:
            cut_ok = False
            detail = f"cut={cut} rank={want} entropy={got:.9f}"
            break
    checks.append(("cut_rank_equals_entropy", cut_ok, detail or f"{len(cuts)} cuts"))

    if g.n <= 6:
        from .pauli import group_elements

        full = generators_from_graph(g)
        proj = sum(dense.pauli_dense(p) for p in group_elements(full)) / (1 << g.n)
        proj_err = float(np.abs(proj - np.outer(psi, psi.conj())).max())
        checks.append(("projector_identity", proj_err < DENSE_TOL, f"max_err={proj_err:.3e}"))

    return checks


def _parse_sizes(spec: str) -> tuple[int, ...]:
    out: list[int] = []
    for part in spec.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out or any(s < 1 for s in out):
        raise ValueError(f"bad size specification {spec!r}")
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphent",
        description="Direct evaluation of pure graph state entanglement.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_opts(p):
        p.add_argument("graph", help="path to a graph file, or '-' for stdin")
        p.add_argument("--format", dest="fmt", choices=["edgelist", "graph6"], default="edgelist")
        p.add_argument("--orbit-cap", type=int, default=DEFAULT_ORBIT_CAP)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None)

    p = sub.add_parser("analyze", help="full entanglement report (JSON)")
    add_graph_opts(p)
    p.add_argument("--oracle", action="store_true", help="attach dense oracle checks (n <= 10)")

    p = sub.add_parser("css", help="closest separable state constructions (JSON)")
    add_graph_opts(p)
    p.add_argument("--method", choices=["stabilizer", "peps", "noise", "all"], default="all")

    p = sub.add_parser("orbit", help="LC orbit summary (JSON)")
    add_graph_opts(p)

    p = sub.add_parser("lattice", help="lattice gap table (CSV)")
    p.add_argument("kind", choices=list(KINDS))
    p.add_argument("sizes", help="e.g. '1..4' or '2,4,6'")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--timeout", type=float, default=None, help="per-size solver budget (s)")
    p.add_argument("--out", default=None)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", help="oracle cross-check suite for one graph")
    add_graph_opts(p)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    threads = _read_threads()
    try:
        if args.command == "lattice":
            cfg = RunConfig(
                command="lattice",
                kind=args.kind,
                sizes=_parse_sizes(args.sizes),
                exact=args.exact,
                timeout=args.timeout,
                out=args.out,
                seed=args.seed,
                threads=threads,
            )
            if cfg.kind == "triangular" and not cfg.exact and any(s <= 3 for s in cfg.sizes):
                # formula-only triangular runs need L > 3
                raise GraphFormatError("triangular gap formula is valid for L > 3 only")
            return cmd_lattice(cfg)
        cfg = RunConfig(
            command=args.command,
            graph_input=args.graph,
            fmt=args.fmt,
            orbit_cap=args.orbit_cap,
            oracle=getattr(args, "oracle", False),
            method=getattr(args, "method", "all"),
            seed=args.seed,
            out=args.out,
            threads=threads,
        )
        handler = {
            "analyze": cmd_analyze,
            "css": cmd_css,
            "orbit": cmd_orbit,
            "verify": cmd_verify,
        }[cfg.command]
        return handler(cfg)
    except (GraphFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
