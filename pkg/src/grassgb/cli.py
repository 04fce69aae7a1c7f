"""Command-line front end.

Exit statuses: 0 success, 1 usage error, 2 verification failure,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import cohomology as coh
from . import steenrod
from .dualsw import g_poly, g_spec, wbar, wbar_spec
from .errors import ResourceBudgetError
from .groebner import (
    DEFAULT_PAIR_LIMIT,
    OrderedGeneratorSet,
    buchberger_complete,
    is_groebner,
    monomials_text,
)
from .oracle import DEFAULT_MATRIX_CAP, quotient_dims_bruteforce
from .poly import MonomialOrder
from .selftest import DEFAULT_CASES, DEFAULT_SEED, run_all

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3

COMMANDS = ("gens", "groebner", "basis", "betti", "verify", "steenrod-solve", "selftest")
FORMATS = ("text", "json", "csv")
IDEALS = ("I", "raw", "impstar", "k3")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass
class CommandConfig:
    command: str
    t: int = 3
    k: int = 4
    max_r: int = 10
    gamma: Optional[int] = None
    format: str = "text"
    strict: bool = False
    output_path: Optional[str] = None
    seed: int = DEFAULT_SEED
    cases: int = DEFAULT_CASES
    ideal: str = "I"
    wbar: bool = False
    corrupt: bool = False


@dataclass
class Document:
    kind: str
    data: dict = field(default_factory=dict)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", dest="output_path", metavar="PATH")

    with_t = _Parser(add_help=False)
    with_t.add_argument("--t", type=int, default=3)

    parser = _Parser(prog="grassgb", description="GF(2) cohomology toolkit for oriented Grassmannians G~(2^t, 4).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gens", parents=[common], help="table of g_r (and wbar_r)")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--max-r", dest="max_r", type=int, default=10)
    p.add_argument("--wbar", action="store_true", help="also list wbar_r in w1..wk")

    p = sub.add_parser("groebner", parents=[common, with_t], help="Buchberger certificate")
    p.add_argument("--ideal", choices=IDEALS, default="I")
    p.add_argument("--gamma", type=int, choices=(0, 1))
    p.add_argument("--strict", action="store_true", help="reduce coprime pairs too")

    sub.add_parser("basis", parents=[common, with_t], help="additive basis")

    p = sub.add_parser("betti", parents=[common, with_t], help="Betti profile")
    p.add_argument("--strict", action="store_true", help="cross-check with the brute-force oracle")

    p = sub.add_parser("verify", parents=[common, with_t], help="run the verification suite")
    p.add_argument("--corrupt", action="store_true", help="flip one monomial of g_{2^t-1} (exit-status check)")

    p = sub.add_parser("steenrod-solve", parents=[common, with_t], help="solve the t = 3 Steenrod constraints")

    p = sub.add_parser("selftest", parents=[common], help="seeded property suites")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--cases", type=int, default=DEFAULT_CASES)
    return parser


def parse_args(argv: Sequence[str]) -> CommandConfig:
    ns = _build_parser().parse_args(list(argv))
    cfg = CommandConfig(**{k: v for k, v in vars(ns).items() if v is not None or k == "gamma"})
    if cfg.command == "gens":
        if not 2 <= cfg.k <= 5:
            raise UsageError("gens: --k must be between 2 and 5")
        if cfg.max_r < 0:
            raise UsageError("gens: --max-r must be nonnegative")
    if cfg.command in ("groebner", "basis", "betti", "verify", "steenrod-solve"):
        if cfg.t < 3 or cfg.t > coh.MAX_T:
            raise UsageError(f"{cfg.command}: --t must be between 3 and {coh.MAX_T}")
    if cfg.command == "steenrod-solve" and cfg.t != 3:
        raise UsageError("steenrod-solve: only t = 3 is supported")
    if cfg.command == "groebner" and cfg.gamma is not None and cfg.t != 3:
        raise UsageError("groebner: --gamma applies to t = 3 only")
    if cfg.command == "selftest" and cfg.cases < 1:
        raise UsageError("selftest: --cases must be positive")
    return cfg


def _display_order(spec) -> MonomialOrder:
    # ascending under lex with the highest-index variable most significant
    return MonomialOrder(tuple(reversed(range(spec.nvars))))


def _gens(cfg: CommandConfig) -> Tuple[Document, int]:
    gs = g_spec(cfg.k)
    rows = [{"r": r, "g": g_poly(r, cfg.k).to_text(_display_order(gs), descending=False)} for r in range(cfg.max_r + 1)]
    if cfg.wbar:
        ws = wbar_spec(cfg.k)
        for row in rows:
            row["wbar"] = wbar(row["r"], cfg.k).to_text(_display_order(ws), descending=False)
    return Document("gens", {"k": cfg.k, "max_r": cfg.max_r, "rows": rows}), EXIT_OK


def _ideal_for(cfg: CommandConfig) -> OrderedGeneratorSet:
    P = Q = None
    if cfg.gamma is not None:
        P, Q = coh.t3_parameters(cfg.gamma)
    if cfg.ideal == "I":
        return coh.build_ideal_I(cfg.t, P, Q).gens
    if cfg.ideal == "raw":
        return coh.raw_ideal_I(cfg.t, P, Q)
    if cfg.ideal == "impstar":
        return coh.build_im_pstar_ideal(cfg.t).groebner
    return coh.k3_groebner_set(cfg.t)


def _groebner(cfg: CommandConfig) -> Tuple[Document, int]:
    G = _ideal_for(cfg)
    data = {"t": cfg.t, "ideal": cfg.ideal, "strict": cfg.strict, "gamma": cfg.gamma}
    if cfg.ideal == "raw":
        limit = int(os.environ.get("GRASSGB_PAIR_LIMIT", DEFAULT_PAIR_LIMIT))
        data["input"] = [g.to_text(G.order) for g in G]
        G = buchberger_complete(G, pair_limit=limit)
    ok, cert = is_groebner(G, strict=cfg.strict)
    data.update(
        gens=[g.to_text(G.order) for g in G],
        leading_monomials=[str(m) for m in G.leading_monomials()],
        is_groebner=ok,
        certificate=cert.to_json(),
    )
    return Document("groebner", data), EXIT_OK if ok else EXIT_VERIFY


def _basis(cfg: CommandConfig) -> Tuple[Document, int]:
    basis = coh.additive_basis(cfg.t)
    data = {
        "t": cfg.t,
        "count": len(basis),
        "basis": monomials_text(basis),
        "degrees": [m.degree for m in basis],
    }
    return Document("basis", data), EXIT_OK


def _betti(cfg: CommandConfig) -> Tuple[Document, int]:
    t = cfg.t
    D = coh.manifold_dim(t)
    profile = coh.poincare_profile(t)
    N = coh.t_set(t).N
    checks = [
        {"name": "poincare-duality", "status": "pass" if profile.is_symmetric(D) else "fail", "detail": f"D = {D}"},
        {
            "name": "total-dimension",
            "status": "pass" if profile.total == 2 ** (t - 1) * N else "fail",
            "detail": f"total {profile.total}, 2^(t-1) N = {2 ** (t - 1) * N}",
        },
    ]
    if cfg.strict:
        G = coh.build_ideal_I(t).gens
        oracle = quotient_dims_bruteforce(G, D, cap=int(os.environ.get("GRASSGB_MATRIX_CAP", DEFAULT_MATRIX_CAP)))
        same = oracle.as_tuple(D) == profile.as_tuple(D)
        checks.append({"name": "bruteforce-oracle", "status": "pass" if same else "fail", "detail": f"degrees 0..{D}"})
    data = {"t": t, "betti": profile.to_pairs(D), "total": profile.total, "checks": checks}
    ok = all(c["status"] == "pass" for c in checks)
    return Document("betti", data), EXIT_OK if ok else EXIT_VERIFY


def _verify(cfg: CommandConfig) -> Tuple[Document, int]:
    overrides = coh.corrupted_g(cfg.t) if cfg.corrupt else None
    report = coh.verify_suite(cfg.t, overrides)
    data = report.to_json()
    data["failures"] = [c.name for c in report.failures()]
    return Document("verify", data), EXIT_OK if report.ok else EXIT_VERIFY


def _steenrod(cfg: CommandConfig) -> Tuple[Document, int]:
    survivors = steenrod.solve_coefficients()
    doc = steenrod.solver_document(survivors)
    expected = {(0, 0, 0, 1, 0, 0)}
    found = {(s.alpha, s.delta, s.epsilon, s.kappa, s.lam, s.mu) for s in survivors}
    ok = found == expected and {s.gamma for s in survivors} == {0, 1}
    return Document("steenrod-solve", doc), EXIT_OK if ok else EXIT_VERIFY


def _selftest(cfg: CommandConfig) -> Tuple[Document, int]:
    results = run_all(cfg.seed, cfg.cases)
    data = {"seed": cfg.seed, "cases": cfg.cases, "suites": [r.to_dict() for r in results]}
    return Document("selftest", data), EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


_HANDLERS = {
    "gens": _gens,
    "groebner": _groebner,
    "basis": _basis,
    "betti": _betti,
    "verify": _verify,
    "steenrod-solve": _steenrod,
    "selftest": _selftest,
}


def execute(cfg: CommandConfig) -> Tuple[Document, int]:
    return _HANDLERS[cfg.command](cfg)


def _csv(header: List[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _text(doc: Document) -> str:
    d = doc.data
    if doc.kind == "gens":
        lines = [f"g{r['r']} = {r['g']}" for r in d["rows"]]
        if any("wbar" in r for r in d["rows"]):
            lines += [f"wbar{r['r']} = {r['wbar']}" for r in d["rows"]]
        return "\n".join(lines)
    if doc.kind == "groebner":
        lines = [f"ideal {d['ideal']} (t = {d['t']}), groebner: {'yes' if d['is_groebner'] else 'no'}"]
        lines += [f"G[{i}] = {g}" for i, g in enumerate(d["gens"])]
        for p in d["certificate"]:
            lines.append(f"S({p['i']},{p['j']}): {p['outcome']}, {len(p['steps'])} steps")
        return "\n".join(lines)
    if doc.kind == "basis":
        return "\n".join(d["basis"])
    if doc.kind == "betti":
        return "\n".join(f"b{deg} = {n}" for deg, n in d["betti"])
    if doc.kind == "verify":
        lines = [f"{c['status'].upper()} {c['name']}: {c['detail']}" for c in d["checks"]]
        lines.append(f"{len(d['failures'])} failures")
        return "\n".join(lines)
    if doc.kind == "steenrod-solve":
        lines = [f"beta = {d['beta']}"]
        for s in d["survivors"]:
            lines.append("survivor " + " ".join(f"{k}={v}" for k, v in s.items()))
        return "\n".join(lines)
    if doc.kind == "selftest":
        return "\n".join(
            f"{'PASS' if s['failures'] == 0 else 'FAIL'} {s['name']} ({s['cases']} cases)" for s in d["suites"]
        )
    raise ValueError(f"no text form for {doc.kind}")


def serialize(doc: Document, fmt: str) -> bytes:
    if fmt == "json":
        body = json.dumps({"kind": doc.kind, **doc.data}, sort_keys=True, indent=2)
    elif fmt == "csv":
        d = doc.data
        if doc.kind == "betti":
            body = _csv(["degree", "dim"], d["betti"])
        elif doc.kind == "basis":
            body = _csv(["degree", "monomial"], zip(d["degrees"], d["basis"]))
        elif doc.kind == "gens":
            header = ["r", "g"] + (["wbar"] if any("wbar" in r for r in d["rows"]) else [])
            body = _csv(header, ([r[h] for h in header] for r in d["rows"]))
        elif doc.kind == "verify":
            body = _csv(["name", "status", "detail"], ([c["name"], c["status"], c["detail"]] for c in d["checks"]))
        else:
            raise ValueError(f"csv output is not available for {doc.kind}")
    elif fmt == "text":
        body = _text(doc)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return (body.rstrip("\n") + "\n").encode()


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
        doc, status = execute(cfg)
        out = serialize(doc, cfg.format)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"grassgb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBudgetError as exc:
        print(f"grassgb: resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if cfg.output_path:
        with open(cfg.output_path, "wb") as fh:
            fh.write(out)
    else:
        sys.stdout.buffer.write(out)
        sys.stdout.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
