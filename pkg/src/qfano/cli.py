"""Command-line interface.

Commands: hilbert, search, wps, equivariant, classify-x10, link-solve,
link-replay, dp.  Output is deterministic for a fixed command line; exit
codes are 0 (success), 1 (domain error), 2 (usage error).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .basket import BasketError, parse_basket
from .orbifold_rr import FanoCandidate, InvalidCandidateError, hilbert_row
from .ratmod import format_rational, parse_rational
from .sarkisov import (
    Center,
    LinkScenario,
    ScenarioError,
    build_constraints,
    min_s,
    replay,
    solve_main,
)
from .sarkisov.replay import cyclic_center, gorenstein_center, library
from .search import SearchConfig, SearchResult, search_q
from .wps import (
    DEL_PEZZO_SURFACES,
    MuAction,
    WeightedHypersurface,
    WpsError,
    classify_x10,
    dp_dims,
    equivariant_series,
    hilbert_coeff,
)
from .wps import degree_A3 as wps_degree_A3
from .wps import fano_index as wps_fano_index


class DomainError(Exception):
    pass


def parse_hypersurface(text: str) -> WeightedHypersurface:
    """Parse ``"w1,..,wk : d [/ mu n : c1,..,ck ; cf]"``."""
    action = None
    main = text
    if "/" in text:
        main, act = text.split("/", 1)
        m = re.match(r"\s*mu\s*(\d+)\s*:\s*([\d,\s]+);\s*(\d+)\s*$", act.strip())
        if not m:
            raise DomainError(f"cannot parse action {act!r}")
        order = int(m.group(1))
        chars = tuple(int(c) for c in m.group(2).split(","))
        action = MuAction(order, chars, int(m.group(3)))
    try:
        weights_text, degree_text = main.split(":")
        weights = tuple(int(w) for w in weights_text.split(","))
        degree = int(degree_text)
    except ValueError as exc:
        raise DomainError(f"cannot parse hypersurface {text!r}") from exc
    return WeightedHypersurface(weights, degree, action)


_MONOMIAL = re.compile(r"x(\d)(?:\^(\d+))?")


def parse_poly(text: str) -> dict[tuple[int, ...], Fraction]:
    """Parse ``"x5^2 + 3*x4^2*x2 - 1/2*x1^10"`` into a sparse polynomial."""
    out: dict[tuple[int, ...], Fraction] = {}
    text = text.replace("-", "+-")
    for term in text.split("+"):
        term = term.strip()
        if not term:
            continue
        sign = Fraction(1)
        if term.startswith("-"):
            sign = Fraction(-1)
            term = term[1:].strip()
        coeff = sign
        expo = [0, 0, 0, 0, 0]
        for factor in term.split("*"):
            factor = factor.strip()
            m = _MONOMIAL.fullmatch(factor)
            if m:
                expo[int(m.group(1)) - 1] += int(m.group(2) or 1)
            else:
                coeff *= parse_rational(factor)
        key = tuple(expo)
        out[key] = out.get(key, Fraction(0)) + coeff
    return {e: c for e, c in out.items() if c != 0}


def render_search(result: SearchResult, fmt: str) -> str:
    if fmt == "json":
        return result.to_json()
    rows = result.rows
    if fmt == "csv":
        lines = ["A3,basket,genus," + ",".join(f"dim{k}A" for k in range(1, 7))]
        for c in rows:
            lines.append(
                ",".join(
                    [format_rational(c.A3), c.basket.index_str().replace(",", " "),
                     str(c.genus)]
                    + [str(d) for d in c.dims()]
                )
            )
        return "\n".join(lines)
    if fmt == "table":
        header = ["A^3", "B(X)", "g"] + [f"|{k}A|" for k in range(1, 7)]
        body = [
            [format_rational(c.A3), c.basket.index_str(), str(c.genus)]
            + [str(d) for d in c.dims()]
            for c in rows
        ]
        widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
        for r in body:
            lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
        return "\n".join(lines)
    raise DomainError(f"unknown format {fmt!r}")


def load_scenario(path: str) -> tuple[LinkScenario, list]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    centers = []
    for c in data["centers"]:
        if c.get("cyclic"):
            centers.append(cyclic_center(c["name"], c["index"], data["q"]))
        elif c.get("gorenstein"):
            centers.append(gorenstein_center(c.get("cap", 4)))
        else:
            types = c.get("local_types")
            if types is not None:
                types = {int(k): v for k, v in types.items()}
            centers.append(
                Center(
                    c["name"],
                    c["index"],
                    tuple(parse_rational(a) for a in c["alphas"]),
                    types,
                    c.get("main_m", -1),
                )
            )
    scenario = LinkScenario(
        q=data["q"],
        n=data["n"],
        dim_m=data.get("dim_m", 1),
        ct_multiple=data["ct_multiple"],
        centers=centers,
        torsion_free=data.get("torsion_free", True),
        qhat_domain=tuple(data.get("qhat_domain", LinkScenario.__dataclass_fields__["qhat_domain"].default)),
        not_rational=data.get("not_rational", True),
        label=data.get("label", path),
    )
    extra = []
    if "min_s" in data:
        extra.append(min_s({int(k): v for k, v in data["min_s"].items()},
                           "declared lower bounds on s"))
    return scenario, extra


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="qfano", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="orbifold Riemann-Roch h^0 row")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--A3", required=True)
    p.add_argument("--basket", required=True)
    p.add_argument("--to", type=int, default=None)

    p = sub.add_parser("search", help="enumerate numerical candidates")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--require-dim3A-le", type=int, default=None)
    p.add_argument("--torsion", type=int, default=None)
    p.add_argument("--no-superadditivity", action="store_true")
    p.add_argument("--format", default="table", choices=("table", "json", "csv"))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report-rejections", type=int, default=0, metavar="N",
                   help="also list the first N rejected candidates")
    p.add_argument("--config", default=None,
                   help="JSON file whose keys override the search options")

    p = sub.add_parser("wps", help="weighted hypersurface invariants")
    p.add_argument("hypersurface", help='"w1,..,wk : d"')
    p.add_argument("--to", type=int, default=10)

    p = sub.add_parser("equivariant", help="character-refined Hilbert table")
    p.add_argument("hypersurface", help='"w1,..,w5 : d / mu n : c1,..,c5 ; cf"')
    p.add_argument("--to", type=int, default=5)

    p = sub.add_parser("classify-x10", help="normal form of an X10 equation")
    p.add_argument("--poly", required=True)

    p = sub.add_parser("link-solve", help="solve a link scenario from JSON")
    p.add_argument("--scenario", required=True)

    p = sub.add_parser("link-replay", help="replay a library case analysis")
    p.add_argument("--id", required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--list", action="store_true", help="list known ids")

    p = sub.add_parser("dp", help="del Pezzo surface dimensions")
    p.add_argument("--surface", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--upto", type=int, default=5)

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (BasketError, InvalidCandidateError, WpsError, ScenarioError,
            DomainError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    if args.command == "hilbert":
        basket = parse_basket(args.basket)
        cand = FanoCandidate(args.q, basket, parse_rational(args.A3))
        row = hilbert_row(cand, args.to)
        print(" ".join(str(v) for v in row))
        return 0

    if args.command == "search":
        options = dict(
            q=args.q,
            require_dim3A_le=args.require_dim3A_le,
            torsion_order=args.torsion,
            superadditivity=not args.no_superadditivity,
            jobs=args.jobs,
            report_rejections=bool(args.report_rejections),
        )
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                options.update(json.load(fh))
        config = SearchConfig(**options)
        result = search_q(config)
        print(render_search(result, args.format))
        if args.report_rejections:
            for rej in result.rejections[: args.report_rejections]:
                where = "" if rej.first_bad_m is None else f" at m={rej.first_bad_m}"
                print(
                    f"rejected {rej.basket.index_str()} A^3="
                    f"{format_rational(rej.A3)}: {rej.reason}{where}",
                    file=sys.stderr,
                )
        return 0

    if args.command == "wps":
        wh = parse_hypersurface(args.hypersurface)
        coeffs = [hilbert_coeff(wh, k) for k in range(args.to + 1)]
        print(f"q = {wps_fano_index(wh)}")
        print(f"A^3 = {format_rational(wps_degree_A3(wh))}")
        print("h^0:", " ".join(str(c) for c in coeffs))
        return 0

    if args.command == "equivariant":
        wh = parse_hypersurface(args.hypersurface)
        series = equivariant_series(wh, args.to)
        for m, row in enumerate(series.h):
            print(f"t^{m}:", " ".join(str(v) for v in row))
        return 0

    if args.command == "classify-x10":
        verdict = classify_x10(parse_poly(args.poly))
        out = {"case": verdict.case}
        if verdict.lam is not None:
            out["lambda"] = format_rational(verdict.lam)
        if verdict.rational is not None:
            out["rational"] = verdict.rational
        print(json.dumps(out, sort_keys=True))
        return 0

    if args.command == "link-solve":
        scenario, extra = load_scenario(args.scenario)
        survivors = solve_main(scenario, build_constraints(scenario, extra))
        for sol in survivors:
            print(f"{sol.kind}: {sol.describe()}")
        print(f"SURVIVORS: {len(survivors)}")
        return 0

    if args.command == "link-replay":
        if args.list:
            print("\n".join(sorted(library())))
            return 0
        trace = replay(args.id)
        if args.trace:
            print(trace.render())
        else:
            for s in trace.survivors:
                print(f"{s.run}: {s.solution.describe()}")
                for k, opts in sorted(s.extensions.items()):
                    pretty = ", ".join(
                        f"(s={sk}, beta={format_rational(bk)})" for sk, bk in opts
                    )
                    print(f"  k={k}: {pretty}")
                if s.divisorial:
                    delta, b, gammas = s.divisorial[0]
                    gtxt = ", ".join(
                        f"gamma_{k}={'-' if g is None else g}"
                        for k, g in sorted(gammas.items())
                    )
                    print(f"  divisorial: delta={delta} b={b} {gtxt}")
            print(f"SURVIVORS: {len(trace.survivors)}")
        return 0

    if args.command == "dp":
        if args.surface not in DEL_PEZZO_SURFACES:
            raise DomainError(
                f"unknown surface {args.surface!r}; known: "
                f"{sorted(DEL_PEZZO_SURFACES)}"
            )
        ks = [args.k] if args.k else list(range(1, args.upto + 1))
        print(" ".join(str(dp_dims(args.surface, k)) for k in ks))
        return 0

    raise DomainError(f"unknown command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
