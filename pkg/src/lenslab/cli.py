"""Command-line surface.

Exit codes: 0 success, 1 domain error (single-line diagnostic), 2 internal
invariant failure (names the failing assertion), 64 usage error.  Output is
deterministic: collections are sorted and rationals rendered "num/den" with
the denominator omitted when it is 1.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import DomainError, InvariantError
from .exactnum import farey_parents, format_slope, hj_expand, parse_slope
from .lensdi import DInvariantCache, d_table, lens_normalize
from .alexobstruct import (
    FilterSet,
    candidate_polynomials,
    default_scan_radius,
    literal_reconstruction,
    scan_realizable,
)
from .plumblat import lattice_vs_recursion_check
from .f2homalg.gf2 import F2Matrix
from .f2homalg.complexes import (
    ConeTriple,
    GradedComplex,
    Octet,
    cone_exactness,
    cone_verify,
    octet_assemble,
    octet_verify,
)
from .f2homalg.series import surgery_series, tau_series, twisted_genus1_series
from .lspacecert import (
    CONCLUSION_SENTENCE,
    Certificate,
    TaitGraph,
    WeightedTree,
    certify_alternating,
    certify_borromean,
    certify_tree,
    check_certificate,
    propagate_slope,
    surgery_lspace_axiom,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INVARIANT = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 64 on usage problems
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _frac_str(value: Fraction) -> str:
    return format_slope(value)


def _parse_matrix(doc: dict, name: str, rows: int, cols: int) -> F2Matrix:
    entries = []
    for text in doc.get(name, []):
        r, c = text.split(",")
        entries.append((int(r), int(c)))
    return F2Matrix.from_entries(rows, cols, entries)


def _load_octet(path: str) -> Octet:
    with open(path) as handle:
        doc = json.load(handle)
    do, ds, du = doc["dims"]
    shapes = {
        "doo": (do, do), "dos": (ds, do), "duo": (do, du), "dIus": (ds, du),
        "dss": (ds, ds), "dsu": (du, ds), "dus": (ds, du), "duu": (du, du),
    }
    mats = {
        name: _parse_matrix(doc, name, r, c) for name, (r, c) in shapes.items()
    }
    return Octet(do, ds, du, **mats)


def _load_cone_triple(path: str) -> ConeTriple:
    with open(path) as handle:
        doc = json.load(handle)
    dims = doc["dims"]
    complexes = tuple(
        GradedComplex.ungraded(dims[n], _parse_matrix(doc, f"d{n}", dims[n], dims[n]))
        for n in range(3)
    )
    f = tuple(
        _parse_matrix(doc, f"f{n}", dims[(n + 1) % 3], dims[n]) for n in range(3)
    )
    h = tuple(
        _parse_matrix(doc, f"H{n}", dims[(n + 2) % 3], dims[n]) for n in range(3)
    )
    return ConeTriple(complexes, f, h)


def _load_tree(path: str) -> WeightedTree:
    with open(path) as handle:
        doc = json.load(handle)
    return WeightedTree(
        tuple(doc["vertices"]), tuple(tuple(e) for e in doc["edges"])
    )


def _load_tait(path: str) -> TaitGraph:
    with open(path) as handle:
        doc = json.load(handle)
    return TaitGraph(doc["vertices"], tuple(tuple(e) for e in doc["edges"]))


def _emit_certificate(cert: Certificate, as_json: bool) -> None:
    nodes = check_certificate(cert)
    if as_json:
        print(json.dumps({
            "certificate": cert.to_json_dict(),
            "nodes": nodes,
            "conclusion": CONCLUSION_SENTENCE,
        }, indent=2, sort_keys=True))
    else:
        print(f"certified: {cert.conclusion.descriptor}")
        print(f"|H1| = {cert.conclusion.h1_order}")
        print(f"certificate nodes: {nodes} (re-verified independently)")
        print(CONCLUSION_SENTENCE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lenslab", description=__doc__)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--cache-dir", help="d-invariant cache directory")
    sub = parser.add_subparsers(dest="command")

    p_dinv = sub.add_parser("dinv", help="d-invariant table of L(p,q)")
    p_dinv.add_argument("p", type=int)
    p_dinv.add_argument("q", type=int)

    p_hj = sub.add_parser("hj", help="continued-fraction expansion of a slope")
    p_hj.add_argument("slope")

    p_farey = sub.add_parser("farey", help="Farey parents of a slope")
    p_farey.add_argument("slope")

    p_alex = sub.add_parser("alexlens", help="candidate knot polynomials for L(p,q)")
    p_alex.add_argument("p", type=int)
    p_alex.add_argument("q", type=int)
    p_alex.add_argument("--literal-Lsigma", action="store_true", dest="literal")
    p_alex.add_argument("--no-pm1-filter", action="store_true")

    p_scan = sub.add_parser("genus-scan", help="lens spaces realizable at a genus")
    p_scan.add_argument("genus", type=int)
    p_scan.add_argument("--pmax", type=int, default=None)
    p_scan.add_argument("--no-pm1-filter", action="store_true")

    p_lat = sub.add_parser("lattice-check", help="lattice oracle vs recursion")
    p_lat.add_argument("p", type=int)
    p_lat.add_argument("q", type=int)

    p_series = sub.add_parser("series", help="truncated U-power series")
    p_series.add_argument("kind", choices=["tau", "surgery", "twisted"])
    p_series.add_argument("args", nargs="*", type=int)
    p_series.add_argument("--truncate", type=int, default=20)

    p_octet = sub.add_parser("octet", help="octet identity verification")
    p_octet.add_argument("action", choices=["verify"])
    p_octet.add_argument("file")

    p_tri = sub.add_parser("triangle", help="mapping-cone triple verification")
    p_tri.add_argument("action", choices=["verify"])
    p_tri.add_argument("file")

    p_ls = sub.add_parser("lspace", help="L-space certificates")
    ls_sub = p_ls.add_subparsers(dest="ls_command")
    ls_tree = ls_sub.add_parser("tree")
    ls_tree.add_argument("file")
    ls_alt = ls_sub.add_parser("alt")
    ls_alt.add_argument("file")
    ls_slope = ls_sub.add_parser("slope")
    ls_slope.add_argument("--base", required=True)
    ls_slope.add_argument("--target", required=True)
    ls_slope.add_argument("--knot", default="K")
    ls_bor = ls_sub.add_parser("borromean")
    ls_bor.add_argument("a")
    ls_bor.add_argument("b")
    ls_bor.add_argument("c")
    return parser


def _cmd_dinv(args: argparse.Namespace) -> None:
    space = lens_normalize(args.p, args.q)
    cache = DInvariantCache.from_environment(args.cache_dir)
    table = d_table(space, cache)
    if args.json:
        print(json.dumps({
            "p": space.p,
            "q": space.q,
            "d": [_frac_str(v) for v in table.values],
        }))
    else:
        for i, value in enumerate(table.values):
            print(f"{i}\t{_frac_str(value)}")


def _cmd_hj(args: argparse.Namespace) -> None:
    slope = parse_slope(args.slope)
    terms = hj_expand(slope)
    if args.json:
        print(json.dumps({"slope": format_slope(slope), "terms": terms}))
    else:
        print(f"{format_slope(slope)} = [" + ",".join(map(str, terms)) + "]")


def _cmd_farey(args: argparse.Namespace) -> None:
    slope = parse_slope(args.slope)
    high, low = farey_parents(slope)
    if args.json:
        print(json.dumps({
            "slope": format_slope(slope),
            "parents": [format_slope(high), format_slope(low)],
        }))
    else:
        print(f"parents({format_slope(slope)}) = ({format_slope(high)}, {format_slope(low)})")


def _cmd_alexlens(args: argparse.Namespace) -> None:
    space = lens_normalize(args.p, args.q)
    filters = FilterSet(require_pm1_alternating=not args.no_pm1_filter)
    candidates = candidate_polynomials(space, filters)
    records = []
    for cand in candidates:
        rec = {
            "p": space.p,
            "q": space.q,
            "sigma": {"c": cand.sigma.c, "u": cand.sigma.u},
            "t": [_frac_str(x) for x in cand.t.t],
            "alexander": [
                [i, a] for i, a in cand.poly.coeffs
            ],
        }
        if args.literal:
            rec["literal_Lsigma"] = {
                str(i): _frac_str(a)
                for i, a in sorted(literal_reconstruction(cand.t).items())
            }
        records.append(rec)
    if args.json:
        print(json.dumps({"candidates": records, "filters": filters.names()}))
    else:
        if not records:
            print(f"{space}: no candidate polynomials")
        for cand, rec in zip(candidates, records):
            sigma = rec["sigma"]
            print(
                f"{space}: sigma(i) = {sigma['c']} + {sigma['u']}*i  "
                f"t = ({', '.join(rec['t'])})  Delta = {cand.poly}"
            )
            if args.literal:
                lit = ", ".join(f"T^{i}: {v}" for i, v in rec["literal_Lsigma"].items())
                print(f"  one-sided display formula gives: {lit}")


def _cmd_genus_scan(args: argparse.Namespace) -> None:
    pmax = args.pmax if args.pmax is not None else default_scan_radius(args.genus)
    filters = FilterSet(require_pm1_alternating=not args.no_pm1_filter)
    hits = scan_realizable(args.genus, pmax, filters)
    if args.json:
        print(json.dumps({
            "genus": args.genus,
            "pmax": pmax,
            "filters": filters.names(),
            "spaces": [
                {
                    "canonical": [hit.space.p, hit.space.q],
                    "representatives": [[s.p, s.q] for s in hit.representatives],
                }
                for hit in hits
            ],
        }))
    else:
        print(f"# genus {args.genus}, orders up to {pmax}, filters: "
              + ",".join(filters.names()))
        print(", ".join(str(hit.space) for hit in hits) if hits else "(none)")


def _cmd_lattice_check(args: argparse.Namespace) -> None:
    report = lattice_vs_recursion_check(args.p, args.q)
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"L({report.p},{report.q})")
        print("lattice oracle:  " + " ".join(_frac_str(v) for v in report.lattice_multiset))
        print("4 * d-recursion: " + " ".join(_frac_str(v) for v in report.recursion_multiset))
        print("equal" if report.equal else "MISMATCH")
    if not report.equal:
        raise InvariantError("lattice oracle disagrees with the recursion")


def _cmd_series(args: argparse.Namespace) -> None:
    n = args.truncate
    if args.kind == "tau":
        series = tau_series(n)
    elif args.kind == "surgery":
        if len(args.args) != 2:
            raise DomainError("series surgery needs P and N0 arguments")
        series = surgery_series(args.args[0], args.args[1], n)
    else:
        series = twisted_genus1_series(n)
    if args.json:
        print(json.dumps({
            "kind": args.kind,
            "truncate": n,
            "series": str(series),
            "invertible": series.is_invertible(),
        }))
    else:
        print(str(series))


def _cmd_octet(args: argparse.Namespace) -> None:
    octet = _load_octet(args.file)
    report = octet_verify(octet)
    payload: dict = {
        "identities": [{"identity": name, "ok": ok} for name, ok in report.results],
        "all_identities": report.all_ok,
    }
    if report.all_ok:
        assembled = octet_assemble(octet)
        payload["homology"] = {
            "to": assembled.homology_to,
            "from": assembled.homology_from,
            "red": assembled.homology_red,
        }
        payload["exact"] = assembled.exact
    if args.json:
        print(json.dumps(payload))
    else:
        for entry in payload["identities"]:
            print(f"{'ok  ' if entry['ok'] else 'FAIL'} {entry['identity']}")
        if report.all_ok:
            h = payload["homology"]
            print(f"homology ranks: to={h['to']} from={h['from']} red={h['red']}")
            print("exact triangle" if payload["exact"] else "NOT EXACT")
        else:
            print("identities fail; complexes not assembled")


def _cmd_triangle(args: argparse.Namespace) -> None:
    triple = _load_cone_triple(args.file)
    report = cone_verify(triple)
    exact = cone_exactness(triple)
    payload = {
        "chain_maps": list(report.chain_maps),
        "homotopy_identities": list(report.homotopy_identities),
        "psi_isomorphisms": list(report.psi_isomorphisms),
        "hypotheses_hold": report.applicable,
        "exact": exact,
    }
    if args.json:
        print(json.dumps(payload))
    else:
        for n in range(3):
            print(
                f"n={n}: chain-map {'ok' if report.chain_maps[n] else 'FAIL'}, "
                f"homotopy {'ok' if report.homotopy_identities[n] else 'FAIL'}, "
                f"psi iso {'ok' if report.psi_isomorphisms[n] else 'FAIL'}"
            )
        print("hypotheses hold" if report.applicable else "hypotheses do not hold")
        print("exact" if exact else "NOT EXACT")


def _cmd_lspace(args: argparse.Namespace) -> None:
    if args.ls_command == "tree":
        tree = _load_tree(args.file)
        cert = certify_tree(tree)
        _emit_certificate(cert, args.json)
    elif args.ls_command == "alt":
        graph = _load_tait(args.file)
        cert = certify_alternating(graph)
        _emit_certificate(cert, args.json)
    elif args.ls_command == "slope":
        base_slope = parse_slope(args.base)
        target = parse_slope(args.target)
        base = surgery_lspace_axiom(args.knot, base_slope)
        cert = propagate_slope(base, target)
        _emit_certificate(cert, args.json)
    elif args.ls_command == "borromean":
        cert = certify_borromean(
            parse_slope(args.a), parse_slope(args.b), parse_slope(args.c)
        )
        _emit_certificate(cert, args.json)
    else:
        raise SystemExit(EXIT_USAGE)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "dinv": _cmd_dinv,
        "hj": _cmd_hj,
        "farey": _cmd_farey,
        "alexlens": _cmd_alexlens,
        "genus-scan": _cmd_genus_scan,
        "lattice-check": _cmd_lattice_check,
        "series": _cmd_series,
        "octet": _cmd_octet,
        "triangle": _cmd_triangle,
        "lspace": _cmd_lspace,
    }
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        handlers[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON input: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
