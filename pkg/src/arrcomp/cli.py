"""Command-line front end.

Reads a complex from a JSON file ({"m": ..., "facets": [...]} or
{"m": ..., "missing_faces": [...]}), dispatches to the library, and emits
a deterministic report in text or JSON form.  Exit code 0 on success, 1
when a precondition fails (the message names it), 2 on malformed input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys

from .abelian import GradedAbelianGroup
from .catalog import k_equal_complex
from .constructions import (
    bbcg_report,
    complex_info,
    cone_equivalence_check,
    kequal_closed_form,
    realize_as_coordinate,
    suspension_relation_check,
)
from .errors import DomainError, InputError, IntegrityError
from .gm import (
    coordinate_cohomology,
    diagonal_cohomology,
    diagonal_cohomology_via_links,
    diagonal_cohomology_via_subcomplexes,
)
from .lattice import coordinate_lattice, diagonal_lattice, lattice_isomorphic_to_dual
from .products import golod_product_check, product_table
from .simplicial import SimplicialComplex


def _load_complex(path: str) -> tuple[SimplicialComplex, str]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON in {path}: {e}") from None
    K = SimplicialComplex.from_json(obj)
    canonical = json.dumps(K.to_json(), sort_keys=True, separators=(",", ":"))
    return K, hashlib.sha256(canonical.encode()).hexdigest()


def _params_hash(params: dict) -> str:
    canonical = json.dumps(params, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def _jsonify(value):
    if isinstance(value, GradedAbelianGroup):
        return value.to_json()
    if isinstance(value, SimplicialComplex):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonify(v) for v in value)
    return value


def _group_lines(G: GradedAbelianGroup, label: str) -> list[str]:
    return G.lines(label) if not G.is_zero else [f"{label}^* = 0"]


def _cmd_cohomology(args) -> dict:
    K, sha = _load_complex(args.complex)
    kwargs = dict(ambient=args.ambient, max_q=args.max_q,
                  oracle=args.oracle, jobs=args.jobs)
    checked = ["interval pairs vs open intervals"] if args.oracle else []
    if args.space == "coordinate":
        G = coordinate_cohomology(K, **kwargs)
        if args.oracle:
            checked.append("subcomplex sum")
    else:
        G = diagonal_cohomology(K, **kwargs)
        if args.oracle and args.ambient == "complex" and K.common_vertex_predicate():
            for name, fn in (("dual links", diagonal_cohomology_via_links),
                             ("subcomplex sum", diagonal_cohomology_via_subcomplexes)):
                other = fn(K, max_q=args.max_q)
                if other != G:
                    raise IntegrityError(f"oracle mismatch via {name}")
                checked.append(name)
    report = {"command": "cohomology", "space": args.space, "ambient": args.ambient,
              "input_sha256": sha, "m": K.m, "groups": G}
    if args.oracle:
        report["oracle"] = {"checked": checked, "agreed": True}
    report["_text"] = _group_lines(G, "H")
    return report


def _cmd_lattice(args) -> dict:
    K, sha = _load_complex(args.complex)
    if args.space == "coordinate":
        L = coordinate_lattice(K, args.ambient)
    else:
        L = diagonal_lattice(K, args.ambient)
    report = {"command": "lattice", "space": args.space, "ambient": args.ambient,
              "input_sha256": sha, "m": K.m, "elements": len(L.elements),
              "lattice": L.to_json()}
    if args.space == "diagonal" and K.common_vertex_predicate():
        ok, mapping = lattice_isomorphic_to_dual(K)
        report["dual_isomorphic"] = ok
        report["dual_mapping_size"] = len(mapping)
    report["_text"] = [f"elements: {len(L.elements)}"] + [
        f"d={row['d']} {row.get('blocks', row.get('zeros'))}"
        for row in L.to_json()["strata"]]
    return report


def _cmd_product(args) -> dict:
    K, sha = _load_complex(args.complex)
    table = product_table(K, args.space, args.ambient)
    report = {"command": "product", "space": args.space, "ambient": args.ambient,
              "input_sha256": sha, "m": K.m, "table": table}
    report["_text"] = [
        f"generators: {len(table['generators'])}",
        f"entries: {len(table['entries'])}",
        f"all_zero: {table['all_zero']}",
    ] + [f"nonzero {blk}: {n}" for blk, n in table["nonzero_blocks"].items()]
    return report


def _cmd_bbcg(args) -> dict:
    K, sha = _load_complex(args.complex)
    rep = bbcg_report(K)
    report = {"command": "bbcg", "input_sha256": sha, "m": K.m}
    report.update(rep)
    report["_text"] = [
        f"wedge: {rep['wedge']}",
        f"all_spheres: {rep['all_spheres']}",
        f"matches_coordinate_cohomology: {rep['matches_coordinate_cohomology']}",
    ]
    return report


def _cmd_golod(args) -> dict:
    K, sha = _load_complex(args.complex)
    rep = golod_product_check(K)
    report = {"command": "golod-check", "input_sha256": sha, "m": K.m}
    report.update(rep)
    report.update(complex_info(K))
    report["_text"] = [f"{k}: {rep[k]}" for k in
                      ("common_vertex", "coordinate_products_all_zero", "golod_certified")]
    return report


def _cmd_kequal(args) -> dict:
    params = {"m": args.m, "k": args.k, "ambient": args.ambient}
    sha = _params_hash(params)
    rep = kequal_closed_form(args.m, args.k, args.ambient)
    report = {"command": "kequal", "input_sha256": sha}
    report.update(rep)
    text = [f"in_range: {rep['in_range']}", f"s: {rep['s']}"]
    for w in rep["warnings"]:
        text.append(f"warning: {w}")
    for key in ("closed_form", "wedge_form", "gm"):
        G = rep[key]
        if G is None:
            text.append(f"{key}: suppressed")
        else:
            text.append(f"{key}: " + "; ".join(_group_lines(G, "H")))
    text.append(f"gm_matches_wedge: {rep['gm_matches_wedge']}")
    text.append(f"gm_matches_closed_form: {rep['gm_matches_closed_form']}")
    report["_text"] = text
    return report


def _cmd_suspension(args) -> dict:
    K, sha = _load_complex(args.complex)
    rep = suspension_relation_check(K)
    report = {"command": "check-suspension", "input_sha256": sha, "m": K.m}
    report.update(rep)
    report["_text"] = [f"match: {rep['match']}", rep["verdict"]]
    return report


def _cmd_cone(args) -> dict:
    K, sha = _load_complex(args.complex)
    rep = cone_equivalence_check(K)
    report = {"command": "check-cone", "input_sha256": sha, "m": K.m}
    report.update(rep)
    report["_text"] = [f"match: {rep['match']}", rep["verdict"]]
    return report


def _cmd_mf(args) -> dict:
    K, sha = _load_complex(args.complex)
    mfs = sorted(sorted(M) for M in K.missing_faces())
    info = complex_info(K)
    realized = realize_as_coordinate(K) if not (frozenset(range(1, K.m + 1)) - K.vertices) and not K.is_void else None
    report = {"command": "mf", "input_sha256": sha, "m": K.m,
              "missing_faces": mfs,
              "common_vertex": K.common_vertex_predicate(),
              "dimension": info["dimension"],
              "max_neighbourly": info["max_neighbourly"],
              "realizes_coordinate_complement": None if realized is None else realized.to_json()}
    report["_text"] = [
        f"missing faces: {mfs}",
        f"common_vertex: {report['common_vertex']}",
        f"dimension: {info['dimension']}",
        f"max_neighbourly: {info['max_neighbourly']}",
    ]
    return report


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrcomp",
        description="cohomology of coordinate and diagonal subspace "
                    "arrangement complements determined by a simplicial complex")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, space=True, needs_complex=True):
        if needs_complex:
            p.add_argument("--complex", required=True, metavar="FILE",
                           help="JSON file with m and facets or missing_faces")
        if space:
            p.add_argument("--space", choices=("diagonal", "coordinate"),
                           default="diagonal")
        p.add_argument("--ambient", choices=("complex", "real"), default="complex")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("cohomology", help="graded groups of the complement")
    add_common(p)
    p.add_argument("--max-q", type=int, default=None)
    p.add_argument("--oracle", action="store_true",
                   help="recompute through independent routes; fail loudly on mismatch")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(fn=_cmd_cohomology)

    p = sub.add_parser("lattice", help="intersection lattice of the arrangement")
    add_common(p)
    p.set_defaults(fn=_cmd_lattice)

    p = sub.add_parser("product", help="multiplication table of positive-degree classes")
    add_common(p)
    p.set_defaults(fn=_cmd_product)

    p = sub.add_parser("bbcg", help="wedge decomposition of the coordinate complement")
    add_common(p, space=False)
    p.set_defaults(fn=_cmd_bbcg)

    p = sub.add_parser("golod-check", help="product vanishing for the coordinate arrangement")
    add_common(p, space=False)
    p.set_defaults(fn=_cmd_golod)

    p = sub.add_parser("kequal", help="k-equal arrangement closed forms vs computation")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ambient", choices=("complex", "real"), default="complex")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_kequal)

    p = sub.add_parser("check-suspension", help="coordinate vs suspended diagonal cohomology")
    add_common(p, space=False)
    p.set_defaults(fn=_cmd_suspension)

    p = sub.add_parser("check-cone", help="coordinate complement vs diagonal complement of the cone")
    add_common(p, space=False)
    p.set_defaults(fn=_cmd_cone)

    p = sub.add_parser("mf", help="missing faces and basic complex facts")
    add_common(p, space=False)
    p.set_defaults(fn=_cmd_mf)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.fn(args)
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 1
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    text = report.pop("_text", [])
    if args.format == "json":
        print(json.dumps(_jsonify(report), indent=2, sort_keys=True))
    else:
        print(f"command: {report['command']}")
        print(f"input sha256: {report['input_sha256']}")
        for line in text:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
