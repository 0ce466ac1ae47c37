"""Batch command-line front end.

Subcommands: build, check, label, mobius, shell-verify, chains, group.
Heavy output goes to stdout as deterministic JSON (or DOT/text via
--format); diagnostics go to stderr.  Exit codes: 0 success, 1 property
check failed (certificate printed), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

import numpy as np

from . import families, groups, io, labeling, modularity, topology
from .errors import LatshellError
from .poset import Lattice, count_linear_extensions


FAMILY_GRAMMAR = (
    "boolean:n | chain:n | partition:n | ordcong:<poset.json> | "
    "ordconv:<poset.json> | kequal:n,k | signed:n | signedkh:n,k,h | "
    "aff-forall:a1,...,an | aff-exists:a1,...,an | ngon:n | pentagon | fig1"
)


def build_family(spec: str, max_elements: int) -> Lattice:
    name, _, arg = spec.partition(":")
    ints = None
    if arg and all(part.strip("-").isdigit() for part in arg.split(",")):
        ints = [int(v) for v in arg.split(",")]
    if name == "boolean":
        return families.boolean_lattice(ints[0], max_elements)
    if name == "chain":
        return families.chain_lattice(ints[0])
    if name == "partition":
        return families.partition_lattice(ints[0], max_elements)
    if name == "ordcong":
        return families.order_congruence_lattice(io.load_poset(arg), max_elements)
    if name == "ordconv":
        return families.order_convexity_lattice(io.load_poset(arg), max_elements)
    if name == "kequal":
        return families.k_equal_lattice(ints[0], ints[1], max_elements)
    if name == "signed":
        return families.signed_partition_lattice(ints[0], max_elements)
    if name == "signedkh":
        return families.signed_kh_lattice(ints[0], ints[1], ints[2], max_elements)
    if name == "aff-forall":
        return families.affinity_lattice(ints, "forall", max_elements)
    if name == "aff-exists":
        return families.affinity_lattice(ints, "exists", max_elements)
    if name == "ngon":
        return families.ngon_face_lattice(ints[0])
    if name == "pentagon":
        return families.pentagon()
    if name == "fig1":
        return families.fig1_lattice()
    raise LatshellError(f"unknown family {spec!r}; grammar: {FAMILY_GRAMMAR}")


def _emit(args, payload_json: dict, text: Optional[str] = None):
    if args.format == "json":
        sys.stdout.write(io.dumps(payload_json))
    elif args.format == "text":
        sys.stdout.write((text if text is not None else io.dumps(payload_json)))
    else:
        raise LatshellError(f"format {args.format!r} not valid for this command")


def _check_chain_budget(L: Lattice, args) -> int:
    total = L.poset.count_maximal_chains(L.bottom, L.top)
    if total > args.max_chains:
        raise LatshellError(
            f"{total} maximal chains exceed --max-chains={args.max_chains}")
    return total


def cmd_build(args) -> int:
    L = build_family(args.family, args.max_elements)
    if args.format == "dot":
        sys.stdout.write(io.poset_to_dot(L.poset))
        return 0
    _emit(args, io.lattice_to_json(L))
    return 0


def cmd_check(args) -> int:
    L = build_family(args.family, args.max_elements)
    lm = modularity.left_modular_mask(L)
    non_lm = {}
    for v in np.flatnonzero(~lm):
        r = modularity.is_left_modular(L, int(v))
        non_lm[int(v)] = list(r.witness)
    comod_w = modularity.comodernistic_violation(L)
    modern_w = modularity.modernistic_violation(L)
    mchain = modularity.find_m_chain(L)
    graded = L.is_graded()
    report = {
        "n": L.n,
        "graded": graded,
        "height": L.height(),
        "left_modular_elements": [int(v) for v in np.flatnonzero(lm)],
        "pentagon_witnesses": non_lm,
        "semimodular": modularity.is_semimodular(L),
        "geometric": modularity.is_geometric(L),
        "left_modular_lattice": mchain is not None,
        "supersolvable": graded and mchain is not None,
        "modernistic": modern_w is None,
        "comodernistic": comod_w is None,
        "modernistic_witness": list(modern_w) if modern_w else None,
        "comodernistic_witness": list(comod_w) if comod_w else None,
    }
    text = "\n".join(f"{k}: {v}" for k, v in sorted(report.items())) + "\n"
    _emit(args, report, text)
    return 0


def cmd_label(args) -> int:
    L = build_family(args.family, args.max_elements)
    _check_chain_budget(L, args)
    lab = labeling.comodernistic_labeling(L)
    _emit(args, io.labeled_chains_json(L, lab))
    return 0


def cmd_mobius(args) -> int:
    L = build_family(args.family, args.max_elements)
    _check_chain_budget(L, args)
    lab = labeling.comodernistic_labeling(L)
    ok, cert = labeling.verify_cl(L, lab, jobs=args.jobs)
    from_lab = labeling.mobius_from_labeling(L, lab)
    brute = topology.mobius_brute(L)
    agree = ok and from_lab == brute
    payload = {"mobius_labeling": from_lab, "mobius_brute": brute,
               "cl_verified": ok, "agreement": agree}
    _emit(args, payload,
          f"mobius: labeling={from_lab} brute={brute} agreement={agree}\n")
    if not agree:
        print(f"certificate: {cert}", file=sys.stderr)
        return 1
    return 0


def cmd_shell_verify(args) -> int:
    L = build_family(args.family, args.max_elements)
    _check_chain_budget(L, args)
    lab = labeling.comodernistic_labeling(L)
    cl_ok, cl_cert = labeling.verify_cl(L, lab, jobs=args.jobs)
    sh_ok, sh_cert = topology.verify_lex_shelling(L, lab)
    payload = {"cl_labeling": cl_ok, "lex_shelling": sh_ok}
    _emit(args, payload, f"cl={cl_ok} shelling={sh_ok}\n")
    if not (cl_ok and sh_ok):
        print(f"certificate: {cl_cert or sh_cert}", file=sys.stderr)
        return 1
    return 0


def cmd_chains(args) -> int:
    L = build_family(args.family, args.max_elements)
    _check_chain_budget(L, args)
    lab = labeling.comodernistic_labeling(L)
    dec = labeling.decreasing_chains(L, lab)
    _emit(args, [{"chain": list(c.chain), "word": list(c.word)} for c in dec])
    return 0


def cmd_group(args) -> int:
    g = io.load_group(args.file)
    lat = groups.subgroup_lattice(g, max_order=args.max_group_order)
    solvable = groups.is_solvable(g)
    comod = modularity.is_comodernistic(lat)
    payload = {"order": g.order, "subgroups": lat.n,
               "solvable": solvable, "comodernistic": comod,
               "agreement": solvable == comod}
    failed = not payload["agreement"]
    if solvable:
        series = groups.chief_series(g)
        sel = groups.chief_seeded_selector(g, lat, series)
        lab = labeling.comodernistic_labeling(lat, sel)
        dec = labeling.decreasing_chains(lat, lab)
        cc = groups.complement_chains_to_chief_series(g, lat, series)
        mu = topology.mobius_brute(lat)
        payload.update({
            "mobius": mu,
            "decreasing_chains": len(dec),
            "complement_chains": len(cc),
            "counts_match": len(dec) == len(cc) == abs(mu),
        })
        failed = failed or not payload["counts_match"]
    text = "\n".join(f"{k}: {v}" for k, v in sorted(payload.items())) + "\n"
    _emit(args, payload, text)
    return 1 if failed else 0


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "dot", "text"], default="json")
    common.add_argument("--max-elements", type=int, default=50_000,
                        help="element budget for family constructors")
    common.add_argument("--max-chains", type=int, default=20_000,
                        help="maximal-chain budget for labeling commands")
    common.add_argument("--max-group-order", type=int, default=60)
    common.add_argument("--jobs", type=int, default=1,
                        help="parallel fan-out for interval verification")

    ap = argparse.ArgumentParser(
        prog="latshell",
        description="Finite lattice toolkit: build families, run structure "
                    "checks, emit labelings, Mobius numbers, and shelling "
                    "verdicts.")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, needs_family in (
        ("build", cmd_build, True),
        ("check", cmd_check, True),
        ("label", cmd_label, True),
        ("mobius", cmd_mobius, True),
        ("shell-verify", cmd_shell_verify, True),
        ("chains", cmd_chains, True),
        ("group", cmd_group, False),
    ):
        p = sub.add_parser(name, parents=[common])
        if needs_family:
            p.add_argument("family", help=FAMILY_GRAMMAR)
        else:
            p.add_argument("file", help="group JSON file")
        p.set_defaults(fn=fn)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except LatshellError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError, IndexError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
