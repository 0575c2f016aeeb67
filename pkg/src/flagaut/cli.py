"""Command-line front end.

    flagaut aut C3:p3:a1:T,a2:G1 --json
    flagaut verify mu-incidence --case bn-frob --n 2 --m 1
    flagaut catalog

Exit codes: 0 success, 1 parse error, 2 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import DomainError
from .parabolic import INF, KernelSpec, SpecParseError, format_spec, minimize, parse_spec, phi_from_spec
from .rootsys import as_type, root_label

SCHEMA = 1
EXIT_OK, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2


class CliParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; we reserve 2 for domain errors."""

    def error(self, message):
        raise CliParseError(message)


# ----------------------------------------------------------------- reports

def _phi_json(spec) -> dict:
    return {root_label(r): ("inf" if v == INF else int(v)) for r, v in phi_from_spec(spec).items()}


def build_report(text: str) -> dict:
    """The schema-1 report shared by ``classify``, ``phi`` and ``aut``."""
    from .autgroup import aut_group, picard_rank_one_variety_label
    from .geometry import picard_rank

    spec = parse_spec(text)
    normal = minimize(spec)
    aut = aut_group(normal)
    notes = list(aut.notes)
    if picard_rank(normal) == 1:
        notes.append(f"X ≅ {picard_rank_one_variety_label(normal)}")
    return {
        "schema": SCHEMA,
        "input": text,
        "normal_form": format_spec(normal),
        "phi": _phi_json(normal),
        "picard_rank": picard_rank(normal),
        "aut": {
            "reduced_type": str(aut.reduced_type),
            "twist": aut.frobenius_twist,
            "reduced_is_dual": aut.reduced_is_dual,
            "infinitesimal": (None if aut.infinitesimal_factor is None else
                              {"hat": str(aut.infinitesimal_factor[0]),
                               "m": aut.infinitesimal_factor[1]}),
            "lie_dim": aut.lie_dim,
            "is_reduced": aut.is_reduced,
            "describe": aut.describe(),
        },
        "notes": notes,
    }


def _classify_extra(text: str) -> dict:
    from .geometry import smooth_target
    from .parabolic import canonical_form

    spec = minimize(parse_spec(text))
    out = {}
    try:
        cf = canonical_form(spec)
        out["canonical_form"] = {
            "J": sorted(cf.J), "xi": None if cf.xi is None else str(cf.xi),
            "Jprime": sorted(cf.Jprime), "exotic": None if cf.exotic is None else str(cf.exotic)}
    except DomainError as e:
        out["canonical_form"] = {"error": e.code, "message": str(e)}
    try:
        out["smooth_target"] = sorted(smooth_target(spec))
    except DomainError as e:
        out["smooth_target"] = {"error": e.code}
    return out


def _print_report(rep: dict, sections=("normal_form", "picard_rank", "phi", "aut", "notes")) -> None:
    print(f"input:        {rep['input']}")
    if "normal_form" in sections:
        print(f"normal form:  {rep['normal_form']}")
    if "picard_rank" in sections:
        print(f"Picard rank:  {rep['picard_rank']}")
    if "phi" in sections:
        print("phi:")
        for r, v in rep["phi"].items():
            print(f"  {r:>14}  {v}")
    if "aut" in sections:
        a = rep["aut"]
        print(f"Aut⁰:         {a['describe']}  (dim Lie = {a['lie_dim']}, "
              f"{'reduced' if a['is_reduced'] else 'non-reduced'})")
    if "notes" in sections:
        for n in rep["notes"]:
            print(f"  note: {n}")


# ------------------------------------------------------------- subcommands

def cmd_classify(args) -> dict:
    rep = build_report(args.spec)
    rep.update(_classify_extra(args.spec))
    if not args.json:
        _print_report(rep)
        print(f"canonical:    {rep['canonical_form']}")
        print(f"smooth target J: {rep['smooth_target']}")
    return rep


def cmd_phi(args) -> dict:
    rep = build_report(args.spec)
    if not args.json:
        _print_report(rep, ("normal_form", "phi"))
    return rep


def cmd_aut(args) -> dict:
    rep = build_report(args.spec)
    if not args.json:
        _print_report(rep, ("normal_form", "picard_rank", "aut", "notes"))
    return rep


def cmd_contract(args) -> dict:
    from .geometry import contraction_target, smooth_target

    spec = minimize(parse_spec(args.spec))
    alphas = [args.alpha] if args.alpha else sorted(spec.factor_roots)
    targets = {f"a{a}": format_spec(contraction_target(spec, a)) for a in alphas}
    out = {"schema": SCHEMA, "input": args.spec, "normal_form": format_spec(spec),
           "contractions": targets}
    if spec.exotic is None:
        out["smooth_target"] = sorted(smooth_target(spec))
    if not args.json:
        print(f"normal form: {out['normal_form']}")
        for a, t in targets.items():
            print(f"  contract C_{a}: -> {t}")
        if "smooth_target" in out:
            print(f"  P^sm = P_J with J = {out['smooth_target']}")
    return out


def cmd_chain(args) -> dict:
    from .isogeny import chain_compare, compose_very_special, isogeny_for
    from .parabolic import has_very_special_isogeny

    t = as_type(args.type)
    vs = has_very_special_isogeny(t, args.p)
    rows = []
    for pos in range(args.upto + 1):
        k = KernelSpec.from_position(pos)
        if k.kind == "N" and not vs:
            continue
        iso = isogeny_for(t, args.p, k)
        rows.append({"kernel": str(k), "position": pos, "target": str(iso.target),
                     "frobenius_part": k.frobenius_part})
    out = {"schema": SCHEMA, "type": str(t), "p": args.p, "very_special": vs, "chain": rows}
    if args.compare:
        a, b = (KernelSpec.parse(x) for x in args.compare)
        out["compare"] = chain_compare(a, b, t, args.p)
    if vs:
        rec = compose_very_special(t, args.p)
        out["composition_is_frobenius"] = rec.ok
    if not args.json:
        print(f"{t}, p = {args.p}: very special isogeny {'exists' if vs else 'does not exist'}")
        print("  " + " ⊊ ".join(f"{r['kernel']}" for r in rows))
        for r in rows:
            print(f"  {r['kernel']:>4}  position {r['position']}  G -> {r['target']}")
        if "compare" in out:
            print(f"  compare {args.compare[0]} vs {args.compare[1]}: {out['compare']}")
        if vs:
            print(f"  pi_bar ∘ pi = F: {rec.ok}")
    return out


def cmd_verify(args) -> dict:
    if args.what == "mu-incidence":
        from .oracle import WitnessScenario, mu_incidence_report

        w = WitnessScenario(args.case, n=args.n, m=args.m, i=args.i, base=args.base)
        rep = mu_incidence_report(w, "identity" if args.identity else "generator")
        out = {"schema": SCHEMA, "check": "mu-incidence", "case": w.case, "n": w.n, "m": w.m,
               "i": w.i, "element": rep.element, "preserved": rep.preserved,
               "moved": rep.format_vectors(rep.moved), "fixed": rep.format_vectors(rep.fixed),
               "relation": rep.direction}
        if not args.json:
            print(f"case {w.case} (n={w.n}, m={w.m}, i={w.i}), element {rep.element}")
            print(f"  moved:  {', '.join(out['moved'])}")
            print(f"  fixed:  {', '.join(out['fixed'])}")
            print(f"  relation {rep.direction}")
            print(f"preserved: {str(rep.preserved).lower()}")
        return out
    if args.what == "exotic":
        from .oracle import enumerate_exotic_subalgebras

        res = enumerate_exotic_subalgebras()
        out = {"schema": SCHEMA, "check": "exotic", "candidates": res.candidates,
               "dims": res.dims(), "subalgebras": res.describe(),
               "improper_closed": res.improper_closed, "caveat": res.caveat}
        if not args.json:
            print(f"{res.candidates} candidates; proper p-subalgebras above Lie P^a1:")
            for line in res.describe():
                print(f"  {line}")
            print(f"  (Lie G itself closed: {res.improper_closed}; {res.caveat})")
        return out
    if args.what == "normalizer":
        from .oracle import center, normalizer, orthogonal_wedge_model

        M = orthogonal_wedge_model(args.n)
        L, N = M.algebra, M.lie_N()
        Z = center(L)
        out = {"schema": SCHEMA, "check": "normalizer", "n": args.n, "dim_lie_N": N.dim,
               "dim_normalizer": normalizer(L, N).dim,
               "dim_normalizer_mod_center": normalizer(L, N + Z).dim - Z.dim,
               "dim_lie_G": M.lie_G().dim, "dim_center": Z.dim}
        if not args.json:
            for k, v in out.items():
                if k.startswith("dim"):
                    print(f"  {k}: {v}")
        return out
    if args.what == "lie-n":
        from .isogeny import lie_N_dimension

        d = lie_N_dimension(args.type, args.p)
        out = {"schema": SCHEMA, "check": "lie-n", "type": args.type, "p": args.p, "dim": d}
        if not args.json:
            print(f"dim Lie N for {args.type} at p={args.p}: {d}")
        return out
    raise AssertionError(args.what)


def cmd_catalog(args) -> dict:
    if args.list:
        from .catalog import generate_catalog

        specs = [format_spec(s) for s in generate_catalog()]
        if not args.json:
            print("\n".join(specs))
        return {"schema": SCHEMA, "catalog": specs}
    from .acceptance import run_all

    results = run_all(args.criteria or None)
    out = {"schema": SCHEMA, "criteria": [
        {"number": r.number, "title": r.title, "passed": r.passed, "seconds": round(r.seconds, 3),
         "checks": [{"name": n, "ok": ok, "info": str(info)} for n, ok, info in r.checks]}
        for r in results]}
    if not args.json:
        for r in results:
            print(r.line())
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria pass")
    return out


# ------------------------------------------------------------------ parser

def make_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="flagaut", description="Automorphism groups of flag varieties in characteristic p")
    ap.add_argument("--version", action="version", version=f"flagaut {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON (schema 1)")
    common.add_argument("-o", "--output", help="also write the JSON report to this path")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn, helptext in (("classify", cmd_classify, "normal form, canonical form and Aut⁰"),
                               ("phi", cmd_phi, "the phi-function of a spec"),
                               ("aut", cmd_aut, "the connected automorphism group scheme")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("spec", help="TYPE:pP:FACTORS, e.g. C3:p3:a1:T,a2:G1")
        p.set_defaults(func=fn)

    p = sub.add_parser("contract", parents=[common], help="contractions of Schubert curves")
    p.add_argument("spec")
    p.add_argument("--alpha", type=int, help="contract only C_alpha")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("chain", parents=[common], help="the chain of isogeny kernels")
    p.add_argument("type")
    p.add_argument("p", type=int)
    p.add_argument("--upto", type=int, default=4, help="last chain position (default 4 = 2G)")
    p.add_argument("--compare", nargs=2, metavar=("K1", "K2"))
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("verify", parents=[common], help="run an oracle check")
    p.add_argument("what", choices=["mu-incidence", "exotic", "normalizer", "lie-n"])
    p.add_argument("--case", default="bn-frob")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--base", default="quotient", choices=["quotient", "literal"])
    p.add_argument("--identity", action="store_true", help="act by t = 1 instead of the generator")
    p.add_argument("--type", default="G2", help="type for lie-n")
    p.add_argument("--p", type=int, default=3, help="prime for lie-n")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="run the acceptance table")
    p.add_argument("--criteria", type=int, nargs="*", help="run only these criteria")
    p.add_argument("--list", action="store_true", help="print the generated spec catalog instead")
    p.set_defaults(func=cmd_catalog)
    return ap


def _emit_error(args, code: str, message: str, exit_code: int, details=None) -> int:
    payload = {"schema": SCHEMA, "error": code, "message": message}
    if details:
        payload["details"] = {k: str(v) for k, v in details.items()}
    if args is not None and getattr(args, "json", False):
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    print(f"error: {message}", file=sys.stderr)
    return exit_code


def main(argv=None) -> int:
    parser = make_parser()
    args = None
    try:
        args = parser.parse_args(argv)
        report = args.func(args)
    except CliParseError as e:
        return _emit_error(args, "usage", str(e), EXIT_PARSE)
    except SpecParseError as e:
        return _emit_error(args, "parse-error", f"{e} (offending token {e.token!r})", EXIT_PARSE,
                           {"token": e.token})
    except DomainError as e:
        return _emit_error(args, e.code, str(e), EXIT_DOMAIN, e.details)
    except BrokenPipeError:  # e.g. `flagaut catalog --list | head`
        sys.stderr.close()
        return EXIT_OK
    if args.json:
        print(json.dumps(report, ensure_ascii=False, indent=2))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(report, fh, ensure_ascii=False, indent=2)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
