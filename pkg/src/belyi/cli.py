"""Command line: analyze, solve, verify, attest, reduce, monodromy.

Exit codes: 0 success (every check passed), 1 a check or the solver failed,
2 usage or input error. File arguments accept ``fixture:<name>`` for bundled
data, e.g. ``belyi analyze fixture:triple_deg3``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures
from .algebra.fields import NumberField, PrimeField
from .algebra.reduction import NotIntegralError, PrimeIdealSpec, degree_one_primes, reduce_map_mod_prime
from .candidate import MapFormatError, dumps_map, read_map
from .perm import NotTransitiveError, TripleConsistencyError, TripleParseError, genus, group_order, is_primitive, is_transitive, read_triple
from .verify.conclude import MonodromyEvidence, conclude_monodromy
from .verify.decompose import WildDecompositionError, indecomposability_test
from .verify.frobenius import frobenius_sample
from .verify.numerical import ContinuationError, numerical_monodromy
from .verify.ramification import NotReducedError, RamificationProfile, WildRamificationError, check_belyi
from .verify.report import Report
from .verify.twotrans import InterpolationError, twotrans_obstruction

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _out(args, text):
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_triple(arg):
    try:
        return read_triple(fixtures.resolve(arg))
    except (OSError, TripleParseError, TripleConsistencyError, ValueError) as exc:
        raise UsageError(f"cannot read triple {arg}: {exc}") from exc


def _load_map(arg):
    try:
        return read_map(fixtures.resolve(arg))
    except (OSError, MapFormatError, ValueError, ArithmeticError) as exc:
        raise UsageError(f"cannot read map {arg}: {exc}") from exc


# ------------------------------------------------------------------ commands


def cmd_analyze(args):
    t = _load_triple(args.triple)
    gens = [t.x, t.y]
    lines = [f"degree: {t.degree}", "types: " + " | ".join(str(c) for c in t.cycle_types())]
    trans = is_transitive(t)
    lines.append(f"transitive: {'yes' if trans else 'no'}")
    if trans:
        lines.append(f"genus: {genus(t)}")
        lines.append(f"primitive: {'yes' if is_primitive(gens) else 'no'}")
    lines.append(f"order: {group_order(gens)}")
    _out(args, "\n".join(lines) + "\n")
    return OK


def cmd_solve(args):
    from .pipeline import solve_triple

    t = _load_triple(args.triple)
    try:
        res = solve_triple(
            t,
            samples_per_edge=args.samples_per_edge,
            digits=args.digits,
            target_digits=args.target_digits,
            max_alg_degree=args.max_alg_degree,
        )
    except NotTransitiveError as exc:
        raise UsageError(str(exc)) from exc
    except Exception as exc:  # any solver stage: report and exit 1
        print(f"solve failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return FAILED
    if args.dump_geometry:
        Path(args.dump_geometry).write_text(res.geometry_text(), encoding="utf-8")
    head = (
        f"# orders {res.emb.a} {res.emb.b} {res.emb.c}; welding residual {res.welding.max_residual:.1e}; "
        f"newton iterations {res.newton.iterations}\n"
    )
    _out(args, head + dumps_map(res.map))
    return OK


def cmd_verify(args):
    m = _load_map(args.map)
    try:
        expected = RamificationProfile.parse(args.profile)
    except ValueError as exc:
        raise UsageError(f"bad profile {args.profile!r}: {exc}") from exc
    try:
        rep = check_belyi(m, expected)
    except (NotReducedError, WildRamificationError) as exc:
        rep = Report()
        rep.add("profile", "FAIL", str(exc))
    _out(args, str(rep) + "\n")
    return rep.exit_code


def cmd_attest(args):
    m = _load_map(args.map)
    if not isinstance(m.field, PrimeField):
        raise UsageError("attest needs a map over a prime field (use reduce first)")
    rep = Report()
    ev = MonodromyEvidence(m.degree)
    try:
        dec = indecomposability_test(m, seed=args.seed)
        ev.primitive = dec.indecomposable
        ev.primitive_provenance = f"indecomposable over F_{m.field.p}, Ritt"
        detail = "no decomposition" if dec.indecomposable else f"inner degrees {dec.inner_degrees}"
        rep.check("indecomposable", dec.indecomposable, detail)
    except WildDecompositionError as exc:
        rep.add("indecomposable", "SKIP", str(exc))
    if m.degree >= 3:
        try:
            phi = twotrans_obstruction(m, args.max_factor_degree, samples=args.samples, seed=args.seed)
        except InterpolationError as exc:
            phi = None
            rep.add("not_2_transitive", "FAIL", str(exc))
        else:
            if phi is not None:
                ev.two_transitive_obstruction = phi.x_degree
                rep.check("not_2_transitive", True, f"factor of X-degree {phi.x_degree}, checked at {len(phi.verified_at)} specializations")
            else:
                rep.check("not_2_transitive", False, f"no factor of X-degree <= {args.max_factor_degree}")
    fs = frobenius_sample(m, args.frobenius, seed=args.seed)
    ev.sampled_frobenius_types = list(fs)
    rep.notes.append(f"{len(fs)} Frobenius cycle types sampled")
    decision = conclude_monodromy(ev)
    rep.check("conclusion", decision.conclusive, decision.verdict)
    _out(args, str(rep) + "\n" + str(decision) + "\n")
    return rep.exit_code


def cmd_reduce(args):
    m = _load_map(args.map)
    K = m.field
    if isinstance(K, PrimeField):
        raise UsageError("map is already over a prime field")
    try:
        if args.root is None:
            specs = degree_one_primes(K, args.prime) if isinstance(K, NumberField) else [PrimeIdealSpec(args.prime, 0)]
            if len(specs) != 1:
                roots = ", ".join(str(s.root) for s in specs) or "none"
                raise UsageError(f"{len(specs)} degree-one primes above {args.prime} (roots {roots}); pass --root")
            spec = specs[0]
        else:
            spec = PrimeIdealSpec(args.prime, args.root)
            if isinstance(K, NumberField):
                spec.validate(K)
        red = reduce_map_mod_prime(m, spec)
    except (ValueError, NotIntegralError) as exc:
        raise UsageError(f"invalid prime ideal: {exc}") from exc
    _out(args, f"# reduced modulo {spec}\n" + dumps_map(red))
    return OK


def cmd_monodromy(args):
    m = _load_map(args.map)
    try:
        base = complex(args.base.replace(" ", ""))
    except ValueError as exc:
        raise UsageError(f"bad base point {args.base!r}") from exc
    try:
        t = numerical_monodromy(m, precision_digits=min(args.digits, 30), base_point=base)
    except (ContinuationError, ValueError) as exc:
        print(f"monodromy failed: {exc}", file=sys.stderr)
        return FAILED
    _out(args, t.to_text())
    return OK


# ------------------------------------------------------------------ parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--digits", type=int, default=30, help="starting working precision")
    common.add_argument("--target-digits", type=int, default=120, help="final precision")
    common.add_argument("--max-alg-degree", type=int, default=8, help="largest algebraic degree tried")
    common.add_argument("--dump-geometry", metavar="PATH", help="write kites, pairing and tree as text")
    common.add_argument("--threads", type=int, default=1, help="parallelism hint (work runs in one thread)")

    ap = argparse.ArgumentParser(prog="belyi", description="Genus-0 Belyi maps: solve and verify.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="genus, types, transitivity, primitivity, order")
    p.add_argument("triple")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", parents=[common], help="triple file -> map file")
    p.add_argument("triple")
    p.add_argument("--samples-per-edge", type=int, default=24)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="map + expected profile -> verdict")
    p.add_argument("map")
    p.add_argument("profile", help="e.g. '1^2 | 2 | 2'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("attest", parents=[common], help="map over F_p -> monodromy evidence and conclusion")
    p.add_argument("map")
    p.add_argument("--max-factor-degree", type=int, default=11)
    p.add_argument("--samples", type=int, default=40, help="specializations checked for the factor family")
    p.add_argument("--frobenius", type=int, default=20, help="Frobenius samples")
    p.set_defaults(func=cmd_attest)

    p = sub.add_parser("reduce", parents=[common], help="map over K -> map over F_p")
    p.add_argument("map")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--root", type=int, help="residue of alpha; required when several primes lie above p")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("monodromy", parents=[common], help="map -> numerical permutation triple")
    p.add_argument("map")
    p.add_argument("--base", default="0.5+0.5j", help="base point of the loops")
    p.set_defaults(func=cmd_monodromy)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else USAGE
    if args.threads < 1 or args.digits < 16 or args.target_digits < args.digits:
        print("belyi: need --threads >= 1, --digits >= 16 and --target-digits >= --digits", file=sys.stderr)
        return USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"belyi {args.command}: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
