"""Command-line surface.

Build the standard objects from a config (flags, or a JSON/TOML file via
--config, with flags overriding file values), run the verification
suites, and write a JSON certificate plus a human-readable summary to
stdout.  The atlas command additionally emits a CSV.

Exit codes are stable across subcommands: 0 when every check passed,
1 when a verification ran to completion and failed, 2 when the input
could not be used (unparsable config, n < 2, violated structural
constraint).  Certificates land in --out, defaulting to the
TAFTGAL_OUTDIR environment variable, then the working directory."""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import os
import sys
import time
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

from .bigalois import (
    BiGalElement,
    GaloisError,
    KxKplusElement,
    bigal_equivalence,
    bigal_product_params,
    kxk_eq,
    kxk_mul,
    neutral_check,
    verify_group_law,
)
from .certify import Certificate, build_certificate, matrix_payload
from .comodule import ComoduleError
from .core import Report
from .families import (
    CoidealDatum,
    FamilyError,
    FamilySpec,
    build_coideal,
    build_family,
    enumerate_coideal_data,
    verify_family_simple,
    verify_lifting,
    verify_tw_coidl,
)
from .field import (
    Field,
    FieldError,
    ParseError,
    Scalar,
    make_field,
    parse_scalar,
    primitive_root,
)
from .hopf import (
    HopfBuildError,
    build_H,
    build_H_chi,
    build_taft,
    build_taft_qinv,
    cop,
    hopf_morphism_check,
    taft_flip_images,
    verify_hopf,
)
from .twist import (
    GroupData,
    TwistError,
    build_cocycle,
    characters_from_cocycle,
    cocycle_from_dict,
    diag_subgroup,
    subgroup_closure,
    trivial_cocycle,
    verify_twist_presentation,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

BUILD_ERRORS = (FamilyError, TwistError, FieldError, ParseError,
                ComoduleError, HopfBuildError, GaloisError)


class InputError(ValueError):
    """Anything that makes the run impossible rather than failed."""


# ---------------------------------------------------------------------------
# config plumbing


def load_config_file(path: str) -> dict:
    p = Path(path)
    try:
        raw = p.read_bytes()
    except OSError as e:
        raise InputError(f"cannot read config {path}: {e}")
    try:
        if p.suffix.lower() == ".toml":
            return tomllib.loads(raw.decode())
        return json.loads(raw.decode())
    except (tomllib.TOMLDecodeError, json.JSONDecodeError, UnicodeDecodeError) as e:
        raise InputError(f"cannot parse config {path}: {e}")


@dataclasses.dataclass
class RunConfig:
    """The numeric frame every command needs: n, the conductor N of the
    coefficient field Q(zeta_N) (n | N, default n), and the field."""

    n: int
    N: int
    field: Field

    @staticmethod
    def from_dict(cfg: dict) -> "RunConfig":
        try:
            n = int(cfg.get("n", 0))
        except (TypeError, ValueError):
            raise InputError(f"n must be an integer, got {cfg.get('n')!r}")
        if n < 2:
            raise InputError(f"n must be >= 2, got {n}")
        try:
            N = int(cfg.get("N", n))
        except (TypeError, ValueError):
            raise InputError(f"N must be an integer, got {cfg.get('N')!r}")
        if N < 1 or N % n:
            raise InputError(f"N must be a positive multiple of n, got {N}")
        return RunConfig(n, N, make_field(N))


def _read_scalar(value, field: Field, n: int) -> Scalar:
    """Scalar literals: integers, or strings in the z-polynomial grammar;
    the single letter q abbreviates the primitive n-th root."""
    if isinstance(value, bool):
        raise InputError(f"cannot read scalar {value!r}")
    if isinstance(value, int):
        return field.one * value
    if isinstance(value, str):
        if value.strip() == "q":
            return primitive_root(field, n)
        try:
            return parse_scalar(value, field)
        except ParseError as e:
            raise InputError(f"bad scalar {value!r}: {e}")
    raise InputError(f"cannot read scalar {value!r}")


_SUBGROUP_WORDS = ("G", "full", "diag", "trivial", "anti")


def _subgroup_elements(n: int, F):
    """None/"G" -> full group; "diag"; "trivial"; "anti" (the (g,g^-1)
    cyclic subgroup); otherwise a list of generator pairs, closed up."""
    if F is None or F in ("G", "full"):
        return None
    if F == "diag":
        return diag_subgroup(n)
    if F == "trivial":
        return [(0, 0)]
    if F == "anti":
        return subgroup_closure(n, [(1, n - 1)])
    if isinstance(F, str):
        try:
            F = json.loads(F)
        except json.JSONDecodeError:
            raise InputError(
                f"subgroup {F!r} is not one of {_SUBGROUP_WORDS} or a JSON list"
            )
    if isinstance(F, (list, tuple)):
        try:
            gens = [tuple(int(x) for x in f) for f in F]
        except (TypeError, ValueError):
            raise InputError(f"bad subgroup generator list {F!r}")
        return subgroup_closure(n, gens)
    raise InputError(f"cannot read subgroup {F!r}")


def _group(rc: RunConfig, F) -> GroupData:
    return GroupData(rc.n, _subgroup_elements(rc.n, F))


def _read_cocycle(cfg, group: GroupData, field: Field):
    """None/"trivial"; a bicharacter exponent matrix (possibly as a JSON
    string); or a serialized cocycle dict."""
    if cfg is None or cfg == "trivial":
        return trivial_cocycle(group, field=field)
    if isinstance(cfg, str):
        try:
            cfg = json.loads(cfg)
        except json.JSONDecodeError:
            raise InputError(f"bad cocycle {cfg!r}: not trivial/matrix/dict")
    if isinstance(cfg, dict):
        psi = cocycle_from_dict(cfg)
        if psi.group.n != group.n:
            raise InputError(f"cocycle is over n={psi.group.n}, run is n={group.n}")
        return psi
    if isinstance(cfg, (list, tuple)):
        try:
            matrix = [[int(x) for x in row] for row in cfg]
        except (TypeError, ValueError):
            raise InputError(f"bad exponent matrix {cfg!r}")
        return build_cocycle(group, matrix, field)
    raise InputError(f"cannot read cocycle {cfg!r}")


def _family_spec(rc: RunConfig, cfg: dict) -> FamilySpec:
    if isinstance(cfg.get("spec"), dict):
        spec = FamilySpec.from_dict(cfg["spec"])
    else:
        tag = cfg.get("tag")
        if not tag:
            raise InputError("family needs a tag (L, K11, K01, K10, TGA)")
        group = _group(rc, cfg.get("F"))
        psi = _read_cocycle(cfg.get("psi"), group, rc.field)
        params = {}
        for k in ("xi", "mu", "a", "b"):
            if cfg.get(k) is not None:
                params[k] = _read_scalar(cfg[k], rc.field, rc.n)
        spec = FamilySpec(tag, psi, **params)
    spec.validate()
    return spec


def _coideal_datum(rc: RunConfig, cfg: dict) -> CoidealDatum:
    if isinstance(cfg.get("datum"), dict):
        datum = CoidealDatum.from_dict(cfg["datum"])
    else:
        kind = cfg.get("kind")
        if kind not in ("xi", "delta"):
            raise InputError("coideal needs kind 'xi' or 'delta'")
        group = _group(rc, cfg.get("F"))
        xi = None
        if cfg.get("xi") is not None:
            xi = _read_scalar(cfg["xi"], rc.field, rc.n)
        delta = cfg.get("delta")
        if isinstance(delta, str):
            delta = [int(x) for x in delta.replace(",", " ").split()]
        datum = CoidealDatum(kind, group, xi=xi,
                             delta=tuple(delta) if delta is not None else None,
                             field=rc.field)
    datum.validate()
    return datum


def _bigal_element(rc: RunConfig, cfg, label: str) -> BiGalElement:
    if not isinstance(cfg, dict) or "xi" not in cfg:
        raise InputError(f"{label} needs xi (and optionally mu)")
    xi = _read_scalar(cfg["xi"], rc.field, rc.n)
    mu = _read_scalar(cfg.get("mu", 0), rc.field, rc.n)
    return BiGalElement(rc.n, xi, mu, field=rc.field)


# ---------------------------------------------------------------------------
# subcommand handlers: config dict -> (exit code, Certificate)


def cmd_verify_hopf(config: dict):
    rc = RunConfig.from_dict(config)
    started = time.perf_counter()
    rep = Report(f"verify-hopf n={rc.n}")
    Tq = build_taft(rc.n, rc.field)
    rep.merge(verify_hopf(Tq), prefix="Tq.")
    Tqi = build_taft_qinv(rc.n, rc.field)
    rep.merge(verify_hopf(Tqi), prefix="Tqinv.")
    H = build_H(rc.n, rc.field)
    rep.merge(verify_hopf(H), prefix="H.")
    dims = {"Tq": Tq.dim, "Tqinv": Tqi.dim, "H": H.dim}
    if config.get("psi") is not None:
        psi = _read_cocycle(config["psi"], GroupData(rc.n), rc.field)
        chi1, chi2 = characters_from_cocycle(psi)
        Hchi = build_H_chi(rc.n, rc.field, None, chi1, chi2,
                           name=f"H_chi(n={rc.n})")
        rep.merge(verify_hopf(Hchi), prefix="Hchi.")
        dims["Hchi"] = Hchi.dim
    flip = hopf_morphism_check(Tqi, cop(Tq), taft_flip_images(Tqi, Tq))
    rep.merge(flip, prefix="flip-to-cop.")
    cert = build_certificate("verify-hopf", config, rep, started,
                             dimensions=dims)
    return (EXIT_OK if rep.passed else EXIT_FAIL), cert


def cmd_family(config: dict):
    rc = RunConfig.from_dict(config)
    started = time.perf_counter()
    spec = _family_spec(rc, config)
    H = build_H(rc.n, rc.field)
    A = build_family(spec, H)
    rep = Report(f"family {spec.name}")
    rep.add("built", True, f"dim {A.dim}")
    rep.merge(verify_family_simple(spec, H), prefix="simple.")
    rep.merge(verify_lifting(spec, H), prefix="lifting.")
    if config.get("datum") is not None:
        datum = _coideal_datum(rc, config)
        psi = _read_cocycle(config.get("psi"), GroupData(rc.n), rc.field)
        rep.merge(verify_tw_coidl(datum, psi, H), prefix="tw-coidl.")
    cert = build_certificate(
        "family", config, rep, started,
        dimensions={"member": A.dim, "host": H.dim}, spec=spec.to_dict(),
    )
    return (EXIT_OK if rep.passed else EXIT_FAIL), cert


def cmd_coideal(config: dict):
    rc = RunConfig.from_dict(config)
    started = time.perf_counter()
    datum = _coideal_datum(rc, config)
    C = build_coideal(datum)
    rep = Report(f"coideal {datum.name}")
    rep.add("built", True, f"dim {C.dim} in host dim {C.host.dim}")
    rep.merge(C.verified, prefix="subobject.")
    if config.get("psi") is not None:
        psi = _read_cocycle(config["psi"], GroupData(rc.n), rc.field)
        rep.merge(verify_tw_coidl(datum, psi), prefix="tw-coidl.")
    cert = build_certificate(
        "coideal", config, rep, started,
        dimensions={"coideal": C.dim, "host": C.host.dim},
        datum=datum.to_dict(),
    )
    return (EXIT_OK if rep.passed else EXIT_FAIL), cert


def cmd_twist(config: dict):
    rc = RunConfig.from_dict(config)
    started = time.perf_counter()
    psi = _read_cocycle(config.get("psi"), GroupData(rc.n), rc.field)
    rep = verify_twist_presentation(rc.n, psi, rc.field)
    cert = build_certificate(
        "twist", config, rep, started,
        witness=matrix_payload(getattr(rep, "matrix", None)),
    )
    return (EXIT_OK if rep.passed else EXIT_FAIL), cert


def cmd_grouplaw(config: dict):
    rc = RunConfig.from_dict(config)
    started = time.perf_counter()
    lhs = _bigal_element(rc, config.get("lhs"), "lhs")
    rhs = _bigal_element(rc, config.get("rhs"), "rhs")
    prod = bigal_product_params(lhs, rhs)
    rep = Report(f"grouplaw n={rc.n}")
    H = build_H(rc.n, rc.field)
    try:
        law = verify_group_law(lhs, rhs, H)
    except GaloisError as e:
        # a mid-verification failure is a verified failure, not bad input
        rep.add("law-completed", False, str(e))
        cert = build_certificate("grouplaw", config, rep, started)
        return EXIT_FAIL, cert
    rep.merge(law, prefix="law.")
    kx = kxk_mul(
        KxKplusElement(lhs.xi, lhs.mu, quotient_n=rc.n),
        KxKplusElement(rhs.xi, rhs.mu, quotient_n=rc.n),
    )
    rep.add(
        "kxk-cross-check",
        kxk_eq(kx, KxKplusElement(prod.xi, prod.mu, quotient_n=rc.n)),
        f"abstract product ({kx.a},{kx.b})",
    )
    if config.get("neutral"):
        rep.merge(neutral_check(rc.n, rc.field), prefix="neutral.")
    cert = build_certificate(
        "grouplaw", config, rep, started,
        parameters={
            "lhs": {"xi": str(lhs.xi), "mu": str(lhs.mu)},
            "rhs": {"xi": str(rhs.xi), "mu": str(rhs.mu)},
            "product": {"xi": str(prod.xi), "mu": str(prod.mu)},
        },
        dimensions={"factor": rc.n * rc.n, "cotensor": rc.n * rc.n},
        gamma_matrix=matrix_payload(getattr(law, "matrix", None)),
    )
    return (EXIT_OK if rep.passed else EXIT_FAIL), cert


_DELTA_TAGS = {(1, 1): "K11", (1, 0): "K01", (0, 1): "K10", (0, 0): "TGA"}

ATLAS_COLUMNS = ["datum", "spec", "dim", "simple", "trivial_coinv",
                 "lifting_match", "equiv_class"]


def _spec_of_datum(datum: CoidealDatum) -> FamilySpec:
    """The zero-parameter family member presenting the datum's coideal
    (trivial cocycle; xi-kind data give the one-parameter line family)."""
    psi = trivial_cocycle(datum.group, field=datum.field)
    if datum.kind == "xi":
        return FamilySpec("L", psi, xi=datum.xi)
    return FamilySpec(_DELTA_TAGS[datum.delta], psi)


def _equiv_class_key(datum: CoidealDatum, spec: FamilySpec) -> str:
    fkey = ",".join(f"{i}{j}" for i, j in sorted(datum.group.F))
    if datum.kind == "xi":
        # (xi up to n-th roots of unity, mu) is the complete invariant
        return f"L[F={fkey}]xi^{datum.group.n}={datum.xi ** datum.group.n}"
    return f"{spec.tag}[F={fkey}]"


def cmd_atlas(config: dict):
    rc = RunConfig.from_dict(config)
    started = time.perf_counter()
    samples_cfg = config.get("xi_samples")
    if samples_cfg is None:
        samples_cfg = [1, "q", 2]
    samples = [_read_scalar(s, rc.field, rc.n) for s in samples_cfg]
    try:
        budget = int(config.get("budget", 32))
    except (TypeError, ValueError):
        raise InputError(f"bad budget {config.get('budget')!r}")
    data = enumerate_coideal_data(rc.n, samples, field=rc.field)
    H = build_H(rc.n, rc.field)
    rep = Report(f"atlas n={rc.n}")
    rows = []
    for datum in data:
        C = build_coideal(datum)
        sub_ok = C.verified.passed
        spec = _spec_of_datum(datum)
        if C.dim <= budget:
            simple = verify_family_simple(spec, H)
            lifting = verify_lifting(spec, H)
            by_name = {name: ok for name, ok, _ in simple.checks}
            simple_s = "yes" if by_name.get("H-simple") else "no"
            coinv_s = "yes" if by_name.get("trivial-coinvariants") else "no"
            lift_s = "yes" if lifting.passed else "no"
            ok = sub_ok and simple.passed and lifting.passed
            note = f"dim {C.dim}"
        else:
            simple_s = coinv_s = lift_s = "skipped"
            ok = sub_ok
            note = f"dim {C.dim} > budget {budget}: family checks skipped"
        rows.append([datum.name, spec.name, str(C.dim),
                     simple_s, coinv_s, lift_s, _equiv_class_key(datum, spec)])
        rep.add(datum.name, ok, note)
    cert = build_certificate(
        "atlas", config, rep, started,
        csv_columns=ATLAS_COLUMNS, csv_rows=rows, budget=budget,
        count=len(rows),
    )
    return (EXIT_OK if rep.passed else EXIT_FAIL), cert


def cmd_bigal_equiv(config: dict):
    rc = RunConfig.from_dict(config)
    started = time.perf_counter()
    lhs = _bigal_element(rc, config.get("lhs"), "lhs")
    rhs = _bigal_element(rc, config.get("rhs"), "rhs")
    rep = bigal_equivalence(lhs, rhs)
    cert = build_certificate(
        "bigal-equiv", config, rep, started,
        decision=bool(rep.decision),
        parameters={
            "lhs": {"xi": str(lhs.xi), "mu": str(lhs.mu)},
            "rhs": {"xi": str(rhs.xi), "mu": str(rhs.mu)},
        },
    )
    return (EXIT_OK if rep.passed else EXIT_FAIL), cert


HANDLERS = {
    "verify-hopf": cmd_verify_hopf,
    "family": cmd_family,
    "coideal": cmd_coideal,
    "twist": cmd_twist,
    "grouplaw": cmd_grouplaw,
    "atlas": cmd_atlas,
    "bigal-equiv": cmd_bigal_equiv,
}


def run_command(command: str, config: dict):
    """Dispatch a command on a config dict; this entry point is what
    certificate replay uses (the config echo feeds straight back in).
    Build-phase errors come back as InputError."""
    handler = HANDLERS.get(command)
    if handler is None:
        raise InputError(f"unknown command {command!r}")
    try:
        return handler(dict(config))
    except InputError:
        raise
    except BUILD_ERRORS as e:
        raise InputError(str(e))


# ---------------------------------------------------------------------------
# argparse front end


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taftgal",
        description="exact verification suites for Taft-algebra comodule "
                    "algebras and biGalois objects",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON or TOML config file")
        p.add_argument("--n", type=int, help="the Taft parameter n >= 2")
        p.add_argument("--N", type=int, help="conductor of Q(zeta_N); n | N")
        p.add_argument("--out", help="output directory for certificates "
                                     "(default $TAFTGAL_OUTDIR or .)")
        p.add_argument("--name", help="certificate file stem")

    p = sub.add_parser("verify-hopf", help="Hopf axiom suites + the "
                       "flip isomorphism onto the co-opposite")
    common(p)
    p.add_argument("--psi", help="exponent matrix for an extra "
                                 "character-deformed host, e.g. [[0,1],[0,0]]")

    p = sub.add_parser("family", help="build a family member; simplicity, "
                       "coinvariants, graded lifting")
    common(p)
    p.add_argument("--tag", help="L, K11, K01, K10, or TGA")
    p.add_argument("--F", help="G, diag, anti, trivial, or a JSON list of "
                               "generator pairs")
    p.add_argument("--psi", help="trivial or an exponent matrix")
    for k in ("xi", "mu", "a", "b"):
        p.add_argument(f"--{k}", help=f"scalar parameter {k}")

    p = sub.add_parser("coideal", help="build a coideal datum; subobject "
                       "verification, optional twisted comparison")
    common(p)
    p.add_argument("--kind", help="xi or delta")
    p.add_argument("--F", help="subgroup as for family")
    p.add_argument("--xi", help="scalar for kind xi")
    p.add_argument("--delta", help="two bits for kind delta, e.g. 1,1")
    p.add_argument("--psi", help="cocycle for the twisted comparison")

    p = sub.add_parser("twist", help="twist by a lifted group cocycle and "
                       "match the character presentation")
    common(p)
    p.add_argument("--psi", help="trivial or an exponent matrix")

    p = sub.add_parser("grouplaw", help="cotensor two members and verify "
                       "the parameter law")
    common(p)
    p.add_argument("--lhs-xi", help="left factor xi")
    p.add_argument("--lhs-mu", help="left factor mu")
    p.add_argument("--rhs-xi", help="right factor xi")
    p.add_argument("--rhs-mu", help="right factor mu")
    p.add_argument("--neutral", action="store_true",
                   help="also run the neutral-member check")

    p = sub.add_parser("atlas", help="enumerate all coideal data; verify "
                       "each and tabulate to CSV")
    common(p)
    p.add_argument("--xi-samples", help="comma-separated scalars "
                                        "(empty string for delta rows only)")
    p.add_argument("--budget", type=int,
                   help="dimension cap for per-row family checks")

    p = sub.add_parser("bigal-equiv", help="decide equivalence of two "
                       "members by the complete invariant")
    common(p)
    p.add_argument("--lhs-xi", help="left xi")
    p.add_argument("--lhs-mu", help="left mu")
    p.add_argument("--rhs-xi", help="right xi")
    p.add_argument("--rhs-mu", help="right mu")

    return parser


def _merge_config(args: argparse.Namespace) -> dict:
    config = {}
    if args.config:
        config.update(load_config_file(args.config))
    for k in ("n", "N"):
        v = getattr(args, k, None)
        if v is not None:
            config[k] = v
    for k in ("tag", "F", "psi", "xi", "mu", "a", "b", "kind", "delta",
              "budget"):
        v = getattr(args, k, None)
        if v is not None:
            config[k] = v
    for side in ("lhs", "rhs"):
        xi = getattr(args, f"{side}_xi", None)
        mu = getattr(args, f"{side}_mu", None)
        if xi is not None or mu is not None:
            entry = dict(config.get(side) or {})
            if xi is not None:
                entry["xi"] = xi
            if mu is not None:
                entry["mu"] = mu
            config[side] = entry
    if getattr(args, "neutral", False):
        config["neutral"] = True
    samples = getattr(args, "xi_samples", None)
    if samples is not None:
        config["xi_samples"] = [s for s in samples.split(",") if s.strip()]
    return config


def _write_atlas_csv(cert: Certificate, path: Path):
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(cert.extras["csv_columns"])
        writer.writerows(cert.extras["csv_rows"])


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _merge_config(args)
        code, cert = run_command(args.command, config)
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    outdir = Path(args.out or os.environ.get("TAFTGAL_OUTDIR") or ".")
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        stem = args.name or args.command
        path = cert.write(outdir / f"{stem}.json")
        if args.command == "atlas":
            _write_atlas_csv(cert, outdir / f"{stem}.csv")
    except OSError as e:
        print(f"input error: cannot write output: {e}", file=sys.stderr)
        return EXIT_INPUT
    print(f"{args.command} (n={config.get('n')})")
    for row in cert.checks:
        mark = "PASS" if row["passed"] else "FAIL"
        detail = f"  {row['detail']}" if row["detail"] else ""
        print(f"  {mark} {row['name']}{detail}")
    verdict = "OK" if cert.passed else "FAILED"
    print(f"{verdict} in {cert.timing_s:.2f}s -> {path}")
    return code


if __name__ == "__main__":
    sys.exit(main())
