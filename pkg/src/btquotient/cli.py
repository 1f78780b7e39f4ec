"""Command line interface.

Subcommands
-----------
quotient      build the quotient graph and write it as json, dot or ascii
verify        run the brute-force oracle against every closed form
cosets        |Upsilon_{n,m}|, left and double coset counts for one pair
orbits        PGL_2(F_q)-orbit lengths on P^1(F_{q^d})
distance      tree distance from x_0 to M(x_0) for a polynomial matrix
irreducibles  list the monic irreducible polynomials of degree d

Exit codes: 0 success, 1 verification mismatch, 2 usage or config error,
3 enumeration budget exceeded.  BTQ_BUDGET overrides the default budget.

Usage examples
--------------
  btquotient quotient --q 2 --d 3 --window 8 --format ascii
  btquotient verify --q 2 --d 5 --window 7
  btquotient cosets --q 2 --d 5 --n 1 --m 2
  btquotient distance --q 2 --d 2 --matrix "[[1,0],[0,t^2+t+1]]"
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .algebra import AlgebraError, FieldCtx, Place, PolyRing, prime_power
from .projective import bt_distance, canonicalize, moebius_orbit_census, parse_mat
from .quotient import GAMMA, GAMMA_TILDE, build_quotient, closed_form_multiplicity
from .serialize import to_ascii, to_dot, to_json
from .upsilon import (
    BudgetExceeded,
    default_budget,
    double_coset_count,
    enumerate_upsilon,
    left_coset_count,
    upsilon_size_formula,
)
from .verify import DEFAULT_SEED, verify_instance

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    q: int
    d: int | None = None
    f: str | None = None
    window: int | None = None
    variant: str = GAMMA
    format: str = "json"
    out: str | None = None
    budget: int | None = None
    seed: int = DEFAULT_SEED
    n: int | None = None
    m: int | None = None
    matrix: str | None = None
    all_f: bool = False

    def __post_init__(self):
        try:
            prime_power(self.q)
        except AlgebraError as exc:
            raise ConfigError(str(exc)) from None
        if self.d is not None and self.d < 1:
            raise ConfigError("--d must be >= 1")

    def place(self) -> Place:
        R = PolyRing(FieldCtx.gf(self.q))
        if self.f is None:
            return Place(R, R.monic_irreducibles(self.d)[0])
        try:
            place = Place(R, R.parse(self.f))
        except AlgebraError as exc:
            raise ConfigError(str(exc)) from None
        if place.d != self.d:
            raise ConfigError(f"--f has degree {place.d}, expected --d {self.d}")
        return place


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_quotient(cfg: RunConfig) -> int:
    window = cfg.window if cfg.window is not None else 2 * cfg.d + 2
    if window < cfg.d:
        raise ConfigError(f"--window {window} is smaller than --d {cfg.d}")
    g = build_quotient(cfg.q, cfg.d, window, cfg.variant)
    render = {"json": lambda g: to_json(g) + "\n", "dot": to_dot, "ascii": to_ascii}[cfg.format]
    _emit(cfg, render(g))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    report = verify_instance(cfg.q, cfg.d, cfg.place(), cfg.window, cfg.budget, cfg.seed,
                             check_f_independence=cfg.all_f)
    _emit(cfg, report.to_json() + "\n")
    status = "PASS" if report.passed else "FAIL"
    print(f"{status} q={cfg.q} d={cfg.d} f={report.params['f']} window={report.params['window']} "
          f"({sum(report.timing.values()):.1f}s)", file=sys.stderr)
    if report.errors:
        return EXIT_BUDGET
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_cosets(cfg: RunConfig) -> int:
    if cfg.n is None or cfg.m is None:
        raise ConfigError("cosets needs --n and --m")
    place = cfg.place()
    U = enumerate_upsilon(place, cfg.n, cfg.m, cfg.budget)
    n, m, q, d = cfg.n, cfg.m, cfg.q, cfg.d
    rec = {
        "q": q, "d": d, "f": str(place), "n": n, "m": m,
        "upsilon_size": len(U),
        "upsilon_size_formula": upsilon_size_formula(q, d, n, m) if U.l is not None else None,
        "left_cosets": left_coset_count(U),
        "double_cosets": double_coset_count(U),
        "closed_form": closed_form_multiplicity(q, d, n, m),
    }
    if cfg.format == "json":
        _emit(cfg, json.dumps(rec, indent=2) + "\n")
    else:
        _emit(cfg, "".join(f"{k:22s}{v}\n" for k, v in rec.items()))
    return EXIT_OK if rec["double_cosets"] == rec["closed_form"] else EXIT_MISMATCH


def cmd_orbits(cfg: RunConfig) -> int:
    census = moebius_orbit_census(FieldCtx.gf(cfg.q), cfg.d)
    lengths = sorted(census.elements(), reverse=True)
    if cfg.format == "json":
        _emit(cfg, json.dumps({"q": cfg.q, "d": cfg.d, "orbit_lengths": lengths,
                               "points": sum(lengths)}) + "\n")
    else:
        _emit(cfg, " ".join(map(str, lengths)) + "\n")
    return EXIT_OK


def cmd_distance(cfg: RunConfig) -> int:
    if cfg.matrix is None:
        raise ConfigError("distance needs --matrix")
    place = cfg.place()
    try:
        M = canonicalize(place.ring, parse_mat(place.ring, cfg.matrix))
    except AlgebraError as exc:
        raise ConfigError(str(exc)) from None
    _emit(cfg, f"{bt_distance(place, M)}\n")
    return EXIT_OK


def cmd_irreducibles(cfg: RunConfig) -> int:
    R = PolyRing(FieldCtx.gf(cfg.q))
    _emit(cfg, "".join(R.format(f) + "\n" for f in R.monic_irreducibles(cfg.d)))
    return EXIT_OK


COMMANDS = {
    "quotient": cmd_quotient,
    "verify": cmd_verify,
    "cosets": cmd_cosets,
    "orbits": cmd_orbits,
    "distance": cmd_distance,
    "irreducibles": cmd_irreducibles,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="btquotient", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--f", help='place polynomial, e.g. "t^3+t+1" (default: first irreducible)')
        p.add_argument("--window", type=int)
        p.add_argument("--variant", choices=[GAMMA, GAMMA_TILDE], default=GAMMA)
        p.add_argument("--format", choices=["json", "dot", "ascii"],
                       default="ascii" if name in ("cosets", "orbits") else "json")
        p.add_argument("--out")
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        if name == "cosets":
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--m", type=int, required=True)
        if name == "distance":
            p.add_argument("--matrix", required=True)
        if name == "verify":
            p.add_argument("--all-f", action="store_true", help="also check every irreducible of degree d")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    opts = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    try:
        cfg = RunConfig(**opts)
        if cfg.budget is None:
            cfg.budget = default_budget()
        return COMMANDS[cfg.command](cfg)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ConfigError, AlgebraError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
