"""Command line front end.

Every subcommand runs one verification surface and emits a single JSON
document (stdout, or --out FILE) with a top-level `schema: 1` field. Output
is deterministic given the arguments and seed: keys are sorted and nothing
time- or host-dependent is written.

Exit status: 0 when every checked assertion holds, 1 when a witness against
one was found (the document carries it), 2 for configuration errors.

Weights are passed on the command line as comma-separated shifted entries,
for example `--b 3,1,0`.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import pathlib
import sys

from . import cohomology, cube, functors, liealg, operads, verma, weights
from .exactlin import QQ, PrimeField, is_prime


class ConfigError(Exception):
    pass


@dataclasses.dataclass
class RunConfig:
    """Parsed invocation, one flat record per run."""

    subcommand: str
    k: int | None = None
    n: int | None = None
    p: int | None = None
    depth: int | None = None
    field: str = "Q"
    word: str | None = None
    out: str | None = None
    seed: int = 0
    oracle: bool = False
    all: bool = False
    lam: str | None = None
    a: str | None = None
    b: str | None = None
    max: int = 3
    relation: str | None = None
    allow_small_p: bool = False
    budget: int = 1000
    max_arity: int = 5


def _config_from(args: argparse.Namespace) -> RunConfig:
    fields = {f.name for f in dataclasses.fields(RunConfig)}
    return RunConfig(**{k: v for k, v in vars(args).items() if k in fields})


def _parse_weight(text: str, n: int) -> weights.Weight:
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ConfigError(f"weight {text!r} is not a comma-separated integer list")
    if len(entries) != n:
        raise ConfigError(f"weight {text!r} has {len(entries)} entries, expected {n}")
    return entries


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ConfigError(f"--p {p} is not prime")


def _large_prime_guard(cfg: RunConfig) -> None:
    """The modular results are only claimed for p well above the weight data;
    4*k*n is the enforced floor (k defaults to 1 where no k is in play)."""
    k = cfg.k or 1
    n = cfg.n or 1
    _require_prime(cfg.p)
    if cfg.p > 4 * k * n:
        return
    if cfg.allow_small_p:
        print(
            f"warning: p={cfg.p} is not above the large-prime floor 4*k*n={4 * k * n}; "
            "results outside the claimed regime",
            file=sys.stderr,
        )
        return
    raise ConfigError(
        f"p={cfg.p} must exceed 4*k*n={4 * k * n} (pass --allow-small-p to override)"
    )


def _field_for(cfg: RunConfig):
    if cfg.field == "Q":
        return QQ
    if cfg.field == "Fp":
        if cfg.p is None:
            raise ConfigError("--field Fp requires --p")
        _require_prime(cfg.p)
        return PrimeField(cfg.p)
    raise ConfigError(f"unknown field tag {cfg.field!r}")


def _run_blocks(cfg: RunConfig) -> tuple[bool, dict]:
    _large_prime_guard(cfg)
    if (cfg.a is None) != (cfg.b is None):
        raise ConfigError("--a and --b must be given together")
    if cfg.a is not None:
        a = _parse_weight(cfg.a, cfg.n)
        b = _parse_weight(cfg.b, cfg.n)
        report = cohomology.verify_blocks_vanishing(cfg.n, a, b, cfg.p)
        return not report.counterexample, {"report": report.to_json()}
    sweep = cohomology.blocks_sweep(cfg.n, cfg.p, cfg.max)
    doc = sweep.to_json()
    doc["nonvanishing"] = [r.to_json() for r in sweep.nonvanishing]
    doc["matrix"] = [
        {
            "a": list(r.a),
            "b": list(r.b),
            "vanishes": not r.nonvanishing,
            "eblock2": r.block_congruent,
        }
        for r in sweep.reports
    ]
    return not sweep.counterexamples, doc


def _run_cohomology(cfg: RunConfig) -> tuple[bool, dict]:
    lam = _parse_weight(cfg.lam, cfg.n)
    field = _field_for(cfg)
    if cfg.field == "Fp":
        _large_prime_guard(cfg)
    depth = cfg.depth
    if depth is None:
        # Window deep enough to reach every permutation of the entries.
        depth = weights.root_height(tuple(x - y for x, y in zip(lam, sorted(lam))))
        if depth is None:
            raise ConfigError("--depth required for this weight")
    module = verma.TruncatedVerma(cfg.n, lam, depth, field)
    table = cohomology.cohomology_table(module)
    entries = [
        {"degree": deg, "weight": list(mu), "dim": dim}
        for (deg, mu), dim in sorted(table.items())
    ]
    doc = {
        "n": cfg.n,
        "lam": list(lam),
        "field": cfg.field,
        "p": cfg.p,
        "depth": depth,
        "truncation_losses": len(module.truncation_losses),
        "entries": entries,
        "total_dim": sum(table.values()),
    }
    return True, doc


def _run_relations(cfg: RunConfig) -> tuple[bool, dict]:
    if cfg.k < 2:
        raise ConfigError("--k must be at least 2")
    wanted = [cfg.relation] if cfg.relation else list(functors.RELATION_IDS)
    for rel in wanted:
        if rel not in functors.RELATION_IDS:
            raise ConfigError(f"unknown relation {rel!r}; known: {functors.RELATION_IDS}")
    doc: dict = {"k": cfg.k, "ambient_sweep": bool(cfg.all), "detail": {}}
    ok = True
    for rel in wanted:
        if cfg.all:
            reports = functors.verify_relation_everywhere(rel, cfg.k)
        else:
            reports = [functors.verify_relation(rel, cfg.k)]
        holds = all(r.holds for r in reports)
        ok = ok and holds
        doc[rel] = holds
        doc["detail"][rel] = [r.to_json() for r in reports]
    return ok, doc


def _load_word_text(spec: str) -> str:
    path = pathlib.Path(spec)
    if path.exists():
        raw = path.read_text()
    elif spec in cube.DIAGRAMS:
        raw = cube.DIAGRAMS[spec]
    else:
        raise ConfigError(f"--word {spec!r} is neither a file nor a bundled diagram name")
    lines = [line.split("#", 1)[0] for line in raw.splitlines()]
    return " ".join(" ".join(lines).split())


def _run_khovanov(cfg: RunConfig) -> tuple[bool, dict]:
    if cfg.k < 2:
        raise ConfigError("--k must be at least 2")
    text = _load_word_text(cfg.word)
    try:
        word = cube.parse_slice_word(text, cfg.k)
    except ValueError as exc:
        raise ConfigError(f"bad slice word: {exc}")
    if not word.closed:
        raise ConfigError("slice word leaves strands open; a closed diagram is required")
    field = _field_for(cfg)
    euler = cube.euler_invariant(word, cfg.k)
    doc: dict = {
        "k": cfg.k,
        "word": text,
        "crossings": word.n_crossings,
        "negative_crossings": word.n_negative,
        "components": cube.link_components(word),
        "euler": euler,
    }
    ok = True
    if cfg.k == 2:
        dims = cube.khovanov_homology_k2(word, field)
        lo = min(dims) if dims else 0
        hi = max(dims) if dims else -1
        doc["min_degree"] = lo
        doc["dims"] = [dims.get(j, 0) for j in range(lo, hi + 1)]
        doc["total_rank"] = sum(dims.values())
    if cfg.oracle:
        if cfg.k != 2:
            raise ConfigError("--oracle is only defined for k=2")
        oracle = cube.oracle_euler_k2(word)
        doc["oracle_euler"] = oracle
        doc["oracle_matches"] = oracle == euler
        ok = ok and doc["oracle_matches"]
    return ok, doc


def _run_operad_check(cfg: RunConfig) -> tuple[bool, dict]:
    if cfg.budget < 1:
        raise ConfigError("--budget must be positive")
    report = operads.run_operad_checks(seed=cfg.seed, budget=cfg.budget, max_arity=cfg.max_arity)
    failed = {f["check"] for f in report.failures}
    doc = report.to_json()
    doc["checks"] = {
        name: {"trials": count, "passed": name not in failed}
        for name, count in sorted(report.trials.items())
    }
    return report.passed, doc


def _run_selftest(cfg: RunConfig) -> tuple[bool, dict]:
    checks: dict[str, object] = {}

    def run_check(name, thunk):
        try:
            checks[name] = bool(thunk())
        except Exception as exc:  # noqa: BLE001 - selftest reports, never raises
            checks[name] = False
            checks[f"{name}.error"] = f"{type(exc).__name__}: {exc}"

    run_check("free_lie_dims", lambda: liealg.free_lie_multilinear_dim(4) == (6, 6))
    run_check(
        "kostant_partition",
        lambda: weights.kostant_partition((0, 0, 0)) == 1
        and weights.kostant_partition((-1, 0, 1)) == 2,
    )

    def verma_ok():
        module = verma.TruncatedVerma(2, (3, 0), 4, QQ)
        if module.bracket_violations():
            return False
        # Window-edge spill comes from lowering generators only.
        return all(i > j for (i, j), _ in module.truncation_losses)

    run_check("verma_bracket", verma_ok)
    run_check(
        "blocks_pair",
        lambda: cohomology.verify_blocks_vanishing(2, (0, 1), (1, 0), 7).homology
        == {0: 1, 1: 1},
    )
    run_check(
        "relations_core",
        lambda: all(functors.verify_relation(rel, 2).holds for rel in functors.RELATION_IDS),
    )

    def cube_ok():
        unknot = cube.parse_slice_word(cube.DIAGRAMS["unknot"], 2)
        trefoil = cube.parse_slice_word(cube.DIAGRAMS["trefoil"], 2)
        dims = cube.khovanov_homology_k2(trefoil, QQ)
        return cube.euler_invariant(unknot, 2) == 2 and dims == {0: 2, 2: 1, 3: 1}

    run_check("khovanov_trefoil", cube_ok)
    run_check("operads", lambda: operads.run_operad_checks(seed=cfg.seed, budget=200).passed)
    run_check("induction_gl2", lambda: verma.gl2_parabolic_induction_dim(3, 31).dim == 4)

    ok = all(v for key, v in checks.items() if not key.endswith(".error"))
    return ok, {"checks": checks}


_HANDLERS = {
    "blocks": _run_blocks,
    "cohomology": _run_cohomology,
    "relations": _run_relations,
    "khovanov": _run_khovanov,
    "operad-check": _run_operad_check,
    "selftest": _run_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decatkit",
        description="Exact verification suite: weight blocks, nilpotent cohomology, "
        "diagram relations, cube invariants, operad axioms.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_out(sp):
        sp.add_argument("--out", help="write the JSON document to this file")

    sp = sub.add_parser("blocks", help="modular vanishing sweep over weight pairs")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max", type=int, default=3, help="sweep entries 0..max (default 3)")
    sp.add_argument("--a", help="single-pair mode: slice weight, shifted entries")
    sp.add_argument("--b", help="single-pair mode: highest weight, shifted entries")
    sp.add_argument("--allow-small-p", action="store_true")
    add_out(sp)

    sp = sub.add_parser("cohomology", help="nilpotent cohomology table of one module")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lam", required=True, help="highest weight, shifted entries")
    sp.add_argument("--field", choices=("Q", "Fp"), default="Q")
    sp.add_argument("--p", type=int)
    sp.add_argument("--depth", type=int)
    sp.add_argument("--allow-small-p", action="store_true")
    add_out(sp)

    sp = sub.add_parser("relations", help="exact diagram-relation checks")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--all", action="store_true", help="sweep ambient signatures up to length 4")
    sp.add_argument("--relation", help="check a single relation id")
    add_out(sp)

    sp = sub.add_parser("khovanov", help="cube invariant of a closed slice word")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--word", required=True, help="slice-word file, or a bundled diagram name")
    sp.add_argument("--field", choices=("Q", "Fp"), default="Q")
    sp.add_argument("--p", type=int)
    sp.add_argument("--oracle", action="store_true", help="cross-check the k=2 circle oracle")
    add_out(sp)

    sp = sub.add_parser("operad-check", help="sampled operad axiom checks")
    sp.add_argument("--budget", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-arity", type=int, default=5)
    add_out(sp)

    sp = sub.add_parser("selftest", help="quick cross-module property battery")
    sp.add_argument("--seed", type=int, default=0)
    add_out(sp)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from(args)
    try:
        ok, payload = _HANDLERS[cfg.subcommand](cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    document = {"schema": 1, "subcommand": cfg.subcommand, "passed": ok}
    document.update(payload)
    text = json.dumps(document, sort_keys=True, indent=2)
    if cfg.out:
        pathlib.Path(cfg.out).write_text(text + "\n")
    else:
        print(text)
    return 0 if ok else 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
