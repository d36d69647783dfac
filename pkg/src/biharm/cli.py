"""Command line: ``run``, ``verify-elements`` and ``plot-data``."""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .adapt import afem_loop
from .benchmark import CSV_COLUMNS, StudyRecord, loglog_slope
from .config import EXAMPLES, MODES, SOLUTIONS, StudyConfig, build_config
from .element import ELEMENTS, MORLEY, NTW, ElementDef, certify_assumption
from .errors import ConfigurationError, DegenerateTriangleError, SolverError
from .mesh import Mesh, generate_lshape_mesh, generate_square_mesh, refine

__all__ = ["StudyConfig", "main", "plot_data", "random_meshes", "run_study", "verify_elements"]

log = logging.getLogger(__name__)

EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_VERIFY = 1


# --------------------------------------------------------------------------
# run


def default_output(config: StudyConfig) -> str:
    return f"{config.example}_{config.element}_{config.mode}.csv"


def write_csv(records: Sequence[StudyRecord], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for rec in records:
            w.writerow(rec.as_row())


def read_csv(path: str | Path) -> dict[str, np.ndarray]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if rows and tuple(rows[0].keys()) != CSV_COLUMNS:
        raise ValueError(f"{path}: unexpected header")
    return {c: np.array([float(r[c]) for r in rows]) for c in CSV_COLUMNS}


def run_study(config: StudyConfig, out=sys.stdout) -> int:
    """Run one study, write its CSV and print the final estimator and effectivity."""
    path = config.output or default_output(config)
    try:
        records = afem_loop(config)
    except (SolverError, DegenerateTriangleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    write_csv(records, path)
    last = records[-1]
    print(f"levels {len(records)}  ndof {last.ndof}  eta {last.eta:.6e}", file=out)
    if last.energy_error > 0.0:
        print(f"error {last.energy_error:.6e}  effectivity {last.effectivity:.4f}", file=out)
    print(f"wrote {path}", file=out)
    return 0


# --------------------------------------------------------------------------
# verify-elements


def random_meshes(count: int, seed: int = 0, rounds: tuple[int, int] = (1, 4)) -> list[Mesh]:
    """Meshes from random rounds of newest-vertex bisection of the two coarse meshes."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        mesh = generate_square_mesh(int(rng.integers(1, 4))) if i % 2 == 0 else generate_lshape_mesh()
        for _ in range(int(rng.integers(rounds[0], rounds[1] + 1))):
            k = max(1, int(rng.uniform(0.1, 0.5) * mesh.n_triangles))
            mesh = refine(mesh, rng.choice(mesh.n_triangles, size=k, replace=False))
        out.append(mesh)
    return out


def verify_elements(elements: Sequence[ElementDef] = (MORLEY, NTW), n_meshes: int = 50,
                    seed: int = 0, tol: float = 1e-10, out=sys.stdout) -> int:
    """Certify the jump moment conditions on random meshes; 0 iff every element passes."""
    meshes = random_meshes(n_meshes, seed)
    failed = False
    for elem in elements:
        moment = value_moment = continuity = 0.0
        for k, mesh in enumerate(meshes):
            c = certify_assumption(elem, mesh, trials=3, rng=seed + k)
            moment = max(moment, c.moment)
            value_moment = max(value_moment, c.value_moment)
            continuity = max(continuity, c.continuity)
        ok = moment < tol and value_moment < tol and (continuity < tol or not elem.continuous)
        failed |= not ok
        note = "" if elem.continuous else " (informational: element is not C0)"
        print(f"{elem.name:8s} {'PASS' if ok else 'FAIL'}  gradient-jump moment {moment:.3e}  "
              f"value-jump moment {value_moment:.3e}  value jump {continuity:.3e}{note}", file=out)
    return EXIT_VERIFY if failed else 0


# --------------------------------------------------------------------------
# plot-data


def plot_data(csv_path: str | Path, last: int = 4, outdir: str | Path | None = None,
              out=sys.stdout) -> dict[str, float]:
    """Write two-column ``ndof value`` files for the error and eta and fit their slopes."""
    data = read_csv(csv_path)
    if len(data["ndof"]) < 2:
        raise ValueError(f"{csv_path}: need at least two rows")
    csv_path = Path(csv_path)
    outdir = Path(outdir) if outdir is not None else csv_path.parent
    outdir.mkdir(parents=True, exist_ok=True)
    k = min(last, len(data["ndof"]))
    slopes = {}
    for name in ("energy_error", "eta"):
        values = data[name]
        if not np.any(values > 0.0):
            continue
        target = outdir / f"{csv_path.stem}_{name}.dat"
        with open(target, "w") as fh:
            fh.write(f"# ndof {name}\n")
            for n, v in zip(data["ndof"], values):
                fh.write(f"{int(n)} {v!r}\n")
        slopes[name] = loglog_slope(data["ndof"], values, k)
        print(f"{name:12s} slope over last {k} rows: {slopes[name]:+.4f}  ({target})", file=out)
    return slopes


# --------------------------------------------------------------------------
# argument parsing


def _add_run_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="flat key = value file; flags override its values")
    p.add_argument("--example", choices=EXAMPLES)
    p.add_argument("--element", choices=sorted(ELEMENTS))
    p.add_argument("--epsilon", type=float)
    p.add_argument("--alpha", type=int, choices=(0, 1))
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--theta", type=float)
    p.add_argument("--max-ndof", type=int)
    p.add_argument("--max-level", type=int)
    p.add_argument("--quadrature-degree", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--output", "-o")
    p.add_argument("--initial-n", type=int, help="cells per side of the initial square mesh")
    p.add_argument("--solution", choices=SOLUTIONS, help="manufactured solution")
    p.add_argument("--full-residual", action="store_true", default=None,
                   help="include eps^2 bilap u_h in the volume residual")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="biharm", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log every level")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_run_args(sub.add_parser("run", help="run a convergence study and write a CSV"))

    v = sub.add_parser("verify-elements", help="check the jump moment conditions")
    v.add_argument("--meshes", type=int, default=50)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float, default=1e-10)
    v.add_argument("--element", choices=sorted(ELEMENTS), action="append")

    p = sub.add_parser("plot-data", help="two-column data files and log-log slopes")
    p.add_argument("csv")
    p.add_argument("--last", type=int, default=4)
    p.add_argument("--outdir")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "run":
            keys = ("example", "element", "epsilon", "alpha", "mode", "theta", "max_ndof",
                    "max_level", "quadrature_degree", "seed", "output", "initial_n",
                    "solution", "full_residual")
            config = build_config(args.config, **{k: getattr(args, k) for k in keys})
            return run_study(config)
        if args.command == "verify-elements":
            elems = [ELEMENTS[e] for e in args.element] if args.element else (MORLEY, NTW)
            return verify_elements(elems, args.meshes, args.seed, args.tol)
        if args.command == "plot-data":
            plot_data(args.csv, args.last, args.outdir)
            return 0
    except (ConfigurationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
