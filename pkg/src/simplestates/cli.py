"""Command-line interface: ``search``, ``analyze``, ``verify`` and ``bound``.

Exit codes: 0 success, 1 runtime or I/O failure, 2 usage or validation error.
"""
import argparse
import json
import sys
from collections import Counter

import numpy as np

from . import catalog
from ._validation import MAX_QUBITS
from .io import StateFileError, format_state, read_state, write_state, write_trace
from .linalg import reduced_density_matrix
from .measures import ENTROPIES, max_negativity, multipartite_entropy, total_negativity
from .search import AnnealConfig, anneal, count_nonnull, search_space_bits
from .states import StateVector, densify

CROSS_CHECK_TOL = 1e-8


class UsageError(Exception):
    pass


def _num(x):
    return format(x, ".15g")


def cmd_search(args):
    try:
        cfg = AnnealConfig(
            n_qubits=args.qubits,
            coefficients=args.set,
            alpha=args.alpha,
            t0=args.t0,
            beta=args.beta,
            mil=args.mil,
            stop_stale_loops=args.stale,
            rng_seed=args.seed,
            max_evaluations=args.max_evals,
        )
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    result = anneal(cfg)
    report = result.best_report
    comments = [f"seed={cfg.rng_seed} alpha={cfg.alpha!r} fitness={result.best_fitness!r}"]
    if args.out:
        write_state(args.out, result.best_state, cfg.coefficients.name, comments)
    if args.trace:
        write_trace(args.trace, result)
    print(f"E_NPT        {_num(report.total_negativity)}")
    print(f"E_NPT norm   {_num(report.normalized)}")
    print(f"non-null     {count_nonnull(result.best_state)} / {1 << cfg.n_qubits}")
    print(f"fitness      {_num(result.best_fitness)}")
    print(f"evaluations  {result.evaluations_used}")
    print(f"seed         {cfg.rng_seed}")
    if not args.out:
        print()
        sys.stdout.write(format_state(result.best_state, cfg.coefficients.name, comments))
    return 0


def _census_lines(report):
    lines = []
    for size, groups in report.census().items():
        for (count, values), n_cuts in sorted(groups.items()):
            vals = ", ".join(f"{_num(v)} x{m}" for v, m in values) or "none"
            lines.append(f"  {size}-qubit cuts: {n_cuts} with {count} negative eigenvalues [{vals}]")
    return lines


def _report_json(report, entropies):
    return {
        "n_qubits": report.n_qubits,
        "total_negativity": report.total_negativity,
        "normalized": report.normalized,
        "negative_eigenvalue_count": report.negative_eigenvalue_count,
        "cuts": [
            {
                "subset": list(c.cut.smaller_side),
                "negativity": c.negativity_contribution,
                "negative_eigenvalues": list(c.negative_eigenvalues),
                "marginal_purity": c.marginal_purity,
            }
            for c in report.per_cut
        ],
        "entropies": entropies,
    }


def cmd_analyze(args):
    try:
        state, set_name, _ = read_state(args.path)
    except (StateFileError, ValueError) as exc:
        raise UsageError(f"{args.path}: {exc}") from exc
    dense = densify(state)
    if state.n_qubits < 2:
        raise UsageError("analysis needs at least 2 qubits")

    methods = {"schmidt": [True], "direct": [False], "both": [True, False]}[args.method]
    reports = [total_negativity(dense, use_fast_path=m) for m in methods]
    report = reports[0]
    if len(reports) == 2:
        fast, direct = reports
        for a, b in zip(fast.per_cut, direct.per_cut):
            if (abs(a.negativity_contribution - b.negativity_contribution) > CROSS_CHECK_TOL
                    or a.n_negative != b.n_negative):
                print(f"error: schmidt and direct methods disagree on cut {a.cut}",
                      file=sys.stderr)
                return 1
    entropies = {m: multipartite_entropy(dense, m) for m in (args.entropy or [])}

    if args.json:
        print(json.dumps(_report_json(report, entropies), indent=2))
        return 0

    n = state.n_qubits
    nonnull = count_nonnull(state) if isinstance(state, StateVector) else int(
        np.count_nonzero(dense.amplitudes))
    print(f"state        {n} qubits, set {set_name}, {nonnull} non-null kets")
    print(f"E_NPT        {_num(report.total_negativity)}")
    print(f"E_NPT norm   {_num(report.normalized)}")
    print(f"negatives    {report.negative_eigenvalue_count} from {len(report.per_cut)} partial transposes")
    print("census")
    print("\n".join(_census_lines(report)))
    print("completely mixed marginals")
    by_size = Counter(c.cut.size for c in report.per_cut)
    for size in sorted(by_size):
        mixed = report.completely_mixed(size)
        print(f"  {size}-qubit: {len(mixed)} of {by_size[size]}")
    print("marginal purities")
    for c in sorted(report.per_cut, key=lambda c: (c.cut.size, c.cut.smaller_side)):
        tag = " (completely mixed)" if abs(c.marginal_purity - 0.5**c.cut.size) <= 1e-9 else ""
        print(f"  {c.cut}  {c.marginal_purity:.6f}{tag}")
    if entropies:
        print("entropies (sum over cuts)")
        for m, v in entropies.items():
            print(f"  {m:<7} {_num(v)}")
    return 0


def cmd_verify(args):
    ids = args.entry or None
    if ids:
        unknown = sorted(set(ids) - set(catalog.CATALOG))
        if unknown:
            raise UsageError(f"unknown catalog entries: {', '.join(unknown)}")
    results = catalog.verify_all(ids, use_fast_path=args.method == "schmidt")
    diffs = [d for entry_diffs in results.values() for d in entry_diffs]
    if args.json:
        print(catalog.diffs_to_json(diffs))
    else:
        print(catalog.format_table(diffs))
        for eid in results:
            note = catalog.CATALOG[eid].provenance_note
            if note:
                print(f"note: {eid}: {note}")
    fatal = [d for d in diffs if not d.passed and not catalog.CATALOG[d.entry_id].suspect]
    return 1 if fatal else 0


def cmd_bound(args):
    if not 2 <= args.qubits <= MAX_QUBITS:
        raise UsageError(f"--qubits must be in [2, {MAX_QUBITS}]")
    print(f"max E_NPT    {_num(max_negativity(args.qubits))}")
    if args.set_size is not None:
        if args.set_size < 2:
            raise UsageError("--set-size must be >= 2")
        bits = search_space_bits(args.qubits, args.set_size)
        print(f"space bits   {bits:.2f}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="simplestates",
        description="Search and analyze highly entangled multi-qubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="run simulated annealing")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--set", default="v5", choices=["v3", "v5", "v9"])
    p.add_argument("--alpha", type=float, default=0.2)
    p.add_argument("--t0", type=float, default=0.00075)
    p.add_argument("--beta", type=float, default=0.995)
    p.add_argument("--mil", type=int, default=1000)
    p.add_argument("--stale", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-evals", type=int, default=1_000_000)
    p.add_argument("--out", help="write the best state here (default: stdout)")
    p.add_argument("--trace", help="write the per-evaluation CSV trace here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("analyze", help="entanglement report for a state file")
    p.add_argument("path")
    p.add_argument("--method", default="schmidt", choices=["schmidt", "direct", "both"])
    p.add_argument("--entropy", action="append", choices=sorted(ENTROPIES))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="recompute every published catalog claim")
    p.add_argument("--entry", action="append", metavar="ID")
    p.add_argument("--method", default="schmidt", choices=["schmidt", "direct"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="maximum negativity and search-space size")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--set-size", type=int)
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
