"""Command-line interface: validate, solve, generate, export-lp.

Files and flags use 0-based indices; human-readable reports use 1-based
names (p1, agent 1, ...). Exit codes: 0 = success / yes, 1 = no,
2 = error.
"""

import argparse
import sys
from itertools import combinations

from . import exact, ilp, radical, reductions, serialize
from .core import (
    DomainClass,
    classify_domain,
    correct_outcomes,
    possible_outcomes,
    safe_zone,
)
from .interventions import DelegationGraph


def _read(path):
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write(path, text):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _outcome_names(outcomes):
    names = []
    if outcomes.approve_possible:
        names.append("approve")
    if outcomes.reject_possible:
        names.append("reject")
    return "{%s}" % ", ".join(names)


def _agent_set(agents):
    return "{%s}" % ", ".join(str(i + 1) for i in sorted(agents))


def _delegation_map(graph):
    targets = graph.targets
    body = ", ".join(
        "%d -> %d" % (i + 1, targets[i] + 1) for i in sorted(targets)
    )
    return "{%s}" % body


def cmd_validate(args):
    instance, _ = serialize.loads_instance(_read(args.file))
    print("agents: %d" % instance.n)
    print("proposals: %d" % instance.m)
    print("domain: %s" % classify_domain(instance).value)
    zone = sorted(safe_zone(instance))
    print("safe zone: {%s}" % ", ".join("p%d" % (p + 1) for p in zone))
    width = max(8, len("p%d" % instance.m))
    print("%s  %-18s  %s" % ("proposal".ljust(width), "correct", "possible"))
    for p in range(instance.m):
        print(
            "%s  %-18s  %s"
            % (
                ("p%d" % (p + 1)).ljust(width),
                _outcome_names(correct_outcomes(instance, p)),
                _outcome_names(possible_outcomes(instance, p)),
            )
        )
    return 0


def _pick_method(args, instance):
    if args.method != "auto":
        return args.method
    if (
        classify_domain(instance) == DomainClass.RADICAL_ONE_DIMENSIONAL
        and instance.n % 2 == 1
    ):
        return "radical"
    if instance.m <= args.fpt_cap:
        return "fpt-m"
    return "exact"


def _solve(problem, method, instance, budget):
    if problem in ("eap", "dap") and budget is None:
        raise ValueError("problem %r requires --budget" % problem)
    if method == "exact":
        if problem == "eap":
            return exact.eap_exact(instance, budget)
        if problem == "dap":
            return exact.dap_exact(instance, budget)
        return exact.cld_exact(instance)
    if method == "radical":
        if problem == "eap":
            return radical.eap_radical(instance, budget)
        if problem == "dap":
            return radical.dap_radical(instance, budget)
        return radical.cld_radical(instance)
    if problem == "eap":
        program, offset = ilp.build_eap_ip(instance, budget)
        solution = ilp.solve_ip(program)
        witness = ilp.educated_set_from_assignment(instance, solution.assignment)
    elif problem == "dap":
        program, offset = ilp.build_dap_ip(instance, budget)
        solution = ilp.solve_ip(program)
        witness = ilp.removed_set_from_assignment(instance, solution.assignment)
    else:
        program, offset = ilp.build_cld_ip(instance)
        solution = ilp.solve_ip(program)
        witness = ilp.delegation_graph_from_assignment(
            instance, solution.assignment
        )
    return exact.SolveResult(solution.value + offset, witness)


def cmd_solve(args):
    instance, _ = serialize.loads_instance(_read(args.file))
    method = _pick_method(args, instance)
    result = _solve(args.problem, method, instance, args.budget)
    lam = args.lam if args.lam is not None else instance.m
    print("problem: %s" % args.problem)
    print("method: %s" % method)
    print("best value: %d" % result.best_value)
    if isinstance(result.witness, DelegationGraph):
        print("witness: delegations %s" % _delegation_map(result.witness))
    elif args.problem == "eap":
        print("witness: educate agents %s" % _agent_set(result.witness))
    else:
        print("witness: remove agents %s" % _agent_set(result.witness))
    verdict = "yes" if result.best_value >= lam else "no"
    print("decision: %s (best %d, lambda %d)" % (verdict, result.best_value, lam))
    return 0 if verdict == "yes" else 1


def _two_path_partition(graph):
    """A valid edge partition for a small non-cubic graph, by search."""
    edges = list(graph.edges)
    if len(edges) > 16:
        raise ValueError("direct partition search is limited to 16 edges")
    for part1 in combinations(edges, len(edges) // 2):
        part2 = frozenset(edges) - frozenset(part1)
        try:
            return reductions.TwoPathColoredGraph(graph, frozenset(part1), part2)
        except ValueError:
            continue
    raise ValueError("graph admits no two-path edge partition")


def cmd_generate(args):
    if args.kind == "random":
        if args.n is None or args.m is None:
            raise ValueError("random generation requires --n and --m")
        domain = DomainClass(args.domain)
        instance = reductions.gen_random(
            args.n, args.m, domain, args.uncertainty, args.seed
        )
        metadata = {
            "generator": "random",
            "domain": domain.value,
            "n": args.n,
            "m": args.m,
            "uncertainty": args.uncertainty,
            "seed": args.seed,
        }
        _write(args.out, serialize.dumps_instance(instance, metadata))
        return 0
    if args.graph is None or args.kappa is None:
        raise ValueError("reduction generation requires --graph and --kappa")
    graph = serialize.parse_graph(_read(args.graph))
    metadata = {
        "generator": args.kind,
        "graph_vertices": graph.vertex_count,
        "graph_edges": [list(e) for e in graph.edges],
        "kappa": args.kappa,
    }
    if args.kind == "cld-reduction":
        instance, lam = reductions.reduce_vccg_to_cld(graph, args.kappa)
        metadata["lambda"] = lam
    else:
        if graph.is_cubic():
            colored, kappa = reductions.to_2path_colored(graph, args.kappa)
            metadata["expanded_kappa"] = kappa
        else:
            colored, kappa = _two_path_partition(graph), args.kappa
        metadata["part1"] = sorted(list(e) for e in colored.part1)
        if args.kind == "eap-reduction":
            instance, budget, lam = reductions.reduce_vc2pc_to_eap(colored, kappa)
        else:
            instance, budget, lam = reductions.reduce_vc2pc_to_dap(colored, kappa)
        metadata["budget"] = budget
        metadata["lambda"] = lam
    _write(args.out, serialize.dumps_instance(instance, metadata))
    return 0


def cmd_export_lp(args):
    instance, _ = serialize.loads_instance(_read(args.file))
    if args.problem in ("eap", "dap") and args.budget is None:
        raise ValueError("problem %r requires --budget" % args.problem)
    if args.problem == "eap":
        program, offset = ilp.build_eap_ip(instance, args.budget)
    elif args.problem == "dap":
        program, offset = ilp.build_dap_ip(instance, args.budget)
    else:
        program, offset = ilp.build_cld_ip(instance)
    text = "\\ offset: %d\n" % offset + ilp.export_lp(program)
    _write(args.out, text)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="safevote",
        description="Safe-zone and intervention solvers for majority "
        "voting under uncertain preferences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse an instance and report on it")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="solve an intervention problem")
    p.add_argument("problem", choices=("eap", "dap", "cld"))
    p.add_argument("file")
    p.add_argument(
        "--method",
        choices=("exact", "fpt-m", "radical", "auto"),
        default="auto",
    )
    p.add_argument("--budget", type=int)
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--fpt-cap", type=int, default=12)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="generate an instance")
    p.add_argument(
        "kind",
        choices=("random", "eap-reduction", "dap-reduction", "cld-reduction"),
    )
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument(
        "--domain",
        choices=tuple(d.value for d in DomainClass),
        default=DomainClass.GENERAL.value,
    )
    p.add_argument("--uncertainty", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--graph")
    p.add_argument("--kappa", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("export-lp", help="write a problem as LP-format text")
    p.add_argument("problem", choices=("eap", "dap", "cld"))
    p.add_argument("file")
    p.add_argument("--budget", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_lp)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def run():
    sys.exit(main())
