"""Command line front end.

Every command prints one JSON document (or text, or DOT for Hasse diagrams)
and exits with 0 on success, 2 on malformed input or a domain error, and 3
when a resource cap is hit.  Weights are written in the weight grammar, for
example ``w[1]-2*e[-1,1]``; values starting with ``-`` must be attached
with ``=`` (``--mu=-e[1,1]``) so that they are not taken for options.
"""
import argparse
import itertools
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__, kl, olamult, oracle, order, partitions, symalg
from .errors import DomainError, ResourceLimitError
from .weights import EligibleWeight, block_class, dominance_geq, parse_weight, psi, render_weight

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class JobConfig:
    n: int = 1
    rank: int = None
    format: str = "json"
    kl_bound: int = kl.DEFAULT_KL_BOUND
    bfs_depth: int = 64
    height_budget: int = 12

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("--n must be at least 1")
        for name in ("kl_bound", "bfs_depth", "height_budget"):
            if getattr(self, name) < 1:
                raise DomainError(f"--{name.replace('_', '-')} must be positive")
        if self.rank is not None and self.rank < 0:
            raise DomainError("--rank must be nonnegative")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise DomainError(message)


# ----------------------------------------------------------------------
# input helpers

def _weight(text, cfg):
    return parse_weight(text, cfg.n)


def _perm(text):
    s = text.strip().strip("[]()")
    parts = s.split(",") if "," in s else list(s)
    try:
        return kl.check_perm(int(a) for a in parts if a.strip())
    except ValueError:
        raise DomainError(f"bad permutation {text!r}") from None


def _partition_tuple(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"bad partition tuple {text!r}: {exc.msg}") from None
    if not isinstance(data, list):
        raise DomainError(f"bad partition tuple {text!r}")
    if all(isinstance(a, int) for a in data):
        data = [data]
    if not all(isinstance(a, list) for a in data):
        raise DomainError(f"bad partition tuple {text!r}")
    return olamult.PartitionTuple(data)


def _pt_json(pt):
    return [list(p) for p in pt]


def _check_height(lam, mu, cfg):
    d = psi(lam) - psi(mu)
    if d > cfg.height_budget:
        raise ResourceLimitError("height budget", d, cfg.height_budget)


def _dot_text(nodes, edges):
    lines = ["digraph interval {"]
    for w in sorted(render_weight(v) for v in nodes):
        lines.append(f'  "{w}";')
    for e in sorted(edges, key=lambda e: (render_weight(e.lower), render_weight(e.upper))):
        lines.append(f'  "{render_weight(e.lower)}" -> "{render_weight(e.upper)}" [label="{e.kind}"];')
    lines.append("}")
    return "\n".join(lines)


# ----------------------------------------------------------------------
# commands: each returns (rank_used, stabilized, result)

def cmd_mult(args, cfg):
    lam, mu = _weight(args.lam, cfg), _weight(args.mu, cfg)
    if args.kind == "standard":
        _check_height(lam, mu, cfg)
        r = olamult.auto_rank(lam, mu, rank=cfg.rank)
        value = olamult.standard_simple_multiplicity(lam, mu, rank=r, bound=cfg.kl_bound)
        again = olamult.standard_simple_multiplicity(lam, mu, rank=r + 1, bound=cfg.kl_bound)
        return r, value == again, {"multiplicity": value}
    if args.kind == "verma":
        stable = kl.stable_rank(lam, mu)
        r = stable if cfg.rank is None else cfg.rank
        value = kl.verma_multiplicity(lam, mu, rank=r, bound=cfg.kl_bound)
        return r, r >= stable, {"multiplicity": value}
    if cfg.rank is None:
        raise DomainError("mult parabolic needs --rank")
    value = olamult.parabolic_verma_multiplicity(lam, mu, cfg.rank, bound=cfg.kl_bound)
    return cfg.rank, True, {"multiplicity": value, "covered": value is not None}


def _layers_json(layers):
    return [{"weight": render_weight(x.weight), "multiplicity": x.multiplicity,
             "psi_degree": str(x.psi_degree)} for x in layers]


def cmd_flag(args, cfg):
    lam = _weight(args.lam, cfg)
    if args.kind == "injective":
        table = olamult.injective_standard_flag(lam, bound=cfg.kl_bound)
        entries = sorted(({"weight": render_weight(w), "multiplicity": m} for w, m in table.entries.items()),
                         key=lambda e: e["weight"])
        return table.rank_used, table.stabilized, {"entries": entries}
    if args.degree is None:
        raise DomainError("flag psi needs --degree")
    try:
        p = Fraction(args.degree)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"bad degree {args.degree!r}") from None
    if psi(lam) - p > cfg.height_budget:
        raise ResourceLimitError("height budget", psi(lam) - p, cfg.height_budget)
    r = olamult.auto_rank(lam, rank=cfg.rank)
    layers = olamult.standard_psi_layer(lam, p, r)
    bigger = [x for x in olamult.standard_psi_layer(lam, p, r + 1) if x.weight.is_eligible(r)]
    return r, _layers_json(layers) == _layers_json(bigger), {"layers": _layers_json(layers)}


def _pairs_json(table):
    out = [{"lambda": _pt_json(a), "mu": _pt_json(b), "multiplicity": c} for (a, b), c in table.items()]
    return sorted(out, key=lambda e: json.dumps([e["lambda"], e["mu"]]))


def cmd_socle(args, cfg):
    lam, mu = _partition_tuple(args.lam), _partition_tuple(args.mu)
    cfg.n = len(lam)
    layers = olamult.socle_layers_tensor_injective(lam, mu)
    return None, True, {"layers": [{"index": i, "entries": _pairs_json(t)} for i, t in layers]}


def cmd_ladual(args, cfg):
    lam, mu = _partition_tuple(args.lam), _partition_tuple(args.mu)
    cfg.n = len(lam)
    return None, True, {"entries": _pairs_json(olamult.la_dual_decomposition(lam, mu))}


def cmd_order(args, cfg):
    low, up = _weight(args.lower, cfg), _weight(args.upper, cfg)
    r = max(low.eligibility_rank, up.eligibility_rank) if cfg.rank is None else cfg.rank
    if r < max(low.eligibility_rank, up.eligibility_rank):
        raise DomainError(f"rank {r} is below the eligibility ranks of the inputs")
    if args.kind == "check":
        value = order.leq_order(low, up, rank=r, max_depth=cfg.bfs_depth)
        return r, True, {"leq": value, "leq_direct": order.leq_order_direct(low, up)}
    nodes, edges = order.interval_graph(low, up, rank=r, max_depth=cfg.bfs_depth)
    if args.kind == "interval":
        longest = order.longest_chain(low, up, rank=r, max_depth=cfg.bfs_depth) if nodes else None
        return r, True, {"elements": sorted(render_weight(v) for v in nodes),
                         "chain_bound": order.chain_bound(low, up, rank=r) if nodes else None,
                         "longest_chain": longest}
    cover = order.hasse_edges(low, up, rank=r, max_depth=cfg.bfs_depth)
    if args.dot:
        cfg.format = "dot"
    if cfg.format == "dot":
        return r, True, _dot_text(nodes, cover)
    return r, True, {"nodes": sorted(render_weight(v) for v in nodes),
                     "edges": sorted(({"lower": render_weight(e.lower), "upper": render_weight(e.upper),
                                       "kind": e.kind} for e in cover),
                                     key=lambda e: (e["lower"], e["upper"]))}


def cmd_block(args, cfg):
    level, total = block_class(_weight(args.weight, cfg))
    return None, True, {"level": list(level), "finite_sum": total}


def cmd_kl(args, cfg):
    x, w = _perm(args.x), _perm(args.w)
    p = kl.kl_polynomial(x, w, bound=cfg.kl_bound)
    return None, True, {"polynomial": str(p), "coefficients": list(p.coeffs), "value_at_1": p(1)}


def cmd_lr(args, cfg):
    lam, mu, nu = (partitions.Partition.parse(t) for t in (args.lam, args.mu, args.nu))
    return None, True, {"coefficient": partitions.lr_coefficient(lam, mu, nu)}


def run_certification(quick=False, seed=0):
    """Compare every fast routine with its oracle on the shared domain."""
    rng = random.Random(seed)
    suites = {}

    top = 4 if quick else 6
    checked = bad = 0
    for size in range(top + 1):
        for nu in partitions.partitions_of(size):
            for a in range(size + 1):
                for lam in partitions.partitions_of(a):
                    for mu in partitions.partitions_of(size - a):
                        checked += 1
                        bad += partitions.lr_coefficient(lam, mu, nu) != oracle.naive_lr(lam, mu, nu)
    suites["lr"] = {"checked": checked, "mismatches": bad}

    checked = bad = 0
    for m in (3, 4):
        perms = list(itertools.permutations(range(1, m + 1)))
        for x in perms:
            for w in perms:
                checked += 1
                bad += kl.kl_polynomial(x, w) != oracle.naive_kl(x, w)
    s5 = list(itertools.permutations(range(1, 6)))
    for _ in range(20 if quick else 200):
        x, w = rng.choice(s5), rng.choice(s5)
        checked += 1
        bad += kl.kl_polynomial(x, w) != oracle.naive_kl(x, w)
    suites["kl"] = {"checked": checked, "mismatches": bad}

    checked = bad = 0
    for n in (1, 2):
        for r in (1, 2) if quick else (1, 2, 3):
            top_deg = 2 if quick else 3
            if n == 2 and r == 3 and not quick:
                top_deg = 2
            table = oracle.naive_sym_table(n, r, top_deg)
            for key, count in table.items():
                nu = EligibleWeight.make(n, None, list(key))
                checked += 1
                bad += symalg.sym_weight_mult(nu, r) != count
    suites["symalg"] = {"checked": checked, "mismatches": bad}

    checked = bad = held = 0
    for _ in range(50 if quick else 300):
        n = rng.choice([1, 2])
        fin = {}
        for _ in range(3):
            p = (rng.choice([1, -1]) * rng.randint(1, 2), rng.randint(1, n))
            fin[p] = fin.get(p, 0) + rng.randint(-1, 1)
        a = EligibleWeight.make(n, None, fin)
        # b differs from a by a few roots of either sign, so both answers occur
        pts = [(i, k) for k in range(1, n + 1) for i in (1, 2, -2, -1)]
        shift = {}
        for _ in range(rng.randint(1, 3)):
            p, q = rng.sample(pts, 2)
            shift[p] = shift.get(p, 0) + 1
            shift[q] = shift.get(q, 0) - 1
        b = a + EligibleWeight.make(n, None, shift)
        if sum(v for _, v in (a - b).finite if v > 0) > oracle.HEIGHT_CAP:
            continue
        checked += 1
        fast = dominance_geq(a, b)
        held += fast
        bad += fast != oracle.naive_dominance(a, b)
    suites["dominance"] = {"checked": checked, "mismatches": bad, "held": held}
    return suites


def cmd_certify(args, cfg):
    suites = run_certification(quick=args.quick, seed=args.seed)
    ok = all(s["mismatches"] == 0 for s in suites.values())
    return None, True, {"suites": suites, "all_agree": ok}


# ----------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=1, help="number of blocks (default 1)")
    common.add_argument("--rank", type=int, default=None, help="truncation rank override")
    common.add_argument("--format", choices=["json", "text", "dot"], default="json")
    common.add_argument("--kl-bound", type=int, default=kl.DEFAULT_KL_BOUND,
                        help="largest symmetric group for KL polynomials")
    common.add_argument("--bfs-depth", type=int, default=64, help="depth cap for order searches")
    common.add_argument("--height-budget", type=int, default=12,
                        help="largest psi-degree gap for standard module computations")

    parser = _Parser(prog="olacat", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mult", parents=[common], help="multiplicities of simples")
    p.add_argument("kind", choices=["standard", "verma", "parabolic"])
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("flag", parents=[common], help="injective and psi filtrations")
    p.add_argument("kind", choices=["injective", "psi"])
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--degree", default=None, help="psi degree, e.g. -1 or 1/2")
    p.set_defaults(func=cmd_flag)

    for name, func in (("socle", cmd_socle), ("ladual", cmd_ladual)):
        p = sub.add_parser(name, parents=[common], help=f"{name} table of a tensor injective")
        p.add_argument("--lambda", dest="lam", required=True, help="partition tuple, e.g. [[1],[2,1]]")
        p.add_argument("--mu", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("order", parents=[common], help="the interval-finite order")
    p.add_argument("kind", choices=["check", "interval", "hasse"])
    p.add_argument("--lower", required=True)
    p.add_argument("--upper", required=True)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("block", parents=[common], help="block tag of a weight")
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_block)

    p = sub.add_parser("kl", parents=[common], help="Kazhdan-Lusztig polynomial")
    p.add_argument("--x", required=True)
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("certify", parents=[common], help="compare fast code with the oracles")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_certify)
    return parser


def _query(args):
    skip = {"func", "format", "kl_bound", "bfs_depth", "height_budget"}
    q = {k: v for k, v in vars(args).items() if k not in skip and v is not None and v is not False}
    if "lam" in q:
        q["lambda"] = q.pop("lam")
    return q


def _text(value, indent=""):
    if isinstance(value, dict):
        lines = []
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.append(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {json.dumps(v)}")
        return "\n".join(x for x in lines if x)
    if isinstance(value, list):
        items = []
        for v in value:
            if isinstance(v, (dict, list)) and v:
                # nested block under a bullet: the first line carries the dash
                block = _text(v, indent + "  ")
                items.append(indent + "- " + block[len(indent) + 2:])
            else:
                items.append(f"{indent}- {json.dumps(v)}")
        return "\n".join(items)
    return f"{indent}{value}"


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = JobConfig(n=args.n, rank=args.rank, format=args.format, kl_bound=args.kl_bound,
                        bfs_depth=args.bfs_depth, height_budget=args.height_budget)
        rank_used, stabilized, result = args.func(args, cfg)
    except SystemExit as exc:  # --help and --version
        return exc.code or 0
    except ResourceLimitError as exc:
        print(f"olacat: resource limit: {exc}", file=err)
        return EXIT_RESOURCE
    except DomainError as exc:
        print(f"olacat: error: {exc}", file=err)
        return EXIT_INPUT
    if isinstance(result, str):
        print(result, file=out)
    else:
        doc = {"query": _query(args), "n": cfg.n, "rank_used": rank_used,
               "stabilized": stabilized, "result": result}
        if cfg.format == "text":
            print(_text(doc), file=out)
        else:
            print(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False), file=out)
    if args.command == "certify" and not result["all_agree"]:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
