"""Command-line front end.

Output is compact JSON with keys in a fixed order, so reruns are byte-identical.
Exit codes: 0 success, 1 failed check, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import __version__
from .errors import DomainError
from .fockrep import (
    BFIX,
    FAMILIES,
    JACK,
    SCHUR,
    FockVec,
    OperatorId,
    act,
    h_eigen_factors,
    h_series,
    h_r_eigenvalue,
)
from .gzmodel import (
    lemma_product_closed,
    nt_A_eigenvalue,
    nt_matrix_elements,
    partition_to_gz,
    reduce_factor_pairs,
    same_rational_function,
    uglov_A_eigenvalue_ratio,
)
from .partitions import Partition, epsilon_sign
from .quiverloc import (
    b_normalization,
    bprime_normalization,
    corrected_b_normalization,
    euler_class,
    fixed_point_column,
    h_form,
    tangent_weights,
    vv_weight_identities,
)
from .relcheck import SUITES, run_suite
from .symfun import POWER, convert, jack_glN, jack_norm_formula, jack_norm_gram_schmidt

BASIS_ALIASES = {
    "s": SCHUR, "schur": SCHUR,
    "P": JACK, "p": JACK, "jack": JACK,
    "b": BFIX, "bfix": BFIX,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj, text=False, out=None):
    out = out or sys.stdout
    if text:
        out.write(_render(obj) + "\n")
    else:
        out.write(json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n")


def _render(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        lines = []
        for v in obj:
            if isinstance(v, dict):
                lines.append(f"{pad}-")
                lines.append(_render(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
        return "\n".join(lines)
    return pad + _scalar(obj)


def _scalar(v):
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return str(v)


def parse_partition(text) -> Partition:
    return Partition.parse(text)


def _cell(c):
    return [c[0], c[1]]


def _pairs(pairs):
    return [[str(a), str(b)] for a, b in pairs]


def _roots(pairs):
    """Reduced numerator and denominator roots of prod (u - a)/(u - b), sorted by string."""
    num, den = reduce_factor_pairs(pairs)
    flat = lambda c: sorted(str(x) for x in c.elements())  # noqa: E731
    return {"numerator": flat(num), "denominator": flat(den)}


# -- verbs ------------------------------------------------------------------------


def cmd_jack(args):
    lam = parse_partition(args.lam)
    f = jack_glN(lam, args.N)
    if args.basis == "power":
        f = convert(f, POWER)
    elif args.basis not in ("schur", "s"):
        raise DomainError(f"jack output basis must be schur or power, got {args.basis!r}")
    return {"N": args.N, "lambda": str(lam), **f.to_json()}, 0


def cmd_norm(args):
    lam = parse_partition(args.lam)
    out = {"N": args.N, "lambda": str(lam)}
    if args.method in ("formula", "both"):
        out["formula"] = str(jack_norm_formula(lam, args.N))
    if args.method in ("gram-schmidt", "both"):
        out["gram_schmidt"] = str(jack_norm_gram_schmidt(lam, args.N))
    if args.method == "both":
        out["agree"] = out["formula"] == out["gram_schmidt"]
    return out, 0


def cmd_act(args):
    lam = parse_partition(args.lam)
    basis = BASIS_ALIASES.get(args.basis)
    if basis is None:
        raise DomainError(f"unknown basis {args.basis!r}")
    op = OperatorId(args.gen, args.i, args.r)
    w = act(op, FockVec.basis_vector(basis, lam), args.N)
    return {"N": args.N, "operator": str(op), "input": str(lam), **w.to_json()}, 0


def cmd_expand_h(args):
    lam = parse_partition(args.lam)
    if args.gen not in ("h", "H"):
        raise DomainError("expand-h needs --gen h or --gen H")
    factors = h_eigen_factors(args.gen, args.i, lam, args.N)
    series = h_series(args.gen, args.i, lam, args.N, args.order)
    return {
        "N": args.N,
        "series": f"{args.gen}_{args.i}(u)",
        "lambda": str(lam),
        "factors": _pairs(factors),
        "coefficients": [str(series.coeff(k)) for k in range(args.order + 1)],
        "eigenvalues": [str(h_r_eigenvalue(args.gen, args.i, r, lam, args.N)) for r in range(args.order)],
    }, 0


def cmd_gz(args):
    lam = parse_partition(args.lam)
    N = args.N
    out = {"N": N, "lambda": str(lam)}
    if args.op == "scheme":
        mseq, scheme = partition_to_gz(lam, N)
        out["m"] = mseq.to_json()
        out["scheme"] = scheme.to_json()
    elif args.op == "matrix-elements":
        out["i"] = args.i
        rows = []
        for cell, (E, F) in sorted(nt_matrix_elements(lam, args.i, N).items()):
            rows.append({
                "cell": _cell(cell),
                "mu": str(lam.remove_cell(cell)),
                "E": str(E),
                "F": str(F),
                "EF": str(E * F),
                "lemma_product": str(lemma_product_closed(lam, args.i, cell, N)),
            })
        out["elements"] = rows
    elif args.op == "a-eigen":
        mseq, scheme = partition_to_gz(lam, N)
        nt = nt_A_eigenvalue(scheme, args.i, N)
        ug = uglov_A_eigenvalue_ratio(lam, args.i, N)
        out["i"] = args.i
        out["gz"] = _roots(nt)
        out["jack"] = _roots(ug)
        out["agree"] = same_rational_function(nt, ug)
    return out, 0


def cmd_quiver(args):
    lam = parse_partition(args.lam)
    N = args.N
    out = {"N": N, "lambda": str(lam)}
    if args.op == "tangent":
        w = tangent_weights(lam, N)
        out["weights"] = [list(x) for x in w]
        out["euler_class"] = str(euler_class(Counter(w)))
    elif args.op == "form":
        out["form"] = str(h_form(lam, lam, N))
    elif args.op == "normalization":
        out["epsilon"] = epsilon_sign(lam, N)
        out["b_prime"] = str(bprime_normalization(lam, N))
        out["b"] = str(b_normalization(lam, N))
        out["b_corrected"] = str(corrected_b_normalization(lam, N))
    elif args.op == "vv-check":
        out["identities"] = [
            {"i": i, "holds": vv_weight_identities(lam, i, N)} for i in range(N)
        ]
    elif args.op == "action":
        if args.gen not in ("x+", "x-"):
            raise DomainError("quiver action needs --gen x+ or x-")
        col = fixed_point_column(args.gen, args.i, args.r, lam, N)
        out["operator"] = str(OperatorId(args.gen, args.i, args.r))
        out["basis"] = "fixed"
        out["terms"] = [{"partition": str(mu), "coeff": str(c)} for mu, c in col]
    return out, 0


def cmd_check(args):
    reports = run_suite(args.suite, args.N, args.max_degree, args.rmax, args.jobs)
    failed = 0
    for rep in reports:
        failed += not rep.passed
        _emit(rep.to_json(), args.text)
    summary = {
        "suite": args.suite, "N": args.N, "max_degree": args.max_degree, "rmax": args.rmax,
        "instances": len(reports), "failed": failed, "passed": failed == 0,
    }
    return summary, (1 if failed else 0)


# -- parser -----------------------------------------------------------------------


def build_parser():
    p = _Parser(prog="yfock", description="Exact computations on the level-one Fock space.")
    p.add_argument("--version", action="version",
                   version=f"yfock {__version__} (variables: e1, e2)")
    sub = p.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    sub.required = True

    def verb(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--N", type=int, required=True)
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="text", action="store_false", default=False)
        fmt.add_argument("--text", dest="text", action="store_true")
        sp.set_defaults(func=func)
        return sp

    def lam_arg(sp, required=True):
        sp.add_argument("--lambda", dest="lam", required=required, default="",
                        help="comma-separated parts; empty for the empty partition")

    sp = verb("jack", cmd_jack, "Jack(gl_N) function in the Schur or power-sum basis")
    lam_arg(sp)
    sp.add_argument("--basis", default="schur", help="schur (default) or power")

    sp = verb("norm", cmd_norm, "norm of a Jack(gl_N) function")
    lam_arg(sp)
    sp.add_argument("--method", choices=("formula", "gram-schmidt", "both"), default="both")

    sp = verb("act", cmd_act, "apply a generator to a basis vector")
    lam_arg(sp)
    sp.add_argument("--gen", choices=FAMILIES, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--r", type=int, default=0)
    sp.add_argument("--basis", default="b", help="s/schur, P/jack or b/bfix")

    sp = verb("expand-h", cmd_expand_h, "spectral series of h_i(u) or H_i(u) on a basis vector")
    lam_arg(sp)
    sp.add_argument("--gen", choices=("h", "H"), default="h")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--order", type=int, default=3)

    sp = verb("gz", cmd_gz, "Gelfand-Zetlin data of a partition")
    lam_arg(sp)
    sp.add_argument("--i", type=int, default=1)
    sp.add_argument("--op", choices=("matrix-elements", "a-eigen", "scheme"), required=True)

    sp = verb("quiver", cmd_quiver, "fixed-point data of the cyclic quiver variety")
    lam_arg(sp)
    sp.add_argument("--op", choices=("tangent", "form", "normalization", "vv-check", "action"),
                    required=True)
    sp.add_argument("--gen", choices=("x+", "x-"), default="x-")
    sp.add_argument("--i", type=int, default=0)
    sp.add_argument("--r", type=int, default=0)

    sp = verb("check", cmd_check, "run a relation suite")
    sp.add_argument("--suite", choices=SUITES, default="all")
    sp.add_argument("--max-degree", type=int, default=6)
    sp.add_argument("--rmax", type=int, default=2)
    sp.add_argument("--jobs", type=int, default=1)
    return p


def _error(kind, message, code):
    line = json.dumps({"error": kind, "message": " ".join(str(message).split())},
                      separators=(",", ":"))
    sys.stderr.write(line + "\n")
    return code


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _error("usage", exc, 2)
    try:
        obj, code = args.func(args)
    except DomainError as exc:
        return _error("domain", exc, 3)
    except (ValueError, ArithmeticError) as exc:
        return _error("domain", exc, 3)
    _emit(obj, args.text)
    return code


if __name__ == "__main__":
    sys.exit(main())
