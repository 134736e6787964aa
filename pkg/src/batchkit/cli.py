"""Command-line front end and code-file serialization.

Code file format (whitespace-separated, 1-based column indices)::

    q n N M t        <- header
    <M bucket lines> <- column indices of each bucket, in order
    <n matrix rows>  <- digits in [0, q-1]

Exit statuses: 0 = success/holds/feasible, 1 = fails/infeasible/violated,
2 = usage or parse error.  ``--format machine`` emits line-oriented
``key=value`` records with a stable field order.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional

from .batchcode import (
    LinearBatchCode,
    QueryPlan,
    VerifyCapExceeded,
    certify_max_m,
    plan_request,
    verify_batch,
)
from .bounds import check_asymptotic_bounds, check_finite_bounds, max_m_by_finite_bounds
from .constructions import compose, concat_codes, direct_sum, extend_one, subcube_code
from .field import PrimeField
from .linalg import MatrixFq, VectorFq, min_distance
from .simharness import simulate, workload_stats


class CodeFileError(ValueError):
    """Malformed code file; message carries a line diagnostic."""


def parse_code_file(text: str) -> LinearBatchCode:
    """Parse the code file format into a LinearBatchCode."""
    lines = text.splitlines()

    def fail(lineno: int, msg: str):
        raise CodeFileError(f"line {lineno}: {msg}")

    def ints(lineno: int, line: str) -> list[int]:
        try:
            return [int(tok) for tok in line.split()]
        except ValueError:
            fail(lineno, f"expected whitespace-separated integers, got {line!r}")

    if not lines or not lines[0].split():
        raise CodeFileError("line 1: missing header 'q n N M t'")
    header = ints(1, lines[0])
    if len(header) != 5:
        fail(1, f"header must be 'q n N M t' (5 integers), got {len(header)}")
    q, n, N, M, t = header
    try:
        field = PrimeField(q)
    except ValueError as e:
        fail(1, str(e))
    if len(lines) < 1 + M + n:
        raise CodeFileError(
            f"line {len(lines)}: expected {1 + M + n} lines ({M} buckets + {n} rows), got {len(lines)}"
        )

    buckets = []
    for b in range(M):
        lineno = 2 + b
        cols = ints(lineno, lines[lineno - 1])
        if not cols:
            fail(lineno, "empty bucket line")
        for c in cols:
            if not 1 <= c <= N:
                fail(lineno, f"column index {c} out of range [1, {N}]")
        buckets.append(tuple(c - 1 for c in cols))

    rows = []
    for r in range(n):
        lineno = 2 + M + r
        row = ints(lineno, lines[lineno - 1])
        if len(row) != N:
            fail(lineno, f"expected {N} entries in matrix row, got {len(row)}")
        for c, v in enumerate(row):
            if not 0 <= v < q:
                fail(lineno, f"column {c + 1}: entry {v} out of range [0, {q - 1}]")
        rows.append(row)

    for extra in range(2 + M + n, len(lines) + 1):
        if extra <= len(lines) and lines[extra - 1].split():
            fail(extra, "unexpected trailing content")

    try:
        return LinearBatchCode(MatrixFq(field, rows), buckets, t=t)
    except ValueError as e:
        raise CodeFileError(str(e)) from e


def serialize_code(code: LinearBatchCode) -> str:
    """Render a code in the canonical file format (parse round-trips)."""
    out = [f"{code.q} {code.n} {code.N} {code.M} {code.t}"]
    for bucket in code.buckets:
        out.append(" ".join(str(c + 1) for c in bucket))
    for row in code.matrix.entries:
        out.append(" ".join(str(int(v)) for v in row))
    return "\n".join(out) + "\n"


def load_code(path: str) -> LinearBatchCode:
    with open(path, "r", encoding="ascii") as fh:
        return parse_code_file(fh.read())


_BUILDERS = ("concat", "dsum", "extend", "compose", "subcube")


def parse_construct_expr(expr: str) -> LinearBatchCode:
    """Evaluate a construction expression.

    Grammar: ``concat(a, b)``, ``dsum(a, b)``, ``extend(a, 010)``,
    ``compose(a, b)``, ``subcube(n, t[, q])``; leaves are code file paths.
    The second argument of ``extend`` is one digit per column of the input
    (the arbitrary bottom-left block).
    """
    expr = expr.strip()
    m = re.fullmatch(r"(\w+)\((.*)\)", expr, flags=re.S)
    if not (m and m.group(1) in _BUILDERS):
        return load_code(expr)
    name, body = m.group(1), m.group(2)
    args = _split_args(body)
    if name == "subcube":
        if len(args) not in (2, 3):
            raise ValueError("subcube takes (n, t) or (n, t, q)")
        return subcube_code(*(int(a) for a in args))
    if name == "extend":
        if len(args) != 2:
            raise ValueError("extend takes (code, bottom-left digits)")
        code = parse_construct_expr(args[0])
        digits = args[1].strip()
        if not digits.isdigit():
            raise ValueError(f"bottom-left block must be a digit string, got {digits!r}")
        return extend_one(code, VectorFq(code.field, [int(d) for d in digits]))
    if len(args) != 2:
        raise ValueError(f"{name} takes exactly two code arguments")
    a, b = (parse_construct_expr(arg) for arg in args)
    return {"concat": concat_codes, "dsum": direct_sum, "compose": compose}[name](a, b)


def _split_args(body: str) -> list[str]:
    args, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            args.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if cur or args:
        args.append("".join(cur).strip())
    return [a for a in args if a]


# --- rendering helpers -----------------------------------------------------


def _csv(values) -> str:
    return ",".join(str(int(v)) for v in values)


def _equation(rs, q: int) -> str:
    terms = []
    for c, a in zip(rs.support, rs.coeffs):
        terms.append(f"y{c + 1}" if a == 1 else f"{a}*y{c + 1}")
    return f"x{rs.item + 1} = " + " + ".join(terms)


def _plan_lines(plan: QueryPlan, q: int, fmt: str) -> list[str]:
    lines = []
    if fmt == "machine":
        lines.append("verdict=feasible")
        lines.append(f"request={_csv(i + 1 for i in plan.request)}")
        for k, rs in enumerate(plan.sets, start=1):
            lines.append(f"set{k}.item={rs.item + 1}")
            lines.append(f"set{k}.cols={_csv(c + 1 for c in rs.support)}")
            lines.append(f"set{k}.coeffs={_csv(rs.coeffs)}")
    else:
        lines.append("feasible")
        for rs in plan.sets:
            lines.append(_equation(rs, q))
    return lines


def _bound_lines(report, fmt: str) -> list[str]:
    lines = []
    for c in report.checks:
        key = c.name.replace("-", "_")
        if fmt == "machine":
            lines.append(f"{key}.outcome={c.outcome}")
            if c.rhs is not None:
                lines.append(f"{key}.lhs={_num(c.lhs)}")
                lines.append(f"{key}.rhs={_num(c.rhs)}")
                lines.append(f"{key}.slack={_num(c.slack)}")
        else:
            if c.rhs is None:
                lines.append(f"{c.name}: {c.outcome}")
            else:
                lines.append(
                    f"{c.name}: {c.outcome} (lhs {_num(c.lhs)}, rhs {_num(c.rhs)}, slack {_num(c.slack)})"
                )
    return lines


def _num(v) -> str:
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def _parse_indices(text: str, what: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"{what} must be a comma-separated integer list, got {text!r}")
    return values


# --- subcommand handlers ---------------------------------------------------


def _cmd_verify(args) -> int:
    code = load_code(args.code)
    verdict = verify_batch(code, args.m, multiset=not args.distinct)
    if verdict.holds:
        print("verdict=holds" if args.format == "machine" else "holds")
        return 0
    witness = _csv(i + 1 for i in verdict.witness)
    if args.format == "machine":
        print("verdict=fails")
        print(f"witness={witness}")
    else:
        print(f"fails witness={witness}")
    return 1


def _request_from_arg(text: str, code: LinearBatchCode) -> list[int]:
    indices = _parse_indices(text, "--request")
    for i in indices:
        if not 1 <= i <= code.n:
            raise ValueError(f"request index {i} out of range [1, {code.n}]")
    return [i - 1 for i in indices]


def _cmd_plan(args) -> int:
    code = load_code(args.code)
    request = _request_from_arg(args.request, code)
    plan = plan_request(code, request, support_cap=args.cap)
    if plan is None:
        verdict = "infeasible-under-cap" if args.cap is not None else "infeasible"
        print(f"verdict={verdict}" if args.format == "machine" else verdict)
        return 1
    for line in _plan_lines(plan, code.q, args.format):
        print(line)
    return 0


def _cmd_encode(args) -> int:
    code = load_code(args.code)
    x = VectorFq(code.field, _parse_indices(args.x, "--x"))
    from .batchcode import encode

    y = encode(code, x)
    print(f"y={_csv(y.entries)}")
    return 0


def _cmd_distance(args) -> int:
    code = load_code(args.code)
    d = min_distance(code.matrix)
    print(f"distance={d}" if args.format == "machine" else f"minimum distance {d}")
    return 0


def _cmd_certify(args) -> int:
    code = load_code(args.code)
    m = certify_max_m(code, multiset=not args.distinct)
    print(f"max_m={m}")
    return 0


def _cmd_bounds(args) -> int:
    if args.m is None:
        m = max_m_by_finite_bounds(args.M, args.n)
        print(f"max_m={m}")
        return 0
    finite = check_finite_bounds(args.M, args.n, args.m)
    asym = check_asymptotic_bounds(args.M, args.n, args.m)
    for line in _bound_lines(finite, args.format) + _bound_lines(asym, args.format):
        print(line)
    return 0 if finite.finite_ok else 1


def _cmd_construct(args) -> int:
    code = parse_construct_expr(args.expr)
    text = serialize_code(code)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_simulate(args) -> int:
    code = load_code(args.code)
    if args.request is not None:
        import numpy as np

        request = _request_from_arg(args.request, code)
        if args.x is not None:
            x = VectorFq(code.field, _parse_indices(args.x, "--x"))
        else:
            rng = np.random.default_rng(args.seed)
            x = VectorFq(code.field, rng.integers(0, code.q, size=code.n))
        transcript = simulate(code, x, request)
        if transcript is None:
            print("verdict=infeasible" if args.format == "machine" else "infeasible")
            return 1
        if args.format == "machine":
            print("verdict=feasible")
            print(f"loads={_csv(transcript.per_server_load)}")
            print(f"wall_steps={transcript.wall_steps}")
            for item, value in transcript.reconstructed:
                print(f"x{item + 1}={value}")
        else:
            print("feasible")
            print(f"per-server loads: {_csv(transcript.per_server_load)}")
            for item, value in transcript.reconstructed:
                print(f"x{item + 1} = {value}")
        return 0
    if args.m is None or args.trials is None:
        raise ValueError("workload mode needs --m and --trials")
    summary = workload_stats(code, args.m, args.trials, args.seed)
    print(f"requests={summary.request_count}")
    print(f"feasible={summary.feasible_count}")
    print(f"max_load={summary.max_load}")
    print(f"seed={summary.seed}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="batchkit", description="Linear batch code toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **help_kwargs):
        p = sub.add_parser(name, **help_kwargs)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "machine"), default="text")
        return p

    p = add("verify", _cmd_verify, help="check the batch property for a given m")
    p.add_argument("--code", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--distinct", action="store_true", help="distinct-index requests only")

    p = add("plan", _cmd_plan, help="plan one batch request")
    p.add_argument("--code", required=True)
    p.add_argument("--request", required=True, help="comma-separated 1-based indices")
    p.add_argument("--cap", type=int, default=None, help="recovery-set support cap")

    p = add("encode", _cmd_encode, help="encode a database vector")
    p.add_argument("--code", required=True)
    p.add_argument("--x", required=True, help="comma-separated database entries")

    p = add("distance", _cmd_distance, help="exhaustive minimum distance of G")
    p.add_argument("--code", required=True)

    p = add("certify", _cmd_certify, help="largest m with the batch property")
    p.add_argument("--code", required=True)
    p.add_argument("--distinct", action="store_true")

    p = add("bounds", _cmd_bounds, help="classical binary parameter bounds")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="omit to sweep for the largest m")

    p = add("construct", _cmd_construct, help="build a code from an expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--out", default=None, help="output code file (default stdout)")

    p = add("simulate", _cmd_simulate, help="simulated multi-server retrieval")
    p.add_argument("--code", required=True)
    p.add_argument("--request", default=None, help="single-request mode")
    p.add_argument("--x", default=None, help="database entries (default: random)")
    p.add_argument("--m", type=int, default=None, help="workload request size")
    p.add_argument("--trials", type=int, default=None, help="workload trial count")
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (CodeFileError, FileNotFoundError, ValueError, VerifyCapExceeded, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
