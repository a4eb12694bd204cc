"""Command-line interface: ``z2z4 {analyze,construct,feasible,dual,verify}``.

Exit status is 0 on success, 1 on a domain error (infeasible request,
violated bound, failed check, size guard) and 2 on I/O or parse errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable, TextIO

from . import bounds, matfile
from .code import (
    AdditiveCode,
    TypeParams,
    codewords,
    dual,
    equal_as_sets,
    from_rows,
    infer_type,
    is_linear_image,
)
from .construct import construct_kernel, construct_pair, construct_rank, feasible
from .errors import (
    BoundViolation,
    CoverViolation,
    DegenerateCodeError,
    GuardExceeded,
    InfeasibleError,
    ParseError,
    Z2Z4Error,
)
from .guard import SizeGuard
from .invariants import bounds_check, kernel, kernel_coset_cover, kernel_via_chi, rank
from .oracle import brute_dual, brute_kernel, brute_span_dim
from .vector import BinaryVector, gray, gray_bits, order, twice_star

SCHEMA = 1


def _load_code(path: str) -> tuple[matfile.MatrixFile, AdditiveCode]:
    mf = matfile.load(path)
    return mf, from_rows(mf.alpha, mf.beta, mf.rows)


def _fmt_set(values) -> str:
    return "{" + ", ".join(map(str, values)) + "}"


def cmd_analyze(args: argparse.Namespace, out: TextIO) -> int:
    _, code = _load_code(args.path)
    p = infer_type(code)
    rk = rank(code)
    kr = kernel(code)
    ranks = bounds.rank_values(p)
    kernels = bounds.kernel_values(p)
    linear = is_linear_image(code)
    try:
        bounds_check(p, rk.rank, kr.ker_dim)
        verdict, failed = "PASS", None
    except BoundViolation as exc:
        verdict, failed = "FAIL", exc
    if args.json:
        doc = {
            "schema": SCHEMA,
            "type": {"alpha": p.alpha, "beta": p.beta, "gamma": p.gamma, "delta": p.delta, "kappa": p.kappa},
            "n": p.n,
            "rank": rk.rank,
            "r_bar": rk.r_bar,
            "kernel": kr.ker_dim,
            "k_bar": kr.k_bar,
            "s": p.s,
            "rank_range": [ranks[0], ranks[-1]],
            "kernel_values": kernels,
            "linear": linear,
            "bounds": verdict,
        }
        if failed is not None:
            doc["violated"] = failed.bound
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        lines = [
            ("type", str(p)),
            ("length", str(p.n)),
            ("rank", f"{rk.rank} (r_bar={rk.r_bar})"),
            ("kernel", f"{kr.ker_dim} (k_bar={kr.k_bar})"),
            ("s", str(p.s)),
            ("rank range", f"[{ranks[0]}, {ranks[-1]}]"),
            ("kernel values", _fmt_set(kernels)),
            ("linearity", "linear" if linear else "nonlinear"),
            ("bounds", verdict if failed is None else f"FAIL ({failed.bound}: {failed})"),
        ]
        for key, value in lines:
            out.write(f"{key:<14}{value}\n")
    return 0 if failed is None else 1


def _type_from_args(args: argparse.Namespace) -> TypeParams:
    return TypeParams(args.alpha, args.beta, args.gamma, args.delta, args.kappa).check()


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    p = _type_from_args(args)
    seed = args.seed if args.random_free else None
    expect = [("type", str(p))]
    if args.pair is not None:
        r, k = args.pair
        code = construct_pair(p, r, k, seed)
        expect += [("rank", str(r)), ("kernel", str(k))]
    elif args.rank is not None:
        r, k = args.rank, None
        code = construct_rank(p, r, seed)
        expect.append(("rank", str(r)))
    else:
        r, k = None, args.kernel
        code = construct_kernel(p, k, seed)
        expect.append(("kernel", str(k)))

    if args.verify:
        got = infer_type(code)
        if got != p:
            raise InfeasibleError(f"construction produced type {got}, wanted {p}", "self_check")
        if r is not None and rank(code).rank != r:
            raise InfeasibleError(f"construction measured rank {rank(code).rank}, wanted {r}", "self_check")
        if k is not None and kernel(code).ker_dim != k:
            raise InfeasibleError(
                f"construction measured kernel {kernel(code).ker_dim}, wanted {k}", "self_check"
            )

    mf = matfile.MatrixFile(p.alpha, p.beta, code.gen.rows, tuple(expect))
    text = matfile.serialize(mf)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def render_table(fs, fmt: str = "table") -> str:
    ranks = list(fs.ranks)
    rows = fs.table()
    if fmt == "csv":
        lines = ["k\\r," + ",".join(map(str, ranks))]
        lines += [f"{k}," + ",".join("*" if m else "" for m in marks) for k, marks in rows]
        return "\n".join(lines) + "\n"
    w = max(len(str(v)) for v in ranks + [k for k, _ in rows]) + 1
    head = "k \\ r".rjust(w + 1) + " |" + "".join(str(r).rjust(w) for r in ranks)
    lines = [head, "-" * (w + 2) + "+" + "-" * (w * len(ranks))]
    for k, marks in rows:
        cells = "".join(("*" if m else "").rjust(w) for m in marks)
        lines.append(f"{k:>{w + 1}} |{cells}".rstrip())
    return "\n".join(lines) + "\n"


def cmd_feasible(args: argparse.Namespace, out: TextIO) -> int:
    fs = feasible(_type_from_args(args))
    prefix = "# " if args.format == "csv" else ""
    out.write(f"{prefix}type {fs.params}, s={fs.params.s}\n")
    out.write(f"{prefix}ranks {_fmt_set(fs.ranks)}\n")
    out.write(f"{prefix}kernels {_fmt_set(fs.kernels)}\n")
    out.write(render_table(fs, args.format))
    return 0


def cmd_dual(args: argparse.Namespace, out: TextIO) -> int:
    _, code = _load_code(args.path)
    p = infer_type(code)
    d = dual(code)
    measured = infer_type(d) if d.log2_size else TypeParams(p.alpha, p.beta, 0, 0, 0)
    comments = [
        f"dual of a code of type {p}",
        f"measured type  {measured}",
        f"predicted type {p.dual()}",
    ]
    out.write(matfile.serialize(matfile.MatrixFile(p.alpha, p.beta, d.gen.rows), comments))
    return 0


class _Checks:
    def __init__(self, out: TextIO) -> None:
        self.out = out
        self.failed = 0

    def run(self, name: str, fn: Callable[[], str]) -> None:
        try:
            detail = fn()
            self.out.write(f"PASS {name}: {detail}\n")
        except (AssertionError, Z2Z4Error) as exc:
            self.failed += 1
            witness = getattr(exc, "witness", None)
            extra = f" [witness {witness}]" if witness is not None else ""
            self.out.write(f"FAIL {name}: {exc}{extra}\n")


class _CheckFailed(AssertionError):
    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message)
        self.witness = witness


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    mf, code = _load_code(args.path)
    guard = SizeGuard(args.max_codeword_bits, args.max_ambient_log2)
    p = infer_type(code)
    need = {}
    if p.log2_size > guard.max_codeword_bits:
        need["--max-codeword-bits"] = p.log2_size
    if p.n > guard.max_ambient_log2:
        need["--max-ambient-log2"] = p.n
    if need:
        req = " ".join(f"{k} {v}" for k, v in need.items())
        raise GuardExceeded(f"code of type {p} exceeds the size guard; rerun with {req}", need)

    rk = rank(code)
    kr = kernel(code)
    checks = _Checks(out)

    def independent() -> str:
        size = 0
        for i, row in enumerate(mf.rows):
            grown = from_rows(mf.alpha, mf.beta, mf.rows[: i + 1], allow_zero=True).log2_size
            step = {1: 0, 2: 1, 4: 2}[order(row)]
            if step == 0 or grown != size + step:
                raise _CheckFailed(f"row {i + 1} is redundant", matfile.format_row(row))
            size = grown
        return f"{len(mf.rows)} rows, 2^{size} codewords"

    def expectations() -> str:
        measured = {"type": str(p), "rank": str(rk.rank), "kernel": str(kr.ker_dim)}
        exp = mf.expectations
        for key, want in exp.items():
            if key not in measured:
                raise _CheckFailed(f"unknown expectation key {key!r}")
            if measured[key] != want:
                raise _CheckFailed(f"{key} is {measured[key]}, file expects {want}")
        return ", ".join(f"{k}={v}" for k, v in exp.items()) or "none declared"

    def rank_oracle() -> str:
        brute = brute_span_dim(code, guard)
        if brute != rk.rank:
            raise _CheckFailed(f"engine {rk.rank} != oracle {brute}")
        return f"rank {rk.rank}"

    def kernel_oracle() -> str:
        brute = brute_kernel(code, guard)
        engine = {gray(c) for c in codewords(kr.kernel_code, guard)}
        if brute != engine:
            raise _CheckFailed("kernel sets differ", next(iter(brute ^ engine)))
        return f"kernel dimension {kr.ker_dim}, {len(brute)} vectors"

    def chi_kernel() -> str:
        if not equal_as_sets(kernel_via_chi(code), kr.kernel_code):
            raise _CheckFailed("quaternary-embedding kernel differs from the direct kernel")
        return "kernels agree"

    def dual_oracle() -> str:
        d = dual(code)
        engine = set(codewords(d, guard))
        brute = brute_dual(code, guard)
        if engine != brute:
            raise _CheckFailed("dual sets differ", next(iter(engine ^ brute)))
        if d.log2_size and infer_type(d) != p.dual():
            raise _CheckFailed(f"dual type {infer_type(d)} != predicted {p.dual()}")
        if p.log2_size + d.log2_size != p.n:
            raise _CheckFailed("|C| * |C^perp| is not the ambient size")
        return f"{len(brute)} dual codewords, type {p.dual()}"

    def cover() -> str:
        cert = kernel_coset_cover(code, kr, guard)
        return f"{cert.cosets} cosets of size {cert.coset_size} cover {cert.code_size} codewords"

    def bound() -> str:
        bounds_check(p, rk.rank, kr.ker_dim)
        return f"(rank, kernel) = ({rk.rank}, {kr.ker_dim}) admissible"

    def gray_sum() -> str:
        words = list(codewords(code, guard))
        rng = random.Random(args.seed)
        for _ in range(args.samples):
            u, v = rng.choice(words), rng.choice(words)
            lhs = gray_bits(u + v)
            rhs = gray_bits(u) ^ gray_bits(v) ^ gray_bits(twice_star(u, v))
            if lhs != rhs:
                raise _CheckFailed("Gray sum identity fails", (u, v))
        return f"{args.samples} sampled pairs"

    for name, fn in [
        ("generators_independent", independent),
        ("expectations", expectations),
        ("rank_vs_oracle", rank_oracle),
        ("kernel_vs_oracle", kernel_oracle),
        ("chi_kernel", chi_kernel),
        ("dual_vs_oracle", dual_oracle),
        ("coset_cover", cover),
        ("bounds", bound),
        ("gray_sum_identity", gray_sum),
    ]:
        checks.run(name, fn)
    out.write(f"{'FAIL' if checks.failed else 'PASS'}: {checks.failed} of 9 checks failed\n")
    return 1 if checks.failed else 0


def _add_type_flags(sp: argparse.ArgumentParser) -> None:
    for name in ("alpha", "beta", "gamma", "delta", "kappa"):
        sp.add_argument(f"--{name}", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="z2z4", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", help="measure the invariants of a matrix file")
    sp.add_argument("path")
    sp.add_argument("--json", action="store_true", help="emit one JSON object")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("construct", help="build a code with a target rank and/or kernel")
    _add_type_flags(sp)
    target = sp.add_mutually_exclusive_group(required=True)
    target.add_argument("--rank", type=int)
    target.add_argument("--kernel", type=int)
    target.add_argument("--pair", type=int, nargs=2, metavar=("R", "K"))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--random-free", action="store_true", help="fill T', T1, S' randomly from --seed")
    sp.add_argument("--out")
    sp.add_argument("--no-verify", dest="verify", action="store_false")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("feasible", help="table of achievable (rank, kernel) pairs")
    _add_type_flags(sp)
    sp.add_argument("--format", choices=("table", "csv"), default="table")
    sp.set_defaults(func=cmd_feasible)

    sp = sub.add_parser("dual", help="generator matrix of the additive dual")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("verify", help="cross-check every engine against brute force")
    sp.add_argument("path")
    sp.add_argument("--max-codeword-bits", type=int, default=SizeGuard.max_codeword_bits)
    sp.add_argument("--max-ambient-log2", type=int, default=SizeGuard.max_ambient_log2)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=1000)
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, OSError) as exc:
        print(f"z2z4: error: {exc}", file=sys.stderr)
        return 2
    except GuardExceeded as exc:
        print(f"z2z4: {exc}", file=sys.stderr)
        return 1
    except (InfeasibleError, BoundViolation, CoverViolation, DegenerateCodeError) as exc:
        bound = getattr(exc, "bound", None)
        tag = f" [{bound}]" if bound else ""
        print(f"z2z4: {exc}{tag}", file=sys.stderr)
        return 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
