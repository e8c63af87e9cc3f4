"""Command-line front end.

Examples::

    sqfmult mult "x1*x2, x2*x3, x1*x3" --power 2
    sqfmult cycle 5 2 --power 2 --json
    sqfmult assprimes "x1*x2, x2*x3"
    sqfmult hilbert "x1*x2, x2*x3" --upto 8
    sqfmult verify --seed 0

Exit codes: 0 ok, 1 formula/engine mismatch, 2 input error, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass
from typing import Optional

from sqfmult.closed_forms import cycle_params, e0_cycle, e0_cycle_power, e0_power_formula
from sqfmult.errors import InputError, ResourceError
from sqfmult.hilbert_engine import hilbert_function, series_profile
from sqfmult.monomial_core import MonomialIdeal, minimalize, power, symbolic_power
from sqfmult.path_cycles import cycle_path_ideal, dim_cycle, enumerate_assoc_primes_cycle
from sqfmult.primes_dim import dim_profile, minimal_primes
from sqfmult import verify as verify_mod

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

_TOKEN = re.compile(r"(?P<var>x(?P<idx>\d+))(?:\s*\^\s*(?P<exp>\d+))?|(?P<sep>[,*])")


class IdealSyntaxError(InputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


def parse_ideal(text: str, n_override: Optional[int] = None) -> MonomialIdeal:
    """Parse ``"x1*x2, x2^3*x4"`` into a minimalized ideal.

    ``n`` is the largest index seen unless ``n_override`` is given.
    """
    gens: list[dict[int, int]] = []
    current: dict[int, int] = {}
    last_sep: Optional[tuple[str, int]] = None  # pending separator and its position
    expect_factor = True
    pos = 0

    def offset(i: int) -> int:
        return len(text[:i].encode("utf-8"))

    def dangling(found: str, at: int) -> IdealSyntaxError:
        if last_sep is not None:
            sep, sep_pos = last_sep
            return IdealSyntaxError(f"dangling {sep!r} (found {found})", offset(sep_pos))
        return IdealSyntaxError(f"expected a factor, found {found}", offset(at))

    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise IdealSyntaxError(f"unexpected character {text[pos]!r}", offset(pos))
        if m.group("var"):
            if not expect_factor:
                raise IdealSyntaxError("missing '*' or ',' before factor", offset(pos))
            idx = int(m.group("idx"))
            if idx == 0:
                raise IdealSyntaxError("variable indices start at 1", offset(pos))
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
            current[idx] = current.get(idx, 0) + exp
            expect_factor = False
            last_sep = None
        else:
            sep = m.group("sep")
            if expect_factor:
                raise dangling(repr(sep), pos)
            if sep == ",":
                gens.append(current)
                current = {}
            expect_factor = True
            last_sep = (sep, pos)
        pos = m.end()
    if expect_factor:
        raise dangling("end of input", len(text))
    gens.append(current)

    max_idx = max(i for g in gens for i in g)
    n = max_idx if n_override is None else n_override
    if n < max_idx:
        raise InputError(f"--n {n} is smaller than the largest variable index {max_idx}")
    monos = []
    for g in gens:
        exps = [0] * n
        for i, e in g.items():
            exps[i - 1] = e
        monos.append(tuple(exps))
    return minimalize(monos, n)


def render_ideal(I: MonomialIdeal) -> str:
    return str(I)


@dataclass
class Report:
    input: str
    n: int
    d: Optional[int]
    mu: Optional[int]
    s: int
    e0_formula: Optional[int]
    e0_engine: Optional[int]
    ms: float

    @property
    def match(self) -> Optional[bool]:
        if self.e0_formula is None or self.e0_engine is None:
            return None
        return self.e0_formula == self.e0_engine

    def as_json(self) -> str:
        def num(x):
            return None if x is None else str(x)

        return json.dumps(
            {
                "input": self.input,
                "n": num(self.n),
                "d": num(self.d),
                "mu": num(self.mu),
                "s": num(self.s),
                "e0_formula": num(self.e0_formula),
                "e0_engine": num(self.e0_engine),
                "match": self.match,
                "ms": f"{self.ms:.3f}",
            }
        )

    def as_text(self) -> str:
        parts = [f"n={self.n}", f"d={self.d}", f"mu={self.mu}", f"s={self.s}"]
        if self.e0_formula is not None:
            parts.append(f"e0_formula={self.e0_formula}")
        if self.e0_engine is not None:
            parts.append(f"e0_engine={self.e0_engine}")
        if self.match is not None:
            parts.append("match" if self.match else "MISMATCH")
        return f"{self.input}: " + " ".join(parts)


def cmd_mult(
    I: MonomialIdeal,
    s: int = 1,
    symbolic: bool = False,
    formula_only: bool = False,
    engine_only: bool = False,
    node_cap: Optional[int] = None,
    label: Optional[str] = None,
) -> Report:
    """Multiplicity of ``S/I^s`` (or of ``S/I^(s)`` with ``symbolic``) by formula and engine."""
    if s < 1:
        raise InputError(f"--power must be >= 1, got {s}")
    if formula_only and engine_only:
        raise InputError("--formula-only and --engine-only are mutually exclusive")
    if I.is_zero or I.is_unit:
        raise InputError("multiplicity needs a nonzero proper ideal")
    t0 = time.perf_counter()
    d = mu = e0_formula = e0_engine = None
    if not engine_only or symbolic:
        if not I.is_squarefree:
            raise InputError("the power formula and symbolic powers need a squarefree ideal")
        prof = dim_profile(I)
        d, mu = prof.d, prof.mu
    if not engine_only:
        e0_formula = e0_power_formula(I.n, d, mu, s)
    if not formula_only:
        if symbolic:
            J = symbolic_power(I, s, minimal_primes(I))
        else:
            J = power(I, s)
        sp = series_profile(J, node_cap=node_cap)
        e0_engine = sp.e0
        if d is None:
            d = sp.d
    ms = (time.perf_counter() - t0) * 1000
    return Report(label or render_ideal(I), I.n, d, mu, s, e0_formula, e0_engine, ms)


def cmd_cycle(
    n: int, d: int, s: int = 1, formula_only: bool = False, node_cap: Optional[int] = None
) -> Report:
    """Multiplicity of ``S/I_{n,d}^s`` from the closed form, optionally checked by the engine."""
    if s < 1:
        raise InputError(f"--power must be >= 1, got {s}")
    t0 = time.perf_counter()
    cycle_params(n, d)
    formula = e0_cycle_power(n, d, s)
    mu = e0_cycle(n, d)
    engine = None
    if not formula_only:
        engine = series_profile(power(cycle_path_ideal(n, d), s), node_cap=node_cap).e0
    ms = (time.perf_counter() - t0) * 1000
    return Report(f"I_{{{n},{d}}}", n, dim_cycle(n, d), mu, s, formula, engine, ms)


def cmd_verify(
    max_n: int = 6,
    max_d: Optional[int] = None,
    max_s: int = 3,
    samples: int = 200,
    seed: int = 0,
    as_json: bool = False,
    out=None,
) -> int:
    """Run every verification sweep; return the exit status."""
    out = out or sys.stdout
    results = verify_mod.run_all(max_n=max_n, max_s=max_s, samples=samples, seed=seed, max_d=max_d)
    for res in results:
        print(json.dumps(res.as_dict()) if as_json else res.line(), file=out)
        if not as_json:
            for f in res.failures[:10]:
                print(f"    {f}", file=out)
    ok = all(r.passed for r in results)
    if not as_json:
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


def _read_ideal(args) -> MonomialIdeal:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            text = " ".join(line.split("#", 1)[0] for line in fh)
    elif args.ideal is not None:
        text = args.ideal
    else:
        raise InputError("give an ideal as an argument or with --file")
    return parse_ideal(text, args.n)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sqfmult", description="Multiplicities of powers of squarefree monomial ideals."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, metavar="NODES",
                        help="recursion node cap for the Hilbert engine (env SQFMULT_NODE_CAP)")
    sub = p.add_subparsers(dest="command", required=True)

    def ideal_args(sp):
        sp.add_argument("ideal", nargs="?", help='generators, e.g. "x1*x2, x2^2*x3"')
        sp.add_argument("--file", help="read the ideal from a file (same grammar, # comments)")
        sp.add_argument("--n", type=int, default=None, help="number of variables")
        sp.add_argument("--json", action="store_true", help="emit JSON lines")

    mult = sub.add_parser("mult", parents=[common], help="multiplicity of S/I^s by formula and engine")
    ideal_args(mult)
    mult.add_argument("--power", type=int, default=1, metavar="S")
    mult.add_argument("--symbolic", action="store_true", help="use the symbolic power I^(s)")
    group = mult.add_mutually_exclusive_group()
    group.add_argument("--formula-only", action="store_true")
    group.add_argument("--engine-only", action="store_true")

    cyc = sub.add_parser("cycle", parents=[common], help="d-path ideal of the n-cycle")
    cyc.add_argument("cycle_n", type=int, metavar="N")
    cyc.add_argument("cycle_d", type=int, metavar="D")
    cyc.add_argument("--power", type=int, default=1, metavar="S")
    cyc.add_argument("--formula-only", action="store_true")
    cyc.add_argument("--primes", action="store_true", help="also list the associated primes")
    cyc.add_argument("--json", action="store_true")

    ap = sub.add_parser("assprimes", parents=[common], help="associated (minimal) primes of a squarefree ideal")
    ideal_args(ap)

    dm = sub.add_parser("dim", parents=[common], help="dimension and top-dimensional prime count")
    ideal_args(dm)

    hb = sub.add_parser("hilbert", parents=[common], help="Hilbert series numerator and Hilbert function")
    ideal_args(hb)
    hb.add_argument("--power", type=int, default=1, metavar="S")
    hb.add_argument("--upto", type=int, default=10, help="print H(a) for a = 0..UPTO")

    vf = sub.add_parser("verify", parents=[common], help="run the verification sweeps")
    vf.add_argument("--max-n", type=int, default=6)
    vf.add_argument("--max-d", type=int, default=None)
    vf.add_argument("--max-s", type=int, default=3)
    vf.add_argument("--samples", type=int, default=200)
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--json", action="store_true")
    return p


def _emit(obj: dict, as_json: bool, text: str) -> None:
    print(json.dumps(obj) if as_json else text)


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cap = args.cap
    try:
        if args.command == "mult":
            I = _read_ideal(args)
            rep = cmd_mult(I, args.power, args.symbolic, args.formula_only, args.engine_only, cap)
            print(rep.as_json() if args.json else rep.as_text())
            return EXIT_MISMATCH if rep.match is False else EXIT_OK

        if args.command == "cycle":
            rep = cmd_cycle(args.cycle_n, args.cycle_d, args.power, args.formula_only, cap)
            print(rep.as_json() if args.json else rep.as_text())
            if args.primes:
                primes = enumerate_assoc_primes_cycle(args.cycle_n, args.cycle_d)
                _emit({"primes": [list(P.vars) for P in primes]}, args.json,
                      "\n".join(str(P) for P in primes))
            return EXIT_MISMATCH if rep.match is False else EXIT_OK

        if args.command == "assprimes":
            I = _read_ideal(args)
            primes = minimal_primes(I)
            _emit({"input": str(I), "n": str(I.n), "primes": [list(P.vars) for P in primes]},
                  args.json, "\n".join(str(P) for P in primes))
            return EXIT_OK

        if args.command == "dim":
            I = _read_ideal(args)
            sp = series_profile(I, node_cap=cap)
            payload = {"input": str(I), "n": str(I.n), "d": str(sp.d), "e0": str(sp.e0)}
            text = f"{I}: n={I.n} d={sp.d} e0={sp.e0}"
            if I.is_squarefree and not I.is_zero:
                prof = dim_profile(I)
                payload.update(mu=str(prof.mu), height=str(prof.height))
                text += f" mu={prof.mu} height={prof.height}"
            _emit(payload, args.json, text)
            return EXIT_OK

        if args.command == "hilbert":
            I = power(_read_ideal(args), args.power)
            sp = series_profile(I, node_cap=cap)
            values = [hilbert_function(I, a, sp.numerator) for a in range(args.upto + 1)]
            payload = {
                "input": str(I),
                "n": str(I.n),
                "numerator": [str(c) for c in sp.numerator.coeffs],
                "d": str(sp.d),
                "e0": str(sp.e0),
                "hilbert_function": [str(v) for v in values],
            }
            text = (
                f"numerator: {list(sp.numerator.coeffs)} / (1-t)^{I.n}\n"
                f"d={sp.d} e0={sp.e0}\nH: {values}"
            )
            _emit(payload, args.json, text)
            return EXIT_OK

        if args.command == "verify":
            if args.max_n < 1 or args.max_s < 1 or args.samples < 0:
                raise InputError("--max-n and --max-s must be >= 1, --samples >= 0")
            return cmd_verify(args.max_n, args.max_d, args.max_s, args.samples, args.seed, args.json)
    except ResourceError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
