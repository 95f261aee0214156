"""Command-line front end; every command prints one JSON document."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import HilbkzError


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    payload: dict

    def dumps(self) -> str:
        return json.dumps(self.payload, sort_keys=True)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _parser() -> _Parser:
    p = _Parser(prog="hilbkz", description="Exact computations with JSON output.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("strata", help="pieces of the nilpotent Lagrangian for n points")
    s.add_argument("--n", type=_positive, required=True)
    s = sub.add_parser("classify", help="stratum of an ADHM datum read from JSON")
    s.add_argument("--input", required=True)
    s = sub.add_parser("cc", help="characteristic cycles of standard modules")
    s.add_argument("--n", type=_positive, required=True)
    s = sub.add_parser("qschur", help="q-Schur algebra checks")
    s.add_argument("--l", type=_positive, required=True)
    s.add_argument("--params", required=True, help='JSON {"qa": [scalars]} or {"exponents": [ints]}')
    s = sub.add_parser("hypertoric", help="theta order, semistability and charts")
    s.add_argument("--theta", type=_int_list, required=True)
    s.add_argument("--rep", help='JSON {"a": [scalars], "b": [scalars]}')
    s = sub.add_parser("heckecheck", help="randomised Hecke quadratic relation")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=_positive, default=100)
    s.add_argument("--dims", type=_int_list, default=[1, 2])
    return p


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _cmd_strata(a) -> dict:
    from .strata import enumerate_strata

    cat = enumerate_strata(a.n)
    out = cat.to_json()
    out["count"] = len(cat.strata)
    out["smooth_count"] = len(cat.smooth_strata())
    return out


def _cmd_classify(a) -> dict:
    from .adhm import almost_commuting_residual, classify_stratum, datum_from_json, is_smooth_point, is_stable
    from .strata import stratum_dimension

    d = datum_from_json(_load(a.input))
    label = classify_stratum(d.X, d.Y, d.i)
    return {
        "n": d.n,
        "residual_zero": almost_commuting_residual(d).is_zero(),
        "stable": is_stable(d),
        "label": label.to_json(),
        "smooth": is_smooth_point(label),
        "stratum_dimension": stratum_dimension(label),
    }


def _cmd_cc(a) -> dict:
    from .charcycle import cc_table, kz_dimension
    from .partitions import enumerate_partitions

    rows = cc_table(a.n)
    ones = (1,) * a.n
    for row in rows:
        row["kz_dimension_one_n"] = kz_dimension(row["lam"], ones)
    return {"n": a.n, "strata": [list(p) for p in reversed(enumerate_partitions(a.n))], "rows": rows}


def _qschur_params(obj, l: int):
    from .qschur import QSchurParams
    from .scalars import LaurentQ, RationalFunction, scalar_from_json

    if isinstance(obj, list):
        obj = {"qa": obj}
    if not isinstance(obj, dict):
        raise ValueError("params file must hold a JSON object or list")
    if "exponents" in obj:
        exps = [int(x) for x in obj["exponents"]]
        if len(exps) != l:
            raise ValueError(f"need {l} exponents, got {len(exps)}")
        return QSchurParams.formal(exps)
    if "qa" not in obj:
        raise ValueError('params file needs "qa" or "exponents"')
    vals = [scalar_from_json(x) for x in obj["qa"]]
    if len(vals) != l:
        raise ValueError(f"need {l} parameter values, got {len(vals)}")
    if any(isinstance(v, (LaurentQ, RationalFunction)) for v in vals):
        conv = []
        for v in vals:
            if isinstance(v, LaurentQ):
                v = RationalFunction.from_laurent(v)
            elif isinstance(v, Fraction):
                v = RationalFunction.const(v)
            conv.append(v)
        vals = conv
    elif not all(isinstance(v, Fraction) for v in vals):
        raise ValueError("parameters must be rationals or elements of Q(q)")
    return QSchurParams(l, tuple(vals))


def _cmd_qschur(a) -> dict:
    from .qschur import build_qschur, module_summary

    return module_summary(build_qschur(_qschur_params(_load(a.params), a.l)))


def _cmd_hypertoric(a) -> dict:
    from .cyclic import QuiverRep, ThetaParam, hypertoric_report
    from .scalars import scalar_from_json

    t = ThetaParam(len(a.theta), tuple(a.theta))
    rep = None
    if a.rep:
        obj = _load(a.rep)
        av = [scalar_from_json(x) for x in obj["a"]]
        bv = [scalar_from_json(x) for x in obj["b"]]
        rep = QuiverRep(int(obj.get("l", len(av))), tuple(av), tuple(bv))
    return hypertoric_report(t, rep)


def _cmd_heckecheck(a) -> dict:
    from .monodromy import hecke_suite

    if len(a.dims) != 2 or min(a.dims) < 0:
        raise ValueError("--dims takes two nonnegative integers P,F")
    return hecke_suite(a.seed, a.dims[0], a.dims[1], a.trials)


_COMMANDS = {
    "strata": _cmd_strata,
    "classify": _cmd_classify,
    "cc": _cmd_cc,
    "qschur": _cmd_qschur,
    "hypertoric": _cmd_hypertoric,
    "heckecheck": _cmd_heckecheck,
}


def _normalise(argv: Sequence[str]) -> list[str]:
    """Glue a negative-leading value onto --theta so argparse does not read it as a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--theta":
            nxt = next(it, None)
            if nxt is not None and re.fullmatch(r"-?\d+(,-?\d+)*", nxt):
                out.append(f"--theta={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def run(argv: Sequence[str]) -> CommandResult:
    try:
        args = _parser().parse_args(_normalise(argv))
        return CommandResult(0, _COMMANDS[args.command](args))
    except _UsageError as exc:
        return CommandResult(2, {"error": f"usage: {exc}"})
    except (OSError, json.JSONDecodeError) as exc:
        return CommandResult(2, {"error": f"cannot read input: {exc}"})
    except HilbkzError as exc:
        return CommandResult(2, {"error": f"{type(exc).__name__}: {exc}"})
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        return CommandResult(2, {"error": f"invalid input: {type(exc).__name__}: {exc}"})


def main(argv: Sequence[str] | None = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    print(res.dumps())
    return res.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
