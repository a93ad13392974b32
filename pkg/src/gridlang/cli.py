"""Command-line front end.

Exit codes: 0 accept/true/success, 1 reject/false/verification failure,
2 usage, input or resource error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .automaton import (
    AutomatonError,
    as_nondeterministic,
    format_automaton,
    ibr_convert,
    parse_automaton,
    transpose_automaton,
    validate,
)
from .complexity import (
    colp_member_3w,
    column_bound,
    fooling_set_lpr,
    fooling_set_union,
    format_fooling_set,
    format_word_token,
    parse_fooling_set,
    parse_word_token,
    verify_extended_fooling_set,
    witness_an,
    witness_bm,
)
from .constructions import (
    diag_concat_member,
    diag_concat_projection_nfa,
    union_automaton,
    union_projection_nfa,
    witness_l1l2,
)
from .grid import (
    FormatError,
    GridError,
    col_projection,
    format_grid,
    parse_grid,
    row_projection,
    transpose,
)
from .lba import (
    build_checker_automaton,
    find_accepting_history,
    encode_configuration,
    parse_lba,
    table_of,
    validate_table,
)
from .nfa import enumerate_language, epsilon_removal, find_counterexample, format_nfa, parse_nfa
from .projection import extract_projection_nfa
from .simulator import (
    InputError,
    ResourceLimitError,
    accepting_trace,
    accepts,
    accepts_some_completion,
)

ACCEPT, REJECT = 0, 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        where = self.prog.partition(" ")[2]
        raise UsageError(f"{where}: {message}" if where else message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _automaton(path: str, check: bool = True):
    a = parse_automaton(_read(path))
    if check:
        validate(a)
    return a


def _grid(path):
    return parse_grid(_read(path))


def _nfa(path):
    return parse_nfa(_read(path))


def _lba(path):
    return parse_lba(_read(path))


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _verdict(ok: bool) -> int:
    print("ACCEPT" if ok else "REJECT")
    return ACCEPT if ok else REJECT


# -- handlers ---------------------------------------------------------------

def cmd_simulate(args):
    a, g = _automaton(args.automaton), _grid(args.grid)
    if not args.trace:
        return _verdict(accepts(a, g))
    t = accepting_trace(a, g)
    code = _verdict(t is not None)
    if t is not None:
        print("\n".join(t.lines()))
    return code


def cmd_trace(args):
    a, g = _automaton(args.automaton), _grid(args.grid)
    t = accepting_trace(a, g)
    if t is None:
        print("REJECT")
        return REJECT
    _emit(args, "\n".join(t.lines()) + "\n")
    return ACCEPT


def cmd_complete(args):
    a = _automaton(args.automaton)
    row = [None if s == args.wildcard else s for s in parse_word_token(args.word)]
    return _verdict(accepts_some_completion(a, row, args.max_rows))


def cmd_project(args):
    g = _grid(args.grid)
    w = row_projection(g) if args.axis == "row" else col_projection(g)
    print(format_word_token(w))
    return ACCEPT


def cmd_transpose(args):
    if bool(args.grid) == bool(args.automaton):
        raise UsageError("give exactly one of --grid or --automaton")
    if args.grid:
        _emit(args, format_grid(transpose(_grid(args.grid))))
    else:
        _emit(args, format_automaton(transpose_automaton(_automaton(args.automaton))))
    return ACCEPT


def cmd_validate(args):
    a = _automaton(args.automaton, check=False)
    try:
        validate(a)
    except AutomatonError as exc:
        print(f"INVALID {type(exc).__name__}: {exc}")
        return REJECT
    print("VALID")
    return ACCEPT


def cmd_ibr(args):
    _emit(args, format_automaton(ibr_convert(_automaton(args.automaton))))
    return ACCEPT


def cmd_extract_nfa(args):
    _emit(args, format_nfa(extract_projection_nfa(_automaton(args.automaton), args.axis)))
    return ACCEPT


def cmd_eps_remove(args):
    _emit(args, format_nfa(epsilon_removal(_nfa(args.nfa))))
    return ACCEPT


def cmd_equiv(args):
    w = find_counterexample(_nfa(args.left), _nfa(args.right), args.max_len)
    if w is None:
        print("EQUIVALENT")
        return ACCEPT
    print(f"COUNTEREXAMPLE {format_word_token(w)}")
    return REJECT


def cmd_enumerate(args):
    words = enumerate_language(_nfa(args.nfa), args.max_len)
    _emit(args, "".join(format_word_token(w) + "\n" for w in words))
    return ACCEPT


def _pair(args):
    a, b = _automaton(args.a), _automaton(args.b)
    if args.lift:
        a, b = as_nondeterministic(a), as_nondeterministic(b)
    return a, b


def cmd_union(args):
    _emit(args, format_automaton(union_automaton(*_pair(args))))
    return ACCEPT


def cmd_union_nfa(args):
    a, b = _pair(args)
    _emit(args, format_nfa(union_projection_nfa(a, b, args.axis)))
    return ACCEPT


def cmd_diag_member(args):
    a, b = _pair(args)
    return _verdict(diag_concat_member(a, b, _grid(args.grid)))


def cmd_diag_concat_nfa(args):
    a, b = _pair(args)
    _emit(args, format_nfa(diag_concat_projection_nfa(a, b, args.axis)))
    return ACCEPT


def cmd_witness(args):
    fam = args.family
    if fam in ("An", "Bm"):
        if args.n is None:
            raise UsageError(f"--n is required for {fam}")
        a = witness_an(args.n, literal=args.literal) if fam == "An" else witness_bm(args.n)
    else:
        a = witness_l1l2(fam)
    _emit(args, format_automaton(a))
    return ACCEPT


def cmd_fooling_set(args):
    s = parse_fooling_set(_read(args.set))
    result = verify_extended_fooling_set(s, _nfa(args.nfa))
    if result:
        print(f"LOWER-BOUND {result}")
        return ACCEPT
    pairs = " ".join(f"({format_word_token(x)},{format_word_token(y)})" for x, y in result.pairs)
    print(f"VIOLATION {result.reason}: {pairs}")
    return REJECT


def cmd_fooling_gen(args):
    if args.family == "lpr":
        s = fooling_set_lpr(args.n)
    else:
        if args.m is None:
            raise UsageError("--m is required for the union family")
        s = fooling_set_union(args.m, args.n)
    _emit(args, format_fooling_set(s))
    return ACCEPT


def cmd_bound(args):
    print(column_bound(args.states, args.word_len))
    return ACCEPT


def cmd_colp_member(args):
    return _verdict(colp_member_3w(_automaton(args.automaton), args.length, args.col_cap))


def cmd_lba_run(args):
    m = _lba(args.lba)
    h = find_accepting_history(m, parse_word_token(args.word), args.max_steps)
    code = _verdict(h is not None)
    if h is not None:
        for c in h:
            print(" ".join(encode_configuration(c)))
    return code


def cmd_lba_table(args):
    m = _lba(args.lba)
    h = find_accepting_history(m, parse_word_token(args.word), args.max_steps)
    if h is None:
        print("REJECT")
        return REJECT
    _emit(args, format_grid(table_of(h)))
    return ACCEPT


def cmd_lba_build(args):
    _emit(args, format_automaton(build_checker_automaton(_lba(args.lba))))
    return ACCEPT


def cmd_lba_validate(args):
    ok = validate_table(_lba(args.lba), _grid(args.grid))
    print("VALID" if ok else "INVALID")
    return ACCEPT if ok else REJECT


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gridlang", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, output=False):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        if output:
            sp.add_argument("-o", "--output", help="write the result to this file")
        return sp

    def axis(sp):
        sp.add_argument("--axis", choices=("row", "col"), default="row")

    def two(sp):
        sp.add_argument("--a", required=True, help="first .2da file")
        sp.add_argument("--b", required=True, help="second .2da file")
        sp.add_argument("--lift", action="store_true",
                        help="treat deterministic inputs as nondeterministic")

    sp = add("simulate", cmd_simulate, "run an automaton on a grid")
    sp.add_argument("--automaton", required=True)
    sp.add_argument("--grid", required=True)
    sp.add_argument("--trace", action="store_true", help="also print a shortest accepting trace")

    sp = add("trace", cmd_trace, "print a shortest accepting trace", output=True)
    sp.add_argument("--automaton", required=True)
    sp.add_argument("--grid", required=True)

    sp = add("complete", cmd_complete, "is some completion of a first row accepted?")
    sp.add_argument("--automaton", required=True)
    sp.add_argument("--word", required=True, help="first row, 'eps' for empty")
    sp.add_argument("--max-rows", type=int, default=None)
    sp.add_argument("--wildcard", default="?", help="token standing for any symbol")

    sp = add("project", cmd_project, "print the row or column projection of a grid")
    sp.add_argument("--grid", required=True)
    axis(sp)

    sp = add("transpose", cmd_transpose, "transpose a grid or an automaton", output=True)
    sp.add_argument("--grid")
    sp.add_argument("--automaton")

    sp = add("validate", cmd_validate, "check an automaton's invariants")
    sp.add_argument("--automaton", required=True)

    sp = add("ibr", cmd_ibr, "convert to IBR form: accept or halt on the first border read", output=True)
    sp.add_argument("--automaton", required=True)

    sp = add("extract-nfa", cmd_extract_nfa, "projection NFA of a two-way automaton", output=True)
    sp.add_argument("--automaton", required=True)
    axis(sp)

    sp = add("eps-remove", cmd_eps_remove, "remove epsilon transitions", output=True)
    sp.add_argument("--nfa", required=True)

    sp = add("equiv", cmd_equiv, "compare two NFAs on all words up to a length")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--max-len", type=int, required=True)

    sp = add("enumerate", cmd_enumerate, "list accepted words up to a length", output=True)
    sp.add_argument("--nfa", required=True)
    sp.add_argument("--max-len", type=int, required=True)

    two(add("union", cmd_union, "union of two two-way automata", output=True))

    sp = add("union-nfa", cmd_union_nfa,
             "projection NFA of a union, each side over its own alphabet", output=True)
    two(sp)
    axis(sp)

    sp = add("diag-member", cmd_diag_member, "membership in a diagonal concatenation")
    two(sp)
    sp.add_argument("--grid", required=True)

    sp = add("diag-concat-nfa", cmd_diag_concat_nfa,
             "projection NFA of a diagonal concatenation", output=True)
    two(sp)
    axis(sp)

    sp = add("witness", cmd_witness, "emit a witness automaton", output=True)
    sp.add_argument("--family", choices=("An", "Bm", "L1", "L2"), required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--literal", action="store_true",
                    help="An only: down move on 0 alone")

    sp = add("fooling-set", cmd_fooling_set, "verify an extended fooling set")
    sp.add_argument("--set", required=True)
    sp.add_argument("--nfa", required=True)

    sp = add("fooling-gen", cmd_fooling_gen, "emit a fooling set", output=True)
    sp.add_argument("--family", choices=("lpr", "union"), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int)

    sp = add("bound", cmd_bound, "column bound for unary three-way automata")
    sp.add_argument("--states", type=int, required=True)
    sp.add_argument("--word-len", type=int, required=True)

    sp = add("colp-member", cmd_colp_member, "column-projection membership, unary three-way")
    sp.add_argument("--automaton", required=True)
    sp.add_argument("--length", type=int, required=True)
    sp.add_argument("--col-cap", type=int, required=True)

    for name, func, help in (("lba-run", cmd_lba_run, "run an LBA on a word"),
                             ("lba-table", cmd_lba_table, "computation table of an accepting run")):
        sp = add(name, func, help, output=name == "lba-table")
        sp.add_argument("--lba", required=True)
        sp.add_argument("--word", required=True)
        sp.add_argument("--max-steps", type=int, default=10_000)

    sp = add("lba-build", cmd_lba_build, "four-way automaton checking computation tables",
             output=True)
    sp.add_argument("--lba", required=True)

    sp = add("lba-validate", cmd_lba_validate, "check a computation table directly")
    sp.add_argument("--lba", required=True)
    sp.add_argument("--grid", required=True)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"gridlang: resource limit: {exc}", file=sys.stderr)
    except (UsageError, FormatError, GridError, AutomatonError, InputError, ValueError) as exc:
        print(f"gridlang: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"gridlang: {exc}", file=sys.stderr)
    return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
