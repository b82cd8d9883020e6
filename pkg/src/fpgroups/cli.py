"""Command-line interface.

Exit codes: 0 success, 1 verification failed, 2 usage or parse error,
3 enumeration limits exhausted.  Results go to stdout and end with one
``RESULT key=value ...`` line (prefixed by ``# `` when the output is a
presentation, so it still parses); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus
from .abelian import abelianize
from .enumerator import DEFAULT_MAX_COSETS, enumerate_cosets, verify_table
from .parser import ParseError, parse_presentation, parse_proof, parse_word, serialize_presentation
from .presentation import (
    EliminationError,
    Presentation,
    TietzeLog,
    auto_simplify,
    eliminate_by_definition,
    eliminate_generator,
)
from .proofcheck import check_script
from .surgery import determinant, is_luttinger, log_transform_matrix

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_EXHAUSTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _result(**fields) -> str:
    def fmt(v):
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v).replace(" ", "")
    return "RESULT " + " ".join(f"{k}={fmt(v)}" for k, v in fields.items())


def _read(path: str) -> bytes:
    """Read a file; ``corpus:NAME`` reads a shipped corpus file."""
    if path.startswith("corpus:"):
        try:
            return corpus.read_text(path[len("corpus:"):]).encode("utf-8")
        except (FileNotFoundError, OSError) as exc:
            raise UsageError(f"{path}: no such corpus file") from exc
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from exc


def _locate(data: bytes, offset: int) -> tuple[int, int]:
    before = data[:offset]
    line = before.count(b"\n") + 1
    col = offset - (before.rfind(b"\n") + 1) + 1
    return line, col


def _parse_error(path: str, data: bytes, exc: ParseError) -> UsageError:
    line, col = _locate(data, exc.span.start)
    return UsageError(f"{path}:{line}:{col}: {exc.message} "
                      f"(bytes {exc.span.start}..{exc.span.end})")


def _load_presentation(path: str) -> Presentation:
    data = _read(path)
    try:
        return parse_presentation(data)
    except ParseError as exc:
        raise _parse_error(path, data, exc) from None


def _emit_presentation(p: Presentation, **fields):
    print(serialize_presentation(p))
    print("# " + _result(generators=len(p.generators), relators=len(p.relators), **fields))


# commands ------------------------------------------------------------

def cmd_canon(args) -> int:
    p = _load_presentation(args.file)
    _emit_presentation(p)
    return EXIT_OK


def cmd_simplify(args) -> int:
    p = _load_presentation(args.file)
    log = TietzeLog()
    for request in args.eliminate:
        name, _, text = request.partition("=")
        name = name.strip()
        try:
            if text:
                try:
                    value = parse_word(text, p.alphabet)
                except ParseError as exc:
                    raise UsageError(f"--eliminate {request}: {exc}") from None
                p, move = eliminate_by_definition(p, name, value)
            else:
                p, move = eliminate_generator(p, name)
        except (EliminationError, KeyError) as exc:
            print(f"error: cannot eliminate {name}: {exc}", file=sys.stderr)
            return EXIT_FAILED
        log.append(move)
    if args.auto:
        p, more = auto_simplify(p, max_steps=args.max_steps,
                                max_relator_length=args.max_relator_length)
        log.extend(more)
    if args.log:
        Path(args.log).write_text(log.dumps())
    _emit_presentation(p, moves=len(log))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    p = _load_presentation(args.file)
    try:
        subgroup = [parse_word(w, p.alphabet) for w in args.subgroup]
    except ParseError as exc:
        raise UsageError(f"--subgroup: {exc}") from None
    res = enumerate_cosets(p, subgroup, max_cosets=args.max_cosets)
    stats = dict(defined=res.stats.defined, coincidences=res.stats.coincidences,
                 scans=res.stats.scans)
    if not res.completed:
        print(f"exhausted: {res.live} live cosets, {res.stats.defined} defined "
              f"(limit {args.max_cosets}); no conclusion")
        print(_result(status="exhausted", live=res.live, **stats))
        return EXIT_EXHAUSTED
    check = verify_table(res.table, p, subgroup)
    if args.dump:
        Path(args.dump).write_text(res.table.compact().dump(p.generators))
    print(f"{'index' if subgroup else 'order'} {res.index}")
    print(_result(status="completed", index=res.index, verified=bool(check), **stats))
    if not check:
        print(f"error: table check failed: {check.message}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_abelianize(args) -> int:
    p = _load_presentation(args.file)
    inv = abelianize(p)
    print(f"H1 = {inv}")
    print(_result(torsion=",".join(map(str, inv.torsion)) or "none", free_rank=inv.free_rank,
                  trivial=inv.trivial))
    return EXIT_OK


def cmd_check(args) -> int:
    p = _load_presentation(args.presentation)
    data = _read(args.proof)
    try:
        script = parse_proof(data, p.alphabet)
    except ParseError as exc:
        raise _parse_error(args.proof, data, exc) from None
    report = check_script(p, script)
    for v in report.verdicts:
        line = f"step {v.name}: {'accepted' if v.accepted else 'REJECTED'}"
        if not v.accepted:
            line += f" ({v.message})"
        print(line)
    print(report.summary())
    print(_result(accepted=report.accepted, trivial=report.all_trivial,
                  steps=len(report.verdicts)))
    if not report.accepted:
        print(f"error: {report.summary()}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_surgery(args) -> int:
    m = log_transform_matrix(args.p)
    det = determinant(m)
    print(m)
    print(f"determinant {det}")
    print(f"luttinger {'yes' if is_luttinger(args.p) else 'no'}")
    print(_result(p=args.p, det=det, luttinger=is_luttinger(args.p)))
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    from .verify import run_all
    results = run_all(echo=print)
    passed = sum(r.passed for r in results)
    print(_result(passed=passed, failed=len(results) - passed))
    return EXIT_OK if passed == len(results) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fpgroups", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("canon", aliases=["parse"], help="print the canonical form of a .grp file")
    s.add_argument("file")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("simplify", help="eliminate generators (Tietze moves)")
    s.add_argument("file")
    s.add_argument("--eliminate", action="append", default=[], metavar="G[=WORD]",
                   help="eliminate G, by the relator G = WORD if given (repeatable, in order)")
    s.add_argument("--auto", action="store_true", help="then simplify greedily")
    s.add_argument("--max-steps", type=int, default=10_000)
    s.add_argument("--max-relator-length", type=int, default=None)
    s.add_argument("--log", help="write the replayable move log (JSON lines) here")
    s.set_defaults(func=cmd_simplify)

    s = sub.add_parser("enumerate", help="Todd-Coxeter coset enumeration")
    s.add_argument("file")
    s.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    s.add_argument("--subgroup", action="append", default=[], metavar="WORD",
                   help="subgroup generator (repeatable); default is the trivial subgroup")
    s.add_argument("--dump", help="write the finished coset table here")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("abelianize", help="invariant factors of the abelianization")
    s.add_argument("file")
    s.set_defaults(func=cmd_abelianize)

    s = sub.add_parser("check", help="check a .proof script against a presentation")
    s.add_argument("presentation")
    s.add_argument("proof")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("surgery", help="log-transform gluing matrix")
    s.add_argument("--p", type=int, required=True)
    s.set_defaults(func=cmd_surgery)

    s = sub.add_parser("verify-paper", help="run the full reproduction suite")
    s.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
