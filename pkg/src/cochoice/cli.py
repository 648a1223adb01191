"""Command-line front end.

::

    cochoice check FILE           exit 0 consistent, 1 inconsistent, 2 bad input or cap
    cochoice query FILE [--verify] one JSON line per query
    cochoice selftest [--seed N]  embedded corpus plus randomized suites

Input files are JSON: ``{"space": [...], "assessment": [[gamble, ...], ...],
"queries": [...]}`` with gambles as arrays of rational strings. Queries are
objects tagged by ``"op"``:

* ``{"op": "consistent"}``
* ``{"op": "member", "set": [gamble, ...]}``
* ``{"op": "choose", "options": [gamble, ...]}``
* ``{"op": "reject", "options": [gamble, ...], "gamble": gamble}``
* ``{"op": "singleton", "gamble": gamble}``
* ``{"op": "binarity", "set": [gamble, ...]}``
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import suites
from .choice import (DEFAULT_CAP, Engine, check_binarity_report, check_choice,
                     check_consistency_verdict, check_membership_verdict)
from .corpus import default_corpus
from .errors import CochoiceError, InconsistentAssessment, ParseError, SelectionCapExceeded
from .gambles import (Assessment, GambleSet, assessment_from_json, dumps,
                      parse_gamble, parse_gamble_set, shift_set)

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3
OPS = ("consistent", "member", "choose", "reject", "singleton", "binarity")
DEFAULT_SEED = 0


@dataclass(frozen=True)
class Query:
    op: str
    set: GambleSet | None = None
    gamble: object = None


@dataclass(frozen=True)
class QueryFile:
    assessment: Assessment
    queries: tuple[Query, ...]


def parse_query(obj, space) -> Query:
    if not isinstance(obj, dict) or obj.get("op") not in OPS:
        raise ParseError(f"query needs an 'op' among {OPS}: {obj!r}")
    op = obj["op"]
    try:
        if op == "consistent":
            return Query(op)
        if op in ("member", "binarity"):
            return Query(op, set=parse_gamble_set(obj["set"], space))
        if op == "choose":
            return Query(op, set=parse_gamble_set(obj["options"], space))
        if op == "reject":
            return Query(op, set=parse_gamble_set(obj["options"], space),
                         gamble=parse_gamble(obj["gamble"], space))
        return Query(op, gamble=parse_gamble(obj["gamble"], space))
    except KeyError as exc:
        raise ParseError(f"query {op!r} is missing field {exc}") from exc


def load_query_file(path) -> QueryFile:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    A = assessment_from_json(doc)
    qs = doc.get("queries", [])
    if not isinstance(qs, list):
        raise ParseError("'queries' must be an array")
    return QueryFile(A, tuple(parse_query(q, A.space) for q in qs))


def run_query(engine: Engine, q: Query, verify: bool) -> dict:
    """Answer one query; with ``verify`` the evidence is re-checked and ``"verified"`` added."""
    A = engine.assessment
    out: dict = {"op": q.op}
    check = None
    if q.op == "consistent":
        v = engine.consistent()
        out.update(v.to_json())
        if verify:
            check = check_consistency_verdict(A, v)
    elif q.op == "member":
        v = engine.natex_contains(q.set)
        out.update(v.to_json())
        if verify:
            check = check_membership_verdict(A, q.set, v)
    elif q.op == "reject":
        v = engine.reject(q.set, q.gamble)
        out.update(v.to_json())
        if verify:
            check = check_membership_verdict(A, shift_set(q.set, q.gamble), v)
    elif q.op == "singleton":
        v = engine.singleton_verdict(q.gamble)
        out.update(v.to_json())
        if verify:
            check = check_membership_verdict(A, GambleSet([q.gamble]), v)
    elif q.op == "choose":
        r = engine.choose(q.set)
        out["chosen"] = r.chosen.to_json()
        out["rejected"] = r.rejected.to_json()
        out["verdicts"] = [{"option": u.to_json(), **v.to_json()} for u, v in r.verdicts]
        if verify:
            check = check_choice(A, q.set, r)
    else:
        r = engine.binarity_evidence(q.set)
        out["case"] = r.case
        out["witness"] = None if r.witness is None else r.witness.to_json()
        out["verdict"] = r.verdict.to_json()
        out["singletons"] = [{"gamble": u.to_json(), **v.to_json()}
                             for u, v in r.singleton_verdicts]
        if verify:
            check = check_binarity_report(A, q.set, r)
    if check is not None:
        out["verified"] = check.ok
        if not check.ok:
            out["verify_reason"] = check.reason
    return out


def _text_line(i, res) -> str:
    op = res["op"]
    if op == "choose":
        body = f"chosen {res['chosen']} rejected {res['rejected']}"
    elif op == "binarity":
        body = res["case"] + (f" witness {res['witness']}" if res["witness"] else "")
    else:
        body = "true" if res["answer"] else "false"
    if "verified" in res:
        body += " (verified)" if res["verified"] else f" (VERIFY FAILED: {res['verify_reason']})"
    return f"[{i}] {op}: {body}"


def _error(out, exc, fmt) -> int:
    if fmt == "json":
        print(dumps({"error": type(exc).__name__, "message": str(exc)}), file=out)
    else:
        print(f"error: {exc}", file=out)
    return EXIT_INPUT


def cmd_check(path, *, cap=DEFAULT_CAP, fmt="json", out=None) -> int:
    out = out or sys.stdout
    try:
        qf = load_query_file(path)
        v = Engine(qf.assessment, cap=cap).consistent()
    except (CochoiceError, ValueError) as exc:
        return _error(out, exc, fmt)
    if fmt == "json":
        print(dumps(v.to_json()), file=out)
    else:
        kind = (v.evidence.__class__.__name__ if v.evidence is not None else "")
        print(("consistent" if v.answer else "inconsistent") + f" ({kind})", file=out)
    return EXIT_OK if v.answer else EXIT_NO


def cmd_query(path, *, cap=DEFAULT_CAP, verify=False, fmt="json", workers=1, out=None) -> int:
    out = out or sys.stdout
    try:
        qf = load_query_file(path)
        engine = Engine(qf.assessment, cap=cap, workers=workers)
        if not engine.is_consistent() and any(q.op != "consistent" for q in qf.queries):
            raise InconsistentAssessment("assessment is inconsistent; its natural extension is undefined")
    except InconsistentAssessment as exc:
        _error(out, exc, fmt)
        return EXIT_NO
    except (CochoiceError, ValueError) as exc:
        return _error(out, exc, fmt)
    code = EXIT_OK
    for i, q in enumerate(qf.queries):
        try:
            res = run_query(engine, q, verify)
        except SelectionCapExceeded as exc:
            return _error(out, exc, fmt)
        except (CochoiceError, ValueError) as exc:
            res = {"op": q.op, "error": type(exc).__name__, "message": str(exc)}
            code = max(code, EXIT_INPUT)
        if res.get("verified") is False:
            code = EXIT_VERIFY
        if fmt == "json":
            print(dumps({"index": i, **res}), file=out)
        else:
            print(_text_line(i, res) if "error" not in res else f"[{i}] {q.op}: error {res['message']}",
                  file=out)
    return code


def run_selftest(seed=DEFAULT_SEED, *, corpus=None, suite_names=None, sizes=None, out=None) -> int:
    """Run the corpus and the randomized suites; print one line each; 0 iff all pass.

    ``sizes`` maps a suite name to keyword overrides such as ``{"count": 10}``.
    """
    out = out or sys.stdout
    corpus = default_corpus() if corpus is None else corpus
    sizes = sizes or {}
    first = None
    passed = 0
    for case in corpus:
        good, got = case.passes()
        if good:
            passed += 1
        elif first is None:
            first = f"corpus case {case.name!r}: expected {case.expected!r}, got {got!r}"
    print(f"{'PASS' if passed == len(corpus) else 'FAIL'} corpus: {passed}/{len(corpus)} cases",
          file=out)
    ok = passed == len(corpus)
    for name in suites.SUITES if suite_names is None else suite_names:
        rep = suites.SUITES[name](seed=seed, **sizes.get(name, {}))
        print(rep.line(), file=out)
        if not rep.ok:
            ok = False
            if first is None:
                first = f"{name}: {(rep.violations or rep.evidence_failures)[0]}"
    if first is not None:
        print(f"first failure: {first}", file=out)
    print("selftest " + ("passed" if ok else "FAILED") + f" (seed {seed})", file=out)
    return EXIT_OK if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cochoice", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="maximum number of selections to enumerate")
        sp.add_argument("--format", choices=("json", "text"), default="json")

    c = sub.add_parser("check", help="decide consistency of an assessment file")
    c.add_argument("file")
    common(c)
    q = sub.add_parser("query", help="answer the queries in a file")
    q.add_argument("file")
    common(q)
    q.add_argument("--verify", action="store_true",
                   help="re-check every certificate and witness before output")
    q.add_argument("--workers", type=int, default=1)
    s = sub.add_parser("selftest", help="run the built-in corpus and randomized suites")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--suite", action="append", choices=list(suites.SUITES),
                   help="run only the named suite (repeatable)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        return cmd_check(args.file, cap=args.cap, fmt=args.format)
    if args.command == "query":
        return cmd_query(args.file, cap=args.cap, verify=args.verify, fmt=args.format,
                         workers=args.workers)
    return run_selftest(args.seed, suite_names=args.suite)


if __name__ == "__main__":
    sys.exit(main())
