"""Command-line client for the twistgroups service.

By default the CLI talks to the FastAPI app in-process, so no server
needs to be running; ``--server URL`` points it at a live instance
instead.  Exit codes: 0 success / affirmative, 1 negative result,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, Optional

import httpx


def _client(server: Optional[str]) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DeprecationWarning)
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _print_json(doc: Any) -> None:
    print(json.dumps(doc, ensure_ascii=False, indent=2))


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _post(client: httpx.Client, path: str, body: Dict[str, Any]) -> Dict[str, Any]:
    resp = client.post(path, json=body)
    if resp.status_code == 404 and path == "/witness":
        raise CliError(resp.json()["detail"], code=1)
    if resp.status_code >= 400:
        try:
            detail = resp.json()["detail"]
        except Exception:
            detail = resp.text
        raise CliError(f"error: {detail}")
    return resp.json()


def _add_context_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--i", type=int, required=True, metavar="N",
                   help="geometric intersection number i(a,b)")
    p.add_argument("--torus", action="store_true",
                   help="the surface is the torus (only meaningful with --i 1)")


def _context_body(args: argparse.Namespace) -> Dict[str, Any]:
    if args.torus and args.i != 1:
        raise CliError("--torus is only meaningful with --i 1")
    if args.i < 0:
        raise CliError("--i must be a nonnegative integer")
    return {"intersection": args.i, "torus": args.torus}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistgroups",
        description="Decide the structure of G = <X, T_a> for "
                    "X = (T_aT_b)^k or (T_bT_a)^k.",
    )
    parser.add_argument("--server", metavar="URL",
                        help="URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify G = <X, T_a>")
    p.add_argument("--form", choices=["ab", "ba"], required=True)
    p.add_argument("--k", type=int, required=True)
    _add_context_args(p)
    p.add_argument("--no-certificates", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("eq", help="decide equality of two words")
    _add_context_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("words", nargs=2, metavar="WORD")

    p = sub.add_parser("reduce", help="freely reduce a word")
    p.add_argument("--json", action="store_true")
    p.add_argument("word", metavar="WORD")

    p = sub.add_parser("rep", help="evaluate a word in a representation")
    p.add_argument("--rep", choices=["sl2", "burau", "exponent"], required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("word", metavar="WORD")

    p = sub.add_parser("member", help="subgroup membership via Stallings graph")
    p.add_argument("--gen", action="append", required=True, metavar="WORD",
                   help="subgroup generator (repeatable)")
    p.add_argument("--json", action="store_true")
    p.add_argument("word", metavar="WORD")

    p = sub.add_parser("index", help="index and rank of a subgroup of F_2")
    p.add_argument("--gen", action="append", default=[], metavar="WORD")
    p.add_argument("--dump", action="store_true", help="print the core graph")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("witness", help="word in X, Y generating T_b")
    p.add_argument("--form", choices=["ab", "ba"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("conj", help="canonical conjugate of T_a by X")
    p.add_argument("--form", choices=["ab", "ba"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dir", choices=["by_X", "by_X_inverse"], default="by_X")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("torus", help="curve queries on the torus")
    tsub = p.add_subparsers(dest="torus_command", required=True)
    t = tsub.add_parser("intersect", help="geometric intersection number")
    t.add_argument("--json", action="store_true")
    t.add_argument("curves", nargs=2, metavar="P,Q")
    t = tsub.add_parser("twist", help="apply T_v^n to a class")
    t.add_argument("--n", type=int, default=1)
    t.add_argument("--json", action="store_true")
    t.add_argument("curves", nargs=2, metavar="P,Q")
    t = tsub.add_parser("matrix", help="matrix of the twist along a class")
    t.add_argument("--json", action="store_true")
    t.add_argument("curve", metavar="P,Q")

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--quiet", action="store_true",
                   help="summary only, no per-check lines")
    p.add_argument("--json", action="store_true")

    return parser


def _parse_curve(text: str) -> Dict[str, int]:
    try:
        p, q = (int(part) for part in text.split(","))
    except ValueError:
        raise CliError(f"expected a curve as 'p,q', got {text!r}")
    return {"p": p, "q": q}


def _dispatch(args: argparse.Namespace, client: httpx.Client) -> int:
    cmd = args.command

    if cmd == "classify":
        body = {"form": args.form, "k": args.k,
                "certificates": not args.no_certificates,
                **_context_body(args)}
        doc = _post(client, "/classify", body)
        if args.json:
            human = doc.pop("human")
            _print_json(doc)
        else:
            print(doc["human"])
        return 0

    if cmd == "eq":
        body = {"w1": args.words[0], "w2": args.words[1], **_context_body(args)}
        doc = _post(client, "/words/eq", body)
        if args.json:
            _print_json(doc)
        else:
            print("equal" if doc["equal"] else "not equal")
        return 0 if doc["equal"] else 1

    if cmd == "reduce":
        doc = _post(client, "/words/reduce", {"word": args.word})
        _print_json(doc) if args.json else print(doc["reduced"])
        return 0

    if cmd == "rep":
        doc = _post(client, "/words/rep", {"word": args.word, "rep": args.rep})
        if args.json:
            _print_json(doc)
        elif args.rep == "exponent":
            print(tuple(doc["vector"]))
        else:
            for row in doc["matrix"]:
                print("[" + ", ".join(str(e) for e in row) + "]")
        return 0

    if cmd == "member":
        body = {"generators": args.gen, "word": args.word}
        doc = _post(client, "/subgroup", body)
        if args.json:
            _print_json({"member": doc["member"]})
        else:
            print("member" if doc["member"] else "not a member")
        return 0 if doc["member"] else 1

    if cmd == "index":
        body = {"generators": args.gen, "dump": args.dump}
        doc = _post(client, "/subgroup", body)
        if args.json:
            _print_json(doc)
        else:
            print(f"index: {doc['index']}")
            print(f"rank: {doc['rank']}")
            if args.dump:
                print(doc["graph"])
        return 0

    if cmd == "witness":
        doc = _post(client, "/witness", {"form": args.form, "k": args.k})
        if args.json:
            _print_json(doc)
        else:
            print(" ".join(doc["witness"]))
            print(f"reduces to: {doc['substituted']}")
        return 0

    if cmd == "conj":
        doc = _post(client, "/conjugation",
                    {"form": args.form, "k": args.k, "direction": args.dir})
        _print_json(doc) if args.json else print(doc["conjugate"])
        return 0

    if cmd == "torus":
        tcmd = args.torus_command
        if tcmd == "intersect":
            body = {"u": _parse_curve(args.curves[0]),
                    "v": _parse_curve(args.curves[1])}
            doc = _post(client, "/torus/intersection", body)
            _print_json(doc) if args.json else print(doc["intersection"])
            return 0
        if tcmd == "twist":
            body = {"v": _parse_curve(args.curves[0]),
                    "w": _parse_curve(args.curves[1]), "n": args.n}
            doc = _post(client, "/torus/twist", body)
            if args.json:
                _print_json(doc)
            else:
                p, q = doc["result"]
                print(f"{p},{q}")
            return 0
        body = {"v": _parse_curve(args.curve)}
        doc = _post(client, "/torus/matrix", body)
        if args.json:
            _print_json(doc)
        else:
            for row in doc["matrix"]:
                print("[" + ", ".join(str(e) for e in row) + "]")
        return 0

    if cmd == "verify":
        doc = _post(client, "/verify", {"suite": args.suite, "kmax": args.kmax})
        if args.json:
            _print_json(doc)
        else:
            if not args.quiet:
                for check in doc["checks"]:
                    mark = "PASS" if check["ok"] else "FAIL"
                    print(f"{mark}  {check['name']}")
            print(f"suite {doc['suite']}: {doc['total'] - doc['failures']}"
                  f"/{doc['total']} checks passed")
        return 0 if doc["passed"] else 1

    raise CliError(f"unknown command {cmd!r}")


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with _client(args.server) as client:
            return _dispatch(args, client)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
