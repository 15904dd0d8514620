"""Command-line client for the enumeration service.

Every subcommand builds a request, sends it through the HTTP API and renders
the response.  By default requests run against an in-process application
instance (no server or network needed); --server routes them to a running
instance instead.

Exit codes: 0 success; 1 usage or domain error; 2 engine disagreement
(count --method all); 3 failed verification or sequence mismatch; 4 fetch
failure (oeis --fetch only).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from .service.models import (
    BijectionName,
    CountMethod,
    GeneratingFunctionName,
    MeasureName,
    PathClassName,
    SuiteName,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2
EXIT_FAILED_CHECK = 3
EXIT_FETCH_FAILED = 4


class _Parser(argparse.ArgumentParser):
    """argparse with the documented exit code for bad flags."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _values(enum_cls):
    return [member.value for member in enum_cls]


def build_parser():
    parser = _Parser(
        prog="knightpaths",
        description="Exact enumeration of knight's paths and zigzag knight's paths.",
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="send requests to a running service instead of in-process",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", parents=[], help="count partial paths")
    count.add_argument("--class", dest="path_class", required=True,
                       choices=_values(PathClassName))
    count.add_argument("--measure", required=True, choices=_values(MeasureName))
    count.add_argument("--value", required=True, type=int)
    count.add_argument("--height", required=True, type=int)
    count.add_argument("--method", default="dp", choices=_values(CountMethod))

    lst = commands.add_parser("list", help="list partial paths, one word per line")
    lst.add_argument("--class", dest="path_class", required=True,
                     choices=_values(PathClassName))
    lst.add_argument("--measure", required=True, choices=_values(MeasureName))
    lst.add_argument("--value", required=True, type=int)
    lst.add_argument("--height", required=True, type=int)
    lst.add_argument("--format", dest="fmt", default="words", choices=["words", "json"])
    lst.add_argument("--force", action="store_true",
                     help="lift the output-size cap")

    ser = commands.add_parser("series", help="print a generating series")
    ser.add_argument("--gf", required=True, choices=_values(GeneratingFunctionName))
    ser.add_argument("--order", type=int, default=20,
                     help="highest power of z kept (default 20)")
    ser.add_argument("--format", dest="fmt", default="text", choices=["text", "json"])

    mp = commands.add_parser("map", help="apply a bijection to a word")
    mp.add_argument("--bijection", required=True, choices=_values(BijectionName))
    mp.add_argument("--word", required=True,
                    help="path word over N/n/E/e, or lattice word over U/D/F")

    ver = commands.add_parser("verify", help="run verification suites")
    ver.add_argument("--suite", default="all", choices=_values(SuiteName))
    ver.add_argument("--max", dest="max_value", type=int, default=None,
                     help="override exhaustive depth (suite-specific default)")

    oe = commands.add_parser("oeis", help="cross-check a sequence against OEIS data")
    oe.add_argument("--id", required=True, metavar="AXXXXXX")
    oe.add_argument("--max-terms", dest="max_terms", type=int, default=None)
    mode = oe.add_mutually_exclusive_group()
    mode.add_argument("--offline", action="store_true", default=True,
                      help="compare against embedded terms (default)")
    mode.add_argument("--fetch", action="store_true",
                      help="compare against a cached or downloaded b-file")
    oe.add_argument("--cache-dir", dest="cache_dir", default=None)

    srv = commands.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=8000)

    return parser


async def _post_in_process(path, payload):
    from .service.app import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport,
        base_url="http://knightpaths.internal",
        timeout=httpx.Timeout(None),
    ) as client:
        return await client.post(path, json=payload)


def _post(args, path, payload):
    if args.server:
        with httpx.Client(base_url=args.server, timeout=httpx.Timeout(None)) as client:
            return client.post(path, json=payload)
    return asyncio.run(_post_in_process(path, payload))


def _body_or_none(response):
    """Response JSON on success; print the error and return None otherwise."""
    if response.status_code == 200:
        return response.json()
    try:
        detail = response.json().get("detail", response.text)
    except ValueError:
        detail = response.text
    if isinstance(detail, list):  # pydantic validation report
        detail = "; ".join(
            f"{'.'.join(str(p) for p in item.get('loc', []))}: {item.get('msg', '')}"
            for item in detail
        )
    print(f"error: {detail}", file=sys.stderr)
    return None


def _cmd_count(args):
    body = _body_or_none(
        _post(args, "/count", {
            "class": args.path_class,
            "measure": args.measure,
            "value": args.value,
            "height": args.height,
            "method": args.method,
        })
    )
    if body is None:
        return EXIT_USAGE
    record = {key: body[key] for key in ("class", "measure", "n", "k", "count", "method")}
    if body.get("engines") is not None:
        record["engines"] = body["engines"]
        record["agreement"] = body["agreement"]
    print(json.dumps(record))
    if args.method == "all" and not body["agreement"]:
        print("error: counting engines disagree", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


def _cmd_list(args):
    body = _body_or_none(
        _post(args, "/list", {
            "class": args.path_class,
            "measure": args.measure,
            "value": args.value,
            "height": args.height,
            "force": args.force,
        })
    )
    if body is None:
        return EXIT_USAGE
    for word in body["words"]:
        if args.fmt == "json":
            print(json.dumps({"word": word}))
        else:
            print(word)
    return EXIT_OK


def _cmd_series(args):
    body = _body_or_none(_post(args, "/series", {"gf": args.gf, "order": args.order}))
    if body is None:
        return EXIT_USAGE
    if args.fmt == "json":
        print(json.dumps({
            "gf": body["gf"],
            "order": body["order"],
            "coefficients": body["coefficients"],
        }))
    else:
        print(body["text"])
    return EXIT_OK


def _cmd_map(args):
    body = _body_or_none(
        _post(args, "/map", {"bijection": args.bijection, "word": args.word})
    )
    if body is None:
        return EXIT_USAGE
    print(body["image"])
    return EXIT_OK


def _cmd_verify(args):
    body = _body_or_none(
        _post(args, "/verify", {"suite": args.suite, "max_value": args.max_value})
    )
    if body is None:
        return EXIT_USAGE
    for check in body["checks"]:
        status = "ok  " if check["passed"] else "FAIL"
        line = f"{status}  [{check['suite']}] {check['name']}"
        if check["detail"]:
            line += f": {check['detail']}"
        print(line)
    total = len(body["checks"])
    print(f"{total} checks, {body['failures']} failed")
    if not body["passed"]:
        first = next(c for c in body["checks"] if not c["passed"])
        print(
            f"counterexample: [{first['suite']}] {first['name']}: {first['detail']}",
            file=sys.stderr,
        )
        return EXIT_FAILED_CHECK
    return EXIT_OK


def _cmd_oeis(args):
    body = _body_or_none(
        _post(args, "/oeis", {
            "id": args.id,
            "max_terms": args.max_terms,
            "fetch": args.fetch,
            "cache_dir": args.cache_dir,
        })
    )
    if body is None:
        return EXIT_USAGE
    if body["outcome"] == "fetch-error":
        print(f"{body['id']}: fetch failed: {body['detail']}", file=sys.stderr)
        return EXIT_FETCH_FAILED
    if body["outcome"] == "mismatch":
        print(
            f"{body['id']}: MISMATCH at term {body['mismatch_index']}: "
            f"expected {body['expected']}, computed {body['computed']} "
            f"({body['source']}, {body['compared']} terms)",
        )
        return EXIT_FAILED_CHECK
    print(
        f"{body['id']}: ok, {body['compared']} terms match ({body['source']}) "
        f"-- {body['what']}"
    )
    return EXIT_OK


def _cmd_serve(args):
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


_HANDLERS = {
    "count": _cmd_count,
    "list": _cmd_list,
    "series": _cmd_series,
    "map": _cmd_map,
    "verify": _cmd_verify,
    "oeis": _cmd_oeis,
    "serve": _cmd_serve,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
