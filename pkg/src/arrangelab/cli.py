"""Command-line client for the arrangelab service.

Commands are thin wrappers over the HTTP endpoints.  By default requests are
served in-process through an ASGI transport, so no server is needed; pass
--server URL to talk to a running instance instead.

    arrangelab analyze graph.txt
    arrangelab nice graph.g6 --chain
    arrangelab lattice graph.txt --format dot
    arrangelab verify --max-n 4
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx


def _call(path: str, payload: dict, server: str | None) -> dict:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            resp = client.post(path, json=payload)
    else:
        from .service import app

        async def go():
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://arrangelab", timeout=None
            ) as client:
                return await client.post(path, json=payload)

        resp = asyncio.run(go())
    body = resp.json()
    if resp.status_code != 200:
        detail = body.get("detail", body) if isinstance(body, dict) else body
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(2)  # parse errors and resource bounds exit 2
    return body


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _graph_payload(args) -> dict:
    return {"text": _read_input(args.input), "format": args.input_format}


def _emit(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _add_graph_command(sub, name, help_text):
    p = sub.add_parser(name, help=help_text)
    p.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin")
    p.add_argument(
        "--input-format",
        choices=["auto", "edgelist", "graph6"],
        default="auto",
        help="input format (auto-detected by default)",
    )
    p.add_argument("--server", default=None, help="base URL of a running service")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrangelab",
        description="Nice partitions and intersection lattices of graphical arrangements",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    _add_graph_command(sub, "analyze", "blocks, chordality, supersolvability, char poly")

    p = _add_graph_command(sub, "nice", "enumerate nice partitions")
    p.add_argument("--limit", type=int, default=None, help="emit at most this many partitions")
    p.add_argument("--chain", action="store_true", help="emit a modular chain per partition")
    p.add_argument("--max-hyperplanes", type=int, default=15,
                   help="enumeration bound on the number of hyperplanes")

    p = _add_graph_command(sub, "chain", "list maximal modular chains")
    p.add_argument("--limit", type=int, default=None)

    p = _add_graph_command(sub, "lattice", "emit the intersection lattice")
    p.add_argument("--format", choices=["json", "dot"], default="json")

    _add_graph_command(sub, "char-poly", "characteristic polynomial only")

    p = sub.add_parser("verify", help="run the theorem verification campaign")
    p.add_argument("--max-n", type=int, default=5, help="largest vertex count (<= 7)")
    p.add_argument("--theorems", default="T1,T2,T3,T4", help="comma list from T1..T4")
    p.add_argument("--corpus", default=None, help="graph6 file replacing the generator")
    p.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    p.add_argument("--server", default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "analyze":
        _emit(_call("/analyze", {"graph": _graph_payload(args)}, args.server))
        return 0

    if args.command == "nice":
        payload = {
            "graph": _graph_payload(args),
            "limit": args.limit,
            "chains": args.chain,
            "max_hyperplanes": args.max_hyperplanes,
        }
        _emit(_call("/nice", payload, args.server))
        return 0

    if args.command == "chain":
        payload = {"graph": _graph_payload(args), "limit": args.limit}
        _emit(_call("/chain", payload, args.server))
        return 0

    if args.command == "lattice":
        payload = {"graph": _graph_payload(args), "format": args.format}
        body = _call("/lattice", payload, args.server)
        if args.format == "dot":
            print(body["dot"], end="")
        else:
            _emit(body["lattice"])
        return 0

    if args.command == "char-poly":
        _emit(_call("/char-poly", {"graph": _graph_payload(args)}, args.server))
        return 0

    if args.command == "verify":
        theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]
        payload = {"max_n": args.max_n, "theorems": theorems, "workers": args.workers}
        if args.corpus:
            payload["corpus"] = _read_input(args.corpus)
        body = _call("/verify", payload, args.server)
        _emit(body["report"])
        return int(body["exit_code"])

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
