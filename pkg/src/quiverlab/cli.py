"""Command-line front end.

Thin wrapper over the library; the --json switches print exactly the payloads
the HTTP service returns, built by the same code (payloads module).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from .classify import ReferenceCatalog, classify_quiver
from .errors import InvalidQuiverError, QuiverError
from .formats import format_text, parse_json, parse_text
from .mutclass import (
    DEFAULT_MAX_SIZE,
    DEFAULT_WEIGHT_ABORT,
    dump_class_jsonl,
    enumerate_class,
)
from .payloads import analyze_payload, class_payload, classify_payload, dumps, quiver_payload
from .quiver import Quiver
from .service import default_cache_dir

PROG = "quiverlab"


def _load(path: str) -> Quiver:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def _vertex_args(q: Quiver, specs: list[str]) -> list[int]:
    ks = []
    for spec in specs:
        for part in spec.split(","):
            part = part.strip()
            if not part:
                continue
            try:
                k = int(part)
            except ValueError:
                raise InvalidQuiverError(f"bad vertex {part!r} in -k")
            if not 1 <= k <= q.n:
                raise InvalidQuiverError(f"vertex {k} out of range 1..{q.n}",
                                         code="vertex_out_of_range")
            ks.append(k - 1)
    return ks


def _cmd_mutate(args) -> int:
    q = _load(args.file)
    for k in _vertex_args(q, args.k):
        q = q.mutate(k)
    if args.json:
        print(dumps(quiver_payload(q)))
    else:
        sys.stdout.write(format_text(q))
    return 0


def _cmd_invariants(args) -> int:
    q = _load(args.file)
    payload = analyze_payload(q)
    if args.json:
        print(dumps(payload))
        return 0
    print(f"n: {q.n}")
    print(f"connected: {'true' if q.is_connected() else 'false'}")
    print(f"max_weight: {q.max_weight()}")
    print(f"rank_Z: {payload['rank_z']}")
    print(f"corank_Z: {payload['corank_z']}")
    print(f"corank_GF2: {payload['corank_gf2']}")
    print(f"dim_V00: {payload['dim_v00']}")
    print(f"quotient_dim: {payload['quotient_dim']}")
    return 0


def _fmt_vertices(vs: list[int]) -> str:
    return "{" + ",".join(str(v) for v in vs) + "}"


def _cmd_patterns(args) -> int:
    q = _load(args.file)
    payload = analyze_payload(q)
    if args.json:
        print(dumps(payload))
        return 0
    if payload["double_edges"]:
        print("double edges:")
        for pair in payload["double_edges"]:
            print(f"  {_fmt_vertices(pair)}")
    else:
        print("double edges: none")
    if payload["cycles"]:
        print("induced cycles:")
        for c in payload["cycles"]:
            tag = "oriented" if c["oriented"] else "non-oriented"
            print(f"  {_fmt_vertices(c['vertices'])} {tag}")
    else:
        print("induced cycles: none")
    if payload["basic_subquivers"]:
        print("basic subquivers:")
        for s in payload["basic_subquivers"]:
            print(f"  {s['kind']} {_fmt_vertices(s['vertices'])}")
    else:
        print("basic subquivers: none")
    cert = payload["infinite_certificate"]
    print("infinite certificate: " + (cert["description"] if cert else "none"))
    return 0


def _cmd_class(args) -> int:
    q = _load(args.file)
    mc = enumerate_class(q, max_size=args.max_size, weight_abort=args.weight_abort)
    if args.dump:
        target = Path(args.dump)
        if target.is_dir():
            target = target / "class.jsonl"
        with open(target, "w") as fh:
            dump_class_jsonl(mc, fh)
    if args.json:
        print(dumps(class_payload(mc)))
        return 0
    print(f"size: {mc.size}")
    print(f"status: {mc.status.value}")
    if mc.witness is not None:
        print("witness:")
        for line in format_text(mc.witness).splitlines():
            print(f"  {line}")
    return 0


def _make_catalog(cache_dir: Optional[str]) -> ReferenceCatalog:
    return ReferenceCatalog(cache_dir=Path(cache_dir) if cache_dir else default_cache_dir())


def _cmd_classify(args) -> int:
    q = _load(args.file)
    catalog = _make_catalog(args.catalog)
    c = classify_quiver(q, catalog, max_size=args.max_size,
                        weight_abort=args.weight_abort)
    if args.json:
        print(dumps(classify_payload(c)))
        return 0
    print(c.describe())
    print("evidence:")
    for line in c.evidence:
        print(f"  {line}")
    return 0


def _cmd_catalog(args) -> int:
    catalog = ReferenceCatalog(cache_dir=Path(args.dir))
    sizes = catalog.build()
    for name, size in sizes.items():
        print(f"{name}: {size}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(_make_catalog(args.catalog))
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def _add_input(p):
    p.add_argument("file", help="quiver file (text or JSON), or - for stdin")


def _add_caps(p, default_max=DEFAULT_MAX_SIZE):
    p.add_argument("--max-size", type=int, default=default_max,
                   help="abort enumeration beyond this many classes")
    p.add_argument("--weight-abort", type=int, default=DEFAULT_WEIGHT_ABORT,
                   help="abort when an edge reaches this weight (n >= 3)")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog=PROG, description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="apply a mutation sequence")
    p.add_argument("-k", action="append", default=[], metavar="V1,V2,...",
                   help="1-based vertices, applied left to right; repeatable")
    p.add_argument("--json", action="store_true")
    _add_input(p)
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("invariants", help="rank/corank and GF(2) invariants")
    p.add_argument("--json", action="store_true")
    _add_input(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("patterns", help="cycles, basic subquivers, certificates")
    p.add_argument("--json", action="store_true")
    _add_input(p)
    p.set_defaults(func=_cmd_patterns)

    p = sub.add_parser("class", help="enumerate the mutation class")
    _add_caps(p)
    p.add_argument("--dump", metavar="PATH",
                   help="write the class as JSON lines (file or directory)")
    p.add_argument("--json", action="store_true")
    _add_input(p)
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("classify", help="surface / exceptional / infinite verdict")
    _add_caps(p)
    p.add_argument("--catalog", metavar="DIR", help="reference class cache directory")
    p.add_argument("--json", action="store_true")
    _add_input(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("catalog", help="reference catalog maintenance")
    csub = p.add_subparsers(dest="action", required=True)
    b = csub.add_parser("build", help="precompute every reference class")
    b.add_argument("--dir", required=True, help="cache directory to fill")
    b.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8157)
    p.add_argument("--catalog", metavar="DIR", help="reference class cache directory")
    p.set_defaults(func=_cmd_serve)

    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except QuiverError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
