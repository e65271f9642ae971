"""Command-line client for the lab service.

Every subcommand issues requests against the HTTP API; by default the app is
mounted in-process (no server needed), while ``--server URL`` targets a
running instance (see ``randcomplex serve``).

Exit codes: 0 all-pass, 1 verification failure, 2 usage or request error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


class RequestError(Exception):
    pass


def _call(server: str | None, path: str, payload: dict) -> dict:
    async def go() -> dict:
        if server:
            async with httpx.AsyncClient(base_url=server, timeout=None) as client:
                resp = await client.post(path, json=payload)
                body = resp.json()
                status = resp.status_code
        else:
            from .service.app import create_app

            transport = httpx.ASGITransport(app=create_app())
            async with httpx.AsyncClient(
                transport=transport, base_url="http://lab", timeout=None
            ) as client:
                resp = await client.post(path, json=payload)
                body = resp.json()
                status = resp.status_code
        if status >= 400:
            raise RequestError(f"{path} failed ({status}): {body.get('detail', body)}")
        return body

    return asyncio.run(go())


def _parse_probs(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise RequestError(f"cannot parse probability list {text!r}") from None


def _parse_axis(text: str) -> list[float]:
    # either a comma list "0,0.25,0.5" or a linspace "lo:hi:steps"
    if ":" in text:
        lo, hi, steps = text.split(":")
        lo, hi, steps = float(lo), float(hi), int(steps)
        if steps < 1:
            raise RequestError("axis needs at least one step")
        if steps == 1:
            return [lo]
        return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]
    return [float(x) for x in text.split(",") if x != ""]


def _parse_alphas(text: str) -> tuple[list[float], list[float], list[float]]:
    parts = text.split(";")
    if len(parts) != 3:
        raise RequestError("--alphas needs three ;-separated axes (alpha0;alpha1;alpha2)")
    return tuple(_parse_axis(p) for p in parts)  # type: ignore[return-value]


def _write_out(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _complex_lines(path: str) -> list[dict]:
    records = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(json.loads(line))
    return records


def _cmd_sample(args) -> int:
    body = _call(
        args.server,
        "/sample",
        {"n": args.n, "r": args.r, "p": _parse_probs(args.p), "seed": args.seed, "count": args.count},
    )
    lines = "".join(
        json.dumps(c, separators=(",", ":")) + "\n" for c in body["complexes"]
    )
    _write_out(lines, args.out)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    payload = {"n": args.n, "r": args.r}
    if args.p:
        payload["p"] = _parse_probs(args.p)
    if args.guard is not None:
        payload["guard"] = args.guard
    body = _call(args.server, "/enumerate", payload)
    _write_out(json.dumps(body, indent=2), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    grid = [_parse_probs(part) for part in args.p_grid.split(";") if part]
    body = _call(args.server, "/verify", {"n": args.n, "r": args.r, "p_grid": grid})
    for rep in body["reports"]:
        status = "PASS" if rep["passed"] else "FAIL"
        print(
            f"[{status}] {rep['name']}: {rep['cases']} cases, "
            f"max |err| = {rep['max_abs_err']:.3e} (tol {rep['tolerance']:.0e})"
        )
    return EXIT_OK if body["all_passed"] else EXIT_VERIFICATION_FAILED


def _cmd_mc(args) -> int:
    body = _call(
        args.server,
        "/mc",
        {
            "metric": args.metric,
            "n": args.n,
            "r": args.r,
            "p": _parse_probs(args.p),
            "seed": args.seed,
            "trials": args.trials,
        },
    )
    _write_out(json.dumps(body, indent=2), args.out)
    if body.get("verdict") == "fail":
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def _cmd_sweep(args) -> int:
    a0, a1, a2 = _parse_alphas(args.alphas)
    body = _call(
        args.server,
        "/sweep",
        {
            "alpha0": a0,
            "alpha1": a1,
            "alpha2": a2,
            "n": args.n,
            "trials": args.trials,
            "metric": args.metric,
            "seed": args.seed,
        },
    )
    if args.format == "csv":
        _write_out(body["csv"], args.out)
    else:
        _write_out(json.dumps(body["rows"], indent=2), args.out)
    return EXIT_OK


def _cmd_check(args) -> int:
    records = _complex_lines(args.infile)
    body = _call(args.server, "/check", {"what": args.what, "complexes": records})
    lines = "".join(
        json.dumps(v, separators=(",", ":")) + "\n" for v in body["verdicts"]
    )
    _write_out(lines, args.out)
    return EXIT_OK


def _cmd_law(args) -> int:
    if args.law_command == "link":
        body = _call(args.server, "/law/link", {"p": _parse_probs(args.p), "k": args.k})
    elif args.law_command == "links-intersection":
        body = _call(
            args.server, "/law/links-intersection", {"p": _parse_probs(args.p), "k": args.k}
        )
    elif args.law_command == "intersect":
        body = _call(
            args.server,
            "/law/intersection",
            {"p": _parse_probs(args.p), "q": _parse_probs(args.q)},
        )
    elif args.law_command == "restriction":
        body = _call(args.server, "/law/restriction", {"p": _parse_probs(args.p)})
    elif args.law_command == "degree":
        body = _call(
            args.server,
            "/law/degree",
            {"p": _parse_probs(args.p), "n": args.n, "k": args.k},
        )
    else:  # preset
        payload = {"name": args.name, "p": args.value}
        if args.r is not None:
            payload["r"] = args.r
        body = _call(args.server, "/law/preset", payload)
    _write_out(json.dumps(body, indent=2), args.out)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="randcomplex",
        description="Multi-parameter random simplicial complex laboratory.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="lab service URL; when omitted the service runs in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sample = sub.add_parser("sample", help="draw seeded complexes as NDJSON")
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--r", type=int, required=True)
    p_sample.add_argument("--p", required=True, help="comma-separated p_0..p_r")
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--count", type=int, default=1)
    p_sample.add_argument("--out", default=None)
    p_sample.set_defaults(func=_cmd_sample)

    p_enum = sub.add_parser("enumerate", help="list a tiny sample space exactly")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--r", type=int, required=True)
    p_enum.add_argument("--p", default=None, help="include exact probabilities")
    p_enum.add_argument("--guard", type=int, default=None)
    p_enum.add_argument("--out", default=None)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run the closed-form identity suite")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--r", type=int, required=True)
    p_verify.add_argument(
        "--p-grid",
        default="0.6,0.5,0.4",
        help="semicolon-separated parameter vectors, e.g. '0.6,0.5;1,0.3'",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_mc = sub.add_parser("mc", help="Monte Carlo estimate of a named metric")
    p_mc.add_argument("--metric", required=True)
    p_mc.add_argument("--n", type=int, required=True)
    p_mc.add_argument("--r", type=int, required=True)
    p_mc.add_argument("--p", required=True)
    p_mc.add_argument("--seed", type=int, default=0)
    p_mc.add_argument("--trials", type=int, default=1000)
    p_mc.add_argument("--out", default=None)
    p_mc.set_defaults(func=_cmd_mc)

    p_sweep = sub.add_parser("sweep", help="exponent-grid Monte Carlo sweep")
    p_sweep.add_argument(
        "--alphas",
        required=True,
        help="three ;-separated axes, each '0,0.5' or 'lo:hi:steps'",
    )
    p_sweep.add_argument("--n", type=int, required=True)
    p_sweep.add_argument("--trials", type=int, required=True)
    p_sweep.add_argument("--metric", default="connected_fraction")
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--out", default=None)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_check = sub.add_parser("check", help="verdicts for complexes from a NDJSON file")
    p_check.add_argument("--in", dest="infile", required=True)
    p_check.add_argument(
        "--what",
        choices=("connected", "isolated", "certificate", "dimension"),
        required=True,
    )
    p_check.add_argument("--out", default=None)
    p_check.set_defaults(func=_cmd_check)

    p_law = sub.add_parser("law", help="closed-form parameter transforms")
    law_sub = p_law.add_subparsers(dest="law_command", required=True)
    for name in ("link", "links-intersection"):
        q = law_sub.add_parser(name)
        q.add_argument("--p", required=True)
        q.add_argument("--k", type=int, required=True)
        q.add_argument("--out", default=None)
        q.set_defaults(func=_cmd_law)
    q = law_sub.add_parser("intersect")
    q.add_argument("--p", required=True)
    q.add_argument("--q", required=True)
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_law)
    q = law_sub.add_parser("restriction")
    q.add_argument("--p", required=True)
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_law)
    q = law_sub.add_parser("degree")
    q.add_argument("--p", required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_law)
    q = law_sub.add_parser("preset")
    q.add_argument("--name", required=True)
    q.add_argument("--value", type=float, required=True, help="the free probability p")
    q.add_argument("--r", type=int, default=None)
    q.add_argument("--out", default=None)
    q.set_defaults(func=_cmd_law)

    p_serve = sub.add_parser("serve", help="run the lab service over HTTP")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RequestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
