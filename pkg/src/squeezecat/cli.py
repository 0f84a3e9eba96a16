"""Command-line client for the squeezecat service.

The CLI is a thin client: it ships the scenario config to the service layer
(in-process by default, or a remote server via --server) and serializes the
responses to CSV/JSON.  All number formatting uses the shortest decimal that
round-trips the underlying double, so identical configs produce byte-identical
files.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 config or
usage error.
"""

import argparse
import json
import sys
from pathlib import Path

from . import __version__


def _format_number(x) -> str:
    if x is None:
        return "nan"
    return repr(float(x))


def _json_error_detail(payload) -> str:
    try:
        detail = payload.json().get("detail")
    except Exception:
        return payload.text
    if isinstance(detail, str):
        return detail
    return json.dumps(detail)


class ServiceClient:
    """HTTP access to the service, in-process unless a server URL is given."""

    def __init__(self, server=None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings

            with warnings.catch_warnings():
                # starlette's test client warns about its httpx backend at import
                warnings.simplefilter("ignore", DeprecationWarning)
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path, payload):
        return self._client.post(path, json=payload)


def _load_config_file(path):
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise SystemExit(f"error: cannot read config {path}: {err}") from err
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        print(f"error: config {path} is not valid JSON: {err.msg} "
              f"(line {err.lineno}, column {err.colno})", file=sys.stderr)
        raise SystemExit(2) from err


def _request(client, path, payload):
    resp = client.post(path, payload)
    if resp.status_code in (400, 422):
        print(f"error: {_json_error_detail(resp)}", file=sys.stderr)
        raise SystemExit(2)
    if resp.status_code != 200:
        print(f"error: service returned HTTP {resp.status_code}: {resp.text}",
              file=sys.stderr)
        raise SystemExit(2)
    return resp.json()


def _header_lines(data, extra=None):
    lines = [f"# squeezecat {data['version']}", f"# config_hash={data['config_hash']}"]
    if extra:
        lines.append(extra)
    return lines


def _write_csv(path, data, extra_header=None, trailer=None):
    lines = _header_lines(data, extra_header)
    lines.append(",".join(data["columns"]))
    for row in data["rows"]:
        lines.append(",".join(_format_number(x) for x in row))
    if trailer:
        lines.append(trailer)
    Path(path).write_text("\n".join(lines) + "\n")


def cmd_verify(client, args, config):
    data = _request(client, "/verify", {"config": config, "preset": args.preset})
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "verify_report.json").write_text(
        json.dumps(data, indent=2, sort_keys=True) + "\n"
    )
    name_w = max(len(c["name"]) for c in data["checks"])
    for c in data["checks"]:
        value = "error" if c["value"] is None else f"{c['value']:.3e}"
        status = "PASS" if c["passed"] else "FAIL"
        line = (f"{c['name']:<{name_w}}  {value:>10} {c['comparison']:>2} "
                f"{c['threshold']:.3e}  {status}")
        if not c["passed"] and c["detail"]:
            line += f"  [{c['detail']}]"
        print(line)
    overall = "PASS" if data["overall_pass"] else "FAIL"
    print(f"overall: {overall}  (report: {out / 'verify_report.json'})")
    return 0 if data["overall_pass"] else 1


def cmd_evolve(client, args, config):
    data = _request(client, "/evolve", {"config": config, "preset": args.preset})
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    trailer = "# leakage_abort: trajectory truncated at the last row" if data["aborted"] else None
    _write_csv(out / "timeseries.csv", data, trailer=trailer)
    print(f"wrote {out / 'timeseries.csv'} ({len(data['rows'])} rows"
          f"{', aborted' if data['aborted'] else ''})")
    return 0


def cmd_wigner(client, args, config):
    payload = {"config": config, "preset": args.preset}
    if args.t is not None:
        payload["t"] = args.t
    data = _request(client, "/wigner", payload)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    provenance = (f"# state outcome={data['outcome']} t={_format_number(data['t'])} "
                  f"params_hash={data['params_hash']}")
    _write_csv(out / "wigner.csv", data, extra_header=provenance)
    print(f"wrote {out / 'wigner.csv'} ({len(data['rows'])} rows)")
    return 0


def cmd_sweep(client, args, config):
    data = _request(client, "/sweep", {"config": config, "preset": args.preset})
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write_csv(out / "sweep.csv", data)
    print(f"wrote {out / 'sweep.csv'} ({len(data['rows'])} rows)")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="squeezecat",
        description="Simulate and verify squeezed-state superposition preparation",
    )
    parser.add_argument("--version", action="version", version=f"squeezecat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to a JSON scenario config")
    common.add_argument("--out", default=".", help="output directory (default: .)")
    common.add_argument("--preset", choices=["default", "deep-squeeze"],
                        default="default", help="base parameter preset")
    common.add_argument("--server", help="URL of a running service "
                        "(default: run in-process)")
    sub.add_parser("verify", parents=[common],
                   help="run the full identity/verification suite")
    sub.add_parser("evolve", parents=[common],
                   help="evolve the scenario and write timeseries.csv")
    wig = sub.add_parser("wigner", parents=[common],
                         help="write a Wigner grid CSV for one collapsed branch")
    wig.add_argument("--t", type=float, default=None,
                     help="evaluation time (default: wigner_spec.t from the config)")
    sub.add_parser("sweep", parents=[common],
                   help="sweep beta and write preparation-time/residual columns")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = _load_config_file(args.config) if args.config else None
    client = ServiceClient(args.server)
    handlers = {
        "verify": cmd_verify,
        "evolve": cmd_evolve,
        "wigner": cmd_wigner,
        "sweep": cmd_sweep,
    }
    return handlers[args.command](client, args, config)


if __name__ == "__main__":
    sys.exit(main())
