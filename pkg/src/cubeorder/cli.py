"""Command-line client for the cube-ordering service.

Every subcommand marshals its arguments into a request, sends it to the
service, and formats the response.  By default the service runs in
process, so no server is needed; ``--server URL`` points the same commands
at a running instance instead.

Exit codes: 0 on success or witness found, 1 on a verified negative
(exhausted search, failed verification, non-uniform order), 2 on input
errors.  With ``--format json`` the output is a single JSON document with
sorted keys, byte-identical across runs and worker counts for identical
arguments.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

from .ramsey import parse_sequence_text

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


def make_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        # starlette warns about its own TestClient import; irrelevant here
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient
    from .service import app

    return TestClient(app)


def common_options(fn):
    fn = click.option("--output", type=click.Path(), default=None,
                      help="also write the JSON document to this file")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["text", "json"]),
                      default="text", show_default=True)(fn)
    fn = click.option("--server", default=None, metavar="URL",
                      help="base URL of a running service (default: in process)")(fn)
    return fn


def fail_input(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INPUT)


def call(client: httpx.Client, path: str, payload: dict) -> dict:
    try:
        response = client.post(path, json=payload)
    except httpx.HTTPError as exc:
        fail_input(f"request failed: {exc}")
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        if isinstance(detail, list):  # pydantic validation errors
            detail = "; ".join(
                f"{'.'.join(str(x) for x in item.get('loc', []))}: {item.get('msg', item)}"
                for item in detail
            )
        fail_input(f"{path}: {detail}")
    return response.json()


def emit(doc: dict, lines: list[str], fmt: str, output: str | None) -> None:
    rendered = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    if fmt == "json":
        click.echo(rendered)
    else:
        for line in lines:
            click.echo(line)
    if output:
        Path(output).write_text(rendered + "\n")


def read_json_file(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        fail_input(f"cannot read {path}: {exc}")


def read_sequence_file(path: str) -> list[int]:
    try:
        return list(parse_sequence_text(Path(path).read_text()))
    except (OSError, ValueError) as exc:
        fail_input(f"cannot read sequence {path}: {exc}")


def check_dims(doc: dict, k: int | None, n: int | None, m: int | None, r: int | None) -> None:
    for flag, key in ((k, "k"), (n, "n"), (m, "m"), (r, "r")):
        if flag is not None and key in doc and doc[key] != flag:
            fail_input(f"input has {key}={doc[key]}, expected {flag}")


@click.group()
def main() -> None:
    """Orderings of combinatorial cubes: enumeration, classification, and
    Ramsey-type witness searches."""


@main.command("enumerate-trees")
@click.option("--k", type=int, required=True, help="leaf count (at most 8)")
@common_options
def enumerate_trees_cmd(k: int, server: str | None, fmt: str, output: str | None) -> None:
    """List every level tree with k leaves and their count."""
    with make_client(server) as client:
        doc = call(client, "/trees/enumerate", {"k": k})
    lines = [json.dumps(tree, sort_keys=True, separators=(",", ":")) for tree in doc["trees"]]
    lines.append(f"total: {doc['count']}")
    emit(doc, lines, fmt, output)
    sys.exit(EXIT_OK)


@main.command("classify")
@click.option("--input", "input_path", type=click.Path(exists=True), required=True,
              help="order JSON file {k, n, ranks}")
@click.option("--k", type=int, default=None, help="expected alphabet size (cross-check)")
@click.option("--n", type=int, default=None, help="expected length (cross-check)")
@common_options
def classify_cmd(input_path: str, k: int | None, n: int | None,
                 server: str | None, fmt: str, output: str | None) -> None:
    """Uniformity report plus tree classification of an ordering."""
    order = read_json_file(input_path)
    check_dims(order, k, n, None, None)
    with make_client(server) as client:
        doc = call(client, "/orders/classify", {"order": order})
    uniformity = doc["uniformity"]
    lines = [f"uniform: {uniformity['uniform']}"]
    for counterexample in uniformity["counterexamples"]:
        lines.append(
            f"  d={counterexample['d']} differs between subcubes "
            f"{counterexample['patterns'][0]} and {counterexample['patterns'][1]}"
        )
    if doc.get("classification"):
        cls = doc["classification"]
        lines.append(f"tree: {json.dumps(cls['tree'], sort_keys=True, separators=(',', ':'))}")
        lines.append(f"base: {cls['base']}")
        lines.append(f"subcube agreement: {cls['subcube_agreement']}")
        lines.append(f"full cube equal: {cls['full_cube_equal']}")
    elif doc.get("note"):
        lines.append(f"note: {doc['note']}")
    emit(doc, lines, fmt, output)
    sys.exit(EXIT_OK if uniformity["uniform"] else EXIT_NEGATIVE)


@main.command("search")
@click.option("--target", type=click.Choice(["lex", "tree", "monotone-cube", "mono-cube"]),
              required=True)
@click.option("--input", "input_path", type=click.Path(exists=True), required=True,
              help="order file for lex/tree, sequence file for monotone-cube, "
                   "coloring file for mono-cube")
@click.option("--d", type=int, required=True, help="witness dimension")
@click.option("--route", type=click.Choice(["direct", "subcube-coloring"]), default="direct",
              show_default=True, help="search route for mono-cube")
@click.option("--k", type=int, default=None, help="expected alphabet size (cross-check)")
@click.option("--n", type=int, default=None, help="expected length (cross-check)")
@click.option("--m", type=int, default=None, help="expected sequence/graph size (cross-check)")
@click.option("--r", type=int, default=None, help="expected color count (cross-check)")
@common_options
def search_cmd(target: str, input_path: str, d: int, route: str,
               k: int | None, n: int | None, m: int | None, r: int | None,
               server: str | None, fmt: str, output: str | None) -> None:
    """Find the least witness (subcube or affine cube); exit 1 when the
    exhaustive search proves absence."""
    with make_client(server) as client:
        if target in ("lex", "tree"):
            order = read_json_file(input_path)
            check_dims(order, k, n, None, None)
            doc = call(client, "/search/ordered-subcube",
                       {"order": order, "d": d, "family": target})
            if doc["found"]:
                witness = doc["witness"]
                lines = [
                    f"witness subcube: {witness['pattern']}",
                    f"tree: {json.dumps(witness['tree'], sort_keys=True, separators=(',', ':'))}",
                    f"base: {witness['base']}",
                    f"re-verified from scratch: {witness['verified']}",
                ]
            else:
                lines = [f"no {target} witness at d={d} (exhaustive)"]
        elif target == "monotone-cube":
            values = read_sequence_file(input_path)
            if m is not None and len(values) != m:
                fail_input(f"sequence has length {len(values)}, expected {m}")
            doc = call(client, "/search/monotone-cube", {"values": values, "d": d})
            if doc["found"]:
                witness = doc["witness"]
                picked = [values[i - 1] for i in witness["elements"]]
                lines = [
                    f"witness cube: x0={witness['cube']['x0']} xs={witness['cube']['xs']}",
                    f"indices: {witness['elements']}",
                    f"values: {picked}",
                    f"direction: {witness['direction']}",
                    f"re-verified from scratch: {witness['verified']}",
                ]
            else:
                lines = [f"no monotone affine {d}-cube (exhaustive)"]
        else:
            coloring = read_json_file(input_path)
            check_dims(coloring, None, None, m, r)
            doc = call(client, "/search/monochromatic-cube",
                       {"coloring": coloring, "d": d, "route": route})
            if doc["found"]:
                witness = doc["witness"]
                lines = [
                    f"witness cube: x0={witness['cube']['x0']} xs={witness['cube']['xs']}",
                    f"indices: {witness['elements']}",
                    f"color: {witness['color']}",
                    f"re-verified from scratch: {witness['verified']}",
                ]
            else:
                qualifier = "exhaustive" if doc["exhaustive"] else "route inconclusive"
                lines = [f"no monochromatic affine {d}-cube ({qualifier})"]
    emit(doc, lines, fmt, output)
    sys.exit(EXIT_OK if doc["found"] else EXIT_NEGATIVE)


@main.command("sweep")
@click.option("--k", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--mode", type=click.Choice(["exhaustive", "sample"]), required=True)
@click.option("--seed", type=int, default=None, help="required in sample mode")
@click.option("--samples", type=int, default=None, help="required in sample mode")
@click.option("--d", type=int, default=1, show_default=True,
              help="dimension for the lex-subcube hit count")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="worker processes; never changes the output")
@common_options
def sweep_cmd(k: int, n: int, mode: str, seed: int | None, samples: int | None,
              d: int, jobs: int, server: str | None, fmt: str, output: str | None) -> None:
    """Scan orderings of [k]^n and report uniformity statistics."""
    if mode == "sample" and seed is None:
        fail_input("sample mode requires --seed")
    if mode == "sample" and not samples:
        fail_input("sample mode requires --samples")
    payload = {"k": k, "n": n, "mode": mode, "d": d, "jobs": jobs}
    if mode == "sample":
        payload.update(seed=seed, samples=samples)
    with make_client(server) as client:
        doc = call(client, "/sweep", payload)
    lines = [
        f"orders scanned: {doc['orders_scanned']}",
        f"uniform: {doc['uniform_count']}",
        f"lex witness hits at d={doc['d']}: {doc['lex_witness_hits']}",
        f"violations: {len(doc['violations'])}",
        f"notable specimens: {len(doc['notable'])}",
    ]
    if doc.get("generator"):
        lines.append(f"generator: {doc['generator']}")
    emit(doc, lines, fmt, output)
    sys.exit(EXIT_OK)


@main.command("gen-3apfree")
@click.option("--t", type=int, required=True, help="doubling steps; output length 2^t")
@common_options
def gen_3apfree_cmd(t: int, server: str | None, fmt: str, output: str | None) -> None:
    """Emit a sequence with no monotone subsequence on a 3-term progression.

    With --output the file holds the bare JSON array, a valid sequence
    input for the search and verify commands.
    """
    with make_client(server) as client:
        doc = call(client, "/sequences/3ap-free", {"t": t})
    lines = [str(v) for v in doc["values"]]
    emit(doc, lines, fmt, None)
    if output:
        Path(output).write_text(json.dumps(doc["values"]) + "\n")
    sys.exit(EXIT_OK)


@main.command("verify")
@click.option("--target", type=click.Choice(["no-monotone-3ap", "uniform", "tree-like"]),
              required=True)
@click.option("--input", "input_path", type=click.Path(exists=True), required=True,
              help="sequence file for no-monotone-3ap, order JSON otherwise")
@click.option("--k", type=int, default=None, help="expected alphabet size (cross-check)")
@click.option("--n", type=int, default=None, help="expected length (cross-check)")
@click.option("--m", type=int, default=None, help="expected sequence length (cross-check)")
@common_options
def verify_cmd(target: str, input_path: str, k: int | None, n: int | None, m: int | None,
               server: str | None, fmt: str, output: str | None) -> None:
    """Run an exhaustive checker; exit 1 when a violation is found."""
    with make_client(server) as client:
        if target == "no-monotone-3ap":
            values = read_sequence_file(input_path)
            if m is not None and len(values) != m:
                fail_input(f"sequence has length {len(values)}, expected {m}")
            doc = call(client, "/verify/no-monotone-3ap", {"values": values})
            passed = doc["ok"]
            if passed:
                lines = ["no monotone 3-term progression (exhaustive)"]
            else:
                lines = [f"violation: {doc['direction']} on indices {tuple(doc['progression'])}"]
        elif target == "uniform":
            order = read_json_file(input_path)
            check_dims(order, k, n, None, None)
            doc = call(client, "/verify/uniform", {"order": order})
            passed = doc["uniform"]
            lines = [f"uniform: {passed}"]
            for counterexample in doc["counterexamples"]:
                lines.append(
                    f"  d={counterexample['d']} differs between subcubes "
                    f"{counterexample['patterns'][0]} and {counterexample['patterns'][1]}"
                )
        else:
            order = read_json_file(input_path)
            check_dims(order, k, n, None, None)
            doc = call(client, "/verify/tree-like", {"order": order})
            passed = doc["tree_like"]
            if passed:
                lines = ["interval relation is tree-like"]
            else:
                lines = [f"violation of {doc['axiom']} on intervals {doc['witness']}"]
    emit(doc, lines, fmt, output)
    sys.exit(EXIT_OK if passed else EXIT_NEGATIVE)


if __name__ == "__main__":
    main()
