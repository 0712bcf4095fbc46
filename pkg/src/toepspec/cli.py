"""Command-line front end.

Subcommands: `spectrum`, `index`, `verdict`, `experiment`. Symbols come
from JSON files (angles in degrees for readability, converted to radians
at the boundary); outputs are CSV tables, optionally with matplotlib
figures rendered next to them. All outputs are deterministic: repeated
runs on the same inputs produce identical bytes.

Exit codes: 0 success, 2 parse error, 3 domain or budget error,
4 lambda in the essential spectrum.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import experiments, oscillation, spectra
from .errors import InSpectrumError, ToepspecError
from .symbols import CoefficientSequence, PiecewiseSymbol, make_piecewise_symbol

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_IN_SPECTRUM = 4

DEG = np.pi / 180.0


class SymbolFileError(Exception):
    """The symbol file is malformed or violates the schema."""


# ---------------------------------------------------------------------------
# Symbol files


def _require_number(piece: dict, key: str, where: str) -> float:
    v = piece.get(key)
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise SymbolFileError(f"{where}: '{key}' must be a number")
    return float(v)


def parse_symbol_document(doc) -> dict:
    """Validate the raw JSON document and return it in normalized form.

    Normalization: degrees reduced mod 360 (ends land in (0, 360]),
    pieces sorted by start angle, coefficients sorted by index. The
    operation is idempotent, which makes file round-trips byte-stable.
    """
    if not isinstance(doc, dict) or "pieces" not in doc:
        raise SymbolFileError("document must be an object with a 'pieces' array")
    raw_pieces = doc["pieces"]
    if not isinstance(raw_pieces, list) or not raw_pieces:
        raise SymbolFileError("'pieces' must be a nonempty array")
    pieces = []
    for i, piece in enumerate(raw_pieces):
        where = f"pieces[{i}]"
        if not isinstance(piece, dict):
            raise SymbolFileError(f"{where}: must be an object")
        start = _require_number(piece, "start_deg", where)
        end = _require_number(piece, "end_deg", where)
        if not (0 <= start <= 360 and 0 <= end <= 360):
            raise SymbolFileError(f"{where}: degrees must lie in [0, 360]")
        start = start % 360.0
        end = end % 360.0
        if end == 0.0:
            end = 360.0
        raw_coeffs = piece.get("coeffs")
        if not isinstance(raw_coeffs, list) or not raw_coeffs:
            raise SymbolFileError(f"{where}: 'coeffs' must be a nonempty array")
        coeffs = []
        seen = set()
        for j, entry in enumerate(raw_coeffs):
            cwhere = f"{where}.coeffs[{j}]"
            if not isinstance(entry, dict):
                raise SymbolFileError(f"{cwhere}: must be an object")
            k = entry.get("k")
            if not isinstance(k, int) or isinstance(k, bool):
                raise SymbolFileError(f"{cwhere}: 'k' must be an integer")
            if k in seen:
                raise SymbolFileError(f"{cwhere}: duplicate index k={k}")
            seen.add(k)
            re = _require_number(entry, "re", cwhere)
            im = _require_number(entry, "im", cwhere)
            coeffs.append({"k": k, "re": re, "im": im})
        coeffs.sort(key=lambda c: c["k"])
        pieces.append({"start_deg": start, "end_deg": end, "coeffs": coeffs})
    pieces.sort(key=lambda p: p["start_deg"])
    return {"pieces": pieces}


def load_symbol_document(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SymbolFileError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SymbolFileError(f"{path}: invalid JSON: {exc}") from exc
    return parse_symbol_document(doc)


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def serialize_symbol_document(doc: dict) -> str:
    """Serialize a normalized document with 17-significant-digit numbers."""
    lines = ['{', '  "pieces": [']
    for i, piece in enumerate(doc["pieces"]):
        lines.append("    {")
        lines.append(f'      "start_deg": {_g17(piece["start_deg"])},')
        lines.append(f'      "end_deg": {_g17(piece["end_deg"])},')
        lines.append('      "coeffs": [')
        for j, c in enumerate(piece["coeffs"]):
            sep = "," if j < len(piece["coeffs"]) - 1 else ""
            lines.append(
                f'        {{"k": {c["k"]}, "re": {_g17(c["re"])}, "im": {_g17(c["im"])}}}{sep}'
            )
        lines.append("      ]")
        lines.append("    }" + ("," if i < len(doc["pieces"]) - 1 else ""))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def symbol_from_document(doc: dict) -> PiecewiseSymbol:
    pieces = []
    for piece in doc["pieces"]:
        entries = {c["k"]: complex(c["re"], c["im"]) for c in piece["coeffs"]}
        pieces.append(
            (piece["start_deg"] * DEG, piece["end_deg"] * DEG, CoefficientSequence.from_dict(entries))
        )
    try:
        return make_piecewise_symbol(pieces)
    except ToepspecError as exc:
        raise SymbolFileError(f"invalid symbol geometry: {exc}") from exc


def load_symbol(path: str) -> PiecewiseSymbol:
    return symbol_from_document(load_symbol_document(path))


# ---------------------------------------------------------------------------
# Output helpers


def _write_text(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _write_figure(fig_render, data, target: str) -> None:
    from . import figures  # deferred: pulls in matplotlib

    fmt = Path(target).suffix.lstrip(".").lower() or "svg"
    fig = fig_render(data)
    figures.save_figure(fig, target, fmt)


def _fmt(x: float) -> str:
    """Shortest round-trip decimal representation."""
    return repr(float(x))


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise SymbolFileError(f"expected 're,im', got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise SymbolFileError(f"expected 're,im', got {text!r}") from exc


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise SymbolFileError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise SymbolFileError(f"expected comma-separated numbers, got {text!r}") from exc


# ---------------------------------------------------------------------------
# Commands


def cmd_spectrum(args) -> int:
    symbol = load_symbol(args.file)
    desc = spectra.essential_spectrum(symbol, args.p, args.resolution)
    if args.out == "csv":
        lines = [
            f"# toepspec spectrum p={_fmt(args.p)} resolution={args.resolution}",
            "segment_id,provenance,theta_or_r,re,im",
        ]
        for sid, seg in enumerate(desc.segments):
            for param, z in zip(seg.params, seg.curve.points):
                lines.append(
                    f"{sid},{seg.provenance},{_fmt(param)},{_fmt(z.real)},{_fmt(z.imag)}"
                )
        _write_text("\n".join(lines) + "\n", args.output)
    else:
        from . import figures

        fig = figures.render_spectrum(desc)
        if args.output is None:
            figures.save_figure(fig, sys.stdout.buffer, "svg")
        else:
            figures.save_figure(fig, args.output, "svg")
    return EXIT_OK


def cmd_index(args) -> int:
    symbol = load_symbol(args.file)
    lam = _parse_complex(args.lam)
    index = spectra.fredholm_index(symbol, args.p, lam)
    print(index)
    return EXIT_OK


def _oscillation_csv(report: oscillation.OscillationReport) -> str:
    lines = [
        f"# toepspec oscillation ladder delta={_fmt(report.delta)} hint={report.verdict_hint.value}",
        "n,bmo,bmo_log,vmo_plain,vmo_log",
    ]
    for i, n in enumerate(report.resolutions):
        lines.append(
            f"{n},{_fmt(report.bmo[i])},{_fmt(report.bmo_log[i])},"
            f"{_fmt(report.vmo_plain[i])},{_fmt(report.vmo_log[i])}"
        )
    return "\n".join(lines) + "\n"


def cmd_verdict(args) -> int:
    symbol = load_symbol(args.file)
    verdict = oscillation.h1_boundedness_verdict(symbol)
    print(f"{verdict.kind.value}: {verdict.certificate}")
    if verdict.report is not None:
        _write_text(_oscillation_csv(verdict.report), args.ladder_out)
        if args.figure:
            from . import figures

            _write_figure(figures.render_oscillation, verdict.report, args.figure)
    return EXIT_OK


def cmd_experiment(args) -> int:
    symbol = load_symbol(args.file)
    if args.kind == "growth":
        if args.n_list is None:
            raise SymbolFileError("growth needs --n-list")
        table = experiments.h1_growth_experiment(symbol, _parse_int_list(args.n_list))
        lines = [f"# toepspec experiment growth n_list={args.n_list}", "n,ratio"]
        for row in table.rows:
            lines.append(f"{row.n},{_fmt(row.ratio)}")
        _write_text("\n".join(lines) + "\n", args.output)
        if args.figure:
            from .figures import render_growth

            _write_figure(render_growth, table, args.figure)
    elif args.kind == "probe":
        if args.n_list is None or args.lam is None:
            raise SymbolFileError("probe needs --n-list and --lambda")
        lam = _parse_complex(args.lam)
        table = experiments.finite_section_probe(symbol, lam, _parse_int_list(args.n_list))
        lines = [
            f"# toepspec experiment probe lambda={args.lam} n_list={args.n_list}",
            "n,sigma_min",
        ]
        for row in table.rows:
            lines.append(f"{row.n},{_fmt(row.sigma_min)}")
        _write_text("\n".join(lines) + "\n", args.output)
        if args.figure:
            from .figures import render_probe

            _write_figure(render_probe, table, args.figure)
    elif args.kind == "indexcheck":
        if args.lam is None:
            raise SymbolFileError("indexcheck needs --lambda")
        lam = _parse_complex(args.lam)
        report = experiments.index_consistency(symbol, lam)
        lines = [
            f"# toepspec experiment indexcheck lambda={args.lam}",
            "index_from_curve,index_from_roots,match",
            f"{report.index_from_curve},{report.index_from_roots},{str(report.matches).lower()}",
        ]
        _write_text("\n".join(lines) + "\n", args.output)
    elif args.kind == "lindelof":
        if args.t is None:
            raise SymbolFileError("lindelof needs --t")
        if len(symbol.pieces) != 1:
            raise SymbolFileError("lindelof needs a single-piece analytic symbol file")
        coeffs = symbol.pieces[0].value
        radii = _parse_float_list(args.radii) if args.radii else None
        report = experiments.lindelof_demo(coeffs, args.t, radii)
        lines = [
            f"# toepspec experiment lindelof t={_fmt(args.t)}",
            f"# plus_limit={_fmt(report.plus_limit.real)},{_fmt(report.plus_limit.imag)}"
            f" minus_limit={_fmt(report.minus_limit.real)},{_fmt(report.minus_limit.imag)}"
            f" difference={_fmt(report.difference)}",
            "r,plus_re,plus_im,minus_re,minus_im",
        ]
        for i, r in enumerate(report.radii):
            zp = report.plus_values[i]
            zm = report.minus_values[i]
            lines.append(
                f"{_fmt(r)},{_fmt(zp.real)},{_fmt(zp.imag)},{_fmt(zm.real)},{_fmt(zm.imag)}"
            )
        _write_text("\n".join(lines) + "\n", args.output)
        if args.figure:
            from .figures import render_lindelof

            _write_figure(render_lindelof, report, args.figure)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toepspec",
        description="Essential spectra, indices and H1 diagnostics for "
        "Toeplitz operators with piecewise continuous symbols.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="sample the essential spectrum")
    sp.add_argument("file", help="symbol JSON file")
    sp.add_argument("--p", type=float, default=2.0, help="Hardy exponent in (1, inf)")
    sp.add_argument("--resolution", type=int, default=256)
    sp.add_argument("--out", choices=("csv", "svg"), default="csv")
    sp.add_argument("--output", default=None, help="output path (default stdout)")
    sp.set_defaults(run=cmd_spectrum)

    ix = sub.add_parser("index", help="Fredholm index at lambda")
    ix.add_argument("file")
    ix.add_argument("--p", type=float, default=2.0)
    ix.add_argument("--lambda", dest="lam", required=True, metavar="RE,IM")
    ix.set_defaults(run=cmd_index)

    vd = sub.add_parser("verdict", help="H1 boundedness verdict")
    vd.add_argument("file")
    vd.add_argument(
        "--ladder-out",
        default="oscillation_ladder.csv",
        help="CSV path for the Unknown-case oscillation ladder",
    )
    vd.add_argument("--figure", default=None, help="optional ladder figure path")
    vd.set_defaults(run=cmd_verdict)

    ex = sub.add_parser("experiment", help="run an empirical harness")
    ex.add_argument("file")
    ex.add_argument("kind", choices=("growth", "probe", "indexcheck", "lindelof"))
    ex.add_argument("--n-list", default=None, metavar="N1,N2,...")
    ex.add_argument("--lambda", dest="lam", default=None, metavar="RE,IM")
    ex.add_argument("--t", type=float, default=None, help="boundary angle (lindelof)")
    ex.add_argument("--radii", default=None, metavar="R1,R2,...")
    ex.add_argument("--output", default=None, help="CSV path (default stdout)")
    ex.add_argument("--figure", default=None, help="optional figure path")
    ex.set_defaults(run=cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except SymbolFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InSpectrumError:
        print("lambda in essential spectrum", file=sys.stderr)
        return EXIT_IN_SPECTRUM
    except (ToepspecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
