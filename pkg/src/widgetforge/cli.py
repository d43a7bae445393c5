"""``widgetforge`` command line: thin wrappers over the library operations.

Exit codes: 0 success, 1 validation or processing error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .codegen import EmitTarget, compile_spec
from .dsl import parse_widget_dsl, repair, serialize, validate
from .errors import WidgetForgeError
from .fit import finalize_render_size, fit_width, render_dims
from .icons import IconQuery, build_index, load_index
from .layout import layout_report, layout_to_json, solve_layout
from .metrics import MetricConfig, OcrSidecar, evaluate_batch, evaluate_pair, read_manifest
from .palette import extract_palette
from .synth import Theme, batch_generate, load_seeds, write_corpus
from .synth.engine import atomic_write

log = logging.getLogger("widgetforge")


class UsageError(Exception):
    pass


def _size(text: str) -> tuple[float, float]:
    try:
        w, h = text.lower().split("x")
        size = float(w), float(h)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH, got {text!r}") from None
    if not (size[0] > 0 and size[1] > 0):
        raise argparse.ArgumentTypeError(f"size must be positive, got {text!r}")
    return size


def _read_spec(path: str):
    return parse_widget_dsl(Path(path).read_bytes())


def _emit_json(args, obj) -> None:
    if args.pretty:
        print(_pretty(obj))
    else:
        print(json.dumps(obj, ensure_ascii=False))


def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k:<12} {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_pretty(v, indent) if isinstance(v, (dict, list)) else f"{pad}- {v}" for v in obj)
    return f"{pad}{obj}"


def _write_or_print(path: str | None, text: str) -> None:
    if path:
        atomic_write(Path(path), text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- subcommands --------------------------------------------------------------


def cmd_validate(args) -> int:
    spec = _read_spec(args.file)
    report = validate(spec)
    out = {"ok": report.ok, "findings": report.to_json()}
    if args.repair:
        fixed, entries = repair(spec)
        out["repairs"] = [e.to_json() for e in entries]
        out["repaired_ok"] = validate(fixed).ok
        if args.output:
            atomic_write(Path(args.output), serialize(fixed))
    _emit_json(args, out)
    return 0 if (report.ok or (args.repair and out["repaired_ok"])) else 1


def cmd_compile(args) -> int:
    spec = _read_spec(args.file)
    report = validate(spec)
    if not report.ok:
        _emit_json(args, {"ok": False, "findings": report.to_json()})
        return 1
    result = compile_spec(spec, args.target, size=args.size, render_size=args.render, icon_dir=args.icons)
    for w in result.warnings:
        log.warning(w)
    _write_or_print(args.output, result.source)
    return 0


def cmd_fit(args) -> int:
    spec = _read_spec(args.file)
    fit = fit_width(spec, r=args.aspect, w_init=args.w_init)
    out = fit.to_json()
    out["psi_star"] = fit.psi_star
    if args.target:
        scale = finalize_render_size(fit, args.target)
        out["scale"] = list(scale)
        out["render_dims"] = list(render_dims(fit, scale))
    if args.trace:
        atomic_write(Path(args.trace), json.dumps(out, indent=2) + "\n")
    _emit_json(args, out)
    return 0


def cmd_layout(args) -> int:
    spec = _read_spec(args.file)
    size = args.size
    if size is None:
        fit = fit_width(spec)
        size = (fit.w_star, fit.h_star)
    tree = solve_layout(spec, size)
    out = layout_to_json(tree, layout_report(tree))
    if args.output:
        atomic_write(Path(args.output), json.dumps(out, indent=2) + "\n")
    _emit_json(args, out)
    return 0


def cmd_eval(args) -> int:
    cfg = MetricConfig.load(args.config)
    if args.manifest:
        results = evaluate_batch(read_manifest(args.manifest), cfg, workers=args.jobs)
        text = "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in results)
        _write_or_print(args.output, text)
        return 0 if all(r["ok"] for r in results) else 1
    if not (args.gt and args.gen):
        raise UsageError("eval needs --gt and --gen, or --manifest")
    ocr_gt = OcrSidecar.load(args.ocr_gt) if args.ocr_gt else None
    ocr_gen = OcrSidecar.load(args.ocr_gen) if args.ocr_gen else None
    if (ocr_gt is None) != (ocr_gen is None):
        raise UsageError("--ocr-gt and --ocr-gen must be given together")
    report = evaluate_pair(args.gt, args.gen, ocr_gt, ocr_gen, cfg)
    out = report.to_json()
    if args.output:
        atomic_write(Path(args.output), json.dumps(out, indent=2) + "\n")
    _emit_json(args, out)
    return 0


def cmd_palette(args) -> int:
    palette = extract_palette(args.image, k=args.k, n=args.n, cap=args.cap, seed=args.seed)
    _emit_json(args, palette.to_json())
    return 0


def cmd_icon_build(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        index = build_index(fh)
    lines = [
        json.dumps(
            {
                "id": r.id,
                "svg_path": r.svg_path,
                "caption": r.caption,
                "vis_embed": r.vis_embed.tolist(),
                "txt_embed": r.txt_embed.tolist(),
            }
        )
        + "\n"
        for r in index.records
    ]
    atomic_write(Path(args.output), "".join(lines))
    _emit_json(args, {"records": len(index), "output": args.output})
    return 0


def cmd_icon_search(args) -> int:
    index = load_index(args.index)
    hits = index.search(IconQuery.load(args.query), k=args.k, final=args.final)
    _emit_json(args, [h.to_json() for h in hits])
    return 0


def cmd_mutate(args) -> int:
    src = Path(args.input)
    if src.is_dir():
        specs = load_seeds(src)
    else:
        specs = {src.name.split(".")[0]: _read_spec(str(src))}
    themes = list(Theme) if args.themes == "all" else [Theme(t) for t in args.themes.split(",")]
    bundles, failures = batch_generate(specs, themes, seed=args.seed)
    manifest = write_corpus(args.out, bundles, failures)
    _emit_json(args, {"bundles": len(bundles), "failures": failures, "validation_failures": manifest["validation_failures"]})
    return 0 if not failures and not manifest["validation_failures"] else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-errors", action="store_true", help="report errors as JSON on stderr")
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = argparse.ArgumentParser(prog="widgetforge", description="WidgetDSL toolchain")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check a WidgetDSL file")
    s.add_argument("file")
    s.add_argument("--repair", action="store_true", help="apply repair rules and report the log")
    s.add_argument("-o", "--output", help="write the repaired spec here (with --repair)")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("compile", parents=[common], help="emit HTML or React source")
    s.add_argument("file")
    s.add_argument("--target", choices=[t.value for t in EmitTarget], default="html")
    s.add_argument("--size", type=_size, help="layout size WxH (default: fitted)")
    s.add_argument("--render", type=_size, help="final output size WxH; content is rescaled")
    s.add_argument("--icons", help="icon SVG directory")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_compile)

    s = sub.add_parser("fit", parents=[common], help="minimal non-overflowing width")
    s.add_argument("file")
    s.add_argument("--aspect", type=float, help="aspect ratio W/H (default: the widget's)")
    s.add_argument("--w-init", type=float)
    s.add_argument("--target", type=_size, help="target render size WxH")
    s.add_argument("--trace", help="write the FitResult JSON here")
    s.set_defaults(func=cmd_fit)

    s = sub.add_parser("layout", parents=[common], help="per-node boxes keyed by StructuralId")
    s.add_argument("file")
    s.add_argument("--size", type=_size)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_layout)

    s = sub.add_parser("eval", parents=[common], help="visual metric suite")
    s.add_argument("--gt")
    s.add_argument("--gen")
    s.add_argument("--ocr-gt")
    s.add_argument("--ocr-gen")
    s.add_argument("--config", help="metric config JSON (default: $WIDGETFORGE_CONFIG)")
    s.add_argument("--manifest", help="batch manifest (JSON list or JSONL of pairs)")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("palette", parents=[common], help="dominant colour palette")
    s.add_argument("image")
    s.add_argument("--k", type=int, default=12)
    s.add_argument("--n", type=int, default=8)
    s.add_argument("--cap", type=int, default=1_000_000)
    s.add_argument("--seed", type=int, default=7)
    s.set_defaults(func=cmd_palette)

    icon = sub.add_parser("icon", help="icon index tools")
    isub = icon.add_subparsers(dest="icon_command", required=True)
    s = isub.add_parser("build", parents=[common], help="validate and normalize an icon JSONL")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_icon_build)
    s = isub.add_parser("search", parents=[common], help="two-stage retrieval")
    s.add_argument("--index", required=True)
    s.add_argument("--query", required=True)
    s.add_argument("--k", type=int, default=50)
    s.add_argument("--final", type=int, default=5)
    s.set_defaults(func=cmd_icon_search)

    s = sub.add_parser("mutate", parents=[common], help="themed synthetic corpus")
    s.add_argument("--in", dest="input", required=True, help="spec file or directory of *.json specs")
    s.add_argument("--themes", default="all", help="'all' or comma-separated theme names")
    s.add_argument("--seed", type=int, default=7)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_mutate)
    return p


def _report_error(args, exc: Exception, code: int) -> int:
    if getattr(args, "json_errors", False):
        err = {"error": type(exc).__name__, "message": str(exc)}
        for attr in ("path", "line", "column"):
            if getattr(exc, attr, None) is not None:
                err[attr] = getattr(exc, attr)
        sys.stderr.write(json.dumps(err) + "\n")
    else:
        sys.stderr.write(f"widgetforge: {type(exc).__name__}: {exc}\n")
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        return _report_error(args, exc, 2)
    except (WidgetForgeError, ValueError, KeyError, OSError) as exc:
        return _report_error(args, exc, 1)


if __name__ == "__main__":
    sys.exit(main())
