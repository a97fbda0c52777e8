"""Command-line interface: ``keypadlab {stats,build-layout,eval,compare}``."""

from __future__ import annotations

import argparse
import logging
import sys
from importlib import resources
from pathlib import Path

from . import corpus as corpus_mod
from .corpus import NormalizationPolicy, letter_ranking, table1_frequency_table
from .keymodel import default_keypad, load_keypad, rank_keys
from .layout import (
    PAPER_LETTER_RANKING,
    InvalidLayoutError,
    build_boustrophedon,
    check,
    load_layout,
)
from .report import FORMATS, ComparisonReport, compare, render, write_outputs
from .simulate import CostParams, evaluate

BUNDLED = "bundled"


class CliError(Exception):
    pass


def bundled_corpus() -> list[Path]:
    """Paths of the bundled public-domain English corpus shards."""
    root = resources.files("keypadlab") / "testdata"
    return sorted(Path(str(p)) for p in root.iterdir() if p.name.endswith(".txt"))


def _expand(paths) -> list[Path]:
    return [path for _, path in _labelled(paths)]


def _labelled(paths) -> list[tuple[str, Path]]:
    """(label, path) per corpus file; bundled shards get stable labels."""
    out = []
    for p in paths or ():
        if p == BUNDLED:
            out.extend((f"{BUNDLED}/{q.name}", q) for q in bundled_corpus())
        else:
            out.append((p, Path(p)))
    return out


def _policy(args) -> NormalizationPolicy:
    action = corpus_mod.DROP if args.policy == "drop" else corpus_mod.MAP_TO_SPACE
    return NormalizationPolicy(non_alphabet_action=action)


def _read(path: Path, policy) -> str:
    try:
        return corpus_mod.read_text(path, policy)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _keypad(args):
    if not args.keypad:
        return default_keypad()
    try:
        return load_keypad(args.keypad)
    except OSError as exc:
        raise CliError(f"cannot read {args.keypad}: {exc.strerror or exc}") from exc
    except (ValueError, KeyError) as exc:
        raise CliError(f"invalid keypad file {args.keypad}: {exc}") from exc


def _emit(text: str, args, filename: str | None = None) -> None:
    if args.out_dir and filename:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / filename).write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def cmd_stats(args) -> int:
    paths = _expand(args.corpus)
    if not paths:
        args.parser.error("stats needs at least one corpus file")
    policy = _policy(args)
    table = corpus_mod.merge(
        corpus_mod.frequency_table(_read(p, policy), policy, str(p)) for p in paths
    )
    if args.format == "json":
        _emit(table.to_json(), args, "frequencies.json")
    elif args.format == "csv":
        unigrams = corpus_mod.unigram_csv(table)
        bigrams = corpus_mod.bigram_csv(table)
        if args.out_dir:
            out = Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / "unigrams.csv").write_text(unigrams, encoding="utf-8")
            (out / "bigrams.csv").write_text(bigrams, encoding="utf-8")
        sys.stdout.write(unigrams + "\n" + bigrams)
    elif args.format == "table":
        lines = [f"letters: {table.total_letters}  pairs: {table.total_pairs}", ""]
        lines.append(f"{'letter':<8}{'count':>10}{'percent':>10}")
        for letter in letter_ranking(table):
            count, frac = table.unigram.get(letter, (0, 0.0))
            lines.append(f"{letter:<8}{count:>10}{100 * frac:>9.2f}%")
        lines.append("")
        lines.append(f"{'pair':<8}{'count':>10}{'percent':>10}")
        top = sorted(table.bigram.items(), key=lambda kv: (-kv[1][0], kv[0]))
        for pair, (count, frac) in top[: args.top]:
            lines.append(f"{pair:<8}{count:>10}{100 * frac:>9.2f}%")
        _emit("\n".join(lines) + "\n", args)
    else:
        raise CliError("stats supports --format table, csv or json")
    return 0


def _read_ranking_file(path: Path) -> list[str]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return [ch for ch in text.lower() if ch.isalpha()]


def cmd_build_layout(args) -> int:
    keypad = _keypad(args)
    if args.ranking == "paper":
        letters = list(PAPER_LETTER_RANKING)
    elif args.ranking == "strict-table1":
        letters = list(letter_ranking(table1_frequency_table()))
    elif args.ranking == "from-corpus":
        paths = _expand(args.corpus)
        if not paths:
            args.parser.error("--ranking from-corpus needs corpus files")
        policy = _policy(args)
        table = corpus_mod.merge(
            corpus_mod.frequency_table(_read(p, policy), policy, str(p)) for p in paths
        )
        ranking = letter_ranking(table)
        if ranking.fallback:
            print("warning: corpus has no letters; alphabetical ranking used", file=sys.stderr)
        letters = list(ranking)
    else:
        letters = _read_ranking_file(Path(args.ranking))
    layout = build_boustrophedon(
        letters,
        rank_keys(keypad),
        space_key=keypad.space_key,
        symbol_key=keypad.symbol_key,
        name=args.name,
    )
    check(layout)
    _emit(layout.to_json(), args, "layout.json")
    return 0


def _corpus_texts(args) -> list[tuple[str, str]]:
    """(descriptor, normalized text) pairs from --text and --corpus."""
    policy = _policy(args)
    items = []
    if args.text is not None:
        items.append(("text", corpus_mod.normalize(args.text, policy)))
    for label, path in _labelled(args.corpus):
        items.append((label, _read(path, policy)))
    if not items:
        args.parser.error("give --corpus files or --text")
    return items


def _joined(items) -> tuple[str, str]:
    labels = [d for d, _ in items]
    bundled = [f"{BUNDLED}/{p.name}" for p in bundled_corpus()]
    descriptor = BUNDLED if labels == bundled else "; ".join(labels)
    return descriptor, " ".join(t for _, t in items if t)


def _params(args) -> CostParams:
    try:
        return CostParams(tap_time=args.tap_time, jam_timeout=args.jam_timeout)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _load_layouts(refs):
    try:
        return [load_layout(r) for r in refs]
    except InvalidLayoutError as exc:
        raise CliError(str(exc)) from exc


def _write_reports(reports, args) -> None:
    if args.out_dir:
        write_outputs(reports, args.out_dir)
    text = render(reports, args.format)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_eval(args) -> int:
    refs = args.layout or ["proposed"]
    if len(refs) != 1:
        args.parser.error("eval takes exactly one --layout")
    (layout,) = _load_layouts(refs)
    descriptor, text = _joined(_corpus_texts(args))
    params = _params(args)
    report = ComparisonReport(
        descriptor,
        (evaluate(layout, _keypad(args), text, params, args.letters_only),),
        params,
    )
    _write_reports(report, args)
    return 0


def cmd_compare(args) -> int:
    refs = args.layout or []
    if len(refs) < 2:
        args.parser.error("compare needs at least two --layout arguments")
    layouts = _load_layouts(refs)
    keypad = _keypad(args)
    params = _params(args)
    items = _corpus_texts(args)
    groups = items if args.per_file else [_joined(items)]
    reports = []
    for descriptor, text in groups:
        try:
            reports.append(
                compare(layouts, keypad, text, params, args.letters_only, descriptor)
            )
        except ValueError as exc:
            raise CliError(f"{descriptor}: {exc}") from exc
    _write_reports(reports, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--out-dir", help="also write output files into this directory")
    common.add_argument(
        "--policy",
        choices=("drop", "space"),
        default="space",
        help="what to do with characters outside a-z (default: map to space)",
    )
    common.add_argument("--tap-time", type=float, default=0.2, help="seconds per key press")
    common.add_argument(
        "--jam-timeout", type=float, default=1.0, help="seconds lost per same-key jam"
    )
    common.add_argument(
        "--letters-only", action="store_true", help="leave spaces out of tap totals"
    )
    common.add_argument("--keypad", help="keypad ergonomics JSON file")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="keypadlab",
        description="Build and compare multitap phone keypad layouts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="letter and pair frequencies")
    p.add_argument("corpus", nargs="*", help=f"text files, or {BUNDLED!r}")
    p.add_argument("--top", type=int, default=30, help="pairs shown in table format")
    p.set_defaults(func=cmd_stats, parser=p)

    p = sub.add_parser("build-layout", parents=[common], help="construct a layout")
    p.add_argument(
        "--ranking",
        default="paper",
        help="paper, strict-table1, from-corpus, or a file listing 26 letters",
    )
    p.add_argument("corpus", nargs="*", help="corpus files for --ranking from-corpus")
    p.add_argument("--name", default="proposed")
    p.set_defaults(func=cmd_build_layout, parser=p)

    for name, func, helptext in (
        ("eval", cmd_eval, "evaluate one layout"),
        ("compare", cmd_compare, "compare two or more layouts"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument(
            "--layout",
            action="append",
            help="built-in name (proposed, traditional) or layout JSON file",
        )
        p.add_argument(
            "--corpus", action="extend", nargs="+", help=f"text files, or {BUNDLED!r}"
        )
        p.add_argument("--text", help="literal text to evaluate")
        if name == "compare":
            p.add_argument(
                "--per-file", action="store_true", help="one bar group per corpus file"
            )
        p.set_defaults(func=func, parser=p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    try:
        return args.func(args)
    except CliError as exc:
        print(f"keypadlab: error: {exc}", file=sys.stderr)
        return 1
    except (InvalidLayoutError, ValueError) as exc:
        print(f"keypadlab: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
