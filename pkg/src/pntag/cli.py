"""Command-line driver: ``pntag tag``, ``pntag eval`` and ``pntag dump-index``."""
from __future__ import annotations

import argparse
import io
import logging
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import evalkit
from .index import build_cap_index
from .lexicons import (MC_CATEGORIES, PN_CATEGORIES, STOP_CATEGORIES, LexiconError,
                       Lexicon, Lexicons, default_mc_lexicon, default_stoplist,
                       load_lexicon, save_lexicon)
from .morphology import DEFAULT_AFFIXES, load_affix_config
from .pipeline import PipelineConfig, all_prepositions, build_corpus, format_tagged, run

OUTPUT_FILES = ("tagged.tsv", "pn_lexicon.tsv", "mcpot_lexicon.tsv", "stats.tsv", "unresolved.tsv")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    mc_lexicon_path: Path | None
    affix_config_path: Path | None
    stoplist_path: Path | None
    pn_lexicon_path: Path | None
    max_iterations: int
    min_evidence: int
    output_dir: Path
    dump_index: bool = False

    def __post_init__(self):
        if self.max_iterations < 1:
            raise UsageError("--max-iter must be at least 1")
        if self.min_evidence < 1:
            raise UsageError("--min-evidence must be at least 1")


def _read_text(path: Path, what: str) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise UsageError(f"cannot read {what} {str(path)!r}: {getattr(e, 'strerror', None) or e}") from None


def _load(path: Path | None, categories, what: str, default=None) -> Lexicon:
    if path is None:
        return default() if default else Lexicon(categories, what)
    text = _read_text(path, what)
    try:
        return load_lexicon(text.splitlines(), categories, str(path))
    except LexiconError as e:
        raise UsageError(f"malformed {what}: {e}") from None


def _read_inputs(paths: list[Path]) -> list[tuple[str, str]]:
    texts, seen = [], {}
    for p in paths:
        doc_id = p.stem
        if doc_id in seen:
            raise UsageError(f"input files {seen[doc_id]!r} and {str(p)!r} map to the same document id")
        seen[doc_id] = str(p)
        texts.append((doc_id, _read_text(p, "input file")))
    return texts


def _write_atomically(out_dir: Path, files: dict[str, str]) -> None:
    """Write every file to a temporary name first, then rename them all."""
    out_dir.mkdir(parents=True, exist_ok=True)
    staged = []
    try:
        for name, content in files.items():
            fd, tmp = tempfile.mkstemp(prefix=f".{name}.", dir=out_dir)
            staged.append((tmp, out_dir / name))
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(content)
    except OSError:
        for tmp, _ in staged:
            Path(tmp).unlink(missing_ok=True)
        raise
    for tmp, final in staged:
        os.replace(tmp, final)


def _lexicons(cfg: RunConfig) -> Lexicons:
    mc = _load(cfg.mc_lexicon_path, MC_CATEGORIES, "MC lexicon", default_mc_lexicon)
    stop = _load(cfg.stoplist_path, STOP_CATEGORIES, "stop list", default_stoplist)
    pn = _load(cfg.pn_lexicon_path, PN_CATEGORIES, "PN lexicon")
    return Lexicons(mc=mc, pn=pn, stoplist=stop)


def _pipeline_config(cfg: RunConfig) -> PipelineConfig:
    affixes = DEFAULT_AFFIXES
    if cfg.affix_config_path is not None:
        text = _read_text(cfg.affix_config_path, "affix config")
        try:
            affixes = load_affix_config(io.StringIO(text))
        except Exception as e:
            raise UsageError(f"malformed affix config {str(cfg.affix_config_path)!r}: {e}") from None
    return PipelineConfig(max_iterations=cfg.max_iterations, min_evidence=cfg.min_evidence,
                          affixes=affixes)


def run_tag(cfg: RunConfig, inputs: list[Path]) -> int:
    lexicons = _lexicons(cfg)
    config = _pipeline_config(cfg)
    texts = _read_inputs(inputs)
    result = run(texts, lexicons, config)
    if result.stats.warning:
        print(f"pntag: warning: {result.stats.warning}", file=sys.stderr)
    files = {
        "tagged.tsv": format_tagged(result.tagged),
        "pn_lexicon.tsv": save_lexicon(lexicons.pn),
        "mcpot_lexicon.tsv": save_lexicon(lexicons.mcpot),
        "stats.tsv": result.stats.to_tsv(),
        "unresolved.tsv": evalkit.report_unresolved(result.stats.hypotheses, lexicons.pn),
    }
    if cfg.dump_index:
        files["index.tsv"] = result.cap_index.to_tsv()
    _write_atomically(cfg.output_dir, files)
    return 0


def run_eval(gold_path: Path, system_path: Path, out=None) -> int:
    out = out or sys.stdout
    gold = evalkit.read_tagged(_read_text(gold_path, "gold file").splitlines())
    system = evalkit.read_tagged(_read_text(system_path, "system file").splitlines())
    counts = evalkit.compare_gold(system, gold)
    rows = [("gold_pn_tokens", counts.gold_pn_tokens), ("missed", counts.missed),
            ("wrong", counts.wrong)]
    for name, fn in (("recall", evalkit.recognition_rate), ("precision", evalkit.precision)):
        try:
            rows.append((name, f"{fn(counts):.4f}"))
        except ValueError:
            rows.append((name, "n/a"))
    for name, value in rows:
        print(f"{name}\t{value}", file=out)
    return 0


def run_dump_index(mc_path: Path | None, inputs: list[Path], out=None) -> int:
    out = out or sys.stdout
    mc = _load(mc_path, MC_CATEGORIES, "MC lexicon", default_mc_lexicon)
    config = PipelineConfig()
    corpus = build_corpus(_read_inputs(inputs), mc, config)
    out.write(build_cap_index(corpus, all_prepositions(mc, config), config.articles).to_tsv())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pntag", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    tag = sub.add_parser("tag", help="tag proper names in UTF-8 text files")
    tag.add_argument("inputs", nargs="*", type=Path, help="one document per file")
    tag.add_argument("--mc-lexicon", type=Path, help="seed minimal contexts (default: bundled)")
    tag.add_argument("--pn-lexicon", type=Path, help="seed proper names")
    tag.add_argument("--stoplist", type=Path, help="words never tagged (default: bundled)")
    tag.add_argument("--affixes", type=Path, help="INI file of affix lists")
    tag.add_argument("--out", type=Path, required=True, help="output directory")
    tag.add_argument("--max-iter", type=int, default=50)
    tag.add_argument("--min-evidence", type=int, default=2)
    tag.add_argument("--dump-index", action="store_true", help="also write index.tsv")

    ev = sub.add_parser("eval", help="score a tagged file against gold")
    ev.add_argument("--gold", type=Path, required=True)
    ev.add_argument("--system", type=Path, required=True)

    dump = sub.add_parser("dump-index", help="print the capitalized-word context index")
    dump.add_argument("inputs", nargs="*", type=Path)
    dump.add_argument("--mc-lexicon", type=Path)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(format="pntag: %(levelname)s: %(message)s", level=logging.ERROR)
    args = build_parser().parse_args(argv)
    try:
        if args.command == "tag":
            cfg = RunConfig(args.mc_lexicon, args.affixes, args.stoplist, args.pn_lexicon,
                            args.max_iter, args.min_evidence, args.out, args.dump_index)
            return run_tag(cfg, args.inputs)
        if args.command == "eval":
            return run_eval(args.gold, args.system)
        return run_dump_index(args.mc_lexicon, args.inputs)
    except (UsageError, ValueError) as e:
        print(f"pntag: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"pntag: error: {e}", file=sys.stderr)
        return 2
