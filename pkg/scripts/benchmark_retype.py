"""Measure single-threaded classify and retype throughput.

Builds a synthetic corpus, writes its annotation files to a scratch
directory, then times each requested mode over the whole corpus and
prints pairs per second.  Corpus construction is excluded from the
timings.

Example:

    python3 scripts/benchmark_retype.py --size 10000
    python3 scripts/benchmark_retype.py --mode classify --granularity upos-feats
"""

from __future__ import annotations

import argparse
import sys
import tempfile
import time
from pathlib import Path

# the corpus generator lives with the test suite
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from serrant.pipeline import (  # noqa: E402
    MODE_CLASSIFY,
    MODE_RETYPE,
    PipelineConfig,
    PipelineInputs,
    run,
)
from serrant.sercl import GRANULARITY_UPOS, GRANULARITY_UPOS_FEATS  # noqa: E402
from synthgen import VOCAB, SyntheticCorpus  # noqa: E402

_GRANULARITIES = {"upos": GRANULARITY_UPOS, "upos-feats": GRANULARITY_UPOS_FEATS}


def _benchmark(mode: str, corpus: SyntheticCorpus, scratch: Path, granularity: str) -> None:
    config = PipelineConfig(
        mode=mode,
        granularity=granularity,
        wordlist_path=str(scratch / "wordlist.txt"),
        conllu_orig_path=str(scratch / "orig.conllu"),
        conllu_cor_path=str(scratch / "cor.conllu"),
    )
    if mode == MODE_RETYPE:
        inputs = PipelineInputs(m2=corpus.untyped_m2())
    else:
        inputs = PipelineInputs(original=corpus.orig_text, corrected=corpus.cor_text)
    started = time.perf_counter()
    records = run(config, inputs)
    elapsed = time.perf_counter() - started
    edits = sum(len(record.edits) for record in records)
    rate = len(records) / elapsed if elapsed else float("inf")
    print(
        f"{mode}: {len(records)} pairs ({edits} edits) in {elapsed:.2f}s, {rate:,.0f} pairs/s"
    )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--size", type=int, default=10000, help="number of sentence pairs")
    parser.add_argument("--seed", type=int, default=0, help="generator seed")
    parser.add_argument(
        "--mode",
        choices=("retype", "classify", "both"),
        default="retype",
        help="which pipeline mode to time",
    )
    parser.add_argument(
        "--granularity", choices=sorted(_GRANULARITIES), default="upos", help="tag-pair detail"
    )
    args = parser.parse_args(argv)
    if args.size < 1:
        parser.error("--size must be at least 1")

    corpus = SyntheticCorpus(args.size, seed=args.seed)
    with tempfile.TemporaryDirectory() as name:
        scratch = Path(name)
        (scratch / "orig.conllu").write_text(corpus.conllu_orig, encoding="utf-8")
        (scratch / "cor.conllu").write_text(corpus.conllu_cor, encoding="utf-8")
        forms = sorted({entry[0].lower() for entry in VOCAB if entry[0].isalpha()})
        (scratch / "wordlist.txt").write_text("\n".join(forms) + "\n", encoding="utf-8")
        granularity = _GRANULARITIES[args.granularity]
        if args.mode in ("retype", "both"):
            _benchmark(MODE_RETYPE, corpus, scratch, granularity)
        if args.mode in ("classify", "both"):
            _benchmark(MODE_CLASSIFY, corpus, scratch, granularity)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
