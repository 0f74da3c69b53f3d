"""
One-shot pipeline and the command line
======================================

Everything from demos 01-04 in one call, via the same code path as the
``termmap`` command:

    termmap run --input src/termmap/data/toy_corpus.tsv \
        --score-col score --subset-col subset \
        --min-occ 2 --select 100 --seed 13 --overlay score-mean --out out/demo

The staged subcommands (extract | network | rank | layout | cluster |
render) write and read dumps in the output directory and compose to the
byte-identical map export.
"""
from pathlib import Path

from termmap.cli import RunConfig, run_pipeline

DATA = Path(__file__).resolve().parents[1] / "src" / "termmap" / "data"
OUT = Path(__file__).parent / "out" / "full_run"
OUT.mkdir(parents=True, exist_ok=True)

cfg = RunConfig(
    input=str(DATA / "toy_corpus.tsv"),
    format="tsv",
    score_col="score",
    subset_col="subset",
    min_occ=2,
    select=100,
    seed=13,
    overlay="score-mean",
    out=str(OUT),
)
cfg.validate()

manifest = run_pipeline(cfg, OUT)

print("stage counts:")
for key, value in manifest["counts"].items():
    print(f"  {key:>20}: {value}")
print("stage timings (s):")
for stage, dt in manifest["timings_s"].items():
    print(f"  {stage:>20}: {dt:.2f}")
print(f"outputs in {OUT}:")
for p in sorted(OUT.iterdir()):
    print(f"  {p.name}")
