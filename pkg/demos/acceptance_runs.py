"""Produce the trained artifacts that the heavy acceptance criteria score.

Runs everything through the ``ccrig`` CLI, so the artifacts are exactly what a
user would get:

    results/acceptance/data/            1000-episode random nav dataset
    results/acceptance/models/{ccvae,vae}/   representation models (seed 0)
    results/acceptance/online/{method}_s{k}/ 150k-step online runs, k = 0..4
    results/acceptance/pretrain/s{k}/        100k offline TD3 updates on the dataset

Each stage is skipped when its outputs already exist, so an interrupted run
resumes where it stopped.  Usage:

    python3 demos/acceptance_runs.py [--root DIR] [--only models|online|pretrain]
"""

from __future__ import annotations

import argparse
import json
import subprocess
import sys
import time
from pathlib import Path

SEEDS = range(5)
METHODS = ("oracle", "ccrig", "rig")


def ccrig(*args: str) -> None:
    cmd = [sys.executable, "-m", "ccrig", *args]
    print("+", " ".join(cmd), flush=True)
    started = time.time()
    subprocess.run(cmd, check=True)
    print(f"  done in {time.time() - started:.0f}s", flush=True)


def override(key: str, value) -> list[str]:
    return ["--override", f"{key}={json.dumps(value)}"]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--root", default="results/acceptance")
    parser.add_argument("--only", choices=("models", "online", "pretrain"))
    args = parser.parse_args()
    root = Path(args.root).resolve()
    data = root / "data" / "dataset.ccrd"
    models = {kind: root / "models" / kind / "model.ckpt" for kind in ("ccvae", "vae")}

    if args.only in (None, "models"):
        if not data.exists():
            ccrig("collect", "--seed", "0", "--out", str(data.parent))
        for method, kind in (("ccrig", "ccvae"), ("rig", "vae")):
            if not models[kind].exists():
                ccrig("train-vae", "--seed", "0", "--out", str(models[kind].parent),
                      *override("method", method), *override("dataset.path", str(data)))

    if args.only in (None, "online"):
        for seed in SEEDS:
            for method in METHODS:
                out = root / "online" / f"{method}_s{seed}"
                if (out / "agent.ckpt").exists():
                    continue
                extra = []
                if method != "oracle":
                    kind = "ccvae" if method == "ccrig" else "vae"
                    extra = override("pipeline.model_checkpoint", str(models[kind]))
                ccrig("train", "--seed", str(seed), "--out", str(out), *override("method", method), *extra)

    if args.only in (None, "pretrain"):
        for seed in SEEDS:
            out = root / "pretrain" / f"s{seed}"
            if (out / "agent.ckpt").exists():
                continue
            ccrig("pretrain", "--seed", str(seed), "--out", str(out), *override("method", "ccrig"),
                  *override("dataset.path", str(data)),
                  *override("pipeline.model_checkpoint", str(models["ccvae"])))


if __name__ == "__main__":
    main()
