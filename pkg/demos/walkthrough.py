"""A small end-to-end tour, a few minutes on one CPU core.

1. Collect random-action episodes in the navigation arena.
2. Train a CC-VAE on them and write a grid of prior samples per context.
3. Score the model: does each sample keep its context's colour and walls?
4. Run a short online CC-RIG session and compare with a random policy.

Outputs go to ``runs/walkthrough`` (or the directory given as argument).
"""

from __future__ import annotations

import sys
from pathlib import Path

from ccrig.config import load_config
from ccrig.envs import NavEnv
from ccrig.metrics import metrics_csv
from ccrig.harness.grid import dataset_contexts, sample_grid, save_image
from ccrig.pipeline import (
    collect_random_dataset,
    evaluate_policy,
    make_representation,
    random_policy,
    run_ccrig,
    train_representation,
)
from ccrig.pipeline.core import eval_rng
from ccrig.pipeline.scoring import context_coherence, factorization_probe
from ccrig.rng import make_rng


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    cfg = load_config(None, ["dataset.episodes=200", "vae.epochs=10", "pipeline.online_steps=10000",
                             "pipeline.eval_interval=2500", "rl.hidden=[128, 128]"])
    env = NavEnv()

    data = collect_random_dataset(env, cfg.dataset.episodes, make_rng(cfg.seed, "collect"))
    print(f"collected {len(data)} episodes, {data.num_transitions} transitions")

    model, history = train_representation(cfg, data)
    print(f"CC-VAE loss {history[0]['total']:.1f} -> {history[-1]['total']:.1f} over {len(history)} epochs")

    rng = make_rng(cfg.seed, "walkthrough")
    grid = sample_grid(model, dataset_contexts(data, 6, rng), 5, rng)
    print("sample grid:", save_image(out / "samples.png", grid))

    coh = context_coherence(model, env, 10, 5, rng)
    fac = factorization_probe(model, env, 50, rng)
    print(f"samples keeping the context colour: {coh.color_ok_fraction:.0%}, wall IoU {coh.mean_iou:.2f}")
    print(f"position moves mu {fac.position_ratio:.1f}x more than z_c; "
          f"colour moves z_c {fac.color_ratio:.1f}x more than mu")

    result = run_ccrig(cfg, model)
    for row in result.eval_rows():
        print(f"step {row['step']:>6}: median final distance {row['eval_median_dist']:.3f}")
    rep = make_representation("ccrig", env, model)
    rnd = evaluate_policy(random_policy(make_rng(0, "random")), env, rep, cfg.pipeline.eval_episodes, eval_rng(cfg))
    print(f"random policy: median final distance {rnd.median:.3f}")
    (out / "metrics.csv").write_text(metrics_csv(result.metrics))


if __name__ == "__main__":
    main(Path(sys.argv[1] if len(sys.argv) > 1 else "runs/walkthrough"))
