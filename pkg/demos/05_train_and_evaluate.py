"""Behavioral cloning end to end, at demo scale.

Records expert demonstrations, runs the preprocessing pipeline, trains the
sensor-fusion network with the smoke-test learning rate, and scores the
clone closed-loop against a random-weights baseline. Expect a few minutes on
one core. The paper-scale settings (lr 1e-5, 100 epochs) are the same code
path via TrainConfig defaults.

Run:  python3 demos/05_train_and_evaluate.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from racekit import scripted_expert
from racekit.dataset import (
    augment_dataset,
    balance,
    discard_intro_dataset,
    grayscale_dataset,
)
from racekit.evaluate import evaluate, record_episodes
from racekit.model import ModelConfig, build_mixed
from racekit.train import TrainConfig, train

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

print("== record ==")
raw = record_episodes(scripted_expert, 3, base_seed=1000)
print(f"  {len(raw.samples)} samples from 3 episodes")

print("== pipeline ==")
rng = np.random.Generator(np.random.PCG64(42))
ds = augment_dataset(grayscale_dataset(balance(discard_intro_dataset(raw), rng)), rng)
print(f"  {len(ds.samples)} training samples ({ds.mode})")

print("== train (smoke config: lr 1e-3, 6 epochs) ==")
model, curve = train(ds, TrainConfig(lr=1e-3, epochs=6, batch_size=64,
                                     seed=42, holdout_fraction=0.1))
for epoch, loss, acc in curve.holdout:
    print(f"  epoch {epoch}: holdout loss {loss:.4f} accuracy {acc:.3f}")

losses = [loss for _, _, loss, _ in curve.records]
fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(losses, lw=0.7, label="train loss per batch")
epochs = [e for e, _, _ in curve.holdout]
ax.plot([(e + 1) * len(losses) // len(epochs) - 1 for e in range(len(epochs))],
        [l for _, l, _ in curve.holdout], "o-", label="holdout loss")
ax.set_xlabel("step")
ax.set_ylabel("cross-entropy")
ax.legend()
fig.savefig(OUT / "loss_curve.png", dpi=110, bbox_inches="tight")
print(f"  wrote {OUT/'loss_curve.png'}")

print("== closed-loop evaluation (5 episodes each) ==")
clone = evaluate(model, 5, base_seed=2000)
random_init = evaluate(build_mixed(ModelConfig(mode="gray", seed=9)), 5,
                       base_seed=2000)
print(f"  behavior clone : {clone.average_reward:8.1f}  "
      f"{[round(r) for r in clone.rewards]}")
print(f"  random weights : {random_init.average_reward:8.1f}  "
      f"{[round(r) for r in random_init.rewards]}")
print("\nthe clone inherits the expert's habits; the random net just pays"
      "\nthe frame penalty until the step cap")
