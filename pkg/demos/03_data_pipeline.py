"""The preprocessing pipeline, stage by stage.

Starting from a recorded episode: discard the zoom-intro frames, rebalance
the accelerate label, compress to grayscale, and augment 4x. Renders an
augmentation panel (original, grayscale, two crop-pads, flip) and the label
distribution before/after balancing.

Run:  python3 demos/03_data_pipeline.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from racekit import scripted_expert
from racekit.dataset import (
    LABEL_NAMES,
    augment,
    augment_dataset,
    balance,
    crop_pad_sample,
    discard_intro_dataset,
    flip_sample,
    grayscale_dataset,
    histogram,
    to_grayscale,
)
from racekit.evaluate import record_episodes

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

rng = np.random.Generator(np.random.PCG64(42))

print("== record two episodes ==")
raw = record_episodes(scripted_expert, 2, base_seed=300)
print(f"  {len(raw.samples)} raw samples")

print("\n== stage 1: discard the zoom intro ==")
ds = discard_intro_dataset(raw)
print(f"  {len(raw.samples)} -> {len(ds.samples)} "
      f"(dropped {len(raw.samples) - len(ds.samples)} wide-zoom frames)")

print("\n== stage 2: rebalance the accelerate label ==")
before = histogram(ds)
ds = balance(ds, rng)
after = histogram(ds)
for name, b, a in zip(LABEL_NAMES, before.counts, after.counts):
    print(f"  {name:7s} {b:5d} -> {a:5d}")

fig, axes = plt.subplots(1, 2, figsize=(10, 3.5), sharey=True)
for ax, hist, title in ((axes[0], before, "before balancing"),
                        (axes[1], after, "after balancing")):
    ax.bar(LABEL_NAMES, hist.counts, color="#4477aa")
    ax.set_title(title)
    ax.tick_params(axis="x", rotation=45)
fig.savefig(OUT / "label_distribution.png", dpi=110, bbox_inches="tight")
print(f"  wrote {OUT/'label_distribution.png'}")

print("\n== stage 3 + 4: grayscale and 4x augmentation ==")
sample = ds.samples[len(ds.samples) // 2]
panel = [
    ("original", sample.observation),
    ("grayscale", to_grayscale(sample.observation)),
    ("crop-pad", crop_pad_sample(sample, rng).observation),
    ("crop-pad", crop_pad_sample(sample, rng).observation),
    ("flip", flip_sample(sample).observation),
]
fig, axes = plt.subplots(1, 5, figsize=(13, 3))
for ax, (title, img) in zip(axes, panel):
    ax.imshow(img.squeeze(), cmap="gray" if img.shape[2] == 1 else None)
    ax.set_title(title)
    ax.axis("off")
fig.savefig(OUT / "augmentation.png", dpi=110, bbox_inches="tight")
print(f"  wrote {OUT/'augmentation.png'}")

variants = augment(sample, rng)
print(f"  augment() turns 1 sample into {len(variants)}")
final = augment_dataset(grayscale_dataset(ds), rng)
print(f"  full pipeline: {len(raw.samples)} raw -> {len(final.samples)} "
      f"training samples ({final.mode})")
