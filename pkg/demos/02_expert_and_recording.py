"""The scripted expert and demonstration recording.

Drives the pure-pursuit expert around a few seeded tracks, reports episode
rewards, then records a short episode to a dataset file and inspects it.

Run:  python3 demos/02_expert_and_recording.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from racekit import generate_track, initial_state, step, scripted_expert
from racekit.dataset import LABEL_NAMES, histogram, read_dataset
from racekit.evaluate import evaluate_policy, record_episodes

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

print("== expert laps ==")
report = evaluate_policy(scripted_expert, 5, base_seed=100)
for i, (seed, steps, reward) in enumerate(zip(report.seeds, report.steps,
                                              report.rewards)):
    print(f"  episode {i} (seed {seed}): reward {reward:7.1f} in {steps} steps")
print(f"  average reward: {report.average_reward:.1f}")

# trajectory picture for one lap
track = generate_track(100)
state = initial_state(track)
path = [state.car.position.copy()]
speeds = []
while not state.done:
    state = step(state, scripted_expert(state))
    path.append(state.car.position.copy())
    speeds.append(state.car.speed)
path = np.array(path)

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4.5))
loop = np.vstack([track.centerline, track.centerline[:1]])
ax1.plot(loop[:, 0], loop[:, 1], lw=7, color="#bbbbbb")
pts = ax1.scatter(path[1:, 0], path[1:, 1], c=speeds, s=2, cmap="viridis")
fig.colorbar(pts, ax=ax1, label="speed")
ax1.set_title("expert line, colored by speed")
ax1.set_aspect("equal")
ax2.plot(speeds)
ax2.set_xlabel("step")
ax2.set_ylabel("speed")
ax2.set_title("speed profile (lifts and brakes before corners)")
fig.savefig(OUT / "expert_lap.png", dpi=110, bbox_inches="tight")
print(f"  wrote {OUT/'expert_lap.png'}")

print("\n== recording demonstrations ==")
demo_path = OUT / "demo.cril"
ds = record_episodes(scripted_expert, 1, base_seed=100, out_path=demo_path)
print(f"  recorded {len(ds.samples)} samples -> {demo_path}")

back = read_dataset(demo_path)
hist = histogram(back)
print("  label histogram:")
for name, count in zip(LABEL_NAMES, hist.counts):
    print(f"    {name:7s} {count:5d}")
