"""A tour of the simulator: tracks, physics, sensors, and the reward.

Generates a few procedural tracks, steps the car through a short maneuver
while printing the sensor readout, and demonstrates the control-feel rules
(gas cut while turning, doubled brake strength).

Run:  python3 demos/01_simulator_tour.py
Outputs land in demos/out/.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from racekit import (
    ContinuousAction,
    generate_track,
    initial_state,
    read_sensors,
    step,
)

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# ---------------------------------------------------------------- tracks
print("== procedural tracks ==")
fig, axes = plt.subplots(1, 3, figsize=(12, 4))
for ax, seed in zip(axes, (1, 7, 42)):
    track = generate_track(seed)
    loop = np.vstack([track.centerline, track.centerline[:1]])
    ax.plot(loop[:, 0], loop[:, 1], lw=6, color="#666666")
    ax.plot(loop[:, 0], loop[:, 1], lw=0.8, color="yellow")
    ax.set_title(f"seed {seed}: {track.tile_count} tiles")
    ax.set_aspect("equal")
    print(f"  seed {seed}: {track.tile_count} tiles, "
          f"closure gap {track.closure_gap():.2e}")
fig.savefig(OUT / "tracks.png", dpi=110, bbox_inches="tight")
print(f"  wrote {OUT/'tracks.png'}")

# ---------------------------------------------------------------- physics
print("\n== accelerate, coast, brake ==")
state = initial_state(generate_track(42))
for phase, action, ticks in [
    ("full gas", ContinuousAction(0.0, 1.0, 0.0), 100),
    ("coast", ContinuousAction(0.0, 0.0, 0.0), 50),
    ("full brake", ContinuousAction(0.0, 0.0, 1.0), 50),
]:
    for _ in range(ticks):
        state = step(state, action)
    print(f"  after {phase:10s} speed {state.car.speed:6.2f}  "
          f"tiles visited {len(state.tiles_visited):3d}  "
          f"last frame reward {state.last_reward:+.2f}")

# the gas-cut rule: turning hard means the throttle does nothing
state = initial_state(generate_track(42))
for _ in range(50):
    state = step(state, ContinuousAction(0.0, 1.0, 0.0))
v_before = state.car.speed
state = step(state, ContinuousAction(0.5, 1.0, 0.0))  # steer + gas together
print(f"\n  gas cut while turning: speed {v_before:.2f} -> {state.car.speed:.2f} "
      "(gas contributed nothing)")

# ---------------------------------------------------------------- sensors
print("\n== the 7-sensor readout ==")
names = ["true_speed", "abs_fl", "abs_fr", "abs_rl", "abs_rr", "steering", "gyro"]
state = initial_state(generate_track(42))
for _ in range(60):
    state = step(state, ContinuousAction(0.0, 0.9, 0.0))
for _ in range(10):
    state = step(state, ContinuousAction(-1.0, 0.0, 0.0))
sensors = read_sensors(state.car)
for name, value in zip(names, sensors):
    bar = "#" * int(abs(value) * 30)
    print(f"  {name:10s} {value:+.3f} {bar}")
print("\n(left turn in progress: negative steering, positive gyro, inner"
      " wheels slower than outer ones)")
