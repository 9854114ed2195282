"""Verifying the hand-written backward pass with finite differences.

The network's gradients are derived by hand, so before trusting training we
compare every analytic partial against a central finite difference on a
shrunken copy of the architecture in float64.

Run:  python3 demos/04_gradient_check.py
"""

import numpy as np

from racekit.model import build_tiny_mixed, grad_check

rng = np.random.Generator(np.random.PCG64(0))
model = build_tiny_mixed(seed=0)
print("tiny mixed model: 8x8 input, 2+4 conv filters, 16-unit dense,"
      f" {model.parameter_count()} parameters\n")

images = rng.integers(0, 256, size=(4, 8, 8, 1), dtype=np.uint8)
sensors = rng.uniform(-1, 1, size=(4, 7))
labels = rng.integers(0, 7, size=4)

result = grad_check(model, images, sensors, labels, tolerance=1e-4,
                    max_checks_per_param=64)

worst_by_param: dict[str, float] = {}
for entry in result.entries:
    worst_by_param[entry.param] = max(worst_by_param.get(entry.param, 0.0),
                                      entry.rel_error)
print(f"{'parameter':10s} {'worst rel error':>16s}")
for name, worst in worst_by_param.items():
    print(f"{name:10s} {worst:16.3e}")

print(f"\nmax relative error {result.max_rel_error:.3e} "
      f"(tolerance {result.tolerance:.0e}) -> "
      + ("PASS" if result.passed else "FAIL"))
