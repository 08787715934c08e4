"""Seeded randomized checks of the structural results.

Each verifier samples pairs that meet its premise and tests the conclusion.
Reruns with the same seed give the same verdicts.
"""

from unitary_order.suite import TrialConfig, run_all

cfg = TrialConfig(dim=6, min_dim=2, trials=40, seed=42)
for rep in run_all(cfg):
    print(f"{rep.theorem:>6}  {rep.status:<8} premise hits {rep.premise_hits:>4}  "
          f"failures {len(rep.failures)}  gray {rep.gray}")
