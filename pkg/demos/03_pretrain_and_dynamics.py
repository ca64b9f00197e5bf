"""Run a short dual-path pretraining and analyze its loss trajectory.

Every training step makes two forward passes through the shared encoder:
a reconstruction pass (75% of patches hidden, decoder rebuilds them) and a
contrastive pass (50% hidden, the two modality globals are pulled together
with InfoNCE and distilled toward the momentum teacher's full-view globals).
The loss CSV written by the run records each term per step; the dynamics
helpers then estimate, for each term, the step at which its smoothed value
first enters and stays inside a band around its final level.

This takes a minute or two on CPU and leaves a checkpoint under
demos/out/pretrain/ that demo 04 picks up.

Run from the repository root:

    python3 demos/03_pretrain_and_dynamics.py
"""
import shutil
import time

import torch

from tgdp.config import ModelConfig, TrainConfig
from tgdp.dynamics import convergence_stats, read_loss_csv, summary_json
from tgdp.synth import SynthSpec, iter_corpus
from tgdp.training import batch_for_step, init_state, run_pretraining, train_step

torch.set_num_threads(4)
OUT = "demos/out/pretrain"

mcfg = ModelConfig()
tcfg = TrainConfig(batch_size=32, steps=800, warmup_steps=160, seed=0,
                   lambda_contra=10.0, ckpt_every=400)
corpus = list(iter_corpus(SynthSpec(num_classes=10, samples_per_class=100,
                                    correlation=1.0, seed=100), mcfg))
print(f"corpus: {len(corpus)} aligned clips, batch {tcfg.batch_size}, "
      f"{tcfg.steps} steps")

# --- one step, up close ------------------------------------------------------
state = init_state(mcfg, tcfg)
report = train_step(state, batch_for_step(corpus, 0, tcfg.batch_size, tcfg.seed))
print("\nfirst step, term by term (provenance says which pass produced it):")
for term in ("rec_v", "rec_a", "contra", "dis"):
    print(f"  {term:6s} = {getattr(report, term):8.4f}   from the "
          f"{report.provenance[term]} pass")
print(f"  total  = {report.total:8.4f} with weights "
      f"(rec, dis, contra) = {report.weights}")

# --- the full run ------------------------------------------------------------
shutil.rmtree(OUT, ignore_errors=True)
t0 = time.perf_counter()
state = run_pretraining(mcfg, tcfg, corpus, OUT)
print(f"\ntrained {state.step} steps in {time.perf_counter() - t0:.0f}s; "
      f"outputs in {OUT}/: losses.csv, ckpt_400, ckpt_final, "
      f"config.resolved.cfg")

cols = read_loss_csv(f"{OUT}/losses.csv")
for s in (0, 200, 400, 799):
    i = int(cols["step"].tolist().index(s))
    print(f"  step {s:4d}: rec_v {cols['rec_v'][i]:7.3f}  rec_a "
          f"{cols['rec_a'][i]:7.3f}  contra {cols['contra'][i]:6.3f}  "
          f"dis {cols['dis'][i]:6.4f}  lr {cols['lr'][i]:.6f}")

# --- when does each term settle? --------------------------------------------
stats = convergence_stats(f"{OUT}/losses.csv", p=0.05, window=20)
print("\nstep at which the 20-step moving average enters and stays within "
      "5% of the final level:")
for term in ("rec", "contra", "dis", "total"):
    s = stats[term]
    step = "never" if s["step_to_within"] is None else s["step_to_within"]
    print(f"  {term:6s} final {s['final']:8.4f}   settles at step {step}")
print("\nreconstruction flattens out well before the contrastive term does; "
      "the\ncross-modal alignment keeps improving long after pixel "
      "reconstruction has converged.")

print("\nmachine-readable summary:")
print(summary_json(stats))
