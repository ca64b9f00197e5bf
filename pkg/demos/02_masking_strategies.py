"""Compare the three patch-masking strategies side by side.

The reconstruction branch always masks 75% of patches uniformly at random.
The contrastive branch masks 50% and can instead be *guided*: the momentum
teacher runs on the full clip, and the attention its global token pays to
each patch becomes a priority score. Guided masking keeps the top-priority
patches visible — the student gets to see what the teacher considers most
informative — and hides the rest. The gumbel variant adds scaled Gumbel
noise to the log-priorities before the top-k cut, so the visible set varies
between draws while still favoring high-priority patches; at scale 0 it
collapses exactly onto the deterministic variant.

Run from the repository root:

    python3 demos/02_masking_strategies.py
"""
import numpy as np
import torch

from tgdp.config import ModelConfig
from tgdp.masking import (MaskSpec, guided_mask_distinct, guided_mask_gumbel,
                          make_mask, num_masked, random_mask)
from tgdp.model import build_model, teacher_forward
from tgdp.rng import stream
from tgdp.synth import SynthSpec, make_sample
from tgdp.tokenizer import patchify_torch

torch.set_num_threads(2)
cfg = ModelConfig()

# --- cardinality is pure arithmetic -----------------------------------------
print("mask cardinality, round-half-up:")
for ratio in (0.75, 0.5):
    for p in (16, 8, 196):
        print(f"  ratio {ratio} over {p} patches -> {num_masked(ratio, p)} masked")

# --- teacher priorities for one real clip -----------------------------------
sample = make_sample(3, SynthSpec(num_classes=10, samples_per_class=4, seed=5), cfg)
pv = patchify_torch(torch.as_tensor(sample.frames[:1]), cfg.patch_size)
pa = patchify_torch(torch.as_tensor(sample.segments[:1]), cfg.patch_size)
_, teacher = build_model(cfg, seed=0)
_, _, prio_v, prio_a = teacher_forward(teacher, pv, pa)
prio = prio_v[0]
print(f"\nteacher priority over the {prio.shape[0]} visual patches "
      f"(sums to {prio.sum():.3f}):")
print("  " + " ".join(f"{v:.3f}" for v in prio))

# --- the three strategies on that priority vector ---------------------------
ratio = 0.5
rng = stream(0, "demo-mask")
rand = random_mask(prio.shape[0], ratio, rng)
dist = guided_mask_distinct(prio, ratio)
gumb = guided_mask_gumbel(prio, ratio, 1.0, stream(0, "demo-gumbel"))

print(f"\nratio {ratio}: {num_masked(ratio, prio.shape[0])} of "
      f"{prio.shape[0]} patches masked")
print(f"  random          visible {rand.visible.tolist()}")
print(f"  guided_distinct visible {dist.visible.tolist()}  "
      f"(the {dist.visible.shape[0]} highest-priority patches)")
print(f"  guided_gumbel   visible {gumb.visible.tolist()}  (noisy top-k)")

top = np.argsort(-prio)[:dist.visible.shape[0]]
assert set(dist.visible.tolist()) == set(top.tolist())

# --- gumbel scale interpolates between deterministic and uniform ------------
# the fresh teacher above is still near-uniform, so use a sharply peaked
# priority vector to make the interpolation visible: patch 5 dominates
peaked = np.full(16, 0.7 / 15)
peaked[5] = 0.3
print("\non a peaked priority vector (patch 5 holds 30% of the mass), how "
      "often each\ngumbel draw keeps patch 5 visible (200 draws, ratio 0.5):")
for scale in (0.0, 0.5, 1.0, 4.0):
    keeps = sum(5 in guided_mask_gumbel(peaked, ratio, scale,
                                        stream(7, "sweep", str(scale), i)).visible
                for i in range(200))
    print(f"  scale {scale:>3}: kept {keeps}/200"
          + ("  (deterministic)" if scale == 0.0 else "")
          + ("  (noise drowns the priorities; any patch survives ~50%)"
             if scale == 4.0 else ""))

zero = guided_mask_gumbel(prio, ratio, 0.0, stream(9, "zero"))
assert np.array_equal(zero.masked, dist.masked)
print("\nscale 0.0 reproduces guided_distinct exactly")

# --- the config-level dispatcher used by the training loop ------------------
spec = MaskSpec(ratio=0.5, strategy="guided_gumbel", gumbel_scale=1.0)
m = make_mask(prio.shape[0], spec, stream(1, "dispatch"), priorities=prio)
print(f"make_mask({spec.strategy}): {m.masked.shape[0]} masked, "
      f"{m.visible.shape[0]} visible, disjoint="
      f"{not set(m.masked.tolist()) & set(m.visible.tolist())}")
