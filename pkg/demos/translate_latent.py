"""Per-order latent translation with a trained desk run.

    python3 demos/translate_latent.py desk-run sub-007

Prints the sampling schedule of each channel group and the per-order RISH
NMSE of the input and the generated features against the acquired 7T data.
"""

import sys

import numpy as np

from rishldm.metrics import nmse
from rishldm.pipeline import stages as S
from rishldm.pipeline.config import load_config
from rishldm.volume import resample_array


def main(root, sid):
    ws = S.Workspace(root)
    cfg = load_config(ws.path("config.txt"))
    vq3 = S.load_vqvae(cfg, ws, "vqvae3t")
    vq7 = S.load_vqvae(cfg, ws, "vqvae7t-finetune")
    net = S.load_ldm(cfg, ws)
    rish3 = S.working_rish(cfg, ws, sid, "source")
    log = []
    gen, _, _ = S.generate_rish(cfg, vq3, vq7, net, rish3, log)
    for omega, t_enc, phase, *_ in log[:: max(1, len(log) // 6)]:
        print(f"omega {omega:<4} t_enc {t_enc:<4} {phase}")
    truth = S.load_rish(ws, sid, "target").data
    dims = truth.shape[:3]
    mask = truth[..., 0] > 0
    for k, order in enumerate((0, 2, 4)):
        up_in = resample_array(rish3[..., k], dims)
        up_gen = resample_array(gen[..., k], dims)
        print(f"L{order}: input {nmse(up_in, truth[..., k], mask):.4f}  generated {nmse(up_gen, truth[..., k], mask):.4f}")


if __name__ == "__main__":
    main(*(sys.argv[1:3] if len(sys.argv) > 2 else ("desk-run", "sub-007")))
