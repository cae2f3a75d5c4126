import sys, time, pathlib, json
sys.path.insert(0, "src")
import numpy as np, torch
from dida.training import TrainConfig, resume
from dida.shapestex import load_dataset
from dida.evaluation import implicit_inference, compute_miou
from dida.degradations import degrade_noise
from dida.schedules import build_schedule

ROOT = pathlib.Path("/root/pkg/_scratch/bench")
samples = list(load_dataset(ROOT/"manifest.json"))
src = [s for s in samples if s.split=="source_train"]
tgt = [s for s in samples if s.split=="target_train"]
val = [s for s in samples if s.split=="target_val"]
val_imgs = np.stack([s.image for s in val]).astype(np.float64)
val_labels = np.stack([s.label_for_eval() for s in val])
sched = build_schedule("sigmoid", 100)

def matched_t_check(bundle, t):
    rng = np.random.default_rng(0)
    xd = np.stack([degrade_noise(im, t, sched, rng).x_t for im in val_imgs])
    xb = torch.from_numpy(xd.astype(np.float32))
    pm = np.concatenate([implicit_inference(bundle, xb[i:i+50], t) for i in range(0,len(xb),50)])
    p0 = np.concatenate([implicit_inference(bundle, xb[i:i+50], 0) for i in range(0,len(xb),50)])
    return compute_miou(pm, val_labels, 4).miou, compute_miou(p0, val_labels, 4).miou

cfg = TrainConfig(data_root=str(ROOT), out_dir="/root/pkg/_scratch/run_dida_s0",
                  iterations=4000, mode="noise", seed=0, checkpoint_interval=1000)
def cb(trainer, rec):
    if rec.iteration % 1000 == 0:
        m, b = matched_t_check(trainer.bundle, 50)
        clean = compute_miou(np.concatenate([implicit_inference(trainer.bundle, torch.from_numpy(val_imgs[i:i+50].astype(np.float32)), 0) for i in range(0,200,50)]), val_labels, 4).miou
        print(f"it={rec.iteration} clean={clean:.4f} matched50={m:.4f} weak50={b:.4f} diff={m-b:+.4f}", flush=True)
out = resume("/root/pkg/_scratch/run_dida_s0/checkpoint.pt", cfg, step_callback=cb, samples=(src, tgt))
print("done resume to 4000")
