import sys, time, pathlib, json
sys.path.insert(0, "src")
import numpy as np, torch
from dida.training import TrainConfig, train
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

def evals(bundle):
    clean = compute_miou(np.concatenate([implicit_inference(bundle, torch.from_numpy(val_imgs[i:i+50].astype(np.float32)), 0) for i in range(0,200,50)]), val_labels, 4).miou
    rng = np.random.default_rng(0)
    xd = np.stack([degrade_noise(im, 50, sched, rng).x_t for im in val_imgs])
    xb = torch.from_numpy(xd.astype(np.float32))
    pm = np.concatenate([implicit_inference(bundle, xb[i:i+50], 50) for i in range(0,len(xb),50)])
    p0 = np.concatenate([implicit_inference(bundle, xb[i:i+50], 0) for i in range(0,len(xb),50)])
    return clean, compute_miou(pm, val_labels, 4).miou, compute_miou(p0, val_labels, 4).miou

for seed in [1, 2]:
    for mode, lD, lR, tag in [("noise", 0.5, 5.0, "dida"), ("none", 0.0, 0.0, "baseline")]:
        t0 = time.time()
        cfg = TrainConfig(data_root=str(ROOT), out_dir=f"/root/pkg/_scratch/run_{tag}_s{seed}",
                          iterations=2000, mode=mode, lambda_D=lD, lambda_R=lR, seed=seed,
                          checkpoint_interval=0)
        out = train(cfg, samples=(src, tgt))
        c, m, b = evals(out["trainer"].bundle)
        print(f"[{tag} s{seed}] {time.time()-t0:.0f}s clean={c:.4f} matched50={m:.4f} weak50={b:.4f} diff={m-b:+.4f}", flush=True)
