import sys, time, pathlib
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
    def pred(x, ti):
        xb = torch.from_numpy(x.astype(np.float32))
        return np.concatenate([implicit_inference(bundle, xb[i:i+50], ti) for i in range(0,len(xb),50)])
    clean = compute_miou(pred(val_imgs, 0), val_labels, 4).miou
    rng = np.random.default_rng(0)
    x50 = np.stack([degrade_noise(im, 50, sched, rng).x_t for im in val_imgs])
    m50 = compute_miou(pred(x50, 50), val_labels, 4).miou
    w50 = compute_miou(pred(x50, 0), val_labels, 4).miou
    rng = np.random.default_rng(1)
    x75 = np.stack([degrade_noise(im, 75, sched, rng).x_t for im in val_imgs])
    m75 = compute_miou(pred(x75, 75), val_labels, 4).miou
    w75 = compute_miou(pred(x75, 0), val_labels, 4).miou
    return clean, m50, w50, m75, w75

jobs = []
for seed in (0, 1):
    jobs.append((f"base_s{seed}", dict(mode="none", lambda_D=0.0, lambda_R=0.0, seed=seed)))
    jobs.append((f"enc_s{seed}", dict(mode="noise", seed=seed, gprime_lr_group="encoder")))
    jobs.append((f"dec_s{seed}", dict(mode="noise", seed=seed, gprime_lr_group="decoder")))

for tag, kw in jobs:
    t0 = time.time()
    cfg = TrainConfig(data_root=str(ROOT), out_dir=f"/root/pkg/_scratch/m4_{tag}",
                      iterations=2000, checkpoint_interval=0, **kw)
    out = train(cfg, samples=(src, tgt))
    c, m50, w50, m75, w75 = evals(out["trainer"].bundle)
    print(f"[{tag}] {time.time()-t0:.0f}s clean={c:.4f} | t50 m={m50:.4f} w={w50:.4f} d={m50-w50:+.4f} | t75 m={m75:.4f} w={w75:.4f} d={m75-w75:+.4f}", flush=True)
    del out
