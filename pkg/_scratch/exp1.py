import sys, time, json, pathlib
sys.path.insert(0, "src")
import numpy as np, torch
from dida.training import TrainConfig, train
from dida.shapestex import generate_benchmark, load_dataset
from dida.evaluation import implicit_inference, compute_miou

ROOT = pathlib.Path("/root/pkg/_scratch/bench")
if not (ROOT/"manifest.json").exists():
    generate_benchmark(ROOT, seed=0)
samples = list(load_dataset(ROOT/"manifest.json"))
src = [s for s in samples if s.split=="source_train"]
tgt = [s for s in samples if s.split=="target_train"]
val = [s for s in samples if s.split=="target_val"]
val_imgs = np.stack([s.image for s in val])
val_labels = np.stack([s.label_for_eval() for s in val])

def eval_miou(bundle):
    preds = []
    for i in range(0, len(val_imgs), 50):
        xb = torch.from_numpy(val_imgs[i:i+50].astype(np.float32))
        preds.append(implicit_inference(bundle, xb, 0))
    return compute_miou(np.concatenate(preds), val_labels, 4).miou

results = {}
for mode, lD, lR, tag in [("none", 0.0, 0.0, "baseline"), ("noise", 0.5, 5.0, "dida")]:
    for seed in [0]:
        t0 = time.time()
        cfg = TrainConfig(data_root=str(ROOT), out_dir=f"/root/pkg/_scratch/run_{tag}_s{seed}",
                          iterations=2000, mode=mode, lambda_D=lD, lambda_R=lR, seed=seed,
                          checkpoint_interval=500)
        evals = {}
        def cb(trainer, rec):
            if rec.iteration % 500 == 0:
                evals[rec.iteration] = eval_miou(trainer.bundle)
                print(f"[{tag} s{seed}] it={rec.iteration} loss_S={rec.loss_S:.3f} q={rec.q_mean:.2f} val mIoU={evals[rec.iteration]:.4f}", flush=True)
        out = train(cfg, step_callback=cb, samples=(src, tgt))
        results[f"{tag}_s{seed}"] = evals
        print(f"{tag} s{seed}: {time.time()-t0:.0f}s", flush=True)
json.dump(results, open("/root/pkg/_scratch/exp1.json","w"), indent=1)
print(json.dumps(results, indent=1))
