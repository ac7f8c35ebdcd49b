import sys, time, json
import numpy as np, torch
from viewselect import desk_preset
from viewselect.config import apply_overrides
from viewselect.demos import collect, load_dataset
from viewselect import trainer as T
from viewselect import rollout

tag = sys.argv[1]
overrides = sys.argv[2:]

cfg = desk_preset()
if overrides:
    cfg = apply_overrides(cfg, overrides)

t0 = time.time()
import os
data_dir = "/root/pkg/.calib/demos50"
if not os.path.exists(os.path.join(data_dir, "manifest.json")):
    collect(cfg.scene, 50, seed=0, out_dir=data_dir)
ds = load_dataset(data_dir)
t1 = time.time()
print(f"[{tag}] collect/load {t1-t0:.1f}s, {len(ds)} eps, {ds.total_frames} frames", flush=True)

out = f"/root/pkg/.calib/run_{tag}"
ckpt, metrics = T.run(cfg, ds, out)
t2 = time.time()
print(f"[{tag}] train {t2-t1:.1f}s -> {ckpt}", flush=True)

from viewselect.checkpoint import load_checkpoint
bundle = load_checkpoint(ckpt)
res = rollout.evaluate(bundle, ["learned_selector","fixed:0","fixed:1","random_each_chunk","oracle_best","all_views_concat"], 50, seed0=10000, out_dir=out+"/eval")
t3 = time.time()
print(f"[{tag}] eval {t3-t2:.1f}s", flush=True)
print(rollout.summary_table(res.summaries), flush=True)
