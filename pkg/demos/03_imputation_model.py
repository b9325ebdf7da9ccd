"""Train a small trajectory-set model for a minute, then impute held-out
vitals inside and beyond the training time window."""

import numpy as np

from aapomdp.envs import EnvConfig, SEPSIS_SPACE, SepsisEnv, collect_random_episode, episodes_from_events
from aapomdp.poss import PossConfig, PossModel, TrajectoryDataset, imputation_report, train_poss

rng = np.random.default_rng(0)
env = SepsisEnv(EnvConfig(horizon=30))

events, heldout_events = [], []
for ep in range(200):
    events += collect_random_episode(env, ep, seed=ep, rng=rng)
for ep in range(40):
    heldout_events += collect_random_episode(env, ep, seed=100_000 + ep, rng=rng)
train_eps = episodes_from_events(events, dummy_action=8)
held_eps = episodes_from_events(heldout_events, dummy_action=8)

small = PossConfig(latent_dim=16, d_model=64, n_sab=2, n_heads=4, flow_hidden=64,
                   spline_bins=8, decoder_hidden=64, decoder_layers=2)
model = PossModel(SEPSIS_SPACE, small, seed=0)

before = imputation_report(model, held_eps, SEPSIS_SPACE, id_boundary=15,
                           baseline_episodes=train_eps)
print(f"untrained accuracy: id {before['id_accuracy']:.3f} ood {before['ood_accuracy']:.3f} "
      f"(majority baseline {before['chance']['majority']:.3f})")

dataset = TrajectoryDataset(train_eps, SEPSIS_SPACE, max_step=15)
history = train_poss(model, dataset, epochs=12, rng=np.random.default_rng(1),
                     lr=3e-4, batch_size=16,
                     log_fn=lambda e, tr, ev: print(f"  epoch {e}: elbo {tr:.2f}"))

after = imputation_report(model, held_eps, SEPSIS_SPACE, id_boundary=15,
                          baseline_episodes=train_eps)
print(f"trained accuracy:   id {after['id_accuracy']:.3f} ood {after['ood_accuracy']:.3f}")

# one episode, one timestep, ten sampled completions of the hidden vitals
ep = held_eps[0]
mask = np.zeros((1, ep.length, 8), dtype=bool)
mask[..., 4:] = True
completions = model.impute(ep.steps[None], (ep.features * mask[0])[None], mask,
                           ep.prev_actions[None], query_index=0, n=10,
                           rng=np.random.default_rng(2))
print("true first-step vitals:", ep.features[0, :4].astype(int).tolist())
print("ten imputed completions:")
print(completions[:, :4].astype(int))
