"""Belief sets feeding ensemble policies, and the shaped acquisition reward."""

import numpy as np

from aapomdp.agent import (
    AcqRewardWeights,
    RolloutBuffer,
    RunConfig,
    Runner,
    acquisition_reward,
    build_policies,
)
from aapomdp.belief import BeliefTracker
from aapomdp.envs import EnvConfig, SEPSIS_SPACE, SepsisEnv
from aapomdp.poss import PossConfig, PossModel

small = PossConfig(latent_dim=16, d_model=64, n_sab=2, n_heads=4, flow_hidden=64,
                   spline_bins=8, decoder_hidden=64, decoder_layers=2)
model = PossModel(SEPSIS_SPACE, small, seed=0)
rng = np.random.default_rng(0)

# a belief is N completions of the current step; observed slots are exact
tracker = BeliefTracker(SEPSIS_SPACE, model, n_samples=8)
tracker.history.on_given({4: 1.0, 5: 0.0, 6: 0.0, 7: 0.0})
tracker.history.on_acquire({0: 2.0})
belief = tracker.estimate(rng)
print("belief members (rows = imputations, cols = features):")
print(belief.members.astype(int))

# the acquisition policy's shaped reward
w = AcqRewardWeights(entropy=1.0, value=1.0, accuracy=1.0)
r = acquisition_reward(cost_sum=0.02, task_entropy=0.9, task_value=0.3,
                       imputation_accuracy=0.75, w=w)
print(f"shaped acquisition reward: -0.02 - 0.9 + 0.3 + 0.75 = {r:+.2f}")

# one hierarchical episode, sequential acquisition, transitions recorded
env = SepsisEnv(EnvConfig(cost_per_feature=0.01, horizon=30,
                          acquisition_mode="sequential"))
cfg = RunConfig(mode="sequential", input_kind="belief", weights=w)
policies = build_policies(SEPSIS_SPACE, "sequential", "belief", seed=0)
runner = Runner(env, cfg, policies, poss_model=model)
buffers = {"acq": RolloutBuffer(), "task": RolloutBuffer()}
rec = runner.run_episode(3, rng, train=True, buffers=buffers)
print(f"episode: {rec.n_steps} treatment steps, cause {rec.cause!r}, "
      f"acquired {[len(s) for s in rec.step_acquired]} features per step")
print(f"ledger check: replayed {rec.replay_ledger():+.3f} == env {rec.env_ledger:+.3f}")
