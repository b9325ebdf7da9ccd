"""Both environments under random behavior: acquisition costs, terminal
causes, and the exact reward/cost ledger."""

import numpy as np

from aapomdp.envs import AcquisitionAction, EnvConfig, make_env

for name, horizon, n_actions in (("cartpole", 500, 2), ("sepsis", 30, 8)):
    env = make_env(name, EnvConfig(cost_per_feature=0.01, horizon=horizon))
    rng = np.random.default_rng(7)
    causes: dict[str, int] = {}
    lengths, ledgers = [], []
    for episode in range(50):
        mask = env.reset(episode)
        done = False
        steps = 0
        while not done:
            subset = int(rng.integers(16))  # random feature subset each step
            env.acquire(AcquisitionAction.batch(subset))
            outcome = env.step_task(int(rng.integers(n_actions)))
            done = outcome.terminal
            steps += 1
        causes[outcome.cause] = causes.get(outcome.cause, 0) + 1
        lengths.append(steps)
        ledgers.append(env.ledger())
    print(f"{name}: mean length {np.mean(lengths):.1f}, causes {causes}, "
          f"mean ledger (reward - cost) {np.mean(ledgers):+.2f}")

# acquisition never advances the hidden state
env = make_env("sepsis", EnvConfig(horizon=30))
env.reset(0)
before = env.state_fingerprint()
env.acquire(AcquisitionAction.batch(0b1111))
print("hidden state unchanged by acquisition:", env.state_fingerprint() == before)
