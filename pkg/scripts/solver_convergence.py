"""Convergence of the m-metric solver in the unit disk against the closed form.

Prints value, relative error, lattice size and time for resolutions
h, h/2, h/4, h/8 (h = auto resolution of each pair).
"""

import time

from hypmetrics import SolverConfig, hyperbolic_closed_form, m_density, shortest_path_estimate, unit_disk
from hypmetrics.solver import auto_resolution

PAIRS = [
    ((0.0, 0.0), (0.5, 0.0)),
    ((-0.3, 0.2), (0.4, -0.1)),
    ((0.1, 0.6), (-0.5, -0.3)),
    ((0.7, 0.0), (0.0, 0.7)),
    ((-0.2, -0.2), (0.3, 0.35)),
    ((0.95, 0.0), (0.0, 0.95)),
]


def main(levels: int = 4):
    D = unit_disk()
    f = m_density(D)
    print(f"{'pair':<28}{'level':>6}{'value':>16}{'rel.err':>11}{'nodes':>8}{'time':>8}")
    for x, y in PAIRS:
        exact = hyperbolic_closed_form(D, x, y)
        h = auto_resolution(D, x, y)
        for i in range(levels):
            t0 = time.perf_counter()
            est = shortest_path_estimate(f, x, y, SolverConfig(resolution=h / 2**i))
            dt = time.perf_counter() - t0
            print(f"{str((x, y)):<28}{'h/' + str(2**i):>6}{est.value:>16.10f}{est.value / exact - 1:>11.2e}"
                  f"{est.n_nodes:>8}{dt:>7.2f}s")


if __name__ == "__main__":
    main()
