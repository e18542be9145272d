import numpy as np
import pytest

from bandtopsis import CriterionSpec, DecisionMatrix, Direction

# Social-media case study: 6 companies x 12 tweet-metric ratios.
SOCIAL_VALUES = np.array([
    [0.315, 0.141, 0.544, 0.323, 0.047, 0.630, 0.219, 0.060, 0.722, 0.198, 0.063, 0.739],
    [0.299, 0.132, 0.569, 0.270, 0.132, 0.598, 0.061, 0.040, 0.899, 0.154, 0.067, 0.779],
    [0.044, 0.323, 0.633, 0.006, 0.206, 0.788, 0.037, 0.058, 0.906, 0.004, 0.022, 0.974],
    [0.056, 0.069, 0.875, 0.000, 0.009, 0.991, 0.003, 0.005, 0.992, 0.009, 0.005, 0.986],
    [0.013, 0.086, 0.901, 0.001, 0.019, 0.979, 0.013, 0.021, 0.966, 0.001, 0.001, 0.998],
    [0.039, 0.346, 0.615, 0.056, 0.268, 0.677, 0.001, 0.004, 0.995, 0.002, 0.026, 0.972],
])

SOCIAL_DIRECTIONS = ["max", "min", "max", "max", "min", "max",
                     "max", "min", "max", "max", "min", "max"]

# Published reference outputs for the social-media dataset (3-decimal).
REF_ENTROPY = [0.092, 0.029, 0.004, 0.155, 0.112, 0.004,
               0.148, 0.096, 0.001, 0.173, 0.185, 0.001]
REF_CRITIC = [0.101, 0.064, 0.067, 0.104, 0.061, 0.069,
              0.097, 0.078, 0.085, 0.104, 0.076, 0.094]
REF_LOWER = [0.083, 0.029, 0.004, 0.083, 0.061, 0.004,
             0.083, 0.078, 0.001, 0.083, 0.076, 0.001]
REF_UPPER = [0.101, 0.083, 0.083, 0.155, 0.112, 0.083,
             0.148, 0.096, 0.085, 0.173, 0.185, 0.094]

# Externally published weight vectors used as single-shot fixtures.
IDOCRIW_WEIGHTS = [0.093, 0.069, 0.056, 0.119, 0.087, 0.056,
                   0.116, 0.079, 0.055, 0.127, 0.086, 0.055]
MEREC_WEIGHTS = [0.053, 0.028, 0.008, 0.57, 0.053, 0.009,
                 0.088, 0.043, 0.008, 0.077, 0.056, 0.007]

# Final positions of a1..a6 under the full randomized-band run.
REF_POSITIONS = [1, 2, 6, 3, 4, 5]


def make_matrix(values, directions, alt_prefix="a", crit_prefix="g") -> DecisionMatrix:
    values = np.asarray(values, dtype=float)
    m, n = values.shape
    crits = tuple(
        CriterionSpec(id=f"{crit_prefix}{j + 1}", direction=Direction.parse(d))
        for j, d in enumerate(directions)
    )
    alts = tuple(f"{alt_prefix}{i + 1}" for i in range(m))
    return DecisionMatrix(alts, crits, values)


@pytest.fixture(scope="session")
def social_matrix() -> DecisionMatrix:
    return make_matrix(SOCIAL_VALUES, SOCIAL_DIRECTIONS)


@pytest.fixture()
def social_csv(tmp_path):
    lines = ["alternative," + ",".join(f"g{j + 1}" for j in range(12)),
             "direction," + ",".join(SOCIAL_DIRECTIONS)]
    for i, row in enumerate(SOCIAL_VALUES):
        lines.append(f"a{i + 1}," + ",".join(f"{v:.3f}" for v in row))
    p = tmp_path / "social.csv"
    p.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return p
