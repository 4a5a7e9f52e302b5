from pathlib import Path
from typing import Iterable

import pandas as pd

from numerics.heat import HeatResidual
from numerics.integrator import PviTrajectory

TRAJECTORY_COLUMNS = ["x", "u", "u_prime"]
HEAT_COLUMNS = ["t", "x", "residual_h", "residual_h2", "order"]


def trajectory_frame(traj: PviTrajectory) -> pd.DataFrame:
    return traj.to_frame()[TRAJECTORY_COLUMNS]


def heat_frame(results: Iterable[HeatResidual]) -> pd.DataFrame:
    rows = [(r.t, r.x, r.residual_h, r.residual_h2, r.order) for r in results]
    return pd.DataFrame(rows, columns=HEAT_COLUMNS)


def write_csv(frame: pd.DataFrame, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)
    return path
