"""Numerical tolerances and sampling parameters shared across the pipeline."""
from __future__ import annotations

from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Config:
    # coefficients below this modulus are dropped after specialization
    tol_zero: float = 1e-12
    # torus / circle nonvanishing threshold
    tol_vanish: float = 1e-9
    # minima in [tol_vanish, inconclusive_band * tol_vanish) are reported inconclusive
    inconclusive_band: float = 1e3
    grid: int = 256
    descent_iters: int = 50
    # | |sigma| - 1 | must exceed this for a root to be classified
    tol_unit: float = 1e-8
    tol_residual: float = 1e-10
    companion_max_degree: int = 30
    aberth_max_iter: int = 500
    t_samples: int = 7
    max_angle_replacements: int = 20
    oracle_samples: int = 4096
    oracle_max_samples: int = 1 << 18
    tol_root: float = 1e-8
    tol_sign: float = 1e-10
    # relative singular-value threshold for the real Jacobian rank test
    tol_rank: float = 1e-6
    spot_t_samples: int = 5

    def with_overrides(self, **kwargs) -> "Config":
        known = {f.name for f in fields(self)}
        clean = {k: v for k, v in kwargs.items() if v is not None}
        unknown = set(clean) - known
        if unknown:
            raise TypeError(f"unknown config fields: {sorted(unknown)}")
        return replace(self, **clean)

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


DEFAULT = Config()
