"""
LadderKit — Tables

pandas DataFrames for the tabular commands and their text / CSV / JSON
renderings:
  - chain_table        the factorization-chain energy grid
  - point_table        ψ(t) on a range of points
  - coefficient_table  Hermite / Laguerre coefficients from both routes
"""

import json
from fractions import Fraction
from typing import List, Sequence

import numpy as np
import pandas as pd

from analysis.wavefunction import Wavefunction, evaluate
from config.constants import FLOAT_FORMAT, SCHEMA, UNITS_NOTE
from models.chain import ChainEntry
from opdsl.render import scalar_text
from polynomials.classical import hermite, laguerre_explicit
from polynomials.rodrigues import hermite_nested, laguerre_nested


# =============================================================================
# Builders
# =============================================================================
def chain_table(entries: Sequence[ChainEntry]) -> pd.DataFrame:
    """Rows are energies, columns the auxiliary Hamiltonians; each cell holds the energy."""
    records = [
        {"row": e.row, "column": e.column, "energy": str(e.energy),
         "level": e.qn.level, "k": e.qn.k}
        for e in entries
    ]
    return pd.DataFrame.from_records(records, columns=["row", "column", "energy", "level", "k"])


def chain_grid(table: pd.DataFrame) -> pd.DataFrame:
    """Pivot to the triangular picture: one line per row, one column per auxiliary Hamiltonian."""
    grid = table.pivot(index="row", columns="column", values="energy").fillna("")
    grid.columns = [f"H{c}" for c in grid.columns]
    return grid


def parse_points(spec: str) -> np.ndarray:
    """'a:b:step' → a, a+step, …, b (inclusive when b is on the lattice)."""
    try:
        start, stop, step = (float(v) for v in spec.split(":"))
    except ValueError:
        raise ValueError(f"points must look like start:stop:step, got {spec!r}") from None
    if step <= 0 or stop < start:
        raise ValueError(f"points need step > 0 and stop ≥ start, got {spec!r}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def point_table(psi: Wavefunction, points: np.ndarray) -> pd.DataFrame:
    """
    ψ(t) at each point, phase omitted.

    Raises
    ------
    DomainError if any point lies outside the domain.
    """
    values = [evaluate(psi, t) for t in points]
    return pd.DataFrame({
        "t": points,
        "re": [v.real for v in values],
        "im": [v.imag for v in values],
    })


def coefficient_table(family: str, max_degree: int, alpha: Fraction = Fraction(0)) -> pd.DataFrame:
    """
    Coefficients c_j of H_n or L_n^(α) for n ≤ max_degree, from the
    recurrence / explicit sum and from the nested commutator.
    """
    records: List[dict] = []
    for n in range(max_degree + 1):
        if family == "hermite":
            reference = hermite(n)
            operator = hermite_nested(n)
        elif family == "laguerre":
            reference = laguerre_explicit(n, alpha)
            operator = laguerre_nested(n, alpha)
        else:
            raise ValueError(f"unknown polynomial family {family!r}")
        for j in range(n + 1):
            ref, op = reference.coefficient(j), operator.coefficient(j)
            records.append({"degree": n, "power": j, "recurrence": scalar_text(ref),
                            "operator": scalar_text(op), "agree": ref == op})
    return pd.DataFrame.from_records(records, columns=["degree", "power", "recurrence", "operator", "agree"])


# =============================================================================
# Rendering
# =============================================================================
def render_table(df: pd.DataFrame, fmt: str, index: bool = False) -> str:
    if fmt == "csv":
        return df.to_csv(index=index, float_format=FLOAT_FORMAT, lineterminator="\n").rstrip("\n")
    if fmt == "json":
        records = json.loads(df.to_json(orient="records", double_precision=15))
        return json.dumps({"schema": SCHEMA, "rows": records}, sort_keys=True, indent=2)
    text = df.to_string(index=index, float_format=lambda v: FLOAT_FORMAT % v)
    return f"{text}\n\n{UNITS_NOTE}"


__all__ = ["chain_table", "chain_grid", "parse_points", "point_table", "coefficient_table",
           "render_table"]
