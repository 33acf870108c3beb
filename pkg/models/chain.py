"""
LadderKit — Factorization-Chain Energy Grid

Column j is the j-th auxiliary Hamiltonian of Ĥ_start; its states fill rows
r ≥ j. Every entry in a row has the same energy, the degeneracy structure of
the chain: the state in column j, row r is reached from the ground state of
column r by r − j raising operators.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from models.system_spec import QuantumNumbers, SystemSpec, check_level


@dataclass(frozen=True)
class ChainEntry:
    column: int
    row: int
    energy: Fraction
    qn: QuantumNumbers


def chain_energies(system: SystemSpec, max_level: int, start_level: int = 0,
                   bound: Optional[int] = None) -> List[ChainEntry]:
    """
    Parameters
    ----------
    system : SystemSpec
    max_level : int
        Highest row (and column) index.
    start_level : int
        Angular index of the first column.
    bound : int, optional
        Guard on max_level (the configured level bound).

    Returns
    -------
    list of ChainEntry sorted by (row, column).
    """
    check_level(max_level, bound)
    check_level(start_level)
    entries = []
    for row in range(max_level + 1):
        energy = system.auxiliary_energy(start_level, row)
        for column in range(row + 1):
            # quantum numbers with respect to the column's own Hamiltonian
            level = start_level + column if system.is_radial else 0
            qn = QuantumNumbers(level=level, k=row - column)
            entries.append(ChainEntry(column, row, energy, qn))
    return entries
