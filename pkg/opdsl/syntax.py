"""
LadderKit — Operator DSL Source Tree

Leaves produced by the parser. The structural nodes (Sum, Neg, Product,
Power, Commutator) are shared with the operator trees in algebra.ast; the
lowering pass replaces these leaves by operator atoms.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from algebra.ast import Commutator, Neg, OpAst, Power, Product, Sum

__all__ = ["Name", "Number", "Call", "Sum", "Neg", "Product", "Power", "Commutator"]


@dataclass(frozen=True)
class Name(OpAst):
    name: str
    offset: int = 0


@dataclass(frozen=True)
class Number(OpAst):
    value: Fraction
    offset: int = 0


@dataclass(frozen=True)
class Call(OpAst):
    name: str
    args: Tuple[OpAst, ...]
    offset: int = 0
