"""Truth values, lattice orderings, connectives, and named logics.

The package computes with four truth values: false, unknown, inconsistent
and true.  Negations and implication are fixed lookup tables; conjunction
and disjunction are the greatest lower bound and least upper bound of one
of four lattice orderings (Kleene, Priest, linear, Belnap).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Tuple


class TruthValue(Enum):
    FALSE = "f"
    UNKNOWN = "u"
    INCONSISTENT = "i"
    TRUE = "t"

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"TruthValue.{self.name}"


F = TruthValue.FALSE
U = TruthValue.UNKNOWN
I = TruthValue.INCONSISTENT
T = TruthValue.TRUE

ALL_VALUES = (F, U, I, T)

# Display/sort order for truth-value sets; follows the linear ordering.
VALUE_ORDER = {F: 0, U: 1, I: 2, T: 3}


class CarrierError(ValueError):
    """A truth value was used outside the carrier of the chosen ordering."""


# Lookup tables for the unary connectives and implication.  They are kept
# as explicit tables rather than derived formulas: the implication is not
# definable from the lattice operations.
_STRONG_NEG = {F: T, U: U, I: I, T: F}

_DEFAULT_NEG = {F: T, U: T, I: I, T: F}

_IMPLIES = {
    (F, F): T, (F, U): T, (F, I): T, (F, T): T,
    (U, F): T, (U, U): T, (U, I): T, (U, T): T,
    (I, F): F, (I, U): F, (I, I): T, (I, T): F,
    (T, F): F, (T, U): F, (T, I): T, (T, T): T,
}


def strong_neg(v: TruthValue) -> TruthValue:
    """Classical negation: swaps true/false, fixes unknown and inconsistent."""
    return _STRONG_NEG[v]


def default_neg(v: TruthValue) -> TruthValue:
    """Default negation: "not true", so both false and unknown map to true."""
    return _DEFAULT_NEG[v]


def implies(a: TruthValue, b: TruthValue) -> TruthValue:
    """Rule implication; always two-valued."""
    return _IMPLIES[(a, b)]


class TruthOrdering:
    """One of the four lattice orderings over (a subset of) the truth values.

    ``leq`` is the partial order; ``glb``/``lub`` are total on pairs from the
    carrier and raise :class:`CarrierError` outside it.
    """

    def __init__(self, kind: str, carrier: Tuple[TruthValue, ...],
                 covers: Tuple[Tuple[TruthValue, TruthValue], ...]):
        self.kind = kind
        self.carrier: FrozenSet[TruthValue] = frozenset(carrier)
        below: Dict[TruthValue, set] = {v: {v} for v in carrier}
        changed = True
        while changed:
            changed = False
            for lo, hi in covers:
                if not below[lo] <= below[hi]:
                    below[hi] |= below[lo]
                    changed = True
        self._leq = {(a, b) for b in carrier for a in below[b]}
        self._glb: Dict[Tuple[TruthValue, TruthValue], TruthValue] = {}
        self._lub: Dict[Tuple[TruthValue, TruthValue], TruthValue] = {}
        for a in carrier:
            for b in carrier:
                lowers = [v for v in carrier if self.leq(v, a) and self.leq(v, b)]
                uppers = [v for v in carrier if self.leq(a, v) and self.leq(b, v)]
                glbs = [v for v in lowers if all(self.leq(w, v) for w in lowers)]
                lubs = [v for v in uppers if all(self.leq(v, w) for w in uppers)]
                assert len(glbs) == 1 and len(lubs) == 1, f"{kind} is not a lattice"
                self._glb[(a, b)] = glbs[0]
                self._lub[(a, b)] = lubs[0]

    def leq(self, a: TruthValue, b: TruthValue) -> bool:
        return (a, b) in self._leq

    def _check(self, *values: TruthValue) -> None:
        for v in values:
            if v not in self.carrier:
                raise CarrierError(
                    f"truth value {v} is outside the carrier of ordering {self.kind}")

    def glb(self, a: TruthValue, b: TruthValue) -> TruthValue:
        self._check(a, b)
        return self._glb[(a, b)]

    def lub(self, a: TruthValue, b: TruthValue) -> TruthValue:
        self._check(a, b)
        return self._lub[(a, b)]

    def __repr__(self) -> str:
        return f"TruthOrdering({self.kind})"


ORDER_K = TruthOrdering("K", (F, U, T), ((F, U), (U, T)))
ORDER_P = TruthOrdering("P", (F, I, T), ((F, I), (I, T)))
ORDER_L = TruthOrdering("L", (F, U, I, T), ((F, U), (U, I), (I, T)))
ORDER_B = TruthOrdering("B", (F, U, I, T), ((F, U), (F, I), (U, T), (I, T)))

ORDERINGS = {"K": ORDER_K, "P": ORDER_P, "L": ORDER_L, "B": ORDER_B}


def conj(a: TruthValue, b: TruthValue, ordering: TruthOrdering) -> TruthValue:
    """Conjunction: greatest lower bound under the given ordering."""
    return ordering.glb(a, b)


def disj(a: TruthValue, b: TruthValue, ordering: TruthOrdering) -> TruthValue:
    """Disjunction: least upper bound under the given ordering."""
    return ordering.lub(a, b)


@dataclass(frozen=True)
class Logic:
    """A named logic: carrier, ordering and the designated ("counts as
    satisfied") truth values."""

    name: str
    carrier: FrozenSet[TruthValue]
    ordering: TruthOrdering
    designated: FrozenSet[TruthValue]

    def __repr__(self) -> str:
        return f"Logic({self.name})"


K3_PLUS = Logic("K3+", frozenset((F, U, T)), ORDER_K, frozenset((T,)))
P3_PLUS = Logic("P3+", frozenset((F, I, T)), ORDER_P, frozenset((I, T)))
L4_PLUS = Logic("L4+", frozenset((F, U, I, T)), ORDER_L, frozenset((I, T)))
B4_PLUS = Logic("B4+", frozenset((F, U, I, T)), ORDER_B, frozenset((I, T)))

LOGICS = {"K3+": K3_PLUS, "P3+": P3_PLUS, "L4+": L4_PLUS, "B4+": B4_PLUS}
