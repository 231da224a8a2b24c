"""Model reports: generated models plus hypothesis state, per-atom values
and selection scores, with ranking helpers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from .ast import Atom, Literal, Program
from .hypotheses import HypothesisSet
from .interpretations import Interpretation, valuation_map
from .values import I, TruthValue, U

RANK_CRITERIA = ("inconsistent-count", "unknown-count", "lexicographic")


@dataclass
class EngineStats:
    iterations: int = 0
    body_evaluations: int = 0

    def merge(self, other: "EngineStats") -> None:
        self.iterations += other.iterations
        self.body_evaluations += other.body_evaluations


@dataclass
class ModelReport:
    model: FrozenSet[Literal]
    atom_values: Dict[Atom, TruthValue]
    hypotheses_initial: Optional[HypothesisSet] = None
    hypotheses_final: Optional[HypothesisSet] = None
    contradicted: List[Literal] = field(default_factory=list)
    scores: Dict[str, float] = field(default_factory=dict)
    stats: EngineStats = field(default_factory=EngineStats)
    # Other hypothesis sets that produced this same model during enumeration.
    alternate_hypotheses: List[HypothesisSet] = field(default_factory=list)

    def canonical_key(self) -> Tuple[str, ...]:
        return tuple(sorted(str(l) for l in self.model))


def format_model(model: Interpretation) -> str:
    return "{" + ", ".join(sorted(str(l) for l in model)) + "}"


def build_report(program: Program, model: Interpretation,
                 hypotheses_initial: Optional[HypothesisSet] = None,
                 hypotheses_final: Optional[HypothesisSet] = None,
                 contradicted: Optional[List[Literal]] = None,
                 stats: Optional[EngineStats] = None) -> ModelReport:
    values = valuation_map(model, sorted(program.atoms()))
    scores = {
        "inconsistent-count": sum(1 for v in values.values() if v is I),
        "unknown-count": sum(1 for v in values.values() if v is U),
    }
    return ModelReport(
        model=frozenset(model),
        atom_values=values,
        hypotheses_initial=hypotheses_initial,
        hypotheses_final=hypotheses_final,
        contradicted=list(contradicted or []),
        scores=scores,
        stats=stats or EngineStats(),
    )


def rank_models(reports: List[ModelReport], criterion: str) -> List[ModelReport]:
    """Stable ascending sort by the named score, ties broken by the
    canonical model ordering."""
    if criterion not in RANK_CRITERIA:
        raise ValueError(
            f"unknown ranking criterion {criterion!r}; expected one of "
            + ", ".join(RANK_CRITERIA))
    if criterion == "lexicographic":
        return sorted(reports, key=lambda r: r.canonical_key())
    return sorted(reports, key=lambda r: (r.scores[criterion], r.canonical_key()))
