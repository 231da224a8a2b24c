"""Well-supported model generation.

Three engines share a common loop of bottom-up closure plus an
inconsistency-correction pass:

* the four-valued engine for pure programs (and, via stratified
  elimination, programs with inspection tests);
* the hypothesis-driven engine, where default negations take assumed
  values that are interlaced with the generated model and degrade to
  inconsistent when contradicted;
* a brute-force well-supportedness checker based on dependency-graph
  loops, used as an oracle for the engines.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from .answersets import generate_least
from .ast import (Const, DefaultLit, Inspect, Literal, Program, Rule,
                  element_literals)
from .graphs import is_strongly_connected, strongly_connected_components
from .hypotheses import (HypothesisError, HypothesisSet,
                         canonical_default_literals)
from .interpretations import (Interpretation, eval_body, is_model,
                              literal_value, valuation)
from .reports import EngineStats, ModelReport, build_report
from .stratification import (KIND_INSPECT, Stratification, find_stratification,
                             validate_stratification)
from .values import F, L4_PLUS, T, TruthValue

INCONSISTENT = TruthValue.INCONSISTENT

SCC_LOOP_CAP = 12
MINIMALITY_SIZE_CAP = 14
EXHAUSTIVE_HYPOTHESIS_BOUND = 16


class UnstratifiableError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Correction pass
# ---------------------------------------------------------------------------

def find_correction(program: Program, interpretation: Interpretation,
                    hypotheses: Optional[HypothesisSet] = None,
                    stats: Optional[EngineStats] = None) -> FrozenSet[Literal]:
    """Literal pairs forced inconsistent by rules whose bodies are
    inconsistent while their heads are not.

    The accumulated pairs feed back into body evaluation, so inconsistency
    cascades along rule chains until a fixpoint.
    """
    current: Set[Literal] = set(interpretation)
    added: Set[Literal] = set()
    rules = list(program)
    mentions: Dict[object, Set[int]] = {}
    for index, rule in enumerate(rules):
        for element in rule.elements():
            for literal in element_literals(element):
                mentions.setdefault(literal.atom, set()).add(index)
    queue = list(range(len(rules)))
    queued = set(queue)
    while queue:
        index = queue.pop()
        queued.discard(index)
        rule = rules[index]
        if stats is not None:
            stats.body_evaluations += 1
        if eval_body(current, rule.body, L4_PLUS, hypotheses) is not INCONSISTENT:
            continue
        if literal_value(current, rule.head) is INCONSISTENT:
            continue
        pair = (rule.head, rule.head.negate())
        added.update(pair)
        current.update(pair)
        for dependent in mentions.get(rule.head.atom, ()):
            if dependent not in queued:
                queued.add(dependent)
                queue.append(dependent)
    return frozenset(added)


# ---------------------------------------------------------------------------
# The shared generation loop
# ---------------------------------------------------------------------------

def _inconsistent_pairs(interpretation: Interpretation) -> Set[Literal]:
    return {l for l in interpretation if l.negate() in interpretation}


def _interlace_into(literals: Set[Literal], hypotheses: HypothesisSet) -> None:
    """Close a literal set and hypothesis set under the mutual-consistency
    rules: a present literal forces its default negation false; an entry
    holding both values forces the literal pair in; an assumed-false entry
    forces the literal in."""
    changed = True
    while changed:
        changed = False
        for literal in list(literals):
            if hypotheses.assume(literal, F):
                changed = True
        for literal, values in list(hypotheses.entries.items()):
            if len(values) == 2:
                pair = (literal, literal.negate())
                if not literals.issuperset(pair):
                    literals.update(pair)
                    changed = True
            elif F in values and literal not in literals:
                literals.add(literal)
                changed = True


def interlace(interpretation: Interpretation,
              hypotheses: HypothesisSet) -> Tuple[FrozenSet[Literal], HypothesisSet]:
    """The least joint closure of an interpretation and a hypothesis set;
    both inputs are left untouched."""
    literals = set(interpretation)
    closed = hypotheses.copy()
    _interlace_into(literals, closed)
    return frozenset(literals), closed


def _wsm_loop(program: Program, hypotheses: Optional[HypothesisSet],
              stats: EngineStats) -> FrozenSet[Literal]:
    """Closure / interlace / correction loop; ``hypotheses`` is mutated.

    With hypotheses present, an assumed-false entry whose literal does not
    come out true among the derived conclusions is contradicted: it gains
    the opposite assumption, which the interlace turns into an inconsistent
    literal pair.  (Assumed-true entries are contradicted through the
    interlace itself once their literal is derived.)
    """
    inconsistent: Set[Literal] = set()
    interpretation: FrozenSet[Literal] = frozenset()
    limit = len(program.atoms()) + 2
    while True:
        stats.iterations += 1
        if stats.iterations > limit:
            raise RuntimeError("model generation failed to reach a fixpoint")
        pruned = Program(tuple(r for r in program if r.head not in inconsistent))
        derived = set(generate_least(pruned, hypotheses=hypotheses, stats=stats))
        derived |= inconsistent
        if hypotheses is not None:
            for literal in list(hypotheses.entries):
                if F in hypotheses.entries[literal] and \
                        literal_value(derived, literal) is not T:
                    hypotheses.assume(literal, T)
            _interlace_into(derived, hypotheses)
        interpretation = frozenset(derived)
        correction = find_correction(program, interpretation, hypotheses, stats)
        inconsistent = _inconsistent_pairs(interpretation) | correction
        if not correction:
            return interpretation


# ---------------------------------------------------------------------------
# Inspection elimination and the four-valued engine
# ---------------------------------------------------------------------------

def _substitute_inspections(rule: Rule, model: Interpretation) -> Rule:
    body = tuple(
        tuple(
            Const(T if literal_value(model, e.literal) in e.values else F)
            if isinstance(e, Inspect) else e
            for e in conjunct)
        for conjunct in rule.body)
    return Rule(rule.head, body)


def _eliminate_stratum_wise(program: Program, strat: Stratification,
                            run_lower) -> Program:
    """Replace inspection tests stratum by stratum, lowest first, using the
    model of the already-substituted lower strata; returns the resulting
    inspection-free program."""
    substituted: List[Rule] = []
    for stratum in strat.strata:
        rules = [program.rules[i] for i in sorted(stratum)]
        if any(isinstance(e, Inspect) for r in rules for e in r.elements()):
            lower_model = run_lower(Program(tuple(substituted)))
            rules = [_substitute_inspections(r, lower_model) for r in rules]
        substituted.extend(rules)
    return Program(tuple(substituted))


def eliminate_inspections(program: Program, strat: Stratification,
                          stats: Optional[EngineStats] = None) -> FrozenSet[Literal]:
    """Model of a program with inspection tests, via a valid stratification
    over them."""
    if not validate_stratification(program, strat):
        raise ValueError("the given stratification is not valid for this program")
    stats = stats if stats is not None else EngineStats()
    pure = _eliminate_stratum_wise(
        program, strat, lambda lower: _wsm_loop(lower, None, stats))
    return _wsm_loop(pure, None, stats)


def generate_wsm_4ql(program: Program,
                     stats: Optional[EngineStats] = None) -> FrozenSet[Literal]:
    """The unique well-supported model of a program without default
    negation.  Non-pure programs must be stratifiable over their
    inspection tests."""
    if program.default_literals():
        raise ValueError(
            "default negation requires the hypothesis-driven engine (4sp mode)")
    stats = stats if stats is not None else EngineStats()
    if program.inspected_literals():
        strat = find_stratification(program, KIND_INSPECT)
        if strat is None:
            raise UnstratifiableError(
                "the program is not stratifiable over its inspection tests")
        return eliminate_inspections(program, strat, stats)
    return _wsm_loop(program, None, stats)


# ---------------------------------------------------------------------------
# The hypothesis-driven engine
# ---------------------------------------------------------------------------

def generate_wsm_4sp(program: Program,
                     hypotheses: HypothesisSet) -> ModelReport:
    """The well-supported model determined by a hypothesis set.

    Every default literal of the program needs an assumed value.  The
    returned report carries the final hypothesis state and the default
    literals whose assumptions were contradicted.
    """
    working = program
    stats = EngineStats()
    if program.inspected_literals():
        strat = find_stratification(program, KIND_INSPECT)
        if strat is None:
            raise UnstratifiableError(
                "the program is not stratifiable over its inspection tests")
        working = _eliminate_stratum_wise(
            program, strat,
            lambda lower: _run_4sp(lower, hypotheses, stats))
    initial = hypotheses.copy()
    state = hypotheses.copy()
    model = _run_4sp(working, state, stats, mutate=True)
    covered = set(canonical_default_literals(working))
    contradicted = [l for l in state.contradicted() if l in covered]
    return build_report(program, model,
                        hypotheses_initial=initial,
                        hypotheses_final=state,
                        contradicted=contradicted,
                        stats=stats)


def _run_4sp(program: Program, hypotheses: HypothesisSet, stats: EngineStats,
             mutate: bool = False) -> FrozenSet[Literal]:
    needed = program.default_literals()
    missing = needed - set(hypotheses.entries)
    if missing:
        raise HypothesisError(
            "missing hypotheses for: "
            + ", ".join(sorted(f"not {l}" for l in missing)))
    state = hypotheses if mutate else hypotheses.restrict(needed)
    return _wsm_loop(program, state, stats)


def enumerate_4sp_models(program: Program, strategy: str = "lex",
                         cap: Optional[int] = None,
                         seed: Optional[int] = None,
                         exhaustive_bound: int = EXHAUSTIVE_HYPOTHESIS_BOUND
                         ) -> List[ModelReport]:
    """Generate models across hypothesis sets.

    Strategies: ``lex`` walks assignments in canonical order (assumed-true
    before assumed-false per literal); ``random`` draws them seeded and
    without replacement; ``exhaustive`` requires the number of default
    literals to stay within ``exhaustive_bound`` and tries them all.
    Identical models from different hypothesis sets are merged, recording
    the extra generating sets on the first report.
    """
    literals = canonical_default_literals(program)
    width = len(literals)
    total = 1 << width
    if strategy == "exhaustive":
        if width > exhaustive_bound:
            raise ValueError(
                f"{width} default literals exceed the exhaustive bound "
                f"of {exhaustive_bound}")
        indices: Iterable[int] = range(total)
    elif strategy == "lex":
        indices = range(total)
    elif strategy == "random":
        indices = _shuffled_indices(random.Random(seed), total)
    else:
        raise ValueError(f"unknown enumeration strategy {strategy!r}")

    reports: List[ModelReport] = []
    by_model: Dict[FrozenSet[Literal], ModelReport] = {}
    for index in indices:
        if cap is not None and len(reports) >= cap:
            break
        assignment = HypothesisSet({
            literal: {F if (index >> (width - 1 - position)) & 1 else T}
            for position, literal in enumerate(literals)})
        report = generate_wsm_4sp(program, assignment)
        seen = by_model.get(report.model)
        if seen is None:
            by_model[report.model] = report
            reports.append(report)
        else:
            seen.alternate_hypotheses.append(report.hypotheses_initial)
            seen.stats.merge(report.stats)
    return reports


def _shuffled_indices(rng: random.Random, total: int) -> Iterator[int]:
    if total <= 1 << 16:
        order = list(range(total))
        rng.shuffle(order)
        yield from order
        return
    seen: Set[int] = set()
    while len(seen) < total:
        draw = rng.randrange(total)
        if draw not in seen:
            seen.add(draw)
            yield draw


# ---------------------------------------------------------------------------
# Well-supportedness checking
# ---------------------------------------------------------------------------

def dependency_graph(program: Program) -> Dict[Literal, Set[Literal]]:
    """Head-to-body edges between the classical literals of a pure program."""
    graph: Dict[Literal, Set[Literal]] = {}
    for rule in program:
        graph.setdefault(rule.head, set())
        for element in rule.elements():
            for literal in element_literals(element):
                graph.setdefault(literal, set())
                graph[rule.head].add(literal)
    return graph


def _loops_of_component(component: List[Literal],
                        graph: Dict[Literal, Set[Literal]]) -> Iterator[FrozenSet[Literal]]:
    """Non-empty subsets of one strongly connected component that are loops:
    every member reaches every member (itself included) through the subset."""
    members = sorted(component)
    for size in range(1, len(members) + 1):
        for subset in combinations(members, size):
            if size == 1:
                if subset[0] in graph.get(subset[0], ()):
                    yield frozenset(subset)
            elif is_strongly_connected(subset, graph):
                yield frozenset(subset)


def externally_supported_rules(loop: FrozenSet[Literal],
                               program: Program) -> List[Rule]:
    """Rules concluding a loop literal with some conjunct mentioning no loop
    literal; facts count as having one empty conjunct."""
    out = []
    for rule in program:
        if rule.head not in loop:
            continue
        conjuncts = rule.body if rule.body else ((),)
        for conjunct in conjuncts:
            literals = {l for e in conjunct for l in element_literals(e)}
            if not literals & loop:
                out.append(rule)
                break
    return out


def _loop_conditions_hold(loop: FrozenSet[Literal], program: Program,
                          interpretation: Interpretation) -> bool:
    flagged = [l for l in loop
               if literal_value(interpretation, l) in (INCONSISTENT, T)]
    if not flagged:
        return True
    support = externally_supported_rules(loop, program)
    values: Dict[Literal, List[TruthValue]] = {}
    for rule in support:
        values.setdefault(rule.head, []).append(
            eval_body(interpretation, rule.body, L4_PLUS))
    for literal in flagged:
        value = literal_value(interpretation, literal)
        own = values.get(literal, [])
        opposite = values.get(literal.negate(), [])
        cond_true = (any(v is T for v in own)
                     and not any(v is INCONSISTENT for v in own)
                     and not any(v in (INCONSISTENT, T) for v in opposite))
        cond_inconsistent = (
            any(v is INCONSISTENT for v in own + opposite)
            or (any(v is T for v in own) and any(v is T for v in opposite)))
        if (value is T) != cond_true:
            return False
        if (value is INCONSISTENT) != cond_inconsistent:
            return False
    return True


def check_well_supported(program: Program, interpretation: Interpretation,
                         scc_cap: int = SCC_LOOP_CAP,
                         minimality_cap: int = MINIMALITY_SIZE_CAP
                         ) -> Optional[bool]:
    """Oracle check that an interpretation is the well-supported model of a
    pure program.

    Verifies the model relation, minimality (no proper subset is a model),
    and the external-support conditions on every loop whose literals take
    a true or inconsistent value.  Returns True/False, or None ("unknown")
    when a strongly connected component or the interpretation itself is too
    large to enumerate.
    """
    if program.default_literals() or program.inspected_literals():
        raise ValueError("well-supportedness checking expects a pure program")
    if not is_model(interpretation, program, L4_PLUS):
        return False
    capped = False

    literals = sorted(interpretation)
    if len(literals) > minimality_cap:
        capped = True
    else:
        for size in range(len(literals)):
            for subset in combinations(literals, size):
                if is_model(frozenset(subset), program, L4_PLUS):
                    return False

    graph = dependency_graph(program)
    for component in strongly_connected_components(graph):
        if len(component) > scc_cap:
            capped = True
            continue
        for loop in _loops_of_component(component, graph):
            if not _loop_conditions_hold(loop, program, interpretation):
                return False
    return None if capped else True
