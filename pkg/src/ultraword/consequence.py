"""Finite rule systems with fixpoint closure, the conjunction-word consequence
operator with its three-part decomposition, and a harness that checks the
consequence-operator axioms for any set-to-set operator.

The closure of a premise set is the least set containing the premises and
closed under every rule (a rule fires once its whole premise set is present).
Applied to a single conjunction word, the word-level operator yields the
supplied axioms, every conjunction formable from the word's atoms, and the
atoms themselves; these three parts are pairwise disjoint and the word is one
of the conjunctions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Hashable, Iterable

from .errors import AxiomCollision, UnknownSentence
from .language import ConjunctionWord, FrozenSegment

#: Fixed default seed for randomized sweeps, so reports are reproducible.
DEFAULT_SEED = 1729

_EXHAUSTIVE_LIMIT = 12

SetOperator = Callable[[frozenset], Iterable]


@dataclass(frozen=True)
class Rule:
    """One rule of inference: a nonempty finite premise set and a conclusion."""

    premises: frozenset[str]
    conclusion: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "premises", frozenset(self.premises))
        if not self.premises:
            raise ValueError("a rule needs at least one premise")

    @property
    def sort_key(self) -> tuple:
        return (self.conclusion, tuple(sorted(self.premises)))


@dataclass(frozen=True)
class LogicSystem:
    """A finite language plus finitely many rules over it.

    Rules are kept in canonical order (by conclusion, then premises) so the
    derivation order of a closure is reproducible.
    """

    language: frozenset[str]
    rules: tuple[Rule, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "language", frozenset(self.language))
        canonical = tuple(sorted(set(self.rules), key=lambda r: r.sort_key))
        object.__setattr__(self, "rules", canonical)
        for rule in canonical:
            stray = (rule.premises | {rule.conclusion}) - self.language
            if stray:
                raise UnknownSentence(
                    f"rule uses sentences outside the language: {sorted(stray)}"
                )

    @classmethod
    def build(
        cls, language: Iterable[str], rules: Iterable[tuple[Iterable[str], str]]
    ) -> LogicSystem:
        return cls(
            frozenset(language),
            tuple(Rule(frozenset(premises), conclusion) for premises, conclusion in rules),
        )

    @classmethod
    def from_json(cls, obj: dict) -> LogicSystem:
        if not isinstance(obj, dict) or "language" not in obj or "rules" not in obj:
            raise ValueError('rule file must be {"language": [...], "rules": [...]}')
        return cls.build(
            (str(s) for s in obj["language"]),
            (
                (tuple(str(p) for p in rule["premises"]), str(rule["conclusion"]))
                for rule in obj["rules"]
            ),
        )

    def to_json(self) -> dict:
        return {
            "language": sorted(self.language),
            "rules": [
                {"premises": sorted(r.premises), "conclusion": r.conclusion}
                for r in self.rules
            ],
        }


@dataclass(frozen=True)
class ClosureResult:
    """A closure set plus the rule firing order that produced it."""

    closure: frozenset[str]
    derivation_order: tuple[Rule, ...]


def closure(system: LogicSystem, premises: Iterable[str]) -> ClosureResult:
    """Least fixpoint of the rules over the premises.

    Deterministic: rules are tried in their canonical order, and each firing
    that adds a new sentence is recorded. Replaying the recorded rules over
    the premises regenerates the closure.
    """
    start = frozenset(premises)
    stray = start - system.language
    if stray:
        raise UnknownSentence(f"premises outside the language: {sorted(stray)}")
    derived = set(start)
    order: list[Rule] = []
    changed = True
    while changed:
        changed = False
        for rule in system.rules:
            if rule.conclusion not in derived and rule.premises <= derived:
                derived.add(rule.conclusion)
                order.append(rule)
                changed = True
    return ClosureResult(frozenset(derived), tuple(order))


@dataclass(frozen=True)
class WordDecomposition:
    """The closure of one conjunction word, split into its disjoint parts.

    ``axioms`` are returned as given, ``conjunctions`` are every conjunction
    word formable from the atoms, and ``atoms`` are the word's conjuncts.
    In canonical mode conjunction identity is quotiented by arrangement, so
    the input word is represented by its canonical form.
    """

    word: ConjunctionWord
    mode: str
    axioms: frozenset
    conjunctions: frozenset[ConjunctionWord]
    atoms: frozenset[FrozenSegment]

    def members(self) -> frozenset:
        return self.axioms | self.conjunctions | self.atoms

    def cardinalities(self) -> dict[str, int]:
        return {
            "axioms": len(self.axioms),
            "conjunctions": len(self.conjunctions),
            "atoms": len(self.atoms),
            "total": len(self.axioms) + len(self.conjunctions) + len(self.atoms),
        }


def _arrangements(
    atoms: Iterable[FrozenSegment], mode: str
) -> frozenset[ConjunctionWord]:
    ordered = sorted(atoms, key=lambda a: a.sort_key)
    words = []
    for size in range(2, len(ordered) + 1):
        for subset in combinations(ordered, size):
            if mode == "canonical":
                words.append(ConjunctionWord(subset))
            else:
                words.extend(ConjunctionWord(p) for p in permutations(subset))
    return frozenset(words)


def decompose(
    word: ConjunctionWord,
    axioms: Iterable = (),
    mode: str = "canonical",
) -> WordDecomposition:
    """Apply the word-level consequence operator to a single conjunction word.

    Permutational mode lists every arrangement of every atom subset of size
    two or more as a distinct conjunction; canonical mode lists one (the
    ascending arrangement) per subset.
    """
    if mode not in ("canonical", "permutational"):
        raise ValueError(f"mode must be canonical or permutational, got {mode!r}")
    atom_set = word.atoms
    conjunctions = _arrangements(atom_set, mode)
    axiom_set = frozenset(axioms)
    overlap = axiom_set & (conjunctions | atom_set)
    if overlap:
        raise AxiomCollision(
            f"{len(overlap)} axiom(s) collide with the word's atoms or conjunctions"
        )
    return WordDecomposition(word, mode, axiom_set, conjunctions, atom_set)


def word_closure_contains(
    word: ConjunctionWord,
    candidate: object,
    axioms: Iterable = (),
    mode: str = "canonical",
) -> bool:
    """Membership in the word's closure without materializing it.

    A candidate belongs when it is a supplied axiom, one of the word's atoms,
    or a conjunction whose conjunct set is drawn from the atoms (canonically
    arranged, in canonical mode).
    """
    if candidate in frozenset(axioms):
        return True
    atom_set = word.atoms
    if isinstance(candidate, FrozenSegment):
        return candidate in atom_set
    if isinstance(candidate, ConjunctionWord):
        if not candidate.atoms <= atom_set:
            return False
        return mode == "permutational" or candidate.is_canonical
    return False


@dataclass(frozen=True)
class AxiomViolation:
    """One failed axiom instance with its witness subset."""

    axiom: str
    witness: frozenset
    detail: str


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking the consequence-operator axioms for one operator."""

    universe_size: int
    exhaustive: bool
    checked: int
    violations: tuple[AxiomViolation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def _canon_key(value: object) -> tuple[str, str]:
    return (type(value).__name__, repr(value))


def _sorted_universe(universe: frozenset) -> list:
    return sorted(universe, key=_canon_key)


def _all_subsets(elements: list) -> Iterable[frozenset]:
    for size in range(len(elements) + 1):
        for subset in combinations(elements, size):
            yield frozenset(subset)


def check_consequence_axioms(
    op: SetOperator,
    universe: Iterable[Hashable],
    samples: int = 200,
    seed: int | None = None,
) -> AxiomReport:
    """Check extensiveness, idempotence, boundedness, and the finitary union
    property of a set-to-set operator over a finite universe.

    Exhaustive over all subsets when the universe has at most 12 members;
    otherwise ``samples`` subsets are drawn with a seeded generator, and the
    finitary check verifies sampled sub-subsets against the union form.
    Violations are reported as data, never raised.
    """
    universe_set = frozenset(universe)
    elements = _sorted_universe(universe_set)
    exhaustive = len(elements) <= _EXHAUSTIVE_LIMIT
    cache: dict[frozenset, frozenset] = {}

    def apply(subset: frozenset) -> frozenset:
        if subset not in cache:
            cache[subset] = frozenset(op(subset))
        return cache[subset]

    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    if exhaustive:
        candidates: Iterable[frozenset] = _all_subsets(elements)
    else:
        candidates = (
            frozenset(x for x in elements if rng.random() < 0.5)
            for _ in range(samples)
        )

    violations: list[AxiomViolation] = []
    checked = 0
    for subset in candidates:
        checked += 1
        result = apply(subset)
        if not subset <= result:
            violations.append(
                AxiomViolation(
                    "extensive",
                    subset,
                    f"{len(subset - result)} member(s) dropped by the operator",
                )
            )
        if not result <= universe_set:
            violations.append(
                AxiomViolation(
                    "bounded",
                    subset,
                    f"{len(result - universe_set)} member(s) outside the universe",
                )
            )
            continue
        if apply(result) != result:
            violations.append(
                AxiomViolation("idempotent", subset, "op(op(X)) differs from op(X)")
            )
        if exhaustive:
            union: set = set()
            for part in _all_subsets(sorted(subset, key=_canon_key)):
                union |= apply(part)
            if union != result:
                violations.append(
                    AxiomViolation(
                        "finitary",
                        subset,
                        "union of op over the subsets of X differs from op(X)",
                    )
                )
        else:
            members = sorted(subset, key=_canon_key)
            for _ in range(min(samples, 2 ** len(members))):
                part = frozenset(x for x in members if rng.random() < 0.5)
                if not apply(part) <= result:
                    violations.append(
                        AxiomViolation(
                            "finitary",
                            subset,
                            f"op of a sub-subset of size {len(part)} escapes op(X)",
                        )
                    )
                    break
    return AxiomReport(len(elements), exhaustive, checked, tuple(violations))
