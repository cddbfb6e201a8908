"""Perceived-set consequence, behavior and theory signatures, rule extraction
from observations, and the separate-versus-union comparison.

Given a theory over a language and a declared perceived subset, the perceived
closure of a premise set is the perceived part of its theory closure. A
behavior signature records, for one premise set, each newly deduced perceived
sentence as a tuple; the theory signature is the union over every nonempty
finite premise set. Treating those tuples as rules regenerates the perceived
closure exactly, which is what the soundness check verifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .consequence import LogicSystem, Rule, closure
from .errors import EmptySource, NotPerceived, TagCollision, UnknownSentence


@dataclass(frozen=True)
class PerceivedContext:
    """A theory plus the declared perceived subset of its language.

    The tag is a reserved marker symbol; it may not occur in any perceived
    sentence, so that tagged forms are always new sentences.
    """

    language: frozenset[str]
    perceived: frozenset[str]
    theory: LogicSystem
    tag: str = "†"

    def __post_init__(self) -> None:
        object.__setattr__(self, "language", frozenset(self.language))
        object.__setattr__(self, "perceived", frozenset(self.perceived))
        if not self.perceived <= self.language:
            raise ValueError("perceived set must be a subset of the language")
        if self.theory.language != self.language:
            raise ValueError("theory must be declared over the same language")
        if not self.tag:
            raise ValueError("tag symbol must be nonempty")
        tainted = sorted(s for s in self.perceived if self.tag in s)
        if tainted:
            raise ValueError(
                f"tag {self.tag!r} occurs in perceived sentences: {tainted}"
            )

    @classmethod
    def from_json(cls, obj: dict) -> PerceivedContext:
        if not isinstance(obj, dict):
            raise ValueError("context must be a JSON object")
        try:
            language = frozenset(str(s) for s in obj["language"])
            perceived = frozenset(str(s) for s in obj["perceived"])
            rules = obj["rules"]
        except KeyError as missing:
            raise ValueError(f"context is missing {missing}") from None
        theory = LogicSystem.from_json({"language": sorted(language), "rules": rules})
        return cls(language, perceived, theory, str(obj.get("tag", "†")))


def _require_perceived(ctx: PerceivedContext, X: frozenset[str]) -> None:
    stray = X - ctx.perceived
    if stray:
        raise NotPerceived(f"premises outside the perceived set: {sorted(stray)}")


def perceived_closure(ctx: PerceivedContext, X: Iterable[str]) -> frozenset[str]:
    """The perceived part of the theory closure of X."""
    premises = frozenset(X)
    _require_perceived(ctx, premises)
    return ctx.perceived & closure(ctx.theory, premises).closure


@dataclass(frozen=True)
class BehaviorSignature:
    """Tuples (x_1, ..., x_n, y): the source set in canonical order plus one
    newly deduced perceived sentence each. Empty when nothing new is deduced.
    """

    source: tuple[str, ...]
    tuples: frozenset[tuple[str, ...]]


def behavior_signature(ctx: PerceivedContext, X: Iterable[str]) -> BehaviorSignature:
    premises = frozenset(X)
    if not premises:
        raise EmptySource("a behavior signature needs a nonempty source set")
    _require_perceived(ctx, premises)
    source = tuple(sorted(premises))
    new = perceived_closure(ctx, premises) - premises
    return BehaviorSignature(source, frozenset(source + (y,) for y in sorted(new)))


@dataclass(frozen=True)
class TheorySignature:
    """Union of the behavior signatures over every nonempty premise set."""

    tuples: frozenset[tuple[str, ...]]

    def to_logic_system(self, language: Iterable[str]) -> LogicSystem:
        """Read each tuple as a rule: leading coordinates entail the last."""
        return LogicSystem(
            frozenset(language),
            tuple(Rule(frozenset(t[:-1]), t[-1]) for t in self.tuples),
        )

    def to_json(self) -> list[dict]:
        return [
            {"premises": sorted(t[:-1]), "conclusion": t[-1]}
            for t in sorted(self.tuples)
        ]


def theory_signature(ctx: PerceivedContext) -> TheorySignature:
    members = sorted(ctx.perceived)
    collected: set[tuple[str, ...]] = set()
    for size in range(1, len(members) + 1):
        for subset in combinations(members, size):
            collected |= behavior_signature(ctx, subset).tuples
    return TheorySignature(frozenset(collected))


@dataclass(frozen=True)
class SignatureMismatch:
    premises: frozenset[str]
    generated: frozenset[str]
    perceived: frozenset[str]


@dataclass(frozen=True)
class SignatureReport:
    checked: int
    mismatches: tuple[SignatureMismatch, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def signature_operator_check(
    ctx: PerceivedContext, signature: TheorySignature | None = None
) -> SignatureReport:
    """Verify that the theory signature, read back as rules, regenerates the
    perceived closure on every subset of the perceived set.

    A replacement signature may be supplied to test for mismatches against a
    deliberately altered rule set.
    """
    if len(ctx.perceived) > 12:
        raise ValueError("exhaustive check is limited to 12 perceived sentences")
    if signature is None:
        signature = theory_signature(ctx)
    generated_system = signature.to_logic_system(ctx.language)
    members = sorted(ctx.perceived)
    mismatches = []
    checked = 0
    for size in range(len(members) + 1):
        for subset in combinations(members, size):
            checked += 1
            X = frozenset(subset)
            generated = closure(generated_system, X).closure & ctx.perceived
            expected = perceived_closure(ctx, X)
            if generated != expected:
                mismatches.append(SignatureMismatch(X, generated, expected))
    return SignatureReport(checked, tuple(mismatches))


Observation = tuple[frozenset[str], frozenset[str]]


def _normalize_observations(
    observations: Iterable[tuple[Iterable[str], Iterable[str]]],
    language: frozenset[str],
) -> list[Observation]:
    normalized: list[Observation] = []
    for X, X_prime in observations:
        source = frozenset(X)
        produced = frozenset(X_prime)
        if not source:
            raise EmptySource("an observation needs a nonempty source set")
        stray = (source | produced) - language
        if stray:
            raise UnknownSentence(
                f"observation uses sentences outside the language: {sorted(stray)}"
            )
        normalized.append((source, produced))
    return normalized


def converse_ri(
    observations: Iterable[tuple[Iterable[str], Iterable[str]]],
    language: Iterable[str],
) -> LogicSystem:
    """Rules extracted from observations: one rule X -> y per produced y."""
    lang = frozenset(language)
    rules = []
    for source, produced in _normalize_observations(observations, lang):
        rules.extend(Rule(source, y) for y in produced)
    return LogicSystem(lang, tuple(rules))


@dataclass(frozen=True)
class UnionComparison:
    separate: frozenset[str]
    union: frozenset[str]

    @property
    def equal(self) -> bool:
        return self.separate == self.union


def separate_vs_union(
    observations: Sequence[tuple[Iterable[str], Iterable[str]]],
    premises: Iterable[str],
    language: Iterable[str],
) -> UnionComparison:
    """Compare closing under each observation's rules separately against
    closing under all of them at once; chains form only in the union."""
    lang = frozenset(language)
    normalized = _normalize_observations(observations, lang)
    start = frozenset(premises)
    separate: set[str] = set()
    for source, produced in normalized:
        single = LogicSystem(lang, tuple(Rule(source, y) for y in produced))
        separate |= closure(single, start).closure
    union = closure(converse_ri(normalized, lang), start).closure
    return UnionComparison(frozenset(separate), union)


def tag_j_prime(
    ctx: PerceivedContext, X: Iterable[str]
) -> frozenset[tuple[str, str]]:
    """Pair each member with its tagged form (the member plus the tag suffix),
    marking it as unaltered by the processes being modeled.

    The context invariant keeps the tag out of every perceived sentence, so
    for X inside the perceived set the collision guard can never fire; it
    protects the invariant against stray inputs.
    """
    members = frozenset(X)
    collisions = sorted(s for s in members if s.endswith(ctx.tag))
    if collisions:
        raise TagCollision(f"already tagged: {collisions}")
    return frozenset((s, s + ctx.tag) for s in members)


def observations_from_json(
    obj: object,
) -> tuple[list[tuple[frozenset[str], frozenset[str]]], frozenset[str]]:
    """Parse an observation file: either a bare list of {"X": [...],
    "Xprime": [...]} entries (language inferred) or an object with "language"
    and "observations" keys."""
    if isinstance(obj, dict):
        language = frozenset(str(s) for s in obj.get("language", ()))
        entries = obj.get("observations")
    else:
        language = frozenset()
        entries = obj
    if not isinstance(entries, list):
        raise ValueError("observations must be a JSON list")
    observations = []
    mentioned: set[str] = set()
    for entry in entries:
        if not isinstance(entry, dict) or "X" not in entry or "Xprime" not in entry:
            raise ValueError('each observation must be {"X": [...], "Xprime": [...]}')
        source = frozenset(str(s) for s in entry["X"])
        produced = frozenset(str(s) for s in entry["Xprime"])
        mentioned |= source | produced
        observations.append((source, produced))
    return observations, (language or frozenset(mentioned))
