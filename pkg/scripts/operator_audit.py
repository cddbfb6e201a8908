#!/usr/bin/env python3
"""Randomized audit of the consequence-operator axioms.

Generates seeded random rule systems and standard-part universes, runs the
exhaustive axiom harness on each, and prints a summary line per operator
family. Any violation is printed with its witness subset.
"""

import argparse
import random
from fractions import Fraction

from ultraword import (
    EpsilonSeries,
    Inf,
    LogicSystem,
    SPUniverse,
    Std,
    SubparticleRep,
    check_consequence_axioms,
    closure,
)


def random_system(rng: random.Random, max_sentences: int) -> LogicSystem:
    size = rng.randint(1, max_sentences)
    language = [f"s{k}" for k in range(size)]
    rules = []
    for _ in range(rng.randint(0, 2 * size)):
        premises = rng.sample(language, rng.randint(1, min(3, size)))
        rules.append((premises, rng.choice(language)))
    return LogicSystem.build(language, rules)


def random_universe(rng: random.Random) -> SPUniverse:
    seeds = set()
    for _ in range(rng.randint(1, 3)):
        tail = []
        for _ in range(2):
            terms = {
                rng.randint(0, 2): Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                for _ in range(rng.randint(0, 2))
            }
            tail.append(EpsilonSeries.from_terms(terms))
        seeds.add(SubparticleRep((Std(rng.randint(0, 3)), Inf("lambda"), *tail)))
    return SPUniverse.closed(seeds)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=1729)
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--max-sentences", type=int, default=6)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    failures = 0
    checked = 0
    for _ in range(args.count):
        system = random_system(rng, args.max_sentences)
        report = check_consequence_axioms(
            lambda X, sys=system: closure(sys, X).closure, system.language
        )
        checked += report.checked
        for violation in report.violations:
            failures += 1
            print(f"closure violation: {violation}")
    print(f"closure operators: {args.count} systems, {checked} subsets, "
          f"{failures} violations")

    failures = 0
    checked = 0
    for _ in range(args.count):
        universe = random_universe(rng)
        report = check_consequence_axioms(
            universe.extended_operator(), universe.members
        )
        checked += report.checked
        for violation in report.violations:
            failures += 1
            print(f"extended-st violation: {violation}")
    print(f"extended standard part: {args.count} universes, {checked} subsets, "
          f"{failures} violations")


if __name__ == "__main__":
    main()
