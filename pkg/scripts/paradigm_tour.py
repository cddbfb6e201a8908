#!/usr/bin/env python3
"""Walk the whole pipeline once at desk scale and print each stage.

Builds a bounded-interval paradigm, shows its partition points and ordered
segments, forms the truncation word, decomposes its closure, runs the worked
signature example, and finishes with the standard-part operators.
"""

from fractions import Fraction

from ultraword import (
    DevelopmentalParadigm,
    EpsilonSeries,
    Inf,
    IntervalKind,
    LogicSystem,
    PartitionScheme,
    PerceivedContext,
    Std,
    SubparticleRep,
    TruncationBounds,
    decompose,
    epsilon,
    perceived_closure,
    realism_relation,
    segment_window,
    separate_vs_union,
    st_set,
    theory_signature,
    ultraword,
)


def banner(title: str) -> None:
    print(f"\n== {title} ==")


def main() -> None:
    banner("partition points on [0, 2], K=2, m=4")
    scheme = PartitionScheme(2, IntervalKind.bounded(Fraction(2), 4))
    for idx, t in scheme.window(0, 4, 2):
        print(f"  t({idx.i},{idx.j}) = {t}")

    banner("ordered paradigm window and its truncation word")
    dp = DevelopmentalParadigm(scheme, body_fn=lambda idx, t: f"stage-{idx.i}")
    bounds = TruncationBounds(scheme.kind, 4, 1, label="lambda")
    window = segment_window(dp, bounds)
    word = ultraword(dp, bounds)
    print(f"  window size {len(window)}; word w_{bounds.label} =")
    print(f"    {word.text}")

    banner("closure decomposition of the word")
    parts = decompose(word, axioms={"axiom-0"})
    print(f"  cardinalities: {parts.cardinalities()}")

    banner("perceived-set signature example")
    ctx = PerceivedContext(
        frozenset("abc"),
        frozenset("ac"),
        LogicSystem.build("abc", [({"a"}, "b"), ({"b"}, "c")]),
    )
    print(f"  perceived closure of {{a}}: {sorted(perceived_closure(ctx, {'a'}))}")
    print(f"  theory signature: {theory_signature(ctx).to_json()}")
    observations = [(frozenset("a"), frozenset("b")), (frozenset("b"), frozenset("c"))]
    verdict = separate_vs_union(observations, {"a"}, "abc")
    print(
        f"  separate={sorted(verdict.separate)} union={sorted(verdict.union)} "
        f"equal={verdict.equal}"
    )

    banner("standard parts of subparticle representations")
    member = SubparticleRep(
        (Std(5), Inf("lambda"), EpsilonSeries.from_rational(2) + epsilon(), 7)
    )
    print(f"  member: {member}")
    print(f"  st image: {next(iter(st_set({member})))}")
    print(f"  realism relation size: {len(realism_relation({member}))}")


if __name__ == "__main__":
    main()
