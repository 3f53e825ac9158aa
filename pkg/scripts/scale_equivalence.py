"""Cross-check decay-scale membership against the induced weight family.

For a chosen scale a_m the script verifies the scale axioms, converts the
scale to its weight family, classifies a random symbolic corpus both ways
(weight classification vs direct dominance against scale members), and
reports any disagreement.  Exit status 1 on mismatch.

Examples:
    python scripts/scale_equivalence.py
    python scripts/scale_equivalence.py --scale expdecay --count 400 --seed 7
"""

import argparse
import sys

from ultraseq import corpus, growth
from ultraseq.spaces import NumberSpace, SeqRep
from ultraseq.weights import (
    Mode,
    expdecay_scale,
    power_scale,
    scale_to_weights,
    verify_scale_axioms,
)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", choices=("power", "expdecay"), default="power")
    ap.add_argument("--count", type=int, default=200, help="corpus size")
    ap.add_argument("--seed", type=int, default=corpus.DEFAULT_SEED)
    ap.add_argument("--m-max", type=int, default=16, help="level search bound")
    args = ap.parse_args(argv)

    scale = power_scale() if args.scale == "power" else expdecay_scale()
    axioms = verify_scale_axioms(scale)
    print(f"scale {scale.name}: ordered={axioms.ordered} "
          f"reciprocal={axioms.reciprocal_ok} axioms hold={axioms.holds}")
    if not axioms.holds:
        return 1

    family = scale_to_weights(scale)
    space = NumberSpace(family, Mode.STANDARD, m_max=args.m_max)
    for m in (1, 2, 4):
        print(f"  level {m}: a_{m} = {growth.format_expr(scale.member(m))}, "
              f"weight = {family.member(m).label}")

    recips = [scale.member(-m) for m in range(1, args.m_max + 1)]
    decays = [scale.member(m) for m in range(1, args.m_max + 1)]
    exprs = corpus.random_exprs(args.count, seed=args.seed)
    mismatches = []
    counts = {"moderate": 0, "negligible": 0, "outside": 0}
    for e in exprs:
        rep = space.classify(SeqRep.symbolic(e))
        in_scale = any(growth.compare(e, a).relation == growth.LESS for a in recips)
        is_null = all(growth.compare(e, a).relation == growth.LESS for a in decays)
        if bool(rep.in_moderate) != in_scale or bool(rep.in_negligible) != is_null:
            mismatches.append((growth.format_expr(e), rep.verdict, in_scale, is_null))
        if is_null:
            counts["negligible"] += 1
        elif in_scale:
            counts["moderate"] += 1
        else:
            counts["outside"] += 1

    print(f"corpus of {args.count}: {counts['moderate']} moderate, "
          f"{counts['negligible']} negligible, {counts['outside']} outside the scale")
    if mismatches:
        print(f"{len(mismatches)} disagreements:")
        for text, verdict, in_scale, is_null in mismatches[:10]:
            print(f"  {text}: classified {verdict}, dominance says "
                  f"moderate={in_scale} negligible={is_null}")
        return 1
    print("weight classification agrees with scale dominance on every expression")
    return 0


if __name__ == "__main__":
    sys.exit(main())
