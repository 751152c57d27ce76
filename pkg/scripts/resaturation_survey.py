"""Count how often a swap of a saturated presentation leaves it unsaturated.

Also tallies which branch the constructive SDR exchange takes on random
families that satisfy the marriage-plus-one condition.
"""
import argparse
import random
from collections import Counter
from dataclasses import dataclass

from cotransversal.generators import CorpusConfig, random_family
from cotransversal.planted import swap, valid_swaps
from cotransversal.saturation import is_saturated, saturate
from cotransversal.transversal import _exchange_moves, all_sdrs, dragon_condition


@dataclass(frozen=True)
class SurveyConfig:
    corpus: CorpusConfig = CorpusConfig(seed=1, count=300, min_vertices=3, max_vertices=7)
    families: int = 200
    family_seed: int = 2


def swap_survey(cfg):
    swaps = unsaturated = 0
    for g in cfg.corpus.build():
        s = saturate(g)
        for i, j in valid_swaps(s):
            swaps += 1
            if not is_saturated(swap(s, i, j)):
                unsaturated += 1
    return swaps, unsaturated


def exchange_survey(cfg):
    rng = random.Random(cfg.family_seed)
    kinds = Counter()
    found = 0
    while found < cfg.families:
        p = random_family(rng, rng.randint(1, 4), rng.randint(2, 6), rng.uniform(0.3, 0.8))
        if not dragon_condition(p):
            continue
        found += 1
        sdrs = all_sdrs(p)
        for a in sdrs:
            for b in sdrs:
                if a == b:
                    continue
                moves, _ = _exchange_moves(p, a, b)
                if not moves:
                    kinds["differing rep swap"] += 1
                elif len(moves) == 1:
                    kinds["unused element"] += 1
                else:
                    kinds["zigzag"] += 1
    return kinds


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=300)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--max-vertices", type=int, default=7)
    args = parser.parse_args()
    cfg = SurveyConfig(corpus=CorpusConfig(args.seed, args.count, 3, args.max_vertices))

    swaps, unsaturated = swap_survey(cfg)
    print(f"saturated presentations swapped: {swaps}, results needing re-saturation: {unsaturated}")
    for kind, n in sorted(exchange_survey(cfg).items()):
        print(f"exchange step via {kind}: {n}")


if __name__ == "__main__":
    main()
