"""Generate the themed seed corpus and summarize fit sizes per bundle."""

import argparse
from collections import Counter

from widgetforge.synth import Theme, batch_generate, load_seeds, write_corpus


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="corpus")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    seeds = load_seeds()
    bundles, failures = batch_generate(seeds, list(Theme), seed=args.seed)
    manifest = write_corpus(args.out, bundles, failures)
    print(f"{len(bundles)} bundles from {len(seeds)} seeds, {len(failures)} failures, "
          f"{manifest['validation_failures']} with validation errors -> {args.out}/")
    for b in bundles:
        fit = b.layout["fit"]
        print(f"  {b.key:<24} {fit['w_star']:>6.0f} x {fit['h_star']:<8.1f} ({fit['iterations']} layouts)")
    print("hashes per seed:", dict(Counter(len({x.structure_hash for x in bundles if x.spec_id == s}) for s in seeds)))


if __name__ == "__main__":
    main()
