"""Write a seeded corpus of DIMACS files plus a manifest with their hashes.

    python scripts/make_corpus.py out/ --gnp 500 --class-like 100
"""
import argparse
from pathlib import Path

from ndcolor.graph import write_dimacs
from ndcolor.testkit import GeneratorSpec, generate


def specs(n_gnp: int, n_class: int):
    for i in range(n_gnp):
        yield f"gnp-{i:04d}", GeneratorSpec("random_gnp", seed=i, n=1 + i % 10, p=(1 + (i // 10) % 9) / 10)
    for i in range(n_class):
        w_max = 1 + (i * 769) // max(1, n_class - 1)
        yield f"class-{i:04d}", GeneratorSpec("paper_class_like", seed=1000 + i,
                                              w_min=max(1, w_max // 2), w_max=w_max, shuffle=True)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", type=Path)
    ap.add_argument("--gnp", type=int, default=500)
    ap.add_argument("--class-like", type=int, default=100)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    manifest = []
    for name, spec in specs(args.gnp, args.class_like):
        inst = generate(spec)
        (args.out / f"{name}.col").write_text(write_dimacs(inst.graph))
        manifest.append(f"{name} {inst.manifest_line()}")
    (args.out / "MANIFEST").write_text("\n".join(manifest) + "\n")
    print(f"wrote {len(manifest)} instances to {args.out}")


if __name__ == "__main__":
    main()
