"""Regenerate the bundled algebra documents in src/grig/corpus."""

from pathlib import Path

from grig.io import algebra_to_doc, dump_json
from grig.quiver import dual_numbers, ground_field, linear_a2, nakayama

OUT = Path(__file__).resolve().parent.parent / "src" / "grig" / "corpus"

ALGEBRAS = {
    "ground_field": ground_field,
    "d2": dual_numbers,
    "t2": linear_a2,
    **{f"nakayama_{n}_2": (lambda n=n: nakayama(n, 2)) for n in range(1, 5)},
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for stem, build in ALGEBRAS.items():
        (OUT / f"{stem}.json").write_text(dump_json(algebra_to_doc(build())) + "\n")
        print(f"wrote {stem}.json")


if __name__ == "__main__":
    main()
