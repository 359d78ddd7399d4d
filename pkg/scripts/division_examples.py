"""Worked division examples, including the straddle remainder comparison.

The closed-form pair for the straddling Euclidean case reconstructs the
dividend but leaves a longer remainder than the minimal one found here.
"""

from intervalgebra.core import GElement, g_add, g_length
from intervalgebra.division import div_auto, euclid_div_straddle, reconstruct
from intervalgebra.embed import bullet
from intervalgebra.text import render

CASES = [
    ("exact, invertible divisor", GElement(3, 8), GElement(1, 2)),
    ("exact, straddling divisor", GElement(-2, 3), GElement(-4, 2)),
    ("Euclidean, point remainder", GElement(1, 3), GElement(1, 4)),
    ("Euclidean, straddling", GElement(-5, 1), GElement(-4, 2)),
    ("negative classes", GElement(-3, -8), GElement(-1, -2)),
]


def main() -> None:
    for name, y, x in CASES:
        r = div_auto(y, x)
        back = reconstruct(x, r)
        print(f"{name}: {render(y)} / {render(x)}")
        print(f"  quotient {render(r.quotient)}  remainder {render(r.remainder)}  kind {r.kind.value}")
        print(f"  x . Z + R = {render(back)}")

    y, x = GElement(-5, 1), GElement(-4, 2)
    z_cf, r_cf = GElement(-0.25, 0), GElement(-4.5, 0)
    best = euclid_div_straddle(y, x)
    print("straddle remainder comparison for", render(y), "/", render(x))
    print(f"  closed form: Z {render(z_cf)}, R {render(r_cf)}, length {g_length(r_cf):g}, "
          f"reconstructs {render(g_add(bullet(x, z_cf), r_cf))}")
    print(f"  minimal:     Z {render(best.quotient)}, R {render(best.remainder)}, "
          f"length {g_length(best.remainder):g}")


if __name__ == "__main__":
    main()
