"""Build a few r-matrices by hand and show how classify sorts them.

Also prints c(r) and the cobracket on a couple of basis elements, which is
handy when checking a new construction against hand computation.
"""
from wittbialg.bialgebra import classify, cobracket, cybe_c, michaelis_r
from wittbialg.scalars import AlgebraConfig
from wittbialg.textio import format_any, parse_element, parse_tensor
from wittbialg.witt import bracket

CASES = [
    # [d_1, t^(2,0) d_2] = 2 t^(2,0) d_2, so this is a Michaelis pair with k = 2
    ("michaelis k=2", 2, None, ("d[1,0]", "t[2,0] d[0,1]", 2)),
    ("torus wedge", 2, "d[1,0] (*) d[0,1] - d[0,1] (*) d[1,0]", None),
    ("e1 ^ e2", 1, "t[1] d[1] (*) t[2] d[1] - t[2] d[1] (*) t[1] d[1]", None),
    ("symmetric", 1, "d[1] (*) d[1]", None),
]


def main():
    for label, n, text, pair in CASES:
        cfg = AlgebraConfig(n, seed=1)
        if pair:
            a, b, k = pair
            a, b = parse_element(a, n), parse_element(b, n)
            print(f"[{format_any(a)}, {format_any(b)}] = {format_any(bracket(a, b))}")
            r = michaelis_r(a, b, k)
        else:
            r = parse_tensor(text, n, 2)
        print(f"== {label}: r = {format_any(r)}")
        print(f"   c(r) = {format_any(cybe_c(r))}")
        for x in ("d[1]" if n == 1 else "d[1,0]", "t[1] d[1]" if n == 1 else "t[1,0] d[0,1]"):
            print(f"   delta({x}) = {format_any(cobracket(r, parse_element(x, n)))}")
        print("   " + classify(r, 20, cfg).render_text().replace("\n", "\n   "))
        print()


if __name__ == "__main__":
    main()
