"""Exact rational scalars used by every other module.

gmpy2's mpq is preferred (roughly an order of magnitude faster on the
enumeration hot paths); plain fractions.Fraction is a drop-in fallback.
Both expose ``numerator``/``denominator`` and exact arithmetic, comparison
and hashing, which is all the rest of the code relies on.  No floating
point enters any verified computation.
"""

import math

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rat

ZERO = Rat(0)
ONE = Rat(1)
HALF = Rat(1, 2)


def rat(num, den=1):
    """Exact rational from ints, strings ("3", "-5/7") or rationals."""
    return Rat(num, den)


def rat_str(x) -> str:
    """Canonical text form: "p" for integers, "p/q" otherwise."""
    return str(Rat(x))


def parse_rat(text: str):
    return Rat(text.strip())


def numer(x) -> int:
    return int(x.numerator)


def denom(x) -> int:
    return int(x.denominator)


def is_integral(x) -> bool:
    return x.denominator == 1


def floor_rat(x) -> int:
    return int(math.floor(x))


def ceil_rat(x) -> int:
    return int(math.ceil(x))


def nearest_int(x) -> int:
    """Nearest integer, ties rounded up."""
    return floor_rat(x + HALF)


def vec_rat(xs):
    """Tuple of rationals from any iterable of int/str/rational entries."""
    return tuple(Rat(x) for x in xs)


def vec_int(xs):
    """Tuple of Python ints; raises ValueError on a non-integral entry."""
    out = []
    for x in xs:
        r = Rat(x)
        if r.denominator != 1:
            raise ValueError(f"non-integral entry {r}")
        out.append(int(r.numerator))
    return tuple(out)


def common_denominator(xs) -> int:
    d = 1
    for x in xs:
        d = math.lcm(d, denom(x))
    return d


def clear_denominators(xs):
    """Scale rationals to coprime integers; returns (ints, scale) with
    ints = [scale * x] and scale > 0 rational."""
    xs = [Rat(x) for x in xs]
    d = common_denominator(xs)
    ints = [numer(x) * (d // denom(x)) for x in xs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        return tuple(ints), Rat(d)
    return tuple(v // g for v in ints), Rat(d, g)
