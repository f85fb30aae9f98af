"""Independent numeric oracles shared by the test modules.

These deliberately avoid every code path they are used to check: the
regularized incomplete gamma goes through the classic series / continued
fraction pair, not through any quadrature of this package.
"""

import math


def gammp(s: float, x: float) -> float:
    """Regularized lower incomplete gamma P(s, x); ~1e-14 accurate here."""
    if x < 0 or s <= 0:
        raise ValueError("invalid arguments")
    if x == 0:
        return 0.0
    if x < s + 1:
        # power series for P
        ap, term, total = s, 1.0 / s, 1.0 / s
        for _ in range(500):
            ap += 1.0
            term *= x / ap
            total += term
            if abs(term) < abs(total) * 1e-16:
                break
        return total * math.exp(-x + s * math.log(x) - math.lgamma(s))
    # Lentz continued fraction for the complement Q
    tiny = 1e-300
    b = x + 1.0 - s
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 500):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    q = math.exp(-x + s * math.log(x) - math.lgamma(s)) * h
    return 1.0 - q
