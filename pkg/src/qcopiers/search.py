import math

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI2 = (3 - math.sqrt(5)) / 2


def golden_section_max(func, a, b, tol=1e-10):
    """Locate the maximum of a unimodal ``func`` on ``[a, b]``.

    Returns ``(x, func(x))`` where ``x`` lies within ``tol`` of the maximizer.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, func(x)

    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    yc = func(c)
    yd = func(d)
    for _ in range(n):
        if yc >= yd:
            b, d, yd = d, c, yc
            h *= INV_PHI
            c = a + INV_PHI2 * h
            yc = func(c)
        else:
            a, c, yc = c, d, yd
            h *= INV_PHI
            d = a + INV_PHI * h
            yd = func(d)
    return (c, yc) if yc >= yd else (d, yd)
