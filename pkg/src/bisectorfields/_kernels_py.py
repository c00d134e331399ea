"""Pure-Python GF(p) line-enumeration kernels.

Lines are indexed as ``t*p + v`` for ``t*X - Y + v = 0`` and ``p*p + v`` for
``X + v = 0``. All arguments are residues in ``[0, p)``; sides and lines are
canonical ``(t, u, v)`` triples.
"""


def _inverses(p):
    inv = [0] * p
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


def _line_of(p, idx):
    if idx < p * p:
        return idx // p, 1, idx % p
    return 1, 0, idx - p * p


def _index(p, t, u, v):
    return t * p + v if u else p * p + v


def bisector_mask(p, sides):
    """Midpoint-definition bisector test for every line; ``sides`` = 12 ints (A, B, A1, B1)."""
    inv = _inverses(p)
    tA, uA, vA, tB, uB, vB, tA1, uA1, vA1, tB1, uB1, vB1 = sides
    side_list = ((tA, uA, vA), (tB, uB, vB), (tA1, uA1, vA1), (tB1, uB1, vB1))
    side_idx = {_index(p, *s) for s in side_list}
    a_par = tA == tA1 and uA == uA1
    b_par = tB == tB1 and uB == uB1
    n = p * p + p
    out = bytearray(n)
    for idx in range(n):
        if idx in side_idx:
            out[idx] = 1
            continue
        t, u, v = _line_of(p, idx)
        if a_par and t == tA and u == uA:
            out[idx] = 1
            continue
        if b_par and t == tB and u == uB:
            out[idx] = 1
            continue
        xs = [0, 0, 0, 0]
        ys = [0, 0, 0, 0]
        ok = True
        for k in range(4):
            tl, ul, vl = side_list[k]
            den = (t * ul - tl * u) % p
            if den == 0:
                ok = False
                break
            di = inv[den]
            xs[k] = (u * vl - ul * v) * di % p
            ys[k] = (t * vl - tl * v) * di % p
        if not ok:
            continue
        # mid_AA1 == mid_BB1  <=>  x_A + x_A1 == x_B + x_B1 (same for y)
        if (xs[0] + xs[2] - xs[1] - xs[3]) % p == 0 and (ys[0] + ys[2] - ys[1] - ys[3]) % p == 0:
            out[idx] = 1
    return out


def _eval_form(p, coeffs, t, u):
    d = len(coeffs) - 1
    acc = 0
    for i, c in enumerate(coeffs):
        if c:
            acc += c * pow(t, d - i, p) * pow(u, i, p)
    return acc % p


def dual_mask(p, phi, psi):
    """Lines with Psi(t, u) - v Phi(t, u) = 0; ``phi`` has 3 and ``psi`` 4 coefficients."""
    n = p * p + p
    out = bytearray(n)
    for t in range(p):
        a = _eval_form(p, psi, t, 1)
        b = _eval_form(p, phi, t, 1)
        base = t * p
        for v in range(p):
            if (a - v * b) % p == 0:
                out[base + v] = 1
    a = _eval_form(p, psi, 1, 0)
    b = _eval_form(p, phi, 1, 0)
    for v in range(p):
        if (a - v * b) % p == 0:
            out[p * p + v] = 1
    return out


def transport_mask(p, mask, a, b, c, d, e, f):
    """Image of a line set under ``(x, y) -> (a x + b y + e, c x + d y + f)``."""
    inv = _inverses(p)
    det = (a * d - b * c) % p
    if det == 0:
        raise ValueError("singular affine map")
    dinv = inv[det]
    n = p * p + p
    out = bytearray(n)
    for idx in range(n):
        if not mask[idx]:
            continue
        t, u, v = _line_of(p, idx)
        tx = (t * d + u * c) * dinv % p
        un = (t * b + u * a) * dinv % p
        # new line tx*X - un*Y + vn with ty = -un
        vn = (v - tx * e + un * f) % p
        if un:
            ui = inv[un]
            out[(tx * ui % p) * p + vn * ui % p] = 1
        else:
            ti = inv[tx]
            out[p * p + vn * ti % p] = 1
    return out


def slope_counts(p, mask):
    """Number of lines per slope: index t for slope [t:1], index p for [1:0]."""
    counts = [0] * (p + 1)
    for t in range(p):
        counts[t] = sum(mask[t * p:(t + 1) * p])
    counts[p] = sum(mask[p * p:p * p + p])
    return counts
