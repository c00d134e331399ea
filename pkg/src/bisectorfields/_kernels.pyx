# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) line-enumeration kernels; same semantics as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef long _modinv(long a, long p):
    cdef long t = 0, nt = 1, r = p, nr = a % p, q, tmp
    if nr < 0:
        nr += p
    while nr:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef inline long _m(long a, long p):
    a %= p
    return a + p if a < 0 else a


cdef long* _inv_table(long p) except NULL:
    cdef long* inv = <long*>malloc(p * sizeof(long))
    if inv == NULL:
        raise MemoryError()
    inv[0] = 0
    cdef long a
    for a in range(1, p):
        inv[a] = _modinv(a, p)
    return inv


def bisector_mask(long p, sides):
    """Midpoint-definition bisector test for every line; ``sides`` = 12 ints (A, B, A1, B1)."""
    cdef long st[4]
    cdef long su[4]
    cdef long sv[4]
    cdef long i, k, idx, t, u, v, den, di, n = p * p + p
    cdef long xs[4]
    cdef long ys[4]
    cdef bint ok, a_par, b_par
    for k in range(4):
        st[k] = sides[3 * k]
        su[k] = sides[3 * k + 1]
        sv[k] = sides[3 * k + 2]
    a_par = st[0] == st[2] and su[0] == su[2]
    b_par = st[1] == st[3] and su[1] == su[3]
    cdef long* inv = _inv_table(p)
    out = bytearray(n)
    cdef unsigned char[::1] o = out
    try:
        for idx in range(n):
            if idx < p * p:
                t = idx // p
                u = 1
                v = idx % p
            else:
                t = 1
                u = 0
                v = idx - p * p
            ok = False
            for k in range(4):
                if t == st[k] and u == su[k] and v == sv[k]:
                    ok = True
            if ok:
                o[idx] = 1
                continue
            if a_par and t == st[0] and u == su[0]:
                o[idx] = 1
                continue
            if b_par and t == st[1] and u == su[1]:
                o[idx] = 1
                continue
            ok = True
            for k in range(4):
                den = _m(t * su[k] - st[k] * u, p)
                if den == 0:
                    ok = False
                    break
                di = inv[den]
                xs[k] = _m((u * sv[k] - su[k] * v) % p * di, p)
                ys[k] = _m((t * sv[k] - st[k] * v) % p * di, p)
            if not ok:
                continue
            if _m(xs[0] + xs[2] - xs[1] - xs[3], p) == 0 and _m(ys[0] + ys[2] - ys[1] - ys[3], p) == 0:
                o[idx] = 1
    finally:
        free(inv)
    return out


cdef long _eval_form(long p, long* c, long deg, long t, long u):
    cdef long acc = 0, i, j, term
    for i in range(deg + 1):
        if c[i] == 0:
            continue
        term = c[i]
        for j in range(deg - i):
            term = term * t % p
        for j in range(i):
            term = term * u % p
        acc = (acc + term) % p
    return acc


def dual_mask(long p, phi, psi):
    """Lines with Psi(t, u) - v Phi(t, u) = 0; ``phi`` has 3 and ``psi`` 4 coefficients."""
    cdef long cphi[3]
    cdef long cpsi[4]
    cdef long i, t, v, a, b, n = p * p + p
    for i in range(3):
        cphi[i] = _m(phi[i], p)
    for i in range(4):
        cpsi[i] = _m(psi[i], p)
    out = bytearray(n)
    cdef unsigned char[::1] o = out
    for t in range(p):
        a = _eval_form(p, cpsi, 3, t, 1)
        b = _eval_form(p, cphi, 2, t, 1)
        for v in range(p):
            if _m(a - v * b, p) == 0:
                o[t * p + v] = 1
    a = _eval_form(p, cpsi, 3, 1, 0)
    b = _eval_form(p, cphi, 2, 1, 0)
    for v in range(p):
        if _m(a - v * b, p) == 0:
            o[p * p + v] = 1
    return out


def transport_mask(long p, mask, long a, long b, long c, long d, long e, long f):
    """Image of a line set under ``(x, y) -> (a x + b y + e, c x + d y + f)``."""
    cdef long det = _m(a * d - b * c, p)
    if det == 0:
        raise ValueError("singular affine map")
    cdef long dinv = _modinv(det, p)
    cdef long n = p * p + p, idx, t, u, v, tx, un, vn, ui
    cdef const unsigned char[::1] m = mask
    out = bytearray(n)
    cdef unsigned char[::1] o = out
    for idx in range(n):
        if not m[idx]:
            continue
        if idx < p * p:
            t = idx // p
            u = 1
            v = idx % p
        else:
            t = 1
            u = 0
            v = idx - p * p
        tx = _m((t * d + u * c) % p * dinv, p)
        un = _m((t * b + u * a) % p * dinv, p)
        vn = _m(v - tx * e % p + un * f % p, p)
        if un:
            ui = _modinv(un, p)
            o[(tx * ui % p) * p + vn * ui % p] = 1
        else:
            ui = _modinv(tx, p)
            o[p * p + vn * ui % p] = 1
    return out


def slope_counts(long p, mask):
    """Number of lines per slope: index t for slope [t:1], index p for [1:0]."""
    cdef const unsigned char[::1] m = mask
    cdef long t, v, s
    counts = [0] * (p + 1)
    for t in range(p + 1):
        s = 0
        for v in range(p):
            s += m[t * p + v]
        counts[t] = s
    return counts
