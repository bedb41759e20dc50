"""Independent classical mutation oracle (exchange degrees all 1).

Written directly from the classical normalized exchange relations and the
principal-coefficient recursions for C, G, and F, on its own dict-based
Laurent arithmetic.  It shares no mutation code with the package, so it can
arbitrate the d = (1,...,1), trivial-z reduction.

Polynomials are dicts mapping exponent tuples of length 2n (x-block then
u-block) to integer coefficients.  y-variables are exponent vectors over
the u-block.  All indices here are 0-based.
"""

from __future__ import annotations


def pos(v):
    return v if v > 0 else 0


def padd(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def pmul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(p + q for p, q in zip(ea, eb))
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def ppow(a, e):
    assert e >= 0
    out = None
    for _ in range(e):
        out = a if out is None else pmul(out, a)
    if out is None:
        return {(0,) * _width(a): 1}
    return out


def _width(a):
    return len(next(iter(a)))


def pmono(width, idx=None, exp=1, coeff=1):
    e = [0] * width
    if idx is not None:
        e[idx] = exp
    return {tuple(e): coeff}


def pshift(a, vec):
    return {tuple(p + q for p, q in zip(e, vec)): c for e, c in a.items()}


def pdiv_exact(a, b):
    """Quotient of an exact Laurent multiple; asserts there is no remainder."""
    assert b, "division by zero polynomial"
    if not a:
        return {}
    shift_a = [min(e[v] for e in a) for v in range(_width(a))]
    shift_b = [min(e[v] for e in b) for v in range(_width(b))]
    A = pshift(a, [-v for v in shift_a])
    B = pshift(b, [-v for v in shift_b])
    eb = max(B)
    cb = B[eb]
    rem = dict(A)
    quo = {}
    while rem:
        er = max(rem)
        te = tuple(p - q for p, q in zip(er, eb))
        assert all(v >= 0 for v in te), "division not exact"
        q, r = divmod(rem[er], cb)
        assert r == 0, "division not exact over the integers"
        quo[te] = q
        for e2, c2 in B.items():
            e = tuple(p + q for p, q in zip(te, e2))
            s = rem.get(e, 0) - q * c2
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    return pshift(quo, [p - q for p, q in zip(shift_a, shift_b)])


class ClassicalState:
    """Principal-coefficient classical pattern: B, x, y, C, G, F."""

    def __init__(self, B):
        self.n = len(B)
        self.B = [list(row) for row in B]
        w = 2 * self.n
        self.x = [pmono(w, i) for i in range(self.n)]
        self.y = [tuple(1 if j == i else 0 for j in range(self.n)) for i in range(self.n)]
        self.C = [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        self.G = [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        self.F = [{(0,) * w: 1} for _ in range(self.n)]

    def _u_mono(self, exps, clip_min_zero=False):
        w = 2 * self.n
        if clip_min_zero:
            exps = [min(v, 0) for v in exps]
        return {tuple([0] * self.n + list(exps)): 1}

    def mutate(self, k):
        n, w = self.n, 2 * self.n
        B, C, G, F = self.B, self.C, self.G, self.F

        # x_k' x_k = (y_k prod x^[b_jk]+ + prod x^[-b_jk]+) / (y_k (+) 1)
        pos_part = self._u_mono(self.y[k])
        neg_part = {(0,) * w: 1}
        for j in range(n):
            if B[j][k] > 0:
                pos_part = pmul(pos_part, ppow(self.x[j], B[j][k]))
            elif B[j][k] < 0:
                neg_part = pmul(neg_part, ppow(self.x[j], -B[j][k]))
        denom = pmul(self._u_mono(self.y[k], clip_min_zero=True), self.x[k])
        new_xk = pdiv_exact(padd(pos_part, neg_part), denom)

        # tropical y-dynamics
        yk = self.y[k]
        clip = [min(v, 0) for v in yk]
        new_y = []
        for j in range(n):
            if j == k:
                new_y.append(tuple(-v for v in yk))
            else:
                bkj = B[k][j]
                new_y.append(
                    tuple(
                        e + pos(bkj) * ek - bkj * cl
                        for e, ek, cl in zip(self.y[j], yk, clip)
                    )
                )

        # C and G via the sign-coherent recursions
        eps = 1 if any(C[j][k] > 0 for j in range(n)) else -1
        newC = [row[:] for row in C]
        for j in range(n):
            if j == k:
                for l in range(n):
                    newC[l][j] = -C[l][k]
            else:
                coef = pos(eps * B[k][j])
                if coef:
                    for l in range(n):
                        newC[l][j] += coef * C[l][k]
        newG = [row[:] for row in G]
        for l in range(n):
            acc = -G[l][k]
            for j in range(n):
                coef = pos(-eps * B[j][k])
                if coef:
                    acc += coef * G[l][j]
            newG[l][k] = acc

        # F-polynomial recursion
        pos_f = self._u_mono([pos(C[j][k]) for j in range(n)])
        neg_f = self._u_mono([pos(-C[j][k]) for j in range(n)])
        for j in range(n):
            if B[j][k] > 0:
                pos_f = pmul(pos_f, ppow(F[j], B[j][k]))
            elif B[j][k] < 0:
                neg_f = pmul(neg_f, ppow(F[j], -B[j][k]))
        new_fk = pdiv_exact(padd(pos_f, neg_f), F[k])

        # classical matrix mutation
        newB = [row[:] for row in B]
        for i in range(n):
            for j in range(n):
                if i == k or j == k:
                    newB[i][j] = -B[i][j]
                else:
                    newB[i][j] = B[i][j] + pos(B[i][k]) * B[k][j] + B[i][k] * pos(-B[k][j])

        self.B = newB
        self.x[k] = new_xk
        self.y = new_y
        self.C = newC
        self.G = newG
        self.F[k] = new_fk

    def c_column(self, i):
        return tuple(self.C[l][i] for l in range(self.n))

    def g_column(self, i):
        return tuple(self.G[l][i] for l in range(self.n))
