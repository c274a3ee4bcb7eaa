"""Independent slow reference computations used only by the tests.

None of these import the package's algorithms; they take plain data
(Cartan matrices, root norms, Gram matrices) and recompute from scratch.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod


# --- small exact linear algebra ---------------------------------------------


def inverse(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def det(m):
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d


# --- root data from a Cartan matrix -----------------------------------------


def roots_by_reflection(cartan):
    """All roots (simple-root coordinates) as the Weyl orbit of the simple roots."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        beta = todo.pop()
        for i in range(n):
            pairing = sum(cartan[i][j] * beta[j] for j in range(n))
            img = tuple(b - pairing * int(j == i) for j, b in enumerate(beta))
            if img not in seen:
                seen.add(img)
                todo.append(img)
    return sorted(r for r in seen if all(x >= 0 for x in r))


def weyl_order(cartan):
    """``|W| = n! * prod(marks) * det(cartan)`` for an irreducible Cartan matrix."""
    n = len(cartan)
    if n == 0:
        return 1
    theta = max(roots_by_reflection(cartan), key=sum)
    return factorial(n) * prod(theta) * int(det(cartan))


def _components(nodes, cartan):
    nodes = set(nodes)
    comps = []
    while nodes:
        stack = [nodes.pop()]
        comp = set(stack)
        while stack:
            i = stack.pop()
            for j in list(nodes):
                if cartan[i][j] != 0:
                    nodes.remove(j)
                    comp.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def parabolic_order(cartan, nodes):
    return prod(weyl_order([[cartan[i][j] for j in c] for i in c]) for c in _components(nodes, cartan))


class Freudenthal:
    """Weight multiplicities of an irreducible module by Freudenthal's recursion."""

    def __init__(self, cartan, root_norms):
        self.cartan = [list(r) for r in cartan]
        self.n = len(cartan)
        self.norms = [Fraction(x) for x in root_norms]
        # (lambda_i, lambda_j) = (A^-1)_{ji} |alpha_j|^2 / 2 with A_ij = <alpha_i^vee, alpha_j>.
        ainv = inverse(self.cartan)
        self.wgram = [[ainv[j][i] * self.norms[j] / 2 for j in range(self.n)] for i in range(self.n)]
        self.pos = roots_by_reflection(self.cartan)
        self.pos_labels = [tuple(sum(self.cartan[i][j] * r[j] for j in range(self.n)) for i in range(self.n)) for r in self.pos]
        self.w_order = weyl_order(self.cartan)

    def form(self, x, y):
        return sum(x[i] * self.wgram[i][j] * y[j] for i in range(self.n) for j in range(self.n))

    def dominant(self, mu):
        mu = list(mu)
        while True:
            for i in range(self.n):
                if mu[i] < 0:
                    c = mu[i]
                    mu = [m - c * self.cartan[j][i] for j, m in enumerate(mu)]
                    break
            else:
                return tuple(mu)

    def dominant_weights(self, lam):
        lam = tuple(lam)
        out = {lam}
        todo = [lam]
        while todo:
            mu = todo.pop()
            for r in self.pos_labels:
                nu = tuple(a - b for a, b in zip(mu, r))
                if all(x >= 0 for x in nu) and nu not in out:
                    out.add(nu)
                    todo.append(nu)
        return out

    def multiplicities(self, lam):
        lam = tuple(lam)
        rho = (1,) * self.n
        lr = tuple(a + b for a, b in zip(lam, rho))
        c_lam = self.form(lr, lr)
        doms = sorted(self.dominant_weights(lam), key=lambda mu: -self.form(mu, rho))
        mult = {}

        def m(mu):
            d = self.dominant(mu)
            return mult.get(d, 0)

        for mu in doms:
            if mu == lam:
                mult[mu] = 1
                continue
            acc = Fraction(0)
            for r in self.pos_labels:
                j = 1
                while True:
                    nu = tuple(a + j * b for a, b in zip(mu, r))
                    d = self.dominant(nu)
                    if d not in self.dominant_weights_cache(lam, doms):
                        break
                    acc += m(nu) * self.form(nu, r)
                    j += 1
            mr = tuple(a + b for a, b in zip(mu, rho))
            val = 2 * acc / (c_lam - self.form(mr, mr))
            assert val.denominator == 1
            mult[mu] = int(val)
        return mult

    def dominant_weights_cache(self, lam, doms):
        key = tuple(lam)
        if getattr(self, "_cache_key", None) != key:
            self._cache_key = key
            self._cache = set(doms)
        return self._cache

    def dimension(self, lam):
        total = 0
        for mu, k in self.multiplicities(lam).items():
            zeros = [i for i in range(self.n) if mu[i] == 0]
            total += k * (self.w_order // parabolic_order(self.cartan, zeros))
        return total


# --- sl(2) Verlinde numbers from the S-matrix ---------------------------------


def _chebyshev_u(i):
    """Coefficients of U_i(x) as a list, lowest degree first."""
    a, b = [1], [0, 2]
    if i == 0:
        return a
    for _ in range(i - 1):
        nxt = [0] + [2 * c for c in b]
        for d, c in enumerate(a):
            nxt[d] -= c
        a, b = b, nxt
    return b


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def _cos_power_sum(p, n):
    """``sum_{t=1}^{n-1} cos(pi t/n)^p`` exactly."""
    full = Fraction(0)
    for r in range(p + 1):
        if (p - 2 * r) % (2 * n) == 0:
            full += comb(p, r) * 2 * n
    full /= 2**p
    return (full - 1 - (-1) ** p) / 2


def verlinde_sl2(k, i, j, l):
    """``N_{ij}^l = sum_b S_ib S_jb S_lb / S_0b`` with ``S`` the level-k S-matrix."""
    n = k + 2
    poly = _poly_mul(_poly_mul(_chebyshev_u(i), _chebyshev_u(j)), _poly_mul(_chebyshev_u(l), [1, 0, -1]))
    val = Fraction(2, n) * sum(c * _cos_power_sum(p, n) for p, c in enumerate(poly) if c)
    assert val.denominator == 1
    return int(val)


# --- q-series -----------------------------------------------------------------


def partitions(n):
    """``p(0..n)`` by listing partitions explicitly."""

    @lru_cache(maxsize=None)
    def count(m, largest):
        if m == 0:
            return 1
        return sum(count(m - part, part) for part in range(1, min(m, largest) + 1))

    return [count(m, m) for m in range(n + 1)]


def pairs_of_partitions(n):
    p = partitions(n)
    return [sum(p[a] * p[m - a] for a in range(m + 1)) for m in range(n + 1)]


def fermion_product(copies, order):
    """``prod_{j>=1} (1 + q^(j-1/2))^copies`` as {exponent: coeff} up to ``order``."""
    order = Fraction(order)
    series = {Fraction(0): 1}
    j = 1
    while Fraction(2 * j - 1, 2) <= order:
        e = Fraction(2 * j - 1, 2)
        for _ in range(copies):
            nxt = dict(series)
            for x, c in series.items():
                if x + e <= order:
                    nxt[x + e] = nxt.get(x + e, 0) + c
            series = nxt
        j += 1
    return {x: c for x, c in series.items() if c}


def brute_theta(gram, shift, order, box=12):
    """``sum q^(B(v,v)/2)`` over ``v = shift + n``, ``|n_i| <= box``, exponents ``<= order``."""
    d = len(gram)
    out = {}
    for n in product(range(-box, box + 1), repeat=d):
        v = [Fraction(shift[i]) + n[i] for i in range(d)]
        e = sum(v[i] * Fraction(gram[i][j]) * v[j] for i in range(d) for j in range(d)) / 2
        if e <= order:
            out[e] = out.get(e, 0) + 1
    return out


def weyl_kac_sl2(k, i, order):
    """Character of L(k,i) from the two-variable Weyl-Kac formula at ``z = 1``.

    Laurent polynomials in z are dicts; everything is truncated at q^order.
    """
    order = int(order)
    num = [dict() for _ in range(order + 1)]
    t = -order - 2
    while t <= order + 2:
        e = (k + 2) * t * t + (i + 1) * t
        if 0 <= e <= order:
            p = i + 1 + 2 * (k + 2) * t
            num[e][p] = num[e].get(p, 0) + 1
            num[e][-p] = num[e].get(-p, 0) - 1
        t += 1
    # Divide each coefficient by (z - z^-1); the numerator is antisymmetric in z.
    quo = []
    for poly in num:
        poly = {p: c for p, c in poly.items() if c}
        out = {}
        while poly:
            top = max(poly)
            c = poly[top]
            out[top - 1] = out.get(top - 1, 0) + c
            poly[top] -= c
            poly[top - 2] = poly.get(top - 2, 0) + c
            poly = {p: v for p, v in poly.items() if v}
        quo.append(out)
    # Multiply by 1 / prod_m (1-q^m)(1-z^2 q^m)(1-z^-2 q^m).
    series = quo
    for m in range(1, order + 1):
        for zpow in (0, 2, -2):
            nxt = [dict(p) for p in series]
            for deg in range(m, order + 1):
                for p, c in nxt[deg - m].items():
                    nxt[deg][p + zpow] = nxt[deg].get(p + zpow, 0) + c
            series = nxt
    return [sum(p.values()) for p in series]
