"""Independent exact-arithmetic oracle used to freeze expected values.

Pure Python with fractions.Fraction; shares no code with the C++ library.
Run directly to print the frozen tables used by the C++ tests.
"""
from fractions import Fraction as F
from itertools import combinations
from math import comb, factorial


def rho(g, d, a):
    r = len(a) - 1
    return g - (r + 1) * (g - d + r) - sum(ai - i for i, ai in enumerate(a))


def count(g, d, a):
    r = len(a) - 1
    total = F(0)
    for k1, k2 in combinations(range(r + 1), 2):
        b = [a[i] - (i == k1) - (i == k2) for i in range(r + 1)]
        args = [g - d + r + bi for bi in b]
        if any(x < 0 for x in args):
            continue
        num = 1
        for i, j in combinations(range(r + 1), 2):
            num *= b[j] - b[i]
        den = 1
        for x in args:
            den *= factorial(x)
        total += F((a[k2] - a[k1]) ** 2 - 1) * F(num, den)
    return factorial(g) * total


def derived(a, i):
    b = [x + (0 if j == i else 1) for j, x in enumerate(a)]
    return b if all(b[j] < b[j + 1] for j in range(len(b) - 1)) else None


def mu_nu(g, d, a):
    n = count(g, d, a)
    s = sum(count(g - 1, d, b) for b in (derived(a, i) for i in range(len(a))) if b)
    return -n / (2 * (g * g - 1)) + s / (4 * comb(g - 1, 2)), n / (g * (g * g - 1))


def enumerate_div(g, r_max, d_max):
    out = []
    for r in range(r_max + 1):
        for d in range(r + 1, d_max + 1):
            for a in combinations(range(d + 1), r + 1):
                if rho(g, d, a) == -1:
                    out.append((r, d, tuple(a)))
    return out


def direct(g, k, mu, nu):
    h = g // 2
    eta = -g * (g * g - 1) * nu
    lam = 2 * (g - 1) * (g + 3) * k * mu + 2 * (3 * g * g + 2 * g + 1) * k * nu
    c = [F(g * g - 1, 3) * k * mu + F(g * (g + 1), 2) * k * nu]
    c += [2 * i * (g - i) * (g - 1) * k * mu + i * (g - i) * (g + 3) * k * nu for i in range(1, h + 1)]
    return [eta, lam] + [-x for x in c]


def pushforward(g, k, mu, nu):
    # upstairs class X = mu*BN + nu*W: psi, lambda, delta_0..delta_{g-1}
    psi = nu * comb(g + 1, 2)
    lam = mu * (g + 3) - nu
    dl = [-mu * F(g + 1, 6)] + [-mu * i * (g - i) - nu * comb(g - i + 1, 2) for i in range(1, g)]
    h = g // 2
    out = [F(0)] * (2 + h + 1)
    # (k psi - eta) * X
    # k psi * psi_coef psi -> k psi_coef kappa1
    out[1] += k * psi * 12
    for i in range(h + 1):
        out[2 + i] -= k * psi
    out[1] += k * lam * (2 * g - 2)
    out[2] += k * dl[0] * (2 * g - 2)
    for j in range(1, g):  # upstairs delta_j
        if j <= g - j:
            out[2 + j] += k * dl[j] * (2 * j - 1)
        if j >= g - j:
            i = g - j
            out[2 + i] += k * dl[j] * (2 * g - 2 * i - 1)
    # -eta * psi_coef psi
    out[0] += -psi * (2 * g - 2)
    return out


def solve(rows, rhs):
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    n = len(rows[0])
    piv = []
    row = 0
    for col in range(n):
        p = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if p is None:
            continue
        m[row], m[p] = m[p], m[row]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                f = m[i][col] / m[row][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[row])]
        piv.append(col)
        row += 1
    x = [F(0)] * n
    for i, col in enumerate(piv):
        x[col] = m[i][n] / m[i][col]
    return x


def family_rows(g, k, mu, nu, n):
    h = g // 2
    w = 3 + h
    def row(vals):
        r = [F(0)] * w
        for idx, v in vals.items():
            r[idx] = F(v)
        return r
    rows, rhs = [], []
    rows.append(row({0: -1})); rhs.append(F(n))
    if g >= 3:
        rows.append(row({0: k, 1: g + 1, 2: 6 * g + 18})); rhs.append(2 * k * (g + 1) * (g - 1) ** 2 * nu)
    rows.append(row({0: k, 1: g, 2: 6 * (g + 1), 3: 1})); rhs.append(k * (2 * g - 3) * (g * g - 1) * nu)
    rows.append(row({0: k, 1: F(g * (g + 1), 2), 2: 2 * (g + 1) * (2 * g + 1)}))
    rhs.append(k * g * (g + 1) * (g - 1) ** 2 * nu - F(1, 3) * k * (g + 1) * (g - 1) ** 2 * (g - 2) * mu)
    for i in range(2, h + 1):
        rows.append(row({3: F(-i * (g - i), g - 1), 2 + i: 1})); rhs.append(F(0))
    return rows, rhs


if __name__ == "__main__":
    print("count examples", count(2, 2, (0, 2)), count(3, 4, (0, 1, 3)), count(2, 4, (0, 2, 4)),
          count(2, 4, (1, 2, 3)), count(3, 2, (0, 1)))
    print("weierstrass", [count(g, 2 * g - 2, tuple(list(range(g - 1)) + [g])) for g in range(2, 13)])
    print("munu", mu_nu(3, 4, (0, 1, 3)), mu_nu(3, 2, (0, 1)), mu_nu(4, 6, (0, 1, 2, 4)))
    print("enum", enumerate_div(2, 1, 3), enumerate_div(2, 0, 3), enumerate_div(3, 1, 2))
    import random
    random.seed(1)
    bad = 0
    for _ in range(3000):
        g = random.randint(1, 8); r = random.randint(0, 4); d = random.randint(max(r, 1), 12)
        a = sorted(random.sample(range(d + 1), r + 1)) if r + 1 <= d + 1 else None
        if a is None: continue
        c = count(g, d, a)
        if c.denominator != 1 or c < 0:
            bad += 1; print("nonint/neg", g, d, a, c)
            if bad > 10: break
    print("integrality failures", bad)
    neg = 0; mism = 0; cnt = 0
    for g in range(3, 9):
        for r, d, a in enumerate_div(g, 3 if g <= 6 else 4, 2 * g - 2):
            mu, nu = mu_nu(g, d, a)
            if g <= 6 and (mu < 0 or nu < 0): neg += 1; print("neg", g, d, a, mu, nu)
            for k in (1, 2, 3):
                cnt += 1
                D = direct(g, k, mu, nu); P = pushforward(g, k, mu, nu)
                rows, rhs = family_rows(g, k, mu, nu, count(g, d, a))
                S = solve(rows, rhs)
                if not (D == P == S): mism += 1; print("mismatch", g, k, d, a, D, P, S)
    print("neg", neg, "mismatch", mism, "cells", cnt)
    print("weierstrass", pushforward(2, 2, 0, 1), pushforward(3, 1, 0, 1), pushforward(4, 1, 0, 1))
    print("g2 solve", solve(*family_rows(2, 1, F(0), F(1), 6)[0:2]))
