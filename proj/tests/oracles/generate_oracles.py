"""Independent high-precision reference values frozen into the unit tests.

Run with: python3 tests/oracles/generate_oracles.py
Requires mpmath. Values are computed from first principles (direct sums,
exact rationals, root finding at 50 digits), not from the library.
"""
from fractions import Fraction
from math import comb

from mpmath import mp, mpf, exp, log, sqrt, e, findroot, binomial, factorial

mp.dps = 50


def hb(x):
    x = mpf(x)
    out = mpf(0)
    if x > 0:
        out -= x * log(x)
    if x < 1:
        out -= (1 - x) * log(1 - x)
    return out


def pmf(L, p, k):
    return binomial(L, k) * mpf(p) ** k * (1 - mpf(p)) ** (L - k)


def kl_sum(L, a, b):
    return sum(pmf(L, a, k) * log(pmf(L, a, k) / pmf(L, b, k)) for k in range(L + 1))


def chernoff_sum(alpha, L, a, b):
    return -log(sum(pmf(L, a, k) ** alpha * pmf(L, b, k) ** (1 - alpha) for k in range(L + 1)))


def mi(mu, L, p0, p1):
    mu = mpf(mu)
    total = mpf(0)
    for k in range(L + 1):
        b0, b1 = pmf(L, p0, k), pmf(L, p1, k)
        q = (1 - mu) * b0 + mu * b1
        if b0 > 0:
            total += (1 - mu) * b0 * log(b0 / q)
        if b1 > 0:
            total += mu * b1 * log(b1 / q)
    return total


def poisson_mi(mu, m0, m1, kmax=200):
    mu, m0, m1 = mpf(mu), mpf(m0), mpf(m1)
    total = mpf(0)
    for k in range(kmax):
        a = exp(-m0) * m0 ** k / factorial(k)
        b = exp(-m1) * m1 ** k / factorial(k)
        q = (1 - mu) * a + mu * b
        total += (1 - mu) * a * log(a / q) + mu * b * log(b / q)
    return total


def F(mu, p0, p1):
    ph = (1 - mu) * p0 + mu * p1
    return hb(ph) - (1 - mu) * hb(p0) - mu * hb(p1)


def show(name, value):
    print(f"{name} = {mp.nstr(value, 20)}")


def main():
    show("detection_prob(0.02, 1)", 1 - exp(mpf("-0.02")))
    show("p0 at (A=10, L0=0.02, tau=0.02)", 1 - exp(mpf("-0.0004")))
    show("p1 at (A=10, L0=0.02, tau=0.02)", 1 - exp(mpf("-0.2004")))
    show("kl_binomial(0.5, 0.25, 4)", kl_sum(4, mpf("0.5"), mpf("0.25")))
    show("chernoff_binomial(0.3, 0.2, 0.6, 7)", chernoff_sum(mpf("0.3"), 7, mpf("0.2"), mpf("0.6")))
    show("binary_entropy(0.25)", hb(mpf("0.25")))

    exact = Fraction(comb(200, 60)) * Fraction(3, 10) ** 60 * Fraction(7, 10) ** 140
    show("Bin(60; 200, 0.3) exact", mpf(exact.numerator) / exact.denominator)

    p0, p1, L = mpf("0.0198"), mpf("0.181"), 30
    show("beta(0.0198, 0.181, 30)", exp(-chernoff_sum(mpf("0.5"), L, p1, p0)))
    show("beta1(0.0198, 0.181, 30)", exp(-kl_sum(L, p1, p0)))
    show("beta2(0.0198, 0.181, 30)", exp(-kl_sum(L, p0, p1)))
    show("mi(0.5; 0.0198, 0.181, 30)", mi(mpf("0.5"), L, p0, p1))
    show("mi(0.3; 1e-4, 1.3e-4, 7)", mi(mpf("0.3"), 7, mpf("1e-4"), mpf("1.3e-4")))
    show("poisson_mi(0.5; 0.02, 10.02)", poisson_mi(mpf("0.5"), mpf("0.02"), mpf("10.02")))

    # Binomial entropy and its Gaussian approximation.
    for n in (50, 500, 5000):
        h = -sum(pmf(n, mpf("0.3"), k) * log(pmf(n, mpf("0.3"), k)) for k in range(n + 1))
        show(f"H(Bin({n}, 0.3))", h)

    # Capacity at A tau = 2, Lambda0 tau = 0.5 by root finding on F'.
    p0 = 1 - exp(mpf("-0.5"))
    p1 = 1 - exp(mpf("-2.5"))
    dF = lambda mu: mp.diff(lambda m: F(m, p0, p1), mu)
    mu_star = findroot(dF, mpf("0.5"))
    show("mu*(A tau=2, L0 tau=0.5)", mu_star)
    show("C tau (A tau=2, L0 tau=0.5)", F(mu_star, p0, p1))

    # Same with Lambda0 = 0, A tau = 1 (also the unit-schedule duty-cycle limit).
    p1 = 1 - exp(mpf(-1))
    mu_star = findroot(lambda mu: mp.diff(lambda m: F(m, mpf(0), p1), mu), mpf("0.4"))
    show("mu*(A tau=1, L0=0)", mu_star)

    # Continuous Poisson capacity with A = 1, Lambda0 = 0.1.
    s = mpf("0.1")
    q = (1 + s) ** (1 + s) / (s ** s * e) - s
    show("wyner q*(A=1, L0=0.1)", q)
    show("wyner C(A=1, L0=0.1)", q * (1 + s) * log(1 + s) + (1 - q) * s * log(s) - (q + s) * log(q + s))
    s = mpf(1000)
    q = (1 + s) ** (1 + s) / (s ** s * e) - s
    show("wyner C/A^2 (A=1e-3, L0=1)", (q * (1 + s) * log(1 + s) + (1 - q) * s * log(s) - (q + s) * log(q + s)) / mpf("1e-3"))

    # Large-A saturation coefficient, literal formula.
    for lt in ("0.5", "2"):
        lt = mpf(lt)
        p0 = 1 - exp(-lt)
        u = exp(exp(lt) * hb(p0))
        show(f"c_Lambda0 at Lambda0 tau={lt}", hb(u / (1 + u)) - hb(p0) * exp(lt) / (1 + u))
        show(f"A->inf duty cycle at Lambda0 tau={lt}", 1 - 1 / ((1 + u) * (1 - p0)))

    tau = mpf("0.01")
    p0 = 1 - exp(-tau)
    show("d_tau(Lambda0=1, tau=0.01)", tau * (1 - p0) / (8 * p0))

    # Bound gap for a concrete triple: maximize F_u - F_l by root finding.
    p0, p1, L = mpf("0.05"), mpf("0.4"), 6
    b = exp(-chernoff_sum(mpf("0.5"), L, p1, p0))
    b1 = exp(-kl_sum(L, p1, p0))
    b2 = exp(-kl_sum(L, p0, p1))
    Fl = lambda mu: -(mu * log((1 - mu) * b + mu) + (1 - mu) * log(mu * b + 1 - mu))
    Fu = lambda mu: -(mu * log((1 - mu) * b1 + mu) + (1 - mu) * log(mu * b2 + 1 - mu))
    gap = lambda mu: Fu(mu) - Fl(mu)
    mu_g = findroot(lambda m: mp.diff(gap, m), mpf("0.5"))
    show("gap(0.05, 0.4, 6)", gap(mu_g))
    mu_u = findroot(lambda m: mp.diff(Fu, m), mpf("0.5"))
    show("mu_upper(0.05, 0.4, 6)", mu_u)
    show("max F_u(0.05, 0.4, 6)", Fu(mu_u))


if __name__ == "__main__":
    main()
