"""Independent high-precision reference values for the unit tests (mpmath)."""
from mpmath import mp, mpf, quad, sqrt, pi, exp, log, gamma, factorial, diff, inf, atan

mp.dps = 30

lam_s = mpf("1e-3")
lam_u = mpf("1e-2")
rho3 = sqrt(3 / (2 * sqrt(3) * lam_s))
print("rho(l=3)", rho3)
print("1-exp(-pi lam rho^2)", 1 - exp(-pi * lam_s * rho3**2))
print("theta(4,1,1,1)", quad(lambda r: r / (1 + r**4), [0, 1]), pi / 8)
print("theta(4,1,0.3,1.7)", quad(lambda r: r / (1 + mpf("0.3") * r**4), [0, 1.7]))
print("theta(3,2,0.5,0.8)", quad(lambda r: r**2 / (1 + mpf("0.5") * r**3), [0, 0.8]))
print("gamma_ccdf(3,2)", 5 * exp(-2))
for m in (1, 2, 6):
    print("alzer", m, factorial(m) ** (mpf(-1) / m))


def f(n, u, c=mpf("3.5")):
    return c**c * gamma(n + c) / (gamma(c) * factorial(n)) * u**n / (u + c) ** (n + c)


u = lam_u / lam_s
head = [f(n, u) for n in range(3)]
print("pmf", head, 1 - sum(head))

g = lambda s: quad(lambda r: exp(-s * r), [0, 1])
print("jet", [diff(g, mpf("1.5"), i) / factorial(i) for i in range(3)])

# Default scenario with p_d = 1: every interferer is a DL SAP beyond r0.
probs = head + [1 - sum(head)]
P = mpf(10) ** ((30 - 30) / mpf(10))  # 30 dBm
Q = mpf(10) ** ((17 - 30) / mpf(10))
r0 = mpf(10)
for s in (mpf(1e3), mpf(1e4), mpf(1e5)):
    acc = 0
    for n in range(1, 4):
        acc += lam_s * probs[n] * quad(lambda r: (1 - (1 + s * P * r**-4) ** (-n)) * r, [r0, 100, 1000, inf])
    print("dl_pd1", s, exp(-2 * pi * acc))

# p_d = 0, UL: every interferer is an MU of a PPP with density sum_n n f(n) lam_s.
Lam_u = sum(lam_s * n * probs[n] for n in range(1, 4))
for s in (mpf(1e3), mpf(1e4), mpf(1e5)):
    print("ul_pd0", s, exp(-pi**2 * Lam_u * sqrt(s * Q) / 2))
