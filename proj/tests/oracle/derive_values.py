"""Independent reference values for the unit tests, computed with mpmath.

Regenerate tests/oracle_values.hpp with:
    python3 tests/oracle/derive_values.py > tests/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40


def T(n, x):
    return mp.chebyt(n, x)


def rho(n, m, a, t):
    return T(n, 1 - 2 * t) + T(m, 1 + 2 * t / a)


def theta_int(f, a):
    # int_{-a}^{1} f(t) dt / sqrt((1-t)(a+t)) with t = ((1-a) + (1+a) cos th) / 2
    return mp.quad(lambda th: f(((1 - a) + (1 + a) * mp.cos(th)) / 2), [0, mp.pi / 2, mp.pi])


def cosh_minus_cos(n, m, a, t):
    x = mp.asin(mp.sqrt(mp.mpc(t)))
    y = mp.asinh(mp.sqrt(mp.mpc(t) / a))
    return mp.re(mp.cosh(2 * m * y) - mp.cos(2 * n * x))


def gauss_weights(nodes, moment):
    k = len(nodes)
    A = mp.matrix(k, k)
    b = mp.matrix(k, 1)
    for j in range(k):
        for i, x in enumerate(nodes):
            A[j, i] = mp.mpf(x) ** j
        b[j] = moment(j)
    return list(mp.lu_solve(A, b))


out = {}

a = mp.mpf(2)
out["kRuleT4_352"] = theta_int(lambda t: t**4 / rho(3, 5, a, t), a)
out["kRuleOne_331"] = theta_int(lambda t: 1 / rho(3, 3, 1, t), mp.mpf(1))
nodes = [0, mp.sin(mp.pi / 3) ** 2, -2 * mp.sin(mp.pi / 5) ** 2, -2 * mp.sin(2 * mp.pi / 5) ** 2]
w = gauss_weights(nodes, lambda j: theta_int(lambda t: t**j / rho(3, 5, a, t), a))
order = sorted(range(4), key=lambda i: nodes[i])
for r, i in enumerate(order):
    out[f"kRule352Node{r}"] = mp.mpf(nodes[i])
    out[f"kRule352Weight{r}"] = w[i]

# squared weight sqrt((1-t)(a+t)) / rho^2 dt, n=2, m=3, a=1, p = t^6
out["kSquaredT6_231"] = theta_int(lambda t: t**6 * (1 - t) * (1 + t) / rho(2, 3, 1, t) ** 2, mp.mpf(1))

# signed weight t / (cosh - cos) is the integrand p / (cosh - cos) with p = t^2
out["kSignedT2_321"] = theta_int(lambda t: t**2 / cosh_minus_cos(3, 2, 1, t), mp.mpf(1))
out["kSignedT_121"] = theta_int(lambda t: t / cosh_minus_cos(1, 2, 1, t), mp.mpf(1))

out["kSumForm_532_u2"] = theta_int(lambda t: T(2, 1 - 2 * t) / rho(5, 3, a, t), a)

out["kCorollaryC_22"] = theta_int(
    lambda t: (1 - t * t) / (1 + 2 * t + T(2, 1 - 2 * t)) ** 2, mp.mpf(1))
q = (mp.sqrt(2) + 1) ** 2
out["kCorollaryB_1"] = mp.pi / mp.sqrt(8) * (q + 1) / (q - 1)


def S(n, m):
    return mp.fsum((-1) ** j * mp.sin(mp.pi * (2 * j + 1) / (2 * n))
                   * mp.cos(mp.pi * (2 * j + 1) / (2 * n)) ** (m - 1) for j in range(n // 2 + 1))


out["kS_57"] = S(5, 7)


def theta_lhs(n, m):
    def f(t):
        r = mp.sqrt(t)
        x, y = mp.asin(r), mp.asinh(r)
        return mp.sin(n * x) * mp.sinh(n * y) / (mp.cos(2 * n * x) + mp.cosh(2 * n * y)) \
            * mp.sin(m * mp.asin(t)) / mp.sqrt(1 - t * t)
    return mp.quad(f, [0, 1])


out["kThetaLhs_57"] = theta_lhs(5, 7)

z = mp.mpc(0.4, 0.2)
v = 1 / ((1 - z * z) * mp.chebyu(2, z))
out["kPfU3Re"], out["kPfU3Im"] = mp.re(v), mp.im(v)

th, c, k = mp.mpf("1.1"), mp.mpf("0.5"), 3
s = mp.sin(th) + c
v = 1 / mp.cos(k * mp.asin(mp.sqrt(s / (1 + c))) + 1j * k * mp.asinh(mp.sqrt(s / (1 - c))))
out["kPfT3Re"], out["kPfT3Im"] = mp.re(v), mp.im(v)

t = mp.mpc(-1)
sa = mp.sqrt(t), mp.sqrt(t / 2)
xi = mp.cos(3 * mp.asin(sa[0])) * mp.cosh(5 * mp.asinh(sa[1]))
eta = t / mp.sqrt(2) * mp.sin(3 * mp.asin(sa[0])) / sa[0] * mp.sinh(5 * mp.asinh(sa[1])) / sa[1]
out["kXi_352_m1"], out["kEta_352_m1"] = mp.re(xi), mp.re(eta)

out["kGlaisher_1"] = mp.pi**2 / 8 * mp.nsum(
    lambda j: (-1) ** j * (2 * j + 1) * mp.exp(-mp.pi**2 * (2 * j + 1) ** 2 / 8), [0, mp.inf])


def ram(n, k, b):
    return mp.quad(lambda t: mp.sin(k * n * mp.asin(t)) * t ** (4 * b)
                   / ((mp.cos(n * mp.asin(t)) + mp.cosh(n * mp.asinh(t))) * t), [0, 1])


out["kRamanujan_61_b1"] = ram(6, 1, 1)


def cos_sqrt(x):
    return mp.re(mp.cos(mp.sqrt(mp.mpc(x))))


def cosh_sqrt(al, x):
    return mp.re(mp.cosh(al * mp.sqrt(mp.mpc(x))))


out["kLimitTwoCosh_11"] = mp.quad(
    lambda x: 1 / ((cos_sqrt(x) + cosh_sqrt(1, x)) ** 2), [-mp.inf, -50, 0, 50, mp.inf])


# Fejer-Riesz factor of rho(cos th) = 2 + 16c + 48c^2 + 32c^3 (n=1, m=3, a=1) from the
# roots of the Laurent symbol: keep the roots outside the unit disk.
lau = [mp.mpf(0)] * 7  # z^3 rho((z + 1/z) / 2), ascending powers
for k, ck in enumerate([2, 16, 48, 32]):
    # ((z + 1/z)/2)^k z^3 = 2^-k sum_i C(k,i) z^(3 + k - 2i)
    for i in range(k + 1):
        lau[3 + k - 2 * i] += ck * mp.binomial(k, i) / mp.mpf(2) ** k
roots = mp.polyroots(lau[::-1], maxsteps=200, extraprec=200)
outside = [r for r in roots if abs(r) > 1]
h = [mp.mpc(1)]
for r in outside:
    h = [(h[i - 1] if i > 0 else 0) - r * (h[i] if i < len(h) else 0) for i in range(len(h) + 1)]
scale = mp.sqrt(2 + 16 + 48 + 32) / abs(mp.fsum(h))
if mp.re(h[0]) < 0:
    scale = -scale
for i, c in enumerate(h):
    out[f"kFactor131Coeff{i}"] = mp.re(c) * scale

print("#pragma once")
print()
print("// Generated by tests/oracle/derive_values.py (mpmath, 40 digits).")
print()
print("namespace oracle_values {")
print()
for key, val in out.items():
    print(f"inline constexpr double {key} = {mp.nstr(val, 20)};")
print()
print("}  // namespace oracle_values")
