"""Independent oracle for the Example 2 boundary log-derivative integral.

Computes  I_k = \int_{lower semicircle} log|f'(e^{it})| P_{z_k}(e^{it}) dt/(2 pi)
with mpmath at 40 digits, where f = (g - a)/(1 - a g), g = exp(h),
h(z) = -e^{i pi/4} sqrt((1+z)/(1-z)), a = e^c.
Values are frozen into tests/test_examples.cpp and the acceptance suite.
"""
import sys
import mpmath as mp

mp.mp.dps = 40


def log_abs_fprime(t, c):
    a = mp.e ** c
    z = mp.expj(t)
    w = (1 + z) / (1 - z)
    h = -mp.expj(mp.pi / 4) * mp.sqrt(w)
    g = mp.e ** h
    dh = abs(1 + z) ** mp.mpf(-0.5) * abs(1 - z) ** mp.mpf(-1.5)
    return mp.log(1 - a * a) - 2 * mp.log(abs(1 - a * g)) + mp.re(h) + mp.log(dh)


def zk(k, c):
    zeta = -1j * (c - 2j * mp.pi * k) ** 2
    return (zeta - 1) / (zeta + 1)


def integral(k, c):
    z = zk(k, c)
    r2 = abs(z) ** 2

    def f(t):
        return log_abs_fprime(t, c) * (1 - r2) / abs(mp.expj(t) - z) ** 2

    # the Poisson mass sits within ~1/k^2 of t = 0
    s = 1 / (mp.mpf(k) ** 2)
    pts = [-mp.pi, -1, -100 * s, -10 * s, -s, -s / 10, -s / 100, 0]
    return mp.quad(f, pts, maxdegree=12) / (2 * mp.pi)


if __name__ == "__main__":
    c = mp.mpf(sys.argv[1]) if len(sys.argv) > 1 else mp.mpf(-1)
    for k in (25, 50, 100):
        print(k, mp.nstr(integral(k, c), 15))
