"""High-precision reference values frozen into the C++ unit tests.

Everything here is evaluated with mpmath at 40 digits, independently of the
library code paths.
"""
import mpmath as mp

mp.mp.dps = 40
phi = lambda x: mp.npdf(x)
Phi = lambda x: mp.ncdf(x)


def constant_ncp(a):
    return Phi(a) ** 2 - a * phi(a) * Phi(a) - phi(a) ** 2


def linear_ncp(a, b):
    return (Phi(a + b) * Phi(a) - phi(a) * Phi(a + b) / b
            + mp.sqrt(2 * mp.pi) / b * phi(a) * phi(b) * Phi(a) * mp.exp(-a * b))


def bachelier_levy(a, b, T):
    if a <= 0:
        return mp.mpf(0)
    return Phi(b * mp.sqrt(T) + a / mp.sqrt(T)) - mp.exp(-2 * a * b) * Phi(b * mp.sqrt(T) - a / mp.sqrt(T))


def slepian_via_brownian_integral(a, b):
    # Independent route: integrate Bachelier-Levy over the starting value.
    f = lambda x: bachelier_levy((a - x) / 2, (a + x) / 2 + b, 1) * phi(x)
    return mp.quad(f, [-mp.inf, a])


if __name__ == "__main__":
    print("phi(1)", mp.nstr(phi(1), 17))
    print("Phi(1)", mp.nstr(Phi(1), 17))
    print("fused(1,2)", mp.nstr(mp.exp(-4.5) / (2 * mp.pi), 17))
    print("constant(0)", mp.nstr(constant_ncp(0), 17), mp.nstr(mp.mpf(1) / 4 - 1 / (2 * mp.pi), 17))
    print("constant(1)", mp.nstr(constant_ncp(1), 17))
    print("constant(0.5)", mp.nstr(constant_ncp(mp.mpf("0.5")), 17))
    print("constant(-3)", mp.nstr(constant_ncp(-3), 17))
    print("constant(-6)", mp.nstr(constant_ncp(-6), 17))
    print("linear(0,1)", mp.nstr(linear_ncp(0, 1), 17))
    print("linear(1,1)", mp.nstr(linear_ncp(1, 1), 17), mp.nstr(slepian_via_brownian_integral(1, 1), 17))
    print("linear(1,-1)", mp.nstr(linear_ncp(1, -1), 17), mp.nstr(slepian_via_brownian_integral(1, -1), 17))
    print("linear(0.5,2)", mp.nstr(linear_ncp(mp.mpf("0.5"), 2), 17))
    print("linear(1,1e-3)", mp.nstr(linear_ncp(1, mp.mpf("1e-3")), 20))
    print("linear(1,-1e-3)", mp.nstr(linear_ncp(1, mp.mpf("-1e-3")), 20))
    print("linear(-2,1e-4)", mp.nstr(linear_ncp(-2, mp.mpf("1e-4")), 20))
    print("abs_sup(1)", mp.nstr(2 * Phi(1) - phi(1) - 1, 17))
    print("BL(1,0,1)", mp.nstr(bachelier_levy(1, 0, 1), 17))
    print("BL(0.5,0.5,1)", mp.nstr(bachelier_levy(0.5, 0.5, 1), 17))
    print("BL(1,-0.5,1)", mp.nstr(bachelier_levy(1, -0.5, 1), 17))
    print("BL(2,1,1)", mp.nstr(bachelier_levy(2, 1, 1), 17))
    print("BL(0.7,-0.3,2.5)", mp.nstr(bachelier_levy(mp.mpf("0.7"), mp.mpf("-0.3"), mp.mpf("2.5")), 17))
    print("zero_hit", mp.nstr(1 - 2 * constant_ncp(0), 17), mp.nstr(mp.mpf(1) / 2 + 1 / mp.pi, 17))
    print("1-e^-2", mp.nstr(1 - mp.exp(-2), 17))
    print("Phi(-20)", mp.nstr(Phi(-20), 20))
    print("log Phi(-40)", mp.nstr(mp.log(Phi(-40)), 20))
