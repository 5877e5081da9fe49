#!/usr/bin/env python3
"""Print high-precision reference values that are frozen into the C++ test
suites (special functions, Hardy Z, digamma, Beurling B spot values)."""

import mpmath as mp

mp.mp.dps = 30


def theta(t):
    return mp.im(mp.loggamma(mp.mpf("0.25") + 0.5j * t)) - t / 2 * mp.log(mp.pi)


print("== rs_theta ==")
for t in ("2", "5", "10", "14.1347251417346937904572519836", "50", "100",
          "1000", "10000", "100000", "1000000"):
    print(f"theta({t}) = {mp.nstr(theta(mp.mpf(t)), 22)}")
print(f"theta(2*pi) = {mp.nstr(theta(2*mp.pi), 22)}")

print("== hardy Z ==")
print(f"zeta(1/2) = {mp.nstr(mp.zeta(mp.mpf('0.5')), 22)}")
for t in ("0.5", "5", "10", "30", "49.9", "50.1", "100", "500.5", "1000.25",
          "5000", "100000.3", "999999.1"):
    print(f"Z({t}) = {mp.nstr(mp.siegelz(mp.mpf(t)), 22)}")

print("== digamma quarter line ==")
print(f"psi(1/4)      = {mp.nstr(mp.digamma(mp.mpf('0.25')), 22)}")
print(f"-euler-pi/2-3log2 = {mp.nstr(-mp.euler - mp.pi/2 - 3*mp.log(2), 22)}")
for u in ("0.5", "1", "7.3", "20", "200"):
    v = mp.re(mp.digamma(mp.mpf("0.25") + 0.5j * mp.mpf(u)))
    print(f"Re psi(1/4+i{u}/2) = {mp.nstr(v, 22)}")

print("== Beurling B ==")
print(f"12/pi^2 = {mp.nstr(12/mp.pi**2, 22)}")


def beurling(x):
    x = mp.mpf(x)
    return 1 - 2 * (mp.sinpi(x) / mp.pi) ** 2 * (mp.polygamma(1, x + 1) - 1 / x)


for x in ("0.5", "2.3", "-1.7", "0.001", "37.25"):
    print(f"B({x}) = {mp.nstr(beurling(x), 22)}")

print("== chebyshev psi(100) ==")
tot = mp.mpf(0)
for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
          61, 67, 71, 73, 79, 83, 89, 97):
    pk = p
    while pk <= 100:
        tot += mp.log(p)
        pk *= p
print(f"psi_cheb(100) = {mp.nstr(tot, 22)}")

print("== first zeros ==")
for n in (1, 2, 3, 4, 5):
    print(f"gamma_{n} = {mp.nstr(mp.zetazero(n).imag, 22)}")
