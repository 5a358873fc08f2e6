# Copyright 2026 The y00sim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent derivations of the constants frozen into the C++ tests.

Run with: python3 derive_values.py
Needs numpy, scipy, mpmath. Nothing here imports or calls y00sim code.
"""

import math

import mpmath as mp
import numpy as np
from scipy.stats import norm, poisson

mp.mp.dps = 60


def section(title):
    print(f"\n== {title}")


# --- scalar closed forms -----------------------------------------------------

section("closed forms")
print("helstrom antipodal S=1:", repr(0.5 * (1 - math.sqrt(1 - math.exp(-4)))))
print("Q(2):", repr(float(mp.erfc(2 / mp.sqrt(2)) / 2)))
print("Q(0.5):", repr(float(mp.erfc(mp.mpf("0.5") / mp.sqrt(2)) / 2)))
print("ln Q(40):", repr(float(mp.log(mp.erfc(40 / mp.sqrt(2)) / 2))))
print("isf(0.3):", repr(norm.isf(0.3)), " isf(0.4):", repr(norm.isf(0.4)))


def h(p):
    p = mp.mpf(p)
    return float(-p * mp.log(p, 2) - (1 - p) * mp.log(1 - p, 2))


print("h(0.11):", repr(h("0.11")), " 2000 h(0.11):", repr(2000 * h("0.11")))
print("h(3.3e-4):", repr(h("3.3e-4")), " h(1.8e-2):", repr(h("1.8e-2")))
print("1-(1-1e-6)^1e6:", repr(float(1 - (1 - mp.mpf("1e-6")) ** 1000000)))
print("usd N=2 S=1:", repr(float(1 - mp.e ** -2)))
print("log2 F(K=8, M=16):", 256 / 4 * 5)

# --- Philox4x32-10 ------------------------------------------------------------

section("philox4x32-10")
M0, M1, W0, W1 = 0xD2511F53, 0xCD9E8D57, 0x9E3779B9, 0xBB67AE85
MASK = 0xFFFFFFFF


def philox(ctr, key):
    c, k = list(ctr), list(key)
    for r in range(10):
        p0, p1 = M0 * c[0], M1 * c[2]
        c = [((p1 >> 32) ^ c[1] ^ k[0]) & MASK, p1 & MASK, ((p0 >> 32) ^ c[3] ^ k[1]) & MASK, p0 & MASK]
        if r < 9:
            k = [(k[0] + W0) & MASK, (k[1] + W1) & MASK]
    return c


for ctr, key in [([0, 0, 0, 0], [0, 0]),
                 ([MASK] * 4, [MASK, MASK]),
                 ([0x243F6A88, 0x85A308D3, 0x13198A2E, 0x03707344], [0xA4093822, 0x299F31D0])]:
    print([hex(x) for x in ctr], [hex(x) for x in key], "->", [hex(x) for x in philox(ctr, key)])

# --- LFSR -----------------------------------------------------------------------

section("lfsr")


def lfsr(seed, exponents, k, n):
    mask = 0
    for e in exponents:
        if e < k:
            mask |= 1 << e
    s, out = seed, []
    for _ in range(n):
        out.append(s & 1)
        fb = bin(s & mask).count("1") & 1
        s = (s >> 1) | (fb << (k - 1))
    return out


print("x^4+x+1 seed 1:", "".join(map(str, lfsr(1, [4, 1, 0], 4, 15))))
period = 4095
bits = lfsr(1, [12, 11, 10, 4, 0], 12, period)
for m in (1, 2, 4, 6):
    blocks = period // m
    hist = [0] * (1 << m)
    for j in range(blocks):
        v = 0
        for i in range(m):
            v = (v << 1) | bits[j * m + i]
        hist[v] += 1
    print(f"K=12 m={m}: blocks={blocks} min={min(hist)} max={max(hist)}")
# Overlapping m-bit windows over the cyclic period: every nonzero pattern 2^(K-m) times.
m = 4
ext = bits + bits[:m]
hist = [0] * 16
for j in range(period):
    v = 0
    for i in range(m):
        v = (v << 1) | ext[j + i]
    hist[v] += 1
print("overlapping windows m=4:", hist)
print("M=16 K=8 seed bits 1,0,1,1,0,0,0,1 -> seed value", 1 + 4 + 8 + 128)

# --- symmetric-state bounds -----------------------------------------------------

section("square-root measurement")


def srm_success_fft(n, s):
    j = np.arange(n)
    ov = np.exp(-s * (1 - np.exp(2j * np.pi * j / n)))
    gamma = np.clip(np.fft.fft(ov).real, 0, None)
    return (np.sqrt(gamma).sum() / n) ** 2


def srm_success_exact(n, s):
    # gamma_k = N sum_{m = k mod N} Poisson(m; S): no cancellation.
    top = int(s + 60 * math.sqrt(s) + 4 * n + 100)
    pm = poisson.pmf(np.arange(top), s)
    g = np.zeros(n)
    np.add.at(g, np.arange(top) % n, pm)
    return (np.sqrt(g * n).sum() / n) ** 2


for n, s in [(2047, 100), (2047, 1e4), (2000, 1e4), (8, 1), (16, 4)]:
    print(f"N={n} S={s}: error(exact)={1 - srm_success_exact(n, s)!r} error(fft)={1 - srm_success_fft(n, s)!r}")

section("unambiguous discrimination")


def usd_direct(n, s, k):
    # (1/N) sum_j e^{2 pi i jk/N} e^{S(e^{2 pi i j/N} - 1)} at 60 digits.
    total = mp.mpc(0)
    for j in range(n):
        w = mp.expj(2 * mp.pi * j / n)
        total += mp.expj(2 * mp.pi * j * k / n) * mp.exp(s * (w - 1))
    return total / n


for n, s in [(8, 1), (4, 0.5), (2000, 1e4)]:
    # Locate the minimum with the aliased Poisson form, confirm with the direct sum.
    c = np.zeros(n)
    top = int(s + 60 * math.sqrt(s) + 4 * n + 100)
    pm = poisson.pmf(np.arange(top), s)
    for mm in range(top):
        c[(n - mm % n) % n] += pm[mm]
    kmin = int(np.argmin(c))
    direct = usd_direct(n, s, kmin)
    print(f"N={n} S={s}: argmin k={kmin} P_D(poisson)={n * c[kmin]!r} P_D(direct)={float(n * direct.real)!r}"
          f" imag={float(direct.imag):.3e}")

# --- mixed-state Helstrom -------------------------------------------------------------

section("even/odd index mixtures of 2M-PSK (number basis, block form)")


def even_odd_pe(m, s):
    nmax = int(s + 60 * math.sqrt(s) + 3 * m + 50)
    sp = np.sqrt(poisson.pmf(np.arange(nmax), s))
    total = 0.0
    for r in range(m):
        v = sp[r::m]
        size = len(v)
        a = np.zeros((size, size))
        for i in range(size):
            for j in range(size):
                if (i - j) % 2:
                    a[i, j] = v[i] * v[j]
        total += np.abs(np.linalg.eigvalsh(a)).sum()
    return 0.5 - 0.5 * total


for m in (8, 16):
    s = (norm.isf(0.3) / (2 * math.sin(math.pi / (2 * m)))) ** 2
    print(f"M={m} S={s!r}: Pe(even vs odd)={even_odd_pe(m, s)!r}")

for t in (0.35, 0.4, 0.42, 0.45):
    s = (norm.isf(t) / (2 * math.sin(math.pi / 32))) ** 2
    print(f"M=16 neighbor error {t}: S={s!r} Pe(even vs odd)={even_odd_pe(16, s)!r}")
