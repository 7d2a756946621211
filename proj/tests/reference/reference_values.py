"""Brute-force reference values frozen into the C++ tests.

Builds every Hamiltonian from its matrix elements, propagates with
scipy.linalg.expm and prints overlaps with 16 significant digits. Run with
python3 tests/reference/reference_values.py.
"""

import numpy as np
from scipy.linalg import expm


def overlap(h1, h2, psi, tau1, tau2):
    a = expm(-1j * h1 * tau1) @ psi
    b = expm(-1j * h2 * tau2) @ psi
    return np.vdot(a, b)


def jc_h(de, w, lam, ncut):
    d = ncut + 1
    h = np.zeros((2 * d, 2 * d), complex)
    for c in range(2):
        for n in range(d):
            h[c * d + n, c * d + n] = (-0.5 if c == 0 else 0.5) * de + n * w
    for n in range(1, d):
        # <1, n-1| H |0, n> = lam/2 sqrt(n)
        h[1 * d + n - 1, 0 * d + n] = 0.5 * lam * np.sqrt(n)
        h[0 * d + n, 1 * d + n - 1] = 0.5 * lam * np.sqrt(n)
    return h


def jc_sector(de, w, lam, n, dt):
    ncut = n + 3
    d = ncut + 1
    h = jc_h(de, w, lam, ncut)
    psi = np.zeros(2 * d, complex)
    psi[0 * d + n] = psi[1 * d + n] = 1 / np.sqrt(2)
    return overlap(h, h, psi, 0.0, dt)


def jc_thermal(de, w, lam, t, dt, nmax):
    x = np.exp(-w / t)
    return sum((x ** n) * (1 - x) * jc_sector(de, w, lam, n, dt) for n in range(nmax + 1))


def noise(kind, lam):
    s3 = np.sqrt(3.0)
    if kind == "ad":
        h = np.zeros((4, 4), complex)
        h[1, 2] = -2j * lam
        h[2, 1] = 2j * lam
    elif kind == "pd":
        h = np.zeros((6, 6), complex)
        h[0, 1] = 2j * lam
        h[1, 0] = -2j * lam
        h[3, 5] = 2j * lam
        h[5, 3] = -2j * lam
    else:
        h = np.zeros((8, 8), complex)
        for r, c in [(0, 3), (0, 5), (1, 2), (1, 4)]:
            h[r, c] = 4 * s3 * lam
        for r, c in [(0, 6), (1, 7)]:
            h[r, c] = -4j * s3 * lam
        h = h + h.conj().T
    return h


DIM = {"ad": 2, "pd": 3, "dp": 4}


def channel_h(kind, lam, de):
    d = DIM[kind]
    return np.kron(np.diag([0.0, de]), np.eye(d)) + noise(kind, lam)


def channel_state(kind):
    d = DIM[kind]
    psi = np.zeros(2 * d, complex)
    psi[0] = psi[d] = 1 / np.sqrt(2)
    return psi


def channel(kind, de, lam1, lam2, tau1, tau2):
    return overlap(channel_h(kind, lam1, de), channel_h(kind, lam2, de), channel_state(kind), tau1, tau2)


def lam_p(p, tau):
    return np.arcsin(np.sqrt(p)) / tau


def show(name, k):
    print(f"{name:40s} re={k.real:.16g} im={k.imag:.16g} |k|={abs(k):.16g}")


if __name__ == "__main__":
    show("jc T=0 (1,1.1,1) dt=1", jc_sector(1, 1.1, 1, 0, 1))
    show("jc T=0 (1,0.8,0.7) dt=1.3", jc_sector(1, 0.8, 0.7, 0, 1.3))
    show("jc T=0 (2,1,0.5) dt=0.7", jc_sector(2, 1, 0.5, 0, 0.7))
    show("jc n=2 (1,0.8,0.7) dt=1.3", jc_sector(1, 0.8, 0.7, 2, 1.3))
    show("jc n=3 (1,1.1,1) dt=1", jc_sector(1, 1.1, 1, 3, 1))
    show("jc thermal T=1 (1,1.1,0.2) dt=1", jc_thermal(1, 1.1, 0.2, 1.0, 1, 40))
    show("jc thermal T=10 (1,1.1,0.2) dt=1", jc_thermal(1, 1.1, 0.2, 10.0, 1, 320))
    show("ad (1,0.3) 0->1", channel("ad", 1, 0.3, 0.3, 0, 1))
    show("pd (1,pi/4) 0->2", channel("pd", 1, np.pi / 4, np.pi / 4, 0, 2))
    show("pd (1,0.3) 0->1", channel("pd", 1, 0.3, 0.3, 0, 1))
    show("dp (1,0.05) 0->1", channel("dp", 1, 0.05, 0.05, 0, 1))
    show("dp (1,0.2) 0->1.5", channel("dp", 1, 0.2, 0.2, 0, 1.5))
    show("ad p(0.3,0.7) tau(1,1)", channel("ad", 1, lam_p(0.3, 1), lam_p(0.7, 1), 1, 1))
    show("ad p(0.7,0.3) tau(1,1)", channel("ad", 1, lam_p(0.7, 1), lam_p(0.3, 1), 1, 1))
    show("ad p(0.8,0.2) tau(1,2)", channel("ad", 1, lam_p(0.8, 1), lam_p(0.2, 2), 1, 2))
    show("ad p(0.2,0.8) tau(1,2)", channel("ad", 1, lam_p(0.2, 1), lam_p(0.8, 2), 1, 2))
    show("dp p(0.4,0.1) tau(1,2)", channel("dp", 1, lam_p(0.4, 1), lam_p(0.1, 2), 1, 2))
    show("pd p(0.4,0.1) tau(1,2)", channel("pd", 1, lam_p(0.4, 1), lam_p(0.1, 2), 1, 2))
    u = expm(-1j * noise("dp", 0.1) * 1.0)
    print(f"{'dp 1-|<00|U|00>|^2 lam=0.1':40s} {1 - abs(u[0, 0]) ** 2:.16g}")
    u = expm(-1j * noise("ad", 0.1) * 1.0)
    print(f"{'ad |<01|U|10>|^2 lam=0.1':40s} {abs(u[1, 2]) ** 2:.16g}")
