"""Prototype oracle: verify all convention-sensitive values before freezing them
into C++ tests. Spin 1 = leftmost tensor factor = MSB; |0> = spin up.
rf pulse [theta]_a^S = exp(+i theta/2 sum sigma_a^j); delay [tau_jl] =
exp(-i pi J tau/2 Zj Zl); exp_pauli_string(theta,P) = exp(-i theta P).
"""
import numpy as np

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
LET = {"I": I2, "X": X, "Y": Y, "Z": Z}


def emb(s):
    m = np.array([[1]], dtype=complex)
    for c in s:
        m = np.kron(m, LET[c])
    return m


def exps(theta, s):
    """exp(-i theta P) for P a +/-1-squared Pauli string."""
    P = emb(s)
    n = P.shape[0]
    return np.cos(theta) * np.eye(n) - 1j * np.sin(theta) * P


def rf(theta, axis, spins, n=3):
    """[theta]_axis^spins = exp(+i theta/2 sum_j sigma_axis^j)."""
    U = np.eye(2**n, dtype=complex)
    for j in spins:
        s = "".join(axis.upper() if k == j else "I" for k in range(1, n + 1))
        U = exps(-theta / 2.0, s) @ U  # exp(+i(theta/2)P) = exps(-theta/2)
    return U


def delay(pair, tau, J):
    j, l = pair
    s = "".join("Z" if k in (j, l) else "I" for k in range(1, 4))
    return exps(np.pi * J[pair] * tau / 2.0, s)


def zrot(theta, spin, n=3):
    s = "".join("Z" if k == spin else "I" for k in range(1, n + 1))
    return exps(-theta / 2.0, s)


def fid(u, v):
    return abs(np.trace(u.conj().T @ v)) / u.shape[0]


def expH(h, t):
    w, v = np.linalg.eigh(h)
    return v @ np.diag(np.exp(-1j * w * t)) @ v.conj().T


# --- XY model ---
def hxy(J=1.0, n=3):
    H = np.zeros((2**n, 2**n), dtype=complex)
    for b in range(n - 1):
        for ax in "XY":
            s = "".join(ax if k in (b + 1, b + 2) else "I" for k in range(1, n + 1))
            H += 0.5 * J * emb(s)
    return H


def analytic(phi):
    c2, s2 = np.cos(phi) ** 2, np.sin(phi) ** 2
    c2f, sf = np.cos(2 * phi), -1j / np.sqrt(2) * np.sin(2 * phi)
    U = np.zeros((8, 8), dtype=complex)
    U[0, 0] = U[7, 7] = 1
    for a, b, c in [(1, 2, 4), (3, 5, 6)]:
        U[a, a] = c2; U[a, b] = sf; U[a, c] = -s2
        U[b, a] = sf; U[b, b] = c2f; U[b, c] = sf
        U[c, a] = -s2; U[c, b] = sf; U[c, c] = c2
    return U


def six_factors(phi):
    F = [(np.pi / 8, "XZY"), (phi, "XXI"), (-np.pi / 8, "XZY"),
         (np.pi / 8, "YZX"), (phi, "IXX"), (-np.pi / 8, "YZX")]
    U = np.eye(8, dtype=complex)
    for th, s in F:
        U = U @ exps(th, s)
    return U


rng = np.random.default_rng(0)
print("== factored / analytic / oracle agreement ==")
worst = 0.0
for phi in rng.uniform(0, 2 * np.pi, 200):
    o = expH(hxy(), phi * np.sqrt(2))
    worst = max(worst, np.abs(six_factors(phi) - o).max(), np.abs(analytic(phi) - o).max())
print("max entry dev over 200 phi:", worst)

print("\n== PST matrix at phi=pi/2 ==")
U = analytic(np.pi / 2)
print(np.round(U.real).astype(int))
print("U^2 = I dev:", np.abs(U @ U - np.eye(8)).max())

# --- zzz blocks (Tseng) ---
J = {(1, 2): 200.9, (2, 3): 9.16, (1, 3): 103.1}

def zzz_seq(sign):
    d12 = (9 if sign > 0 else 7) / (2 * J[(1, 2)])
    return [("rf", -np.pi / 2, "x", [2]), ("rf", -np.pi, "y", [2]),
            ("delay", (1, 2), d12), ("rf", np.pi / 2, "y", [2]),
            ("delay", (2, 3), 1 / (4 * J[(2, 3)])), ("rf", np.pi / 2, "y", [2]),
            ("delay", (1, 2), d12), ("rf", np.pi / 2, "x", [2])]


def sim(seq):
    U = np.eye(8, dtype=complex)
    for ev in seq:
        if ev[0] == "rf":
            u = rf(ev[1], ev[2], ev[3])
        elif ev[0] == "delay":
            u = delay(ev[1], ev[2], J)
        elif ev[0] == "zrot":
            u = zrot(ev[1], ev[2])
        elif ev[0] == "pauli":
            u = exps(ev[1], ev[2])
        U = u @ U
    return U


print("\n== zzz blocks ==")
for sign in (+1, -1):
    tgt = exps(sign * np.pi / 8, "ZZZ")
    f = fid(sim(zzz_seq(sign)), tgt)
    ph = np.trace(tgt.conj().T @ sim(zzz_seq(sign))) / 8
    print(f"sign={sign:+d} fidelity={1-f:.3e} (1-f), relative phase={ph:.6f}")

print("\n== z_double block ==")
zd = [("rf", np.pi, "x", [1, 3]), ("rf", np.pi, "y", [1, 3])]
tgt = exps(-np.pi / 2, "ZII") @ exps(-np.pi / 2, "IIZ")  # exp(+i pi/2 (Z1+Z3))
print("fidelity 1-f:", 1 - fid(sim(zd), tgt), "phase:", np.trace(tgt.conj().T @ sim(zd)) / 8)
u1 = rf(np.pi, "y", [1], 1) @ rf(np.pi, "x", [1], 1)
t1 = exps(-np.pi / 2, "Z")
print("single-spin [pi]x-[pi]y vs exp(i pi/2 Z): ratio =", (u1 @ np.linalg.inv(t1))[0, 0])

print("\n== selective x block (outer fixed +/- pi/2) ==")
for spin, ang in [(1, np.pi / 2), (3, np.pi / 2), (1, -np.pi / 2), (3, 0.7)]:
    seq = [("rf", np.pi / 2, "y", [1, 3]), ("zrot", ang, spin), ("rf", -np.pi / 2, "y", [1, 3])]
    s = "".join("X" if k == spin else "I" for k in range(1, 4))
    tgt = exps(-ang / 2, s)
    print(f"spin={spin} angle={ang:+.3f}: 1-f = {1-fid(sim(seq), tgt):.3e}")

print("\n== literal spec form [ang]y - zrot(ang) - [-ang]y at ang=-pi/2 (expected to fail) ==")
for ang in (np.pi / 2, -np.pi / 2, 0.7):
    seq = [("rf", ang, "y", [1, 3]), ("zrot", ang, 1), ("rf", -ang, "y", [1, 3])]
    tgt = exps(-ang / 2, "XII")
    print(f"ang={ang:+.3f}: 1-f = {1-fid(sim(seq), tgt):.3e}")

# --- compile_u: Eq.18 factors, written order; emit reversed (time order) ---
def compile_u(phi, expand=True):
    ZZZ = lambda sgn: [("pauli", sgn * np.pi / 8, "ZZZ")] if not expand else zzz_seq(sgn)
    SELX = lambda spin, ang: ([("rf", ang, "x", [spin])] if not expand else
                              [("rf", np.pi / 2, "y", [1, 3]), ("zrot", ang, spin),
                               ("rf", -np.pi / 2, "y", [1, 3])])
    ZDBL = ([("zrot", np.pi, 1), ("zrot", np.pi, 3)] if not expand else
            [("rf", np.pi, "x", [1, 3]), ("rf", np.pi, "y", [1, 3])])
    factors = [
        [("rf", -np.pi / 2, "y", [1])],            # exp(-i pi/4 y1)
        SELX(3, np.pi / 2),                        # exp(+i pi/4 x3)
        ZZZ(+1),                                   # exp(-i pi/8 ZZZ)
        [("rf", -np.pi / 2, "y", [2])],
        [("delay", (1, 2), 2 * phi / (np.pi * J[(1, 2)]))],
        [("rf", np.pi / 2, "y", [2])],
        ZZZ(-1),                                   # exp(+i pi/8 ZZZ)
        [("rf", np.pi / 2, "x", [1, 3])],
        [("rf", -np.pi / 2, "y", [3])],
        ZDBL,                                      # exp(+i pi/2 (Z1+Z3))
        [("zrot", -np.pi / 2, 1)],                 # exp(-i pi/4 Z1)
        ZZZ(+1),
        [("rf", -np.pi / 2, "y", [2])],
        [("delay", (2, 3), 2 * phi / (np.pi * J[(2, 3)]))],
        [("rf", np.pi / 2, "y", [2])],
        ZZZ(-1),
        SELX(1, -np.pi / 2),                       # exp(-i pi/4 x1)
        [("rf", np.pi / 2, "y", [3])],
    ]
    seq = []
    for f in reversed(factors):
        seq.extend(f)
    return seq


print("\n== compile_u vs analytic ==")
for phi in [0.0, np.pi / 2, 0.8, 1.1, 2.7]:
    for expand in (False, True):
        seq = compile_u(phi, expand)
        U = sim(seq)
        A = analytic(phi)
        ph = np.trace(A.conj().T @ U) / 8
        print(f"phi={phi:.3f} expand={expand}: 1-f = {1-fid(U, A):.3e}  phase = {ph:.4f}")

print("\n== durations (s) ==")
def dur(seq):
    return sum(ev[2] for ev in seq if ev[0] == "delay")
print("zzz+ :", dur(zzz_seq(1)), " zzz- :", dur(zzz_seq(-1)))
full = compile_u(np.pi / 2, True)
print("full compile_u(pi/2):", dur(full))
# U_A bracket = factors F1..F9 -> last-emitted chunk; recompute directly:
ua = dur(zzz_seq(1)) + dur(zzz_seq(-1)) + 2 * (np.pi / 2) / (np.pi * J[(1, 2)])
ub = dur(zzz_seq(1)) + dur(zzz_seq(-1)) + 2 * (np.pi / 2) / (np.pi * J[(2, 3)])
print("U_A segment:", ua, " U_B segment:", ub)

# --- preparation pipeline ---
print("\n== preparation from equilibrium ==")
gC, gH = 1.0, 3.977
rho = gC * (emb("ZII") + emb("IIZ")) / 2 + gH * emb("IZI") / 2

def grad(r):
    return np.diag(np.diag(r))

r = rf(np.pi / 2, "y", [2]) @ rho @ rf(np.pi / 2, "y", [2]).conj().T
r = rf(np.pi / 2, "y", [3]) @ r @ rf(np.pi / 2, "y", [3]).conj().T
r_no_grad = rf(np.pi / 2, "x", [1]) @ r @ rf(np.pi / 2, "x", [1]).conj().T
r = grad(r)
r = rf(np.pi / 2, "x", [1]) @ r @ rf(np.pi / 2, "x", [1]).conj().T
coef = lambda m, s: np.trace(m @ emb(s)).real / 8
print("coef YII:", coef(r, "YII"), " (expect gC/2 = 0.5)")
others = [abs(coef(r, a + b + c)) for a in "IXYZ" for b in "IXYZ" for c in "IXYZ"
          if a + b + c != "YII" and a + b + c != "III"]
print("max other coef:", max(others))
nz = [(a + b + c, coef(r_no_grad, a + b + c)) for a in "IXYZ" for b in "IXYZ" for c in "IXYZ"
      if abs(coef(r_no_grad, a + b + c)) > 1e-12 and a + b + c != "YII"]
print("no-grad extra terms:", nz)

# --- branch coefficients ---
print("\n== branch evolution coefficients ==")
def UA(phi):
    return np.cos(phi) * np.eye(8) - 1j / np.sqrt(2) * np.sin(phi) * (emb("XXI") + emb("IYY"))
def UB(phi):
    return np.cos(phi) * np.eye(8) - 1j / np.sqrt(2) * np.sin(phi) * (emb("YYI") + emb("IXX"))

for phi in [0.4, 1.1, np.pi / 4]:
    rA = UA(phi) @ emb("YII") @ UA(phi).conj().T
    rB = UB(phi) @ emb("XII") @ UB(phi).conj().T
    print(f"phi={phi:.4f}  A: Y1={coef(rA,'YII'):+.6f} (cos2={np.cos(phi)**2:.6f}) "
          f"Z1X2={coef(rA,'ZXI'):+.6f} (s2/r2={np.sin(2*phi)/np.sqrt(2):+.6f}) "
          f"ZZY={coef(rA,'ZZY'):+.6f} (-sin2={-np.sin(phi)**2:.6f})")
    print(f"           B: X1={coef(rB,'XII'):+.6f} Z1Y2={coef(rB,'ZYI'):+.6f} "
          f"ZZX={coef(rB,'ZZX'):+.6f}")
    ufull = analytic(phi)
    rAf = ufull @ emb("YII") @ ufull.conj().T
    rBf = ufull @ emb("XII") @ ufull.conj().T
    print(f"           via Eq10 U: A-Z1X2={coef(rAf,'ZXI'):+.6f} B-Z1Y2={coef(rBf,'ZYI'):+.6f}",
          " A==UA dev:", np.abs(rAf - rA).max(), " B==UB dev:", np.abs(rBf - rB).max())

print("\n== UA*UB vs analytic; order independence ==")
for phi in [0.3, 1.7]:
    print(np.abs(UA(phi) @ UB(phi) - analytic(phi)).max(),
          np.abs(UB(phi) @ UA(phi) - analytic(phi)).max())

print("\n== eigenvalues of Hxy (J=1) ==")
print(np.round(np.linalg.eigvalsh(hxy()), 10))
print("sqrt2 =", np.sqrt(2))

print("\n== exp_hermitian(Hxy, 0.3) vs analytic(0.3/sqrt2) ==")
print(np.abs(expH(hxy(), 0.3) - analytic(0.3 / np.sqrt(2))).max())

print("\n== commutators ==")
A = (emb("XXI") + emb("IYY")) / 2
B = (emb("YYI") + emb("IXX")) / 2
print("[A,B] max:", np.abs(A @ B - B @ A).max())
LxA, LyA, LzA = emb("XXI") / 2, emb("IYY") / 2, emb("XZY") / 2
print("[LxA,LyA]-iLzA:", np.abs(LxA @ LyA - LyA @ LxA - 1j * LzA).max())
print("sqrt2*A eigs:", np.round(np.linalg.eigvalsh(np.sqrt(2) * A), 10))

print("\n== hs coefficient example ==")
r04 = UA(0.4) @ emb("YII") @ UA(0.4).conj().T
print("cos^2(0.4) =", np.cos(0.4) ** 2, " coef YII:", coef(r04, "YII"))
