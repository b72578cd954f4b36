"""Dense linear algebra over a prime field Z/p with numpy int64 arrays.

Products are reduced after every matrix multiply; callers keep
``n * p**2`` below 2**63, which holds for every prime used here.
"""
from __future__ import annotations

import numpy as np

from .errors import SplitFailure

MAX_PRIME = 1 << 26
_FLOAT_EXACT = 1 << 53


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """A @ B mod p; goes through float64 BLAS whenever every dot product is exact."""
    inner = A.shape[-1]
    if inner * (p - 1) ** 2 < _FLOAT_EXACT:
        out = np.asarray(A, dtype=np.float64) @ np.asarray(B, dtype=np.float64)
        return np.fmod(out, p).astype(np.int64)
    return np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64) % p


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    c = 0
    while r < rows and c < cols:
        live = np.flatnonzero(A[r:, c:].any(axis=0))
        if not len(live):
            break
        c += int(live[0])
        piv = r + int(np.flatnonzero(A[r:, c])[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if len(hit):
            A[hit] = (A[hit] - np.outer(col[hit], A[r])) % p
        pivots.append(c)
        r += 1
        c += 1
    return A[:r], pivots


def nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Basis of {x : M x = 0} as the columns of the returned matrix."""
    return _nullspace_with_pivots(M, p)[0]


def _nullspace_with_pivots(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    R, pivots = rref(M, p)
    n = M.shape[1]
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    out = np.zeros((n, len(free)), dtype=np.int64)
    out[free, np.arange(len(free))] = 1
    if pivots:
        out[pivots, :] = (-R[:, free]) % p
    return out, free


def column_echelon(U: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Basis of the column span of U whose pivot rows form an identity block."""
    if U.shape[1] == 1:
        col = U[:, 0] % p
        lead = int(np.flatnonzero(col)[0])
        return (col * pow(int(col[lead]), -1, p) % p)[:, None], [lead]
    R, pivots = rref(U.T, p)
    return R.T.copy(), pivots


def hessenberg(M: np.ndarray, p: int) -> np.ndarray:
    """Upper Hessenberg matrix similar to M (Gaussian similarity transforms)."""
    H = np.array(M, dtype=np.int64) % p
    d = H.shape[0]
    for k in range(d - 2):
        nz = np.flatnonzero(H[k + 1:, k])
        if not len(nz):
            continue
        piv = k + 1 + nz[0]
        if piv != k + 1:
            H[[k + 1, piv]] = H[[piv, k + 1]]
            H[:, [k + 1, piv]] = H[:, [piv, k + 1]]
        t = H[k + 2:, k] * pow(int(H[k + 1, k]), -1, p) % p
        if not t.any():
            continue
        H[k + 2:] = (H[k + 2:] - np.outer(t, H[k + 1])) % p
        H[:, k + 1] = (H[:, k + 1] + H[:, k + 2:] @ t) % p
    return H


def charpoly(M: np.ndarray, p: int) -> np.ndarray:
    """Monic characteristic polynomial, coefficients from x^0 upwards."""
    if p >= MAX_PRIME:
        raise ValueError(f"prime {p} too large for int64 arithmetic")
    H = hessenberg(M, p)
    d = H.shape[0]
    P = np.zeros((d + 1, d + 1), dtype=np.int64)
    P[0, 0] = 1
    for k in range(1, d + 1):
        prev = P[k - 1]
        new = np.zeros(d + 1, dtype=np.int64)
        new[1:] = prev[:-1]
        new = (new - H[k - 1, k - 1] * prev) % p
        if k > 1:
            coef = np.zeros(k - 1, dtype=np.int64)
            prod = 1
            for i in range(k - 1, 0, -1):
                prod = prod * int(H[i, i - 1]) % p
                if not prod:
                    break
                coef[i - 1] = int(H[i - 1, k - 1]) * prod % p
            new = (new - coef @ P[:k - 1]) % p
        P[k] = new
    return P[d]


def poly_eval_all(f: np.ndarray, p: int) -> np.ndarray:
    """f(x) for every x in Z/p."""
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in f[::-1]:
        acc = (acc * xs + int(c)) % p
    return acc


def root_multiplicities(f: np.ndarray, p: int) -> list[tuple[int, int]]:
    """Roots of f in Z/p with multiplicities, roots ascending."""
    roots = np.flatnonzero(poly_eval_all(f, p) == 0)
    deg = len(f) - 1
    if len(roots) == deg:
        return [(int(r), 1) for r in roots]
    out = []
    for r in roots:
        r = int(r)
        g = [int(c) for c in f]
        m = 0
        while len(g) > 1:
            # synthetic division by (x - r)
            q = [0] * (len(g) - 1)
            acc = 0
            for j in range(len(g) - 1, 0, -1):
                acc = (acc * r + g[j]) % p
                q[j - 1] = acc
            rem = (acc * r + g[0]) % p
            if rem:
                break
            m += 1
            g = q
        out.append((r, m))
    return out


def _krylov(R: np.ndarray, u: np.ndarray, s: int, p: int) -> np.ndarray:
    K = np.empty((R.shape[0], s), dtype=np.int64)
    K[:, 0] = u % p
    for j in range(1, s):
        K[:, j] = matmul_mod(R, K[:, j - 1], p)
    return K


def _quotients(roots: list[int], simple: list[int], p: int) -> np.ndarray:
    """Columns: coefficients of prod(x - r over roots) / (x - s) for s in simple."""
    mu = [1]
    for r in roots:
        nxt = [0] * (len(mu) + 1)
        for i, c in enumerate(mu):
            nxt[i + 1] = (nxt[i + 1] + c) % p
            nxt[i] = (nxt[i] - r * c) % p
        mu = nxt
    s = len(roots)
    lam = np.array(simple, dtype=np.int64)
    Q = np.zeros((s, len(simple)), dtype=np.int64)
    acc = np.zeros(len(simple), dtype=np.int64)
    for j in range(s, 0, -1):
        acc = (acc * lam + mu[j]) % p
        Q[j - 1] = acc
    return Q


def eigenspaces(R: np.ndarray, p: int) -> list[tuple[int, np.ndarray, list[int]]]:
    """Eigenvalues and eigenspace bases of a matrix diagonalizable over Z/p.

    Each basis W comes with rows ``piv`` such that ``W[piv]`` is the
    identity.  Eigenvalues are located by evaluating the characteristic
    polynomial at every field element.  Eigenvectors of simple eigenvalues
    come from projecting a fixed vector through the minimal polynomial with
    one root removed; repeated eigenvalues use a nullspace computation.
    """
    R = np.asarray(R, dtype=np.int64) % p
    d = R.shape[0]
    if d == 1:
        return [(int(R[0, 0]), np.ones((1, 1), dtype=np.int64), [0])]
    found = root_multiplicities(charpoly(R, p), p)
    if sum(m for _, m in found) != d:
        raise SplitFailure("characteristic polynomial does not split over the prime field")
    if len(found) == 1:
        lam = found[0][0]
        if np.any((R - lam * np.eye(d, dtype=np.int64)) % p):
            raise SplitFailure("matrix is not diagonalizable")
        return [(lam, np.eye(d, dtype=np.int64), list(range(d)))]
    roots = [r for r, _ in found]
    simple = [r for r, m in found if m == 1]
    spaces: dict[int, np.ndarray] = {}
    if simple:
        Q = _quotients(roots, simple, p)
        missing = set(simple)
        for t in range(24):
            u = np.array([pow(t + 2, i, p) for i in range(d)], dtype=np.int64)
            V = matmul_mod(_krylov(R, u, len(roots), p), Q, p)
            ok = V.any(axis=0) & ~((matmul_mod(R, V, p) - V * np.array(simple)) % p).any(axis=0)
            for col, lam in enumerate(simple):
                if lam in missing and ok[col]:
                    spaces[lam] = column_echelon(V[:, col:col + 1], p)
                    missing.discard(lam)
            if not missing:
                break
        for lam in missing:
            spaces[lam] = _nullspace_with_pivots(R - lam * np.eye(d, dtype=np.int64), p)
    for lam, m in found:
        if m > 1:
            spaces[lam] = _nullspace_with_pivots(R - lam * np.eye(d, dtype=np.int64), p)
    out = []
    for lam, m in found:
        W, piv = spaces[lam]
        if W.shape[1] != m:
            raise SplitFailure(f"eigenvalue {lam}: geometric multiplicity {W.shape[1]} != {m}")
        out.append((lam, W, piv))
    return out
