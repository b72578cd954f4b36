from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codegree.errors import SplitFailure
from codegree.modp import charpoly, eigenspaces, matmul_mod, nullspace, poly_eval_all, root_multiplicities, rref

P = 31


def matrices(n_max=5, p=P):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.integers(0, p - 1), min_size=n * n, max_size=n * n).map(
            lambda xs: np.array(xs, dtype=np.int64).reshape(n, n)))


def _det(M, p):
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i, j in itertools.combinations(range(n), 2):
            if perm[i] > perm[j]:
                sign = -sign
        term = sign
        for i in range(n):
            term = term * int(M[i][perm[i]]) % p
        total += term
    return total % p


def test_matmul_mod_exact_for_big_primes():
    p = 40009
    A = np.full((50, 50), p - 1, dtype=np.int64)
    assert (matmul_mod(A, A, p) == 50 % p).all()
    big = (1 << 25) + 35  # float path not exact here; integer path used
    B = np.full((4, 4), big - 1, dtype=np.int64)
    assert (matmul_mod(B, B, big) == 4 % big).all()


def test_rref_known():
    R, piv = rref(np.array([[2, 4, 6], [1, 2, 4]]), 7)
    assert piv == [0, 2]
    assert R.tolist() == [[1, 2, 0], [0, 0, 1]]


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_nullspace_is_annihilated(M):
    N = nullspace(M, P)
    assert not (M @ N % P).any()
    _, piv = rref(M, P)
    assert N.shape[1] == M.shape[1] - len(piv)


@settings(max_examples=40, deadline=None)
@given(matrices(4))
def test_charpoly_matches_determinant(M):
    f = charpoly(M, P)
    n = len(M)
    assert f[-1] == 1 and len(f) == n + 1
    for x in (0, 1, 5, 17):
        assert poly_eval_all(f, P)[x] == _det((x * np.eye(n, dtype=np.int64) - M) % P, P)


def test_root_multiplicities():
    # (x-1)^2 (x-3) mod 7 = x^3 - 5x^2 + 7x - 3
    f = np.array([-3 % 7, 0, -5 % 7, 1])
    assert root_multiplicities(f, 7) == [(1, 2), (3, 1)]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, P - 1), min_size=1, max_size=6), st.integers(0, 10**6))
def test_eigenspaces_of_conjugated_diagonal(diag, seed):
    n = len(diag)
    rng = np.random.default_rng(seed)
    while True:
        S = rng.integers(0, P, size=(n, n))
        if len(rref(S, P)[1]) == n:
            break
    # inverse through rref of [S | I]
    R, _ = rref(np.hstack([S, np.eye(n, dtype=np.int64)]), P)
    Sinv = R[:, n:]
    M = S @ np.diag(diag) % P @ Sinv % P
    spaces = eigenspaces(M, P)
    assert sorted(lam for lam, _, _ in spaces) == sorted(set(diag))
    for lam, W, piv in spaces:
        assert W.shape[1] == diag.count(lam)
        assert not ((M @ W - lam * W) % P).any()
        assert (W[piv] == np.eye(len(piv), dtype=np.int64)).all()


def test_non_split_and_non_diagonalizable_rejected():
    with pytest.raises(SplitFailure):
        eigenspaces(np.array([[0, 3], [1, 0]]), 7)  # x^2 - 3, 3 is not a square mod 7
    with pytest.raises(SplitFailure):
        eigenspaces(np.array([[2, 1], [0, 2]]), 7)
