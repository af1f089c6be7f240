"""Batched exact solvers for the vertex-enumeration scan.

The hot loop solves every (d choose k) square integer system arising from the
constraint subsets of an H-polytope.  Two interchangeable implementations:

* a numba @njit kernel over int64, used when a conservative magnitude bound
  guarantees no overflow;
* a pure-Python big-integer twin, always exact, selected either automatically
  when the bound fails or explicitly via REMOVAHEDRA_PURE=1.

Both run fraction-free (Bareiss) elimination followed by integer
back-substitution, so no rounding can occur anywhere.
"""

from __future__ import annotations

import math
import os

import numpy as np

PURE_ENV = "REMOVAHEDRA_PURE"


def pure_mode_requested() -> bool:
    return os.environ.get(PURE_ENV, "").strip() not in ("", "0", "false")


def _solve_batch_py(A, rhs, eq_rhs, d):
    """Reference implementation over Python ints (arbitrary precision).

    Returns a deduplicated list of (coords_numerators, denominator) in lowest
    terms with denominator > 0, one per feasible intersection point of d
    constraints plus the equality.
    """
    m = len(A)
    n = len(A[0])
    seen: dict = {}
    idx = list(range(d))
    M = [[0] * (n + 1) for _ in range(n)]
    while True:
        for j in range(n):
            M[0][j] = 1
        M[0][n] = eq_rhs
        for r in range(d):
            row = A[idx[r]]
            for j in range(n):
                M[r + 1][j] = row[j]
            M[r + 1][n] = rhs[idx[r]]
        ok = True
        sign = 1
        prev = 1
        for k in range(n):
            piv = k
            while piv < n and M[piv][k] == 0:
                piv += 1
            if piv == n:
                ok = False
                break
            if piv != k:
                M[piv], M[k] = M[k], M[piv]
                sign = -sign
            p = M[k][k]
            for i in range(k + 1, n):
                mik = M[i][k]
                Mi = M[i]
                Mk = M[k]
                for j in range(k + 1, n + 1):
                    Mi[j] = (p * Mi[j] - mik * Mk[j]) // prev
                Mi[k] = 0
            prev = p
        if ok:
            det = sign * M[n - 1][n - 1]
            xh = [0] * n
            for i in range(n - 1, -1, -1):
                acc = det * M[i][n]
                Mi = M[i]
                for j in range(i + 1, n):
                    acc -= Mi[j] * xh[j]
                q, r_ = divmod(acc, Mi[i])
                assert r_ == 0
                xh[i] = q
            if det < 0:
                det = -det
                xh = [-x for x in xh]
            feasible = True
            for r in range(m):
                row = A[r]
                s = 0
                for j in range(n):
                    if row[j]:
                        s += xh[j]
                if s < det * rhs[r]:
                    feasible = False
                    break
            if feasible:
                g = det
                for x in xh:
                    g = math.gcd(g, x)
                seen[(tuple(x // g for x in xh), det // g)] = None
        # advance the combination odometer
        j = d - 1
        while j >= 0 and idx[j] == m - d + j:
            j -= 1
        if j < 0:
            break
        idx[j] += 1
        for k in range(j + 1, d):
            idx[k] = idx[k - 1] + 1
    return list(seen)


def _solve_batch_kernel(A, rhs, eq_rhs, d, out_num, out_den):  # pragma: no cover
    m, n = A.shape
    idx = np.empty(d, np.int64)
    for i in range(d):
        idx[i] = i
    M = np.empty((n, n + 1), np.int64)
    xh = np.empty(n, np.int64)
    count = 0
    cap = out_den.shape[0]
    while True:
        for j in range(n):
            M[0, j] = 1
        M[0, n] = eq_rhs
        for r in range(d):
            row = idx[r]
            for j in range(n):
                M[r + 1, j] = A[row, j]
            M[r + 1, n] = rhs[row]
        ok = True
        sign = 1
        prev = 1
        for k in range(n):
            piv = k
            while piv < n and M[piv, k] == 0:
                piv += 1
            if piv == n:
                ok = False
                break
            if piv != k:
                for j in range(n + 1):
                    tmp = M[piv, j]
                    M[piv, j] = M[k, j]
                    M[k, j] = tmp
                sign = -sign
            p = M[k, k]
            for i in range(k + 1, n):
                mik = M[i, k]
                for j in range(k + 1, n + 1):
                    M[i, j] = (p * M[i, j] - mik * M[k, j]) // prev
                M[i, k] = 0
            prev = p
        if ok:
            det = sign * M[n - 1, n - 1]
            for i in range(n - 1, -1, -1):
                acc = det * M[i, n]
                for j in range(i + 1, n):
                    acc -= M[i, j] * xh[j]
                xh[i] = acc // M[i, i]
            if det < 0:
                det = -det
                for i in range(n):
                    xh[i] = -xh[i]
            feasible = True
            for r in range(m):
                s = 0
                for j in range(n):
                    if A[r, j]:
                        s += xh[j]
                if s < det * rhs[r]:
                    feasible = False
                    break
            if feasible:
                # normalize to lowest terms, then store only if unseen
                g = det
                for j in range(n):
                    a = xh[j] if xh[j] >= 0 else -xh[j]
                    while a:
                        g, a = a, g % a
                for j in range(n):
                    xh[j] //= g
                det //= g
                fresh = True
                for r in range(count):
                    if out_den[r] == det:
                        same = True
                        for j in range(n):
                            if out_num[r, j] != xh[j]:
                                same = False
                                break
                        if same:
                            fresh = False
                            break
                if fresh:
                    if count >= cap:
                        return -1
                    for j in range(n):
                        out_num[count, j] = xh[j]
                    out_den[count] = det
                    count += 1
        j = d - 1
        while j >= 0 and idx[j] == m - d + j:
            j -= 1
        if j < 0:
            break
        idx[j] += 1
        for k in range(j + 1, d):
            idx[k] = idx[k - 1] + 1
    return count


_jit_kernel = None


def _get_jit_kernel():
    global _jit_kernel
    if _jit_kernel is None:
        from numba import njit

        _jit_kernel = njit(cache=True)(_solve_batch_kernel)
    return _jit_kernel


def int64_safe(n: int, rhs_max: int) -> bool:
    """Conservative overflow bound for the int64 kernel.

    Bareiss intermediates are minors of the augmented matrix (0/1 coefficient
    columns, one right-hand-side column), bounded by Hadamard's inequality.
    """
    h_coef = int(n ** (n / 2)) + 1
    h_full = h_coef * max(1, rhs_max)
    return (n + 1) * h_coef * h_full < 2**62


def solve_batch(A_rows, rhs, eq_rhs, d, force_pure=False):
    """Dispatch to the numba kernel or the pure big-int path.

    A_rows: list of 0/1 coefficient rows; rhs: scaled integer right-hand
    sides; eq_rhs: scaled integer hyperplane value.
    """
    n = len(A_rows[0]) if A_rows else 0
    rhs_max = max([abs(eq_rhs)] + [abs(r) for r in rhs], default=1)
    if force_pure or pure_mode_requested() or not int64_safe(n, rhs_max):
        return _solve_batch_py(A_rows, rhs, eq_rhs, d)
    A = np.array(A_rows, dtype=np.int64).reshape(len(A_rows), n)
    r = np.array(rhs, dtype=np.int64)
    cap = 4096
    kernel = _get_jit_kernel()
    while True:
        out_num = np.empty((cap, n), np.int64)
        out_den = np.empty(cap, np.int64)
        count = kernel(A, r, eq_rhs, d, out_num, out_den)
        if count >= 0:
            if count == 0:
                return []
            num = out_num[:count]
            den = out_den[:count]
            g = np.gcd(np.gcd.reduce(np.abs(num), axis=1), den)
            rows = np.unique(
                np.concatenate([num // g[:, None], (den // g)[:, None]], axis=1),
                axis=0,
            )
            return [
                (tuple(int(v) for v in row[:-1]), int(row[-1])) for row in rows
            ]
        cap *= 4
