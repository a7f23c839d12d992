"""Self-contained dense symmetric/Hermitian eigensolver.

Householder reduction to tridiagonal form followed by the implicit-shift QL
algorithm, in the classic Numerical Recipes formulation (tred2/tqli) with the
inner updates vectorized over numpy slices. No LAPACK eigen-routines are
called: results are deterministic across platforms and BLAS builds, which
matters for reproducible sweep output.

Complex Hermitian input H = A + iB is handled through the standard real
embedding [[A, -B], [B, A]], whose spectrum is that of H doubled; one complex
eigenvector x + iy is recovered from each embedded pair (x; y).

Cost is O(n^3); fine for the dims <= ~1024 used here.
"""

from __future__ import annotations

import numpy as np

__all__ = ["EigensolverError", "symmetric_eigh", "hermitian_eigh"]

_EPS = float(np.finfo(float).eps)


class EigensolverError(RuntimeError):
    """Raised when the QL iteration fails to converge."""


def _tred2(a: np.ndarray, vectors: bool) -> tuple[np.ndarray, np.ndarray, np.ndarray | None]:
    """Householder-reduce symmetric ``a`` (overwritten) to tridiagonal (d, e).

    Returns the diagonal d, subdiagonal e (e[i] couples i-1 and i, e[0] = 0)
    and, if requested, the accumulated orthogonal transform Q, so that
    Q.T A Q = tridiag(d, e).
    """
    n = a.shape[0]
    d = np.zeros(n)
    e = np.zeros(n)
    for i in range(n - 1, 0, -1):
        l = i - 1
        h = 0.0
        if l > 0:
            scale = float(np.sum(np.abs(a[i, : l + 1])))
            if scale == 0.0:
                e[i] = a[i, l]
            else:
                a[i, : l + 1] /= scale
                h = float(np.dot(a[i, : l + 1], a[i, : l + 1]))
                f = a[i, l]
                g = -np.sqrt(h) if f >= 0.0 else np.sqrt(h)
                e[i] = scale * g
                h -= f * g
                a[i, l] = f - g
                u = a[i, : l + 1].copy()
                if vectors:
                    # stash u/h in column i for the Q accumulation below
                    a[: l + 1, i] = u / h
                p = (a[: l + 1, : l + 1] @ u) / h
                k = float(np.dot(u, p)) / (2.0 * h)
                p -= k * u
                a[: l + 1, : l + 1] -= np.outer(p, u) + np.outer(u, p)
        else:
            e[i] = a[i, l]
        d[i] = h
    e[0] = 0.0
    if not vectors:
        return np.diagonal(a).copy(), e, None
    for i in range(n):
        l = i
        if d[i] != 0.0 and l > 0:
            g = a[i, :l] @ a[:l, :l]
            a[:l, :l] -= np.outer(a[:l, i], g)
        d[i] = a[i, i]
        a[i, i] = 1.0
        if l > 0:
            a[i, :l] = 0.0
            a[:l, i] = 0.0
    return d, e, a


def _tqli(d: np.ndarray, e: np.ndarray, z: np.ndarray | None, max_iter: int = 50) -> np.ndarray:
    """Implicit-shift QL on tridiag(d, e); rotates the columns of z along."""
    n = d.shape[0]
    d = d.copy()
    e = np.concatenate([e[1:], [0.0]])  # e[i] now couples i and i+1
    for l in range(n):
        iteration = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            iteration += 1
            if iteration > max_iter:
                raise EigensolverError(
                    f"QL iteration did not converge for index {l} after {max_iter} iterations"
                )
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = float(np.hypot(g, 1.0))
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0.0 else -r))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = float(np.hypot(f, g))
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    col = z[:, i].copy()
                    z[:, i + 1], z[:, i] = s * col + c * z[:, i + 1], c * col - s * z[:, i + 1]
            if not underflow:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return d


def _reorthogonalize_clusters(w: np.ndarray, v: np.ndarray, gap: float = 1e-10) -> None:
    """Gram-Schmidt eigenvector columns within numerically degenerate clusters.

    QL already returns orthogonal vectors; this pass makes the basis within a
    degenerate cluster deterministic (index order) regardless of rounding.
    """
    scale = max(1.0, float(np.max(np.abs(w))))
    n = len(w)
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and abs(w[stop] - w[stop - 1]) < gap * scale:
            stop += 1
        if stop - start > 1:
            block = v[:, start:stop]
            for j in range(block.shape[1]):
                col = block[:, j]
                for k in range(j):
                    col -= np.vdot(block[:, k], col) * block[:, k]
                nrm = np.linalg.norm(col)
                if nrm > 0.0:
                    block[:, j] = col / nrm
        start = stop


def symmetric_eigh(
    matrix: np.ndarray, vectors: bool = True, max_iter: int = 50
) -> tuple[np.ndarray, np.ndarray | None]:
    """Eigenvalues (ascending) and optionally eigenvectors of a real symmetric matrix."""
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 1:
        return a[0, :1].copy(), (np.ones((1, 1)) if vectors else None)
    d, e, q = _tred2(a, vectors)
    w = _tqli(d, e, q, max_iter=max_iter)
    order = np.argsort(w, kind="stable")
    w = w[order]
    if not vectors:
        return w, None
    v = q[:, order]
    _reorthogonalize_clusters(w, v)
    return w, v


def hermitian_eigh(
    matrix: np.ndarray, vectors: bool = True, max_iter: int = 50
) -> tuple[np.ndarray, np.ndarray | None]:
    """Eigendecomposition of a complex Hermitian matrix via the real embedding.

    For H = A + iB builds M = [[A, -B], [B, A]]; every eigenvalue of H appears
    twice in M and each embedded eigenvector (x; y) maps to x + iy.
    """
    h = np.asarray(matrix, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    n = h.shape[0]
    a, b = h.real, h.imag
    if np.max(np.abs(b)) <= _EPS * max(1.0, float(np.max(np.abs(a)))):
        w, v = symmetric_eigh(a, vectors=vectors, max_iter=max_iter)
        return w, (v.astype(complex) if vectors else None)
    m = np.block([[a, -b], [b, a]])
    w2, v2 = symmetric_eigh(m, vectors=vectors, max_iter=max_iter)
    # consecutive embedded pairs share an eigenvalue; average them
    w = 0.5 * (w2[0::2] + w2[1::2])
    if not vectors:
        return w, None
    v = np.empty((n, n), dtype=complex)
    for k in range(n):
        col = v2[:, 2 * k]
        v[:, k] = col[:n] + 1j * col[n:]
    # the pair partner of (x; y) is (-y; x) ~ i(x+iy): same complex vector up
    # to phase, so taking the first of each pair covers simple eigenvalues;
    # genuine degeneracies of H are re-orthogonalized here.
    _reorthogonalize_clusters(w, v)
    return w, v
