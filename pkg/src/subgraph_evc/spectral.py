"""Spectral radius and Perron vector of nonnegative subgraph tensors.

The solver is the shifted higher-order power method: iterate with
``B = A + shift * I`` (``I`` the diagonal identity tensor), take the
``(k-1)``-th root of ``B x^{k-1}`` and renormalize, and bracket
``rho(B)`` between the smallest and largest ratio ``(B x^{k-1})_i / x_i^{k-1}``.
On weakly irreducible tensors the shift makes the iteration converge and the
bracket closes monotonically on ``rho(A) + shift``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (DisconnectedGraphError, NonIrreducibleWarning, NotConvergedError,
                     ZeroTensorError)
from .graph import Graph, is_connected
from .pattern import builtin_pattern
from .tensor import apply, build_subgraph_tensor

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100_000
_UNDERFLOW = 1e-150


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    x: np.ndarray
    iterations: int
    lower: float
    upper: float
    converged: bool
    residual_inf: float
    shift: float = 1.0


def residual(t, rho: float, x) -> float:
    """Infinity norm of ``t x^{k-1} - rho x^{[k-1]}``."""
    x = np.asarray(x, dtype=float)
    return float(np.max(np.abs(apply(t, x) - rho * x ** (t.k - 1))))


def _bracket(y, x, k):
    pos = x > 0
    ratios = y[pos] / x[pos] ** (k - 1)
    return float(ratios.min()), float(ratios.max())


def zqw_iterate(t, tol: float = DEFAULT_TOL, max_iterations: int = DEFAULT_MAX_ITER,
                initial=None, shift: float = 1.0, callback=None) -> SpectralResult:
    """Compute the spectral radius and positive eigenvector of tensor ``t``.

    Parameters
    ----------
    t : SubgraphTensor or MixedTensor
    tol : float
        Stop once ``(upper - lower) / lower <= tol``.
    max_iterations : int
    initial : array_like, optional
        Positive starting vector; defaults to the uniform unit vector.
    shift : float
        Diagonal shift added to the tensor. ``rho`` is reported with the
        shift subtracted again. ``shift=0`` runs the plain power method.
    callback : callable, optional
        Called as ``callback(iteration, lower, upper)`` after every bracket.

    Returns
    -------
    SpectralResult
        ``x`` has unit 2-norm.

    Raises
    ------
    ZeroTensorError
    NotConvergedError
        Carries the last iterate as ``.result``.
    """
    if t.is_zero():
        raise ZeroTensorError("tensor has no nonzero entries")
    if tol <= 0:
        raise ValueError("tol must be positive")
    k, n = t.k, t.n
    if initial is None:
        x = np.full(n, 1.0 / np.sqrt(n))
    else:
        x = np.array(initial, dtype=float)
        if x.shape != (n,) or np.any(x <= 0):
            raise ValueError("initial vector must be strictly positive with length n")
        x /= np.linalg.norm(x)

    warned = False
    y = apply(t, x) + shift * x ** (k - 1)
    it = 0
    while True:
        lower, upper = _bracket(y, x, k)
        if callback is not None:
            callback(it, lower, upper)
        if upper - lower <= tol * max(lower, np.finfo(float).tiny):
            break
        if it >= max_iterations:
            rho = 0.5 * (lower + upper) - shift
            res = SpectralResult(rho, x, it, lower, upper, False, residual(t, rho, x), shift)
            raise NotConvergedError(
                f"bracket [{lower:.12g}, {upper:.12g}] still open after {it} iterations", res)
        x = y ** (1.0 / (k - 1))
        x /= np.linalg.norm(x)
        if not warned and x.min() < _UNDERFLOW:
            warnings.warn("eigenvector component collapsed toward 0; tensor is likely reducible",
                          NonIrreducibleWarning, stacklevel=2)
            warned = True
        y = apply(t, x) + shift * x ** (k - 1)
        it += 1

    rho = 0.5 * (lower + upper) - shift
    return SpectralResult(rho, x, it, lower, upper, True, residual(t, rho, x), shift)


def eigenvector_centrality(g: Graph, tol: float = DEFAULT_TOL,
                           max_iterations: int = DEFAULT_MAX_ITER, **kwargs) -> SpectralResult:
    """Classic eigenvector centrality as the order-2 case of the tensor solver."""
    if g.n < 2 or not is_connected(g):
        raise DisconnectedGraphError("eigenvector centrality needs a connected graph with n >= 2")
    t = build_subgraph_tensor(g, builtin_pattern("k2"))
    return zqw_iterate(t, tol=tol, max_iterations=max_iterations, **kwargs)
