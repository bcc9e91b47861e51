"""Seeded random generators used by the verification suite and the tests.

All samplers take a ``numpy.random.Generator``. ``rng_for(seed)`` pins the
generator algorithm to PCG64 (numpy's ``default_rng``), which is the package's
cross-platform reproducibility contract: identical seeds produce identical
samples everywhere.
"""

from __future__ import annotations

import numpy as np

from .lorentz import boost_sl2, on_shell_momentum, rotation_sl2

__all__ = [
    "random_complex3",
    "random_direction",
    "random_onshell_momentum",
    "random_sl2",
    "random_transverse_polarization",
    "rng_for",
]


def rng_for(seed: int) -> np.random.Generator:
    """PCG64 generator for a seed (the documented fixed algorithm)."""
    return np.random.default_rng(seed)


def random_direction(rng: np.random.Generator) -> np.ndarray:
    """Uniform unit 3-vector."""
    while True:
        v = rng.normal(size=3)
        norm = np.linalg.norm(v)
        if norm > 1e-12:
            return v / norm


def random_onshell_momentum(
    rng: np.random.Generator, m: float = 1.0, kmax: float = 5.0
) -> np.ndarray:
    """On-shell four-momentum with |kvec| uniform in [0, kmax] and uniform direction."""
    kvec = rng.uniform(0.0, kmax) * random_direction(rng)
    return on_shell_momentum(kvec, m)


def random_sl2(rng: np.random.Generator, max_rapidity: float = 2.0) -> np.ndarray:
    """Random proper orthochronous transformation as rotation x boost.

    Rotation about a uniform axis by an angle uniform in [0, 2*pi), composed
    with a boost along a uniform direction with rapidity uniform in
    [0, max_rapidity].
    """
    rot = rotation_sl2(random_direction(rng), rng.uniform(0.0, 2.0 * np.pi))
    boost = boost_sl2(random_direction(rng), rng.uniform(0.0, max_rapidity))
    return rot @ boost


def random_complex3(rng: np.random.Generator) -> np.ndarray:
    """Complex Gaussian 3-vector (generic polarization spatial part)."""
    return rng.normal(size=3) + 1j * rng.normal(size=3)


def random_transverse_polarization(
    rng: np.random.Generator, q: np.ndarray
) -> np.ndarray:
    """Complex four-vector orthogonal (Minkowski) to q, with order-one norm."""
    q = np.asarray(q, dtype=float)
    qq = q[0] * q[0] - q[1:] @ q[1:]
    while True:
        phi = rng.normal(size=4) + 1j * rng.normal(size=4)
        # subtract the longitudinal part; q is timelike for on-shell pairs
        qphi = q[0] * phi[0] - q[1:] @ phi[1:]
        phi = phi - (qphi / qq) * q
        norm = np.sqrt(np.sum(np.abs(phi) ** 2))
        if norm > 1e-6:
            return phi / norm
