"""Second-eigenvalue certificates for reversible and directed chains.

For a reversible chain, I - P is similar to the symmetric matrix
I - Pi^{1/2} P Pi^{-1/2}, so its spectrum is real and lambda_2 comes with an
eigenvector certificate. For a general irreducible chain we use Chung's
symmetric directed Laplacian

    L = I - (Pi^{1/2} P Pi^{-1/2} + Pi^{-1/2} P^T Pi^{1/2}) / 2,

whose second eigenvalue plays the same role. Both paths return a
:class:`SpectralCertificate` carrying lambda_2, the unit eigenvector v2 of the
symmetric matrix, and the reweighted eigenvector f2 = Pi^{-1/2} v2 used by the
sweep-cut machinery.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .chains import MarkovChain, is_reversible
from .errors import DegenerateEigenvector, NoConvergence, NonSquare, NotReversible, ZeroVector

_RESIDUAL_TOL = 1e-8
_ORTHO_TOL = 1e-8
_MASS_SLACK = 1e-12


@dataclasses.dataclass(frozen=True, eq=False)
class SpectralCertificate:
    """lambda_2 with its eigenvector pair and the solve residual.

    kind is 'reversible-normalized' or 'chung-directed'. residual is
    ||L v2 - lambda2 v2||_2 for the symmetric matrix L the value came from.
    """

    lambda2: float
    f2: np.ndarray
    v2: np.ndarray
    kind: str
    residual: float

    def __post_init__(self) -> None:
        for name in ("f2", "v2"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


def symmetric_eigensolve(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of a symmetric matrix, eigenvalues ascending.

    The input is symmetrized as (M + M^T)/2 before solving; gross asymmetry is
    rejected as a caller bug. Returns (eigenvalues, orthonormal columns Q).
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    norm = np.linalg.norm(M)
    asym = np.linalg.norm(M - M.T)
    if norm > 0 and asym > 1e-6 * norm:
        raise ValueError("matrix is not symmetric within tolerance")
    Ms = 0.5 * (M + M.T)
    try:
        w, Q = np.linalg.eigh(Ms)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return w, Q


def _certificate(c: MarkovChain, L: np.ndarray, kind: str) -> SpectralCertificate:
    w, Q = symmetric_eigensolve(L)
    lambda2 = float(w[1])
    v2 = Q[:, 1].copy()
    # Deterministic sign: first non-negligible coordinate positive.
    nz = np.nonzero(np.abs(v2) > 1e-12)[0]
    if nz.size and v2[nz[0]] < 0:
        v2 = -v2
    residual = float(np.linalg.norm(L @ v2 - lambda2 * v2))
    scale = float(np.linalg.norm(L))
    if residual > _RESIDUAL_TOL * max(scale, 1e-300):
        raise NoConvergence(f"eigenpair residual {residual:.3e} above tolerance")
    sqrt_pi = np.sqrt(c.pi)
    if abs(float(v2 @ sqrt_pi)) > _ORTHO_TOL:
        raise NoConvergence("second eigenvector not orthogonal to the Perron direction")
    f2 = v2 / sqrt_pi
    return SpectralCertificate(lambda2=lambda2, f2=f2, v2=v2, kind=kind, residual=residual)


def lambda2_reversible(c: MarkovChain) -> SpectralCertificate:
    """lambda_2 of I - P for a reversible chain, via the symmetric similarity.

    Builds S = Pi^{1/2} P Pi^{-1/2} (symmetric by detailed balance), solves
    I - S, and reports f2 = Pi^{-1/2} v2, an eigenvector of I - P itself.
    """
    if not is_reversible(c):
        raise NotReversible("chain fails detailed balance; use lambda2_directed instead")
    sqrt_pi = np.sqrt(c.pi)
    S = (sqrt_pi[:, None] * c.P) / sqrt_pi[None, :]
    L = np.eye(c.n) - S
    return _certificate(c, L, "reversible-normalized")


def chung_laplacian(c: MarkovChain) -> np.ndarray:
    """Chung's symmetric Laplacian of an irreducible chain.

    L = I - (Pi^{1/2} P Pi^{-1/2} + Pi^{-1/2} P^T Pi^{1/2}) / 2; the smallest
    eigenvalue is 0 with eigenvector Pi^{1/2} 1.
    """
    sqrt_pi = np.sqrt(c.pi)
    A = (sqrt_pi[:, None] * c.P) / sqrt_pi[None, :]
    return np.eye(c.n) - 0.5 * (A + A.T)


def lambda2_directed(c: MarkovChain) -> SpectralCertificate:
    """lambda_2 of the Chung Laplacian; agrees with lambda2_reversible when
    the chain is reversible (the two matrices coincide under detailed balance)."""
    return _certificate(c, chung_laplacian(c), "chung-directed")


def truncated_eigenvector(cert: SpectralCertificate, c: MarkovChain) -> np.ndarray:
    """Positive part of f2, sign-fixed and rescaled to max 1.

    The sign of f2 is flipped if needed so that the pi-mass of {f2 > 0} is at
    most 1/2 (+1e-12); when both signs sit exactly at mass 1/2 the sign whose
    positive support contains the lowest-index vertex wins. The result
    f = max(f2, 0) / max f has support of pi-mass <= 1/2, which is what makes
    every sweep level set admissible.
    """
    f2 = np.asarray(cert.f2, dtype=float)
    if f2.shape != (c.n,):
        raise ValueError("certificate does not match the chain")
    pos_mass = float(c.pi[f2 > 0].sum())
    neg_mass = float(c.pi[f2 < 0].sum())
    pos_ok = pos_mass <= 0.5 + _MASS_SLACK and bool((f2 > 0).any())
    neg_ok = neg_mass <= 0.5 + _MASS_SLACK and bool((f2 < 0).any())
    if not pos_ok and not neg_ok:
        raise DegenerateEigenvector("no sign choice yields nonempty positive support of mass <= 1/2")
    if pos_ok and neg_ok and abs(pos_mass - 0.5) <= _MASS_SLACK and abs(neg_mass - 0.5) <= _MASS_SLACK:
        nz = np.nonzero(f2 != 0)[0]
        sign = 1.0 if f2[nz[0]] > 0 else -1.0
    elif pos_ok:
        sign = 1.0
    else:
        sign = -1.0
    f = np.maximum(sign * f2, 0.0)
    return f / f.max()


def truncated_rayleigh(c: MarkovChain, f: np.ndarray) -> float:
    """Rayleigh-type quotient of a nonnegative vector over ordered pairs,

        ( sum_{u,v : f(u) >= f(v)} q(u,v) (f(u) - f(v))^2 ) / sum_v pi(v) f(v)^2

    with the symmetrized flow q(u,v) = (pi(u)P(u,v) + pi(v)P(v,u)) / 2. For
    reversible chains detailed balance gives q(u,v) = pi(u)P(u,v), the plain
    one-sided quotient. The symmetrization matters for directed chains: the
    raw one-sided sum can exceed lambda2 of the Chung Laplacian, while this
    quotient never does (up to solver residual) when f is a truncated
    certificate eigenvector.
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (c.n,):
        raise ValueError("vector length does not match the chain")
    if (f < -1e-12).any():
        raise ValueError("vector must be nonnegative")
    if not (f > 0).any():
        raise ZeroVector("vector is identically zero")
    flow = c.pi[:, None] * c.P
    q = 0.5 * (flow + flow.T)
    diff = f[:, None] - f[None, :]
    num = float(np.sum(np.where(diff >= 0, q * diff**2, 0.0)))
    den = float(np.sum(c.pi * f**2))
    return num / den
