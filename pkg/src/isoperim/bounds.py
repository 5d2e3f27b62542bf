"""Machine-checkable inequality reports and the two proof gadgets.

Each checker evaluates one concrete inequality instance on a chain and
returns a :class:`BoundReport` with both sides, the slack, and a verdict.
The gadgets expose the numeric suprema used in the sweep-cut analysis:
the power-increment sum sup_a sum_j (a_j^p - a_{j-1}^p)^2 / (a_j - a_{j-1})
(bounded by 1/(2p-1) for p > 1/2) and the telescoping ratio-chain maximum
(m+1)(1 - b0^{1/(m+1)}) / (1 + b0^{1/(m+1)}) -> (1/2) log(1/b0).
"""

from __future__ import annotations

import dataclasses
import math
import numpy as np

from .chains import MarkovChain, exact_enumeration_cap, is_reversible
from .cuts import CutResult, phi_p_exact, sweep_cut
from .errors import ExponentOutOfRange, LogDomain
from .spectral import SpectralCertificate, lambda2_directed, lambda2_reversible

DEFAULT_TOL = 1e-9


@dataclasses.dataclass(frozen=True)
class BoundReport:
    """One inequality instance lhs <= rhs, with slack = rhs - lhs.

    holds is slack >= -tol. witnesses carries the cut / certificate data the
    two sides were computed from, enough to re-derive them.
    """

    name: str
    lhs: float
    rhs: float
    slack: float
    holds: bool
    tol: float
    witnesses: dict | None = None


def make_report(name: str, lhs: float, rhs: float, tol: float = DEFAULT_TOL, witnesses: dict | None = None) -> BoundReport:
    """Assemble a report for lhs <= rhs with verdict slack >= -tol."""
    slack = rhs - lhs
    return BoundReport(name=name, lhs=lhs, rhs=rhs, slack=slack, holds=slack >= -tol, tol=tol, witnesses=witnesses)


def _phi_value(c: MarkovChain, p: float, method: str, cert: SpectralCertificate) -> CutResult:
    if method == "auto":
        method = "exact" if c.n <= exact_enumeration_cap() else "sweep"
    if method == "exact":
        return phi_p_exact(c, p)
    if method == "sweep":
        return sweep_cut(c, p, cert)
    raise ValueError(f"unknown phi method {method!r}")


def check_phi_p_upper_bound(
    c: MarkovChain, p: float, use_directed: bool = False, method: str = "auto"
) -> BoundReport:
    """phi_p(P)^2 <= 4 lambda_2 / (2p - 1), for p in (1/2, 1].

    lambda_2 is the reversible normalized-Laplacian eigenvalue by default, or
    the Chung directed one with use_directed. phi_p comes from exact
    enumeration when n is small enough, otherwise from the sweep cut (the
    bound covers the sweep value as well); the method used is recorded.
    """
    if not (0.5 < p <= 1.0):
        raise ExponentOutOfRange(f"inequality requires p in (1/2, 1], got {p}")
    cert = lambda2_directed(c) if use_directed else lambda2_reversible(c)
    cut = _phi_value(c, p, method, cert)
    name = f"phi_p_squared[p={p:g}]" + (":directed" if use_directed else "")
    return make_report(
        name,
        cut.phi**2,
        4.0 * cert.lambda2 / (2.0 * p - 1.0),
        witnesses={"cut": cut, "lambda2": cert.lambda2, "phi_method": cut.method},
    )


def check_morris_peres(c: MarkovChain, use_directed: bool = False) -> BoundReport:
    """lambda_2 >= phi_{1/2}^2 / (8 log(2 / phi_{1/2})).

    The constant 8 comes from rearranging the sweep-cut estimate
    phi <= phi/2 + sqrt(2 log(2/phi) lambda_2); no lazy (self-loop)
    hypothesis is needed. phi_{1/2} is computed exactly, so n must be within
    the enumeration cap. The report records whether the chain is lazy.
    """
    cert = lambda2_directed(c) if use_directed else lambda2_reversible(c)
    cut = phi_p_exact(c, 0.5)
    phi = cut.phi
    if phi >= 2.0:
        raise LogDomain(f"phi_{{1/2}} = {phi} leaves log(2/phi) nonpositive")
    lhs = phi**2 / (8.0 * math.log(2.0 / phi))
    lazy = bool(np.all(np.diag(c.P) >= 0.5))
    name = "morris_peres" + (":directed" if use_directed else "")
    return make_report(
        name,
        lhs,
        cert.lambda2,
        witnesses={"cut": cut, "lambda2": cert.lambda2, "lazy_chain": lazy},
    )


def check_cheeger(c: MarkovChain, method: str = "auto") -> tuple[BoundReport, BoundReport]:
    """Classical Cheeger pair for a reversible chain:
    lambda_2 / 2 <= phi_1 and phi_1 <= sqrt(2 lambda_2)."""
    cert = lambda2_reversible(c)
    cut = _phi_value(c, 1.0, method, cert)
    wit = {"cut": cut, "lambda2": cert.lambda2, "phi_method": cut.method}
    easy = make_report("cheeger:lower", cert.lambda2 / 2.0, cut.phi, witnesses=wit)
    hard = make_report("cheeger:upper", cut.phi, math.sqrt(2.0 * cert.lambda2), witnesses=wit)
    return easy, hard


def check_chung(c: MarkovChain, method: str = "auto") -> tuple[BoundReport, BoundReport]:
    """Chung's directed Cheeger pair:
    phi_1^2 / 2 <= lambda_2(L_directed) <= 2 phi_1.

    With a sweep phi_1 (an upper bound on the true value) the lower direction
    is conservative and can report a spurious violation; exact enumeration is
    used whenever n is within the cap.
    """
    cert = lambda2_directed(c)
    cut = _phi_value(c, 1.0, method, cert)
    wit = {"cut": cut, "lambda2": cert.lambda2, "phi_method": cut.method}
    lower = make_report("chung:lower", cut.phi**2 / 2.0, cert.lambda2, witnesses=wit)
    upper = make_report("chung:upper", cert.lambda2, 2.0 * cut.phi, witnesses=wit)
    return lower, upper


def conjecture_ratio(c: MarkovChain, phi_half: float | None = None, method: str = "auto") -> float:
    """rho = phi_{1/2} / sqrt(lambda_2), the quantity whose boundedness the
    Houdre-Tetali conjecture asserted.

    rho is invariant under the lazy transform (p = 1/2 is the scale-free
    exponent); unbounded growth of rho along a family refutes the conjectured
    upper bound. Pass phi_half to reuse a precomputed (e.g. arc-restricted)
    value; otherwise it is computed exactly or by sweep per ``method``.
    """
    cert = lambda2_reversible(c) if is_reversible(c) else lambda2_directed(c)
    if phi_half is None:
        phi_half = _phi_value(c, 0.5, method, cert).phi
    return float(phi_half) / math.sqrt(cert.lambda2)


def power_increment_supremum(p: float, trials: int = 100_000, seed: int = 0) -> float:
    """Numeric estimate of sup sum_j (a_j^p - a_{j-1}^p)^2 / (a_j - a_{j-1})
    over monotone sequences 0 = a_0 <= ... <= a_N <= 1.

    Searches `trials` random monotone sequences of length 1..50 (sorted
    uniforms, seeded) plus the adversarial geometric family a_j = r^{m-j},
    which is extremal in the limit. For p > 1/2 the true supremum is at most
    1/(2p - 1), so the estimate never exceeds that bound.
    """
    if not (0.5 < p <= 1.0):
        raise ExponentOutOfRange(f"gadget requires p in (1/2, 1], got {p}")
    rng = np.random.default_rng(seed)
    best = 0.0
    chunk = 20_000
    done = 0
    while done < trials:
        m = min(chunk, trials - done)
        lengths = rng.integers(1, 51, size=m)
        u = rng.random((m, 50))
        u[np.arange(50)[None, :] >= lengths[:, None]] = 0.0  # pad, sorts to the front
        a = np.sort(u, axis=1)
        a = np.concatenate([np.zeros((m, 1)), a], axis=1)
        d = np.diff(a, axis=1)
        dp = np.diff(a**p, axis=1)
        terms = np.divide(dp**2, d, out=np.zeros_like(d), where=d > 0)
        best = max(best, float(terms.sum(axis=1).max()))
        done += m

    # geometric family a_j = r^(m-j), extremal as r -> 1 with long chains
    m_geo = 400
    for r in np.linspace(1e-3, 1 - 1e-3, 999):
        a = np.concatenate([[0.0], r ** np.arange(m_geo, -1.0, -1.0)])
        d = np.diff(a)
        dp = np.diff(a**p)
        terms = np.divide(dp**2, d, out=np.zeros_like(d), where=d > 0)
        best = max(best, float(terms.sum()))
    return best


def geometric_chain_sum(b0: float, m: int) -> float:
    """Maximum of sum_i (b_i - b_{i-1}) / (b_i + b_{i-1}) over monotone chains
    b0 <= b_1 <= ... <= b_m <= 1, attained at the geometric interpolation
    b_i = b0^{(m+1-i)/(m+1)}.

    Closed form (m+1)(1 - b0^{1/(m+1)}) / (1 + b0^{1/(m+1)}); nondecreasing
    in m with limit (1/2) log(1/b0).
    """
    if not (0.0 < b0 <= 1.0):
        raise ValueError(f"b0 must lie in (0, 1], got {b0}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    y = math.log(b0) / (m + 1)
    return (m + 1) * (-math.expm1(y)) / (1.0 + math.exp(y))
