"""Symmetric eigenvalue computation by cyclic Jacobi sweeps.

Self-contained and deterministic: the same matrix always produces the same
report.  Eigenvalues are ordered by decreasing absolute value (ties: the more
positive value first), which is the ordering the spectral bounds consume.
The report carries a certified error bound derived from the final off-diagonal
mass, so downstream exact-rational comparisons can use a sound upper estimate
of the second eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NoConvergence, NotSymmetric

SWEEP_BUDGET = 200
CONVERGENCE_REL = 1e-12
SYMMETRY_REL = 1e-12
RESIDUAL_REL = 1e-9


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalues sorted by |value| descending (ties: positive first).

    mu1 is the first entry (signed), mu2 the absolute value of the second.
    residuals are ||A v - lambda v|| per eigenpair in the same order.
    error_bound is a certified bound on |reported - true| for every
    eigenvalue, from the terminal off-diagonal Frobenius mass.
    """

    eigenvalues: tuple[float, ...]
    mu1: float
    mu2: float
    residuals: tuple[float, ...]
    error_bound: float
    sweeps: int

    def to_dict(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "mu1": self.mu1,
            "mu2": self.mu2,
            "residuals": list(self.residuals),
            "error_bound": self.error_bound,
            "sweeps": self.sweeps,
        }


def _offdiag_frobenius(b: np.ndarray) -> float:
    off = b - np.diag(np.diag(b))
    return float(np.sqrt((off * off).sum()))


def spectrum(a) -> SpectrumReport:
    """Full spectrum of a symmetric matrix via cyclic Jacobi rotations.

    Raises NotSymmetric when max|A - A^T| exceeds 1e-12 relative to the entry
    scale, and NoConvergence when 200 sweeps do not push the off-diagonal
    Frobenius mass below 1e-12 * ||A||_F.
    """
    A = np.array(a, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSymmetric("matrix must be square")
    n = A.shape[0]
    scale = max(1.0, float(np.abs(A).max(initial=0.0)))
    if float(np.abs(A - A.T).max(initial=0.0)) > SYMMETRY_REL * scale:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    A = (A + A.T) / 2.0
    norm_f = float(np.sqrt((A * A).sum()))

    B = A.copy()
    V = np.eye(n)
    sweeps = 0
    if n > 1 and norm_f > 0.0:
        tol = CONVERGENCE_REL * norm_f
        for sweep in range(1, SWEEP_BUDGET + 1):
            if _offdiag_frobenius(B) <= tol:
                break
            sweeps = sweep
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = B[p, q]
                    if apq == 0.0:
                        continue
                    tau = (B[q, q] - B[p, p]) / (2.0 * apq)
                    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                    c = 1.0 / np.sqrt(1.0 + t * t)
                    s = t * c
                    rp, rq = B[p, :].copy(), B[q, :].copy()
                    B[p, :] = c * rp - s * rq
                    B[q, :] = s * rp + c * rq
                    cp, cq = B[:, p].copy(), B[:, q].copy()
                    B[:, p] = c * cp - s * cq
                    B[:, q] = s * cp + c * cq
                    B[p, q] = B[q, p] = 0.0
                    vp, vq = V[:, p].copy(), V[:, q].copy()
                    V[:, p] = c * vp - s * vq
                    V[:, q] = s * vp + c * vq
        else:
            raise NoConvergence(f"Jacobi did not converge in {SWEEP_BUDGET} sweeps")

    off_final = _offdiag_frobenius(B)
    vals = np.diag(B).copy()
    order = sorted(range(n), key=lambda i: (-abs(vals[i]), -vals[i]))
    eigenvalues = tuple(float(vals[i]) for i in order)
    residuals = []
    for i in order:
        v = V[:, i]
        residuals.append(float(np.linalg.norm(A @ v - vals[i] * v)))
    # |lambda_reported - lambda_true| <= ||offdiag||_F (Weyl), plus float slop
    error_bound = off_final + 64.0 * np.finfo(float).eps * max(1.0, norm_f)
    mu1 = eigenvalues[0] if n > 0 else 0.0
    mu2 = abs(eigenvalues[1]) if n > 1 else 0.0
    return SpectrumReport(eigenvalues=eigenvalues, mu1=mu1, mu2=mu2,
                          residuals=tuple(residuals), error_bound=error_bound,
                          sweeps=sweeps)


def hht_spectrum(h) -> SpectrumReport:
    """Spectrum of H H^T for a 0/1 parity-check matrix H (integer Gram matrix)."""
    bits = np.asarray(h.bits if hasattr(h, "bits") else h, dtype=float)
    return spectrum(bits @ bits.T)


def nontrivial_second_eigenvalue(report: SpectrumReport,
                                 pair_tol: float = 1e-6) -> tuple[float, bool]:
    """Second-largest |eigenvalue| after removing one +/-lambda_max pair.

    The adjacency spectrum of a connected bipartite graph pairs lambda_max
    with -lambda_max; both are structural, so the expansion-relevant quantity
    is the next one down.  Exactly one pair is removed (multiplicities beyond
    the pair are genuine).  Returns (value, pair_found).
    """
    vals = list(report.eigenvalues)
    if len(vals) < 2:
        return 0.0, False
    lam = vals[0]
    scale = max(1.0, abs(lam))
    for i in range(1, len(vals)):
        if abs(vals[i] + lam) <= pair_tol * scale:
            rest = vals[1:i] + vals[i + 1:]
            return (max(abs(v) for v in rest) if rest else 0.0), True
    return abs(vals[1]), False


def certified_mu_upper(report: SpectrumReport):
    """Sound rational upper estimate of mu2: reported value plus the
    certified error.  Exact float-to-rational conversion, no rounding."""
    return Fraction(report.mu2) + Fraction(report.error_bound)


def certified_bipartite_mu_upper(report: SpectrumReport, pair_tol: float = 1e-6):
    """Sound rational upper estimate of the nontrivial second eigenvalue of
    a bipartite adjacency spectrum.  Returns (value, pair_found); when no
    -lambda_max partner is found the estimate falls back to mu2, which is
    still an upper bound."""
    mu, pair_found = nontrivial_second_eigenvalue(report, pair_tol)
    return Fraction(mu) + Fraction(report.error_bound), pair_found
