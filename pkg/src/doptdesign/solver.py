"""Log-det maximization over the weight simplex on a candidate set.

Two first-order schemes share the stopping rule p_max <= n_d (1 + epsilon),
which is exactly scaled dual feasibility of the design's Christoffel-Darboux
polynomial (the Kiefer-Wolfowitz equivalence test on the candidate set):

* multiplicative: w_i <- w_i p(x_i) / n_d.  Monotone in the objective and
  cheap; contracts the weights of every non-contact candidate.
* fedorov-wynn: move mass toward the candidate maximizing p with the exact
  line-search step.  Keeps the iterate sparse but converges sublinearly in
  the terminal phase, so the hybrid uses it only after the multiplicative
  stage reaches a 100x looser gap.

After the loop terminates, weights below the pruning threshold are dropped
and the iteration resumes on the reduced set until the stopping test holds
there as well; final report quantities (p values, p_max, converged) are then
evaluated against the FULL original candidate set, so a converged flag means
dual feasibility on everything the solver was given.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg.lapack import dpotrf, dtrtri

from .basis import enumerate_basis, vandermonde
from .design import DesignMeasure, assemble_information, cd_polynomial, cd_profile
from .errors import DegenerateDesignError, TooFewCandidatesError
from .semialg import CandidateSet
from .spd import pivot_tolerance, quad_form_inv_many

ALGORITHMS = ("multiplicative", "fedorov-wynn", "hybrid")

#: Weights this far below machine range are dead by hundreds of orders of
#: magnitude; flushing them to exact zero keeps the arithmetic out of the
#: subnormal range, where hardware float operations run an order of magnitude
#: slower.  Zero is an absorbing state of both updates, so results only change
#: below the 1e-150 level.
_FLUSH = 1e-160


@dataclass(frozen=True)
class SolverConfig:
    """Algorithm selection and termination parameters.

    epsilon is the relative optimality tolerance on p_max / n_d - 1; through
    the certificate scaling it bounds the duality gap by n_d * log(1+epsilon).
    prune_threshold must stay below 1/n_d (checked at solve time) so pruning
    can never empty an optimal support.
    """

    algorithm: str = "hybrid"
    epsilon: float = 1e-6
    max_iters: int = 100_000
    prune_threshold: float = 1e-7

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(
                f"unknown algorithm {self.algorithm!r}; expected one of {ALGORITHMS}"
            )
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.prune_threshold < 0:
            raise ValueError(
                f"prune_threshold must be nonnegative, got {self.prune_threshold}"
            )


@dataclass(frozen=True)
class SolveResult:
    """Final design plus the audit data needed to certify it.

    p_values are the Christoffel-Darboux values of the FINAL design at every
    ORIGINAL candidate point (order preserved), so p_max is the dual
    feasibility margin over the whole training set, not just the surviving
    support.  trace holds one (objective, p_max) pair per evaluated iterate.
    """

    design: DesignMeasure
    candidates: CandidateSet
    objective: float
    p_values: np.ndarray
    p_max: float
    iterations: int
    converged: bool
    trace_objective: np.ndarray
    trace_p_max: np.ndarray
    support_indices: np.ndarray
    prune_rolled_back: bool = False


def init_uniform(cands: CandidateSet, d: int) -> DesignMeasure:
    """Uniform weights over the candidates; the strictly feasible start.

    Raises:
        TooFewCandidatesError: if there are fewer candidates than regression
            functions (the information matrix cannot have full rank).
        DegenerateDesignError: if even the all-candidate design is rank
            deficient (the candidates do not determine the model).
    """
    basis = enumerate_basis(cands.n, d)
    if cands.size < basis.size:
        raise TooFewCandidatesError(
            f"{cands.size} candidates for {basis.size} regression functions"
        )
    mu = DesignMeasure(
        candidates=cands, weights=np.full(cands.size, 1.0 / cands.size)
    )
    assemble_information(mu, d)  # raises DegenerateDesignError when singular
    return mu


def mult_step(mu: DesignMeasure, d: int) -> DesignMeasure:
    """One multiplicative update w_i <- w_i p(x_i) / n_d.

    The new weights sum to one up to round-off because the weighted mean of p
    over the design is identically n_d.  The objective never decreases.
    """
    poly = cd_polynomial(mu, d)
    p = cd_profile(poly, mu.candidates.points)
    return DesignMeasure(candidates=mu.candidates, weights=mu.weights * p / poly.n_d)


def fw_step(mu: DesignMeasure, d: int) -> DesignMeasure:
    """One vertex-direction step toward the candidate with maximal p.

    With p* = max_i p(x_i) (ties broken by lowest index), the exact
    line-search step length is alpha = (p* - n_d) / (n_d (p* - 1)).  A design
    with p* <= n_d already satisfies the dual constraint on the candidate set
    and is returned unchanged.
    """
    poly = cd_polynomial(mu, d)
    p = cd_profile(poly, mu.candidates.points)
    istar = int(np.argmax(p))
    pstar = float(p[istar])
    n_d = poly.n_d
    if pstar <= n_d:
        return mu
    alpha = (pstar - n_d) / (n_d * (pstar - 1.0))
    w = (1.0 - alpha) * mu.weights
    w[istar] += alpha
    return DesignMeasure(candidates=mu.candidates, weights=w)


def prune(mu: DesignMeasure, threshold: float, d: int) -> tuple[DesignMeasure, bool]:
    """Drop atoms with weight below the threshold and renormalize.

    Returns the pruned design and a rollback flag: if pruning would leave the
    degree-d model undetermined (too few atoms, or a singular information
    matrix), the original design is returned unchanged with the flag set.
    """
    basis = enumerate_basis(mu.n, d)
    if not 0 <= threshold < 1.0 / basis.size:
        raise ValueError(
            f"prune threshold must lie in [0, 1/{basis.size}), got {threshold}"
        )
    keep = mu.weights >= threshold
    if keep.all():
        return mu, False
    if keep.sum() < basis.size:
        return mu, True
    pruned = DesignMeasure(
        candidates=CandidateSet(
            points=mu.candidates.points[keep],
            source=mu.candidates.source,
        ),
        weights=mu.weights[keep] / mu.weights[keep].sum(),
    )
    try:
        assemble_information(pruned, d)
    except DegenerateDesignError:
        return mu, True
    return pruned, False


class _Loop:
    """Fused evaluate/step loop over one (possibly pruned) candidate subset.

    Per iteration: assemble M(w) as a rank-one sum, factorize, evaluate p at
    every active candidate, log the iterate, test, step.  Uses raw LAPACK
    (potrf/trtri) because these matrices are tiny and call overhead dominates.
    """

    def __init__(self, v: np.ndarray, w: np.ndarray, n_d: int):
        self.v = v
        self.vt = np.ascontiguousarray(v.T)
        self.w = w
        self.n_d = n_d
        self.wv = np.empty_like(v)
        self.m = np.empty((n_d, n_d))
        self.z = np.empty_like(self.vt)
        self.p = np.empty(v.shape[0])

    def evaluate(self) -> tuple[float, float]:
        """Objective and p_max of the current iterate; fills self.p."""
        np.multiply(self.v, self.w[:, None], out=self.wv)
        np.dot(self.vt, self.wv, out=self.m)
        l, info = dpotrf(self.m, lower=1)
        diag = l.diagonal()
        if info != 0 or (diag * diag <= pivot_tolerance(
            self.n_d, float(self.m.diagonal().max())
        )).any():
            raise DegenerateDesignError(
                "information matrix became singular during iteration"
            )
        li, _ = dtrtri(l, lower=1)
        np.dot(li, self.vt, out=self.z)
        np.einsum("ij,ij->j", self.z, self.z, out=self.p)
        objective = 2.0 * float(np.log(diag).sum())
        return objective, float(self.p.max())

    def step_multiplicative(self) -> None:
        self.w *= self.p
        self.w *= 1.0 / self.n_d
        self.w[self.w < _FLUSH] = 0.0
        self.w /= self.w.sum()

    def step_fedorov_wynn(self, p_max: float) -> None:
        istar = int(np.argmax(self.p))
        alpha = (p_max - self.n_d) / (self.n_d * (p_max - 1.0))
        self.w *= 1.0 - alpha
        self.w[istar] += alpha
        self.w[self.w < _FLUSH] = 0.0
        self.w /= self.w.sum()


def solve(cands: CandidateSet, d: int, cfg: SolverConfig) -> SolveResult:
    """Maximize log det M(w) over the simplex on the candidate set.

    Iterates the configured algorithm until p_max <= n_d (1 + epsilon) or the
    iteration budget runs out, prunes sub-threshold weights, and polishes the
    pruned design until the same test holds on it.  Non-convergence is not an
    error: the result carries converged=False and the full trace.
    """
    basis = enumerate_basis(cands.n, d)
    n_d = basis.size
    if not cfg.prune_threshold < 1.0 / n_d:
        raise ValueError(
            f"prune_threshold {cfg.prune_threshold} must be below 1/n_d = {1.0 / n_d}"
        )
    init_uniform(cands, d)  # raises on too few / degenerate candidates

    v_full = vandermonde(basis, cands.points)
    target = n_d * (1.0 + cfg.epsilon)
    switch = n_d * (1.0 + 100.0 * cfg.epsilon)
    in_fw_phase = cfg.algorithm == "fedorov-wynn"

    active = np.arange(cands.size)
    w = np.full(cands.size, 1.0 / cands.size)
    trace_obj: list[float] = []
    trace_pmax: list[float] = []
    iterations = 0
    rolled_back = False

    while True:
        loop = _Loop(v_full[active], w, n_d)
        local_ok = False
        while True:
            objective, p_max = loop.evaluate()
            trace_obj.append(objective)
            trace_pmax.append(p_max)
            if p_max <= target:
                local_ok = True
                break
            if iterations >= cfg.max_iters:
                break
            if cfg.algorithm == "hybrid" and not in_fw_phase and p_max <= switch:
                in_fw_phase = True
            if in_fw_phase:
                loop.step_fedorov_wynn(p_max)
            else:
                loop.step_multiplicative()
            iterations += 1
        w = loop.w

        keep = w >= cfg.prune_threshold
        if keep.all():
            break
        if keep.sum() < n_d:
            rolled_back = True
            break
        try:
            _Loop(v_full[active[keep]], w[keep] / w[keep].sum(), n_d).evaluate()
        except DegenerateDesignError:
            rolled_back = True
            break
        active = active[keep]
        w = w[keep] / w[keep].sum()
        if not local_ok:
            break  # budget exhausted; prune applied once, no polish

    design = DesignMeasure(
        candidates=CandidateSet(points=cands.points[active], source=cands.source),
        weights=w,
    )
    factor = assemble_information(design, d)
    p_values = quad_form_inv_many(factor, v_full)
    p_max = float(p_values.max())
    return SolveResult(
        design=design,
        candidates=cands,
        objective=factor.log_det,
        p_values=p_values,
        p_max=p_max,
        iterations=iterations,
        converged=bool(p_max <= target),
        trace_objective=np.array(trace_obj),
        trace_p_max=np.array(trace_pmax),
        support_indices=active,
        prune_rolled_back=rolled_back,
    )
