"""Truncated Fock-space steady state of the Lindblad master equation.

Two variants of the generator are solved:

* ``two_mode``: pair creation between two first-order modes,
  H = i eps (a1 a2 - a1' a2'), vacuum damping at rate kappa on each mode;
* ``degenerate``: the pair carried by one mode through second-order
  operators, H = i (eps/2) (a^2 - a'^2), damping kappa.

Both Hamiltonians conserve a difference quantum number (m1 - n1 = m2 - n2
for density-matrix indices in the two-mode case, (m - n) mod 2 in the
degenerate case), so the unique steady state lives in the sector that
contains the trace.  The null vector is found there by shifted inverse
iteration; the result is then verified against the full untruncated-index
master equation applied to the dense density matrix, which guards against
any bookkeeping error in the sector construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import expm_multiply, splu

from ..errors import ConvergenceError, ParameterError
from ..model import ModelParams

_VARIANTS = ("two_mode", "degenerate")


@dataclass(frozen=True)
class FockSolution:
    """Steady state data extracted from a truncated Lindblad solve.

    ``distribution`` is the joint photon-number table P(m, n) for the
    two-mode variant and the 1-D distribution P(n) for the degenerate one.
    ``moments`` holds the extracted operator expectations; ``tail_mass``
    estimates the probability beyond the cutoff; ``residual`` is the
    Frobenius norm of the generator applied to the solution.
    """

    variant: str
    cutoff: int
    distribution: np.ndarray
    moments: dict[str, float] = field(repr=False)
    tail_mass: float
    residual: float
    trace_defect: float
    hermitian_defect: float


def _destroy(dim: int) -> sp.csr_matrix:
    return sp.diags(np.sqrt(np.arange(1, dim)), 1, format="csr")


def _sparse_trace(rho: np.ndarray, op: sp.spmatrix) -> complex:
    """Tr(rho @ op) without forming the dense product."""
    coo = op.tocoo()
    return complex(np.sum(coo.data * rho[coo.col, coo.row]))


class _SectorProblem:
    """Reduced Liouvillian on the symmetry sector containing the trace."""

    def __init__(self, dim: int, entries: list[tuple], trace_positions: list[int]):
        self.dim = dim  # Hilbert-space dimension (dense rho is dim x dim)
        self.index = {key: i for i, (key, _row, _col) in enumerate(entries)}
        self.keys = [key for key, _r, _c in entries]
        self.rows = np.array([r for _k, r, _c in entries])
        self.cols = np.array([c for _k, _r, c in entries])
        self.trace_positions = np.array(trace_positions)
        self.matrix: sp.csc_matrix | None = None

    def embed(self, x: np.ndarray) -> np.ndarray:
        rho = np.zeros((self.dim, self.dim), dtype=complex)
        rho[self.rows, self.cols] = x
        return rho

    def trace(self, x: np.ndarray) -> float:
        return float(x[self.trace_positions].sum())


def _build_two_mode(n_max: int, epsilon: float, kappa: float) -> _SectorProblem:
    """Sector m1 - n1 == m2 - n2 of the two-mode pair-creation generator."""
    dim1 = n_max + 1
    entries = []
    trace_positions = []
    for d in range(-n_max, n_max + 1):
        for m1 in range(max(0, d), min(n_max, n_max + d) + 1):
            for m2 in range(max(0, d), min(n_max, n_max + d) + 1):
                n1, n2 = m1 - d, m2 - d
                row = m1 * dim1 + m2
                col = n1 * dim1 + n2
                if d == 0:
                    trace_positions.append(len(entries))
                entries.append(((m1, m2, n1, n2), row, col))
    prob = _SectorProblem(dim1 * dim1, entries, trace_positions)

    idx = prob.index
    data, ii, jj = [], [], []

    def add(i, key, value):
        j = idx.get(key)
        if j is not None:
            ii.append(i)
            jj.append(j)
            data.append(value)

    for i, (m1, m2, n1, n2) in enumerate(prob.keys):
        # coherent pair creation/annihilation
        if m1 + 1 <= n_max and m2 + 1 <= n_max:
            add(i, (m1 + 1, m2 + 1, n1, n2), epsilon * math.sqrt((m1 + 1) * (m2 + 1)))
        if m1 >= 1 and m2 >= 1:
            add(i, (m1 - 1, m2 - 1, n1, n2), -epsilon * math.sqrt(m1 * m2))
        if n1 >= 1 and n2 >= 1:
            add(i, (m1, m2, n1 - 1, n2 - 1), -epsilon * math.sqrt(n1 * n2))
        if n1 + 1 <= n_max and n2 + 1 <= n_max:
            add(i, (m1, m2, n1 + 1, n2 + 1), epsilon * math.sqrt((n1 + 1) * (n2 + 1)))
        # vacuum damping of each mode
        if m1 + 1 <= n_max and n1 + 1 <= n_max:
            add(i, (m1 + 1, m2, n1 + 1, n2), kappa * math.sqrt((m1 + 1) * (n1 + 1)))
        if m2 + 1 <= n_max and n2 + 1 <= n_max:
            add(i, (m1, m2 + 1, n1, n2 + 1), kappa * math.sqrt((m2 + 1) * (n2 + 1)))
        add(i, (m1, m2, n1, n2), -0.5 * kappa * (m1 + n1 + m2 + n2))

    size = len(prob.keys)
    prob.matrix = sp.coo_matrix((data, (ii, jj)), shape=(size, size)).tocsc()
    return prob


def _build_degenerate(n_max: int, epsilon: float, kappa: float) -> _SectorProblem:
    """Even sector (m - n even) of the single-mode second-order generator."""
    entries = []
    trace_positions = []
    for d in range(-n_max, n_max + 1):
        if d % 2:
            continue
        for m in range(max(0, d), min(n_max, n_max + d) + 1):
            n = m - d
            if d == 0:
                trace_positions.append(len(entries))
            entries.append(((m, n), m, n))
    prob = _SectorProblem(n_max + 1, entries, trace_positions)

    idx = prob.index
    data, ii, jj = [], [], []
    half = 0.5 * epsilon

    def add(i, key, value):
        j = idx.get(key)
        if j is not None:
            ii.append(i)
            jj.append(j)
            data.append(value)

    for i, (m, n) in enumerate(prob.keys):
        if m + 2 <= n_max:
            add(i, (m + 2, n), half * math.sqrt((m + 1) * (m + 2)))
        if m >= 2:
            add(i, (m - 2, n), -half * math.sqrt(m * (m - 1)))
        if n >= 2:
            add(i, (m, n - 2), -half * math.sqrt(n * (n - 1)))
        if n + 2 <= n_max:
            add(i, (m, n + 2), half * math.sqrt((n + 1) * (n + 2)))
        if m + 1 <= n_max and n + 1 <= n_max:
            add(i, (m + 1, n + 1), kappa * math.sqrt((m + 1) * (n + 1)))
        add(i, (m, n), -0.5 * kappa * (m + n))

    size = len(prob.keys)
    prob.matrix = sp.coo_matrix((data, (ii, jj)), shape=(size, size)).tocsc()
    return prob


def _master_rhs(rho: np.ndarray, hamiltonian: sp.spmatrix, lowering: list[sp.spmatrix], kappa: float) -> np.ndarray:
    """Full master-equation right-hand side applied to a dense matrix."""
    out = -1j * (hamiltonian @ rho - rho @ hamiltonian)
    for low in lowering:
        nop = (low.conj().T @ low).tocsr()
        out += kappa * (low @ rho @ low.conj().T) - 0.5 * kappa * (nop @ rho + rho @ nop)
    return out


def _operators(variant: str, n_max: int, epsilon: float):
    dim1 = n_max + 1
    a = _destroy(dim1)
    if variant == "two_mode":
        eye = sp.identity(dim1, format="csr")
        a1 = sp.kron(a, eye, format="csr")
        a2 = sp.kron(eye, a, format="csr")
        pair = a1 @ a2
        hamiltonian = 1j * epsilon * (pair - pair.conj().T)
        return hamiltonian, [a1, a2]
    pair = a @ a
    hamiltonian = 0.5j * epsilon * (pair - pair.conj().T)
    return hamiltonian, [a]


def _solve_sector(prob: _SectorProblem, hamiltonian, lowering, kappa: float,
                  tol: float, max_iter: int = 8) -> tuple[np.ndarray, float]:
    """Shifted inverse iteration for the null vector, residual-verified.

    Falls back to reduced-generator time stepping if the iteration stalls.
    Returns the trace-normalized dense density matrix and the residual
    ||L rho||_F / ||rho||_F measured with the full master equation.
    """
    matrix = prob.matrix
    size = matrix.shape[0]
    shifted = (matrix - 1e-6 * kappa * sp.identity(size, format="csc")).tocsc()
    lu = splu(shifted)

    # maximally mixed start: uniform weight on the diagonal entries.
    # The sector matrix is real (the steady state is real in the Fock
    # basis), so the whole iteration stays in real arithmetic.
    x = np.zeros(size)
    x[prob.trace_positions] = 1.0 / len(prob.trace_positions)

    def residual_of(vec: np.ndarray) -> tuple[float, np.ndarray]:
        rho = prob.embed(vec)
        defect = _master_rhs(rho, hamiltonian, lowering, kappa)
        return float(np.linalg.norm(defect) / np.linalg.norm(rho)), rho

    # iterate while the residual keeps improving, even past the requested
    # tolerance: extra solves are cheap next to the factorization and push
    # the solution to the machine floor
    best_res, best_rho = math.inf, None
    prev = math.inf
    for _ in range(max_iter):
        x = lu.solve(x)
        tr = prob.trace(x)
        if tr == 0:
            raise ConvergenceError("inverse iteration lost the trace component")
        x = x / tr
        res, rho = residual_of(x)
        if res < best_res:
            best_res, best_rho = res, rho
        if res <= 5e-14 or res >= 0.5 * prev:
            break
        prev = res
    if best_res <= tol:
        return best_rho, best_res

    # time-stepping fallback: evolve within the sector, which only damps
    # the nonstationary components further
    for _ in range(6):
        x = expm_multiply(matrix * (20.0 / kappa), x)
        x = x / prob.trace(x)
        res, rho = residual_of(x)
        if res <= tol:
            return rho, res
    raise ConvergenceError(
        f"Lindblad steady state did not converge: residual {res:.3e} > {tol:.1e}"
    )


def _shell_masses_two_mode(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    return np.array([table[k, : k + 1].sum() + table[:k, k].sum() for k in range(n)])


def _tail_estimate(shells: np.ndarray) -> float:
    s_last, s_prev = shells[-1], shells[-2]
    if s_last <= 0 or s_prev <= 0:
        return max(s_last, 0.0)
    ratio = min(s_last / s_prev, 0.95)
    return s_last * ratio / (1.0 - ratio)


def fock_steady_state(
    p: ModelParams,
    cutoff: int | None = None,
    variant: str = "two_mode",
    tail: float = 1e-10,
    tol: float = 1e-10,
    max_cutoff: int | None = None,
) -> FockSolution:
    """Solve the truncated Lindblad generator for its steady state.

    With ``cutoff`` unset the truncation grows adaptively until the
    estimated probability mass beyond the cutoff drops below ``tail``.
    The configured size budget (``max_cutoff``, default 44 photons per
    mode for two modes, 120 for the degenerate variant) bounds memory; if
    it is hit, reduce epsilon/kappa instead.

    Raises ConvergenceError if the null-vector iteration stalls and
    ParameterError for invalid variant or cutoff requests.
    """
    if variant not in _VARIANTS:
        raise ParameterError(f"variant must be one of {_VARIANTS}, got {variant!r}")
    if max_cutoff is None:
        max_cutoff = 44 if variant == "two_mode" else 120
    if cutoff is not None and cutoff < 4:
        raise ParameterError(f"cutoff must be at least 4, got {cutoff}")
    if cutoff is not None and cutoff > max_cutoff:
        raise ParameterError(
            f"cutoff {cutoff} exceeds the size budget {max_cutoff}; "
            "use a smaller epsilon/kappa ratio instead"
        )

    n_max = cutoff if cutoff is not None else 8
    adaptive = cutoff is None
    while True:
        builder = _build_two_mode if variant == "two_mode" else _build_degenerate
        prob = builder(n_max, p.epsilon, p.kappa)
        hamiltonian, lowering = _operators(variant, n_max, p.epsilon)
        rho, residual = _solve_sector(prob, hamiltonian, lowering, p.kappa, tol)

        hermitian_defect = float(
            np.linalg.norm(rho - rho.conj().T) / np.linalg.norm(rho)
        )
        rho = 0.5 * (rho + rho.conj().T)
        trace_defect = abs(float(np.trace(rho).real) - 1.0)

        if variant == "two_mode":
            table = np.clip(np.diag(rho).real.reshape(n_max + 1, n_max + 1), 0.0, None)
            shells = _shell_masses_two_mode(table)
        else:
            table = np.clip(np.diag(rho).real, 0.0, None)
            shells = table
        tail_mass = _tail_estimate(shells)

        if not adaptive or tail_mass < tail:
            break
        if n_max >= max_cutoff:
            raise ParameterError(
                f"tail mass {tail_mass:.2e} still above {tail:.1e} at the size "
                f"budget (cutoff {max_cutoff}); use a smaller epsilon/kappa ratio"
            )
        # jump to the cutoff suggested by the observed geometric decay
        ratio = min(shells[-1] / shells[-2], 0.95) if shells[-2] > 0 else 0.5
        if shells[-1] > 0 and ratio > 0:
            needed = n_max + math.log(tail / shells[-1]) / math.log(ratio) + 2
        else:
            needed = n_max + 4
        n_max = int(min(max_cutoff, max(n_max + 4, math.ceil(needed))))

    moments = _extract_moments(variant, rho, n_max, table)
    return FockSolution(
        variant=variant,
        cutoff=n_max,
        distribution=table,
        moments=moments,
        tail_mass=float(tail_mass),
        residual=residual,
        trace_defect=trace_defect,
        hermitian_defect=hermitian_defect,
    )


def _extract_moments(variant: str, rho: np.ndarray, n_max: int, table: np.ndarray) -> dict[str, float]:
    dim1 = n_max + 1
    a = _destroy(dim1)
    if variant == "degenerate":
        counts = np.arange(dim1)
        pair = _sparse_trace(rho, a @ a)
        return {
            "n": float(counts @ table),
            "pair": float(pair.real),
            "pair_imag": float(pair.imag),
        }

    eye = sp.identity(dim1, format="csr")
    a1 = sp.kron(a, eye, format="csr")
    a2 = sp.kron(eye, a, format="csr")
    counts = np.arange(dim1)
    n1 = float((counts[:, None] * table).sum())
    n2 = float((counts[None, :] * table).sum())
    cross = _sparse_trace(rho, a1 @ a2)

    total = a1 + a2
    number = (total.conj().T @ total).tocsr()
    nbar = _sparse_trace(rho, number).real
    nbar_sq = _sparse_trace(rho, number @ number).real

    plus = total.conj().T + total
    minus = 1j * (total.conj().T - total)
    mean_plus = _sparse_trace(rho, plus).real
    mean_minus = _sparse_trace(rho, minus).real
    var_plus = _sparse_trace(rho, plus @ plus).real - mean_plus**2
    var_minus = _sparse_trace(rho, minus @ minus).real - mean_minus**2

    return {
        "n1": n1,
        "n2": n2,
        "cross": float(cross.real),
        "cross_imag": float(cross.imag),
        "nbar": float(nbar),
        "photon_variance": float(nbar_sq - nbar**2),
        "var_plus": float(var_plus),
        "var_minus": float(var_minus),
    }
