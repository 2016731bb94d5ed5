"""
Triangular strip matrices of GL operators.

W(order, k) is the (k+1)x(k+1) lower-triangular Toeplitz matrix of GL weights
mapping samples f(0..kh) to the discretised differintegral. A switching block
matrix W(bar_order, k, T) keeps samples 0..T-1 unchanged and starts a
bar_order operator at sample T; chaining such blocks realises a switched order.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from scipy.linalg import toeplitz

from varorder.chain import plan_from_schedule, run_chain
from varorder.derivatives import Definition, deriv_type2, variable_rows, weight_table
from varorder.report import ComparisonReport
from varorder.schedule import OrderSchedule
from varorder.signal import SampledSignal
from varorder.weights import MAX_ABS_COMPLEMENTARY_ORDER, gl_weights, validate_order, validate_step

logger = logging.getLogger(__name__)

# Largest k for which dense matrices are built
DEFAULT_DENSE_CAP = 5000
# theorem1_check multiplies dense matrices; warn above this many samples
CHECK_WARN_SAMPLES = 500


class DenseCapError(ValueError):
    """Raised when a dense operator matrix would exceed the size cap."""


class Provenance(Enum):
    """How a GlMatrix was produced."""
    CONSTANT = "constant"
    SWITCHING = "switching"
    VARIABLE = "variable"
    PRODUCT = "product"


def _check_dim(k: int, cap: int) -> None:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k > cap:
        raise DenseCapError(
            f"k = {k} exceeds the dense-matrix cap of {cap}; use a streaming engine (direct1/2/3 or chain)"
        )


@dataclass(frozen=True)
class GlMatrix:
    """
    Dense lower-triangular GL operator matrix.

    Attributes:
        entries: (k+1)x(k+1) lower-triangular array
        h: Time step
        provenance: How the matrix was produced
        order: Order for constant-order matrices, else None
    """
    entries: np.ndarray
    h: float
    provenance: Provenance
    order: Optional[float] = None

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f"GL matrix must be square, got shape {entries.shape}")
        if np.any(np.triu(entries, 1)):
            raise ValueError("GL matrix must be lower triangular")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def k(self) -> int:
        return self.dim - 1


@dataclass(frozen=True)
class SwitchingBlockMatrix(GlMatrix):
    """
    Block matrix [I_T, 0; 0, W(bar_order, k - T)].

    Attributes:
        bar_order: Complementary order of the pre-connected block
        switch_index: Sample index T at which the block starts acting
    """
    bar_order: float = 0.0
    switch_index: int = 0

    def __post_init__(self):
        super().__post_init__()
        T = self.switch_index
        upper = self.entries[:T, :]
        if not np.array_equal(upper, np.eye(T, self.dim)):
            raise ValueError(f"Rows 0..{T - 1} of a switching matrix must be identity rows")
        if np.any(self.entries[T:, :T]):
            raise ValueError("Off-diagonal blocks of a switching matrix must be zero")
        block = self.entries[T:, T:]
        expected = gl_weights(self.bar_order, self.h, self.dim - T).w
        if not np.array_equal(block[:, 0], expected):
            raise ValueError("Lower-right block of a switching matrix must be W(bar_order, k - T)")


def _toeplitz_lower(w: np.ndarray) -> np.ndarray:
    return toeplitz(w, np.zeros(len(w)))


def build_W(order: float, k: int, h: float, cap: int = DEFAULT_DENSE_CAP) -> GlMatrix:
    """
    Constant-order matrix W(order, k).

    Args:
        order: Derivative order
        k: Index of the last sample (matrix has k+1 rows)
        h: Time step
        cap: Largest k allowed

    Returns:
        Toeplitz GlMatrix with entries[i][j] = w[i - j]

    Raises:
        DenseCapError: If k exceeds cap
    """
    _check_dim(k, cap)
    w = gl_weights(order, h, k + 1).w
    return GlMatrix(entries=_toeplitz_lower(w), h=float(h),
                    provenance=Provenance.CONSTANT, order=validate_order(order))


def build_switch_W(bar_order: float, k: int, T: int, h: float,
                   cap: int = DEFAULT_DENSE_CAP) -> SwitchingBlockMatrix:
    """
    Switching block matrix W(bar_order, k, T).

    Samples before T pass unchanged; from sample T on, a GL operator of order
    bar_order started at T acts on the signal.

    Args:
        bar_order: Complementary order
        k: Index of the last sample
        T: Switch sample index, 0 <= T <= k
        h: Time step
        cap: Largest k allowed

    Raises:
        ValueError: If T is out of range
        DenseCapError: If k exceeds cap
    """
    _check_dim(k, cap)
    if not 0 <= T <= k:
        raise ValueError(f"Switch index T = {T} is outside 0..{k}")
    entries = np.eye(k + 1)
    w = gl_weights(bar_order, h, k - T + 1).w
    entries[T:, T:] = _toeplitz_lower(w)
    return SwitchingBlockMatrix(entries=entries, h=validate_step(h), provenance=Provenance.SWITCHING,
                                bar_order=validate_order(bar_order, MAX_ABS_COMPLEMENTARY_ORDER), switch_index=T)


def apply(M: GlMatrix, f: SampledSignal) -> SampledSignal:
    """
    Matrix-vector product M f.

    Raises:
        ValueError: If the signal length or step does not match the matrix
    """
    if M.dim != len(f):
        raise ValueError(f"Matrix dimension {M.dim} does not match signal length {len(f)}")
    if not np.isclose(M.h, f.h, rtol=1e-12, atol=0.0):
        raise ValueError(f"Matrix step {M.h} does not match signal step {f.h}")
    return f.with_values(M.entries @ f.values)


def matmul(A: GlMatrix, B: GlMatrix) -> GlMatrix:
    """
    Dense product A B.

    Raises:
        ValueError: If dimensions or steps differ
    """
    if A.dim != B.dim:
        raise ValueError(f"Cannot multiply matrices of dimension {A.dim} and {B.dim}")
    if not np.isclose(A.h, B.h, rtol=1e-12, atol=0.0):
        raise ValueError(f"Cannot multiply matrices with steps {A.h} and {B.h}")
    return GlMatrix(entries=np.tril(A.entries @ B.entries), h=A.h, provenance=Provenance.PRODUCT)


def variable_order_matrix(sched: OrderSchedule, k: int, h: float,
                          cap: int = DEFAULT_DENSE_CAP) -> GlMatrix:
    """
    Closed-form type-2 matrix: column j carries weights w_{alpha(jh), i - j}.

    Args:
        sched: Order schedule covering samples 0..k
        k: Index of the last sample
        h: Time step
        cap: Largest k allowed

    Raises:
        DenseCapError: If k exceeds cap
        ValueError: If the schedule does not cover k+1 samples
    """
    _check_dim(k, cap)
    n = k + 1
    distinct, index = sched.segment_indices(n)
    table = weight_table(distinct, h, n)
    entries = np.zeros((n, n))
    for j in range(n):
        entries[j:, j] = table[index[j], :n - j]
    provenance = Provenance.CONSTANT if len(distinct) == 1 else Provenance.VARIABLE
    order = float(distinct[0]) if len(distinct) == 1 else None
    return GlMatrix(entries=entries, h=validate_step(h), provenance=provenance, order=order)


def definition_matrix(sched: OrderSchedule, k: int, h: float, definition: Definition,
                      cap: int = DEFAULT_DENSE_CAP) -> GlMatrix:
    """
    Dense matrix of a type-1, type-2 or type-3 operator.

    Row i holds the coefficients of the direct sum, so entries[i][i - r] = c_i[r].

    Raises:
        DenseCapError: If k exceeds cap
    """
    _check_dim(k, cap)
    n = k + 1
    entries = np.zeros((n, n))
    for i, row in enumerate(variable_rows(sched, h, n, definition)):
        entries[i, :i + 1] = row[::-1]
    return GlMatrix(entries=entries, h=validate_step(h), provenance=Provenance.VARIABLE)


def switching_product(sched: OrderSchedule, k: int, h: float, cap: int = DEFAULT_DENSE_CAP) -> GlMatrix:
    """
    Product W(a_0, k, 0) W(a_1, k, 1) ... W(a_k, k, k) of per-sample switching matrices.

    a_0 is the initial order and a_j = alpha(j) - alpha(j - 1); factors with
    a_j = 0 are identities and are skipped. Factors multiply left to right.
    """
    orders = sched.orders(k + 1)
    bars = np.diff(orders, prepend=0.0)
    product = build_switch_W(bars[0], k, 0, h, cap)
    for j in np.flatnonzero(bars[1:]) + 1:
        product = matmul(product, build_switch_W(bars[j], k, int(j), h, cap))
    return product


def _scaled_gap(value: np.ndarray, reference: np.ndarray) -> float:
    scale = max(1.0, float(np.max(np.abs(reference))))
    return float(np.max(np.abs(value - reference))) / scale


def theorem1_check(sched: OrderSchedule, k: int, h: float,
                   probe: Optional[SampledSignal] = None,
                   cap: int = DEFAULT_DENSE_CAP) -> ComparisonReport:
    """
    Cross-check the switching-matrix product against the type-2 definition.

    Computes the product of per-sample switching matrices, the closed-form
    type-2 matrix, deriv_type2 and the switching chain on a probe signal.
    Discrepancies are maximum absolute differences scaled by
    max(1, max|reference|).

    Args:
        sched: Order schedule covering samples 0..k
        k: Index of the last sample
        h: Time step
        probe: Input signal, default f(t) = 1 + t
        cap: Largest k allowed

    Returns:
        ComparisonReport of deriv_type2 (numeric) against the closed-form matrix
        output (reference), with the engine discrepancies attached
    """
    n = k + 1
    if n > CHECK_WARN_SAMPLES:
        logger.warning("Equivalence check over %d samples multiplies dense matrices and may be slow", n)
    if probe is None:
        probe = SampledSignal.from_function(lambda t: 1.0 + t, h, n)

    product = switching_product(sched, k, h, cap)
    closed = variable_order_matrix(sched, k, h, cap)
    matrix_out = apply(closed, probe).values
    direct_out = deriv_type2(probe, sched).values
    chain_out = run_chain(probe, plan_from_schedule(sched, n)).values

    discrepancies = {
        "product_vs_closed_form": _scaled_gap(product.entries, closed.entries),
        "type2_vs_matrix": _scaled_gap(direct_out, matrix_out),
        "product_vs_matrix": _scaled_gap(apply(product, probe).values, matrix_out),
        "chain_vs_type2": _scaled_gap(chain_out, direct_out),
    }
    logger.debug("Equivalence discrepancies: %s", discrepancies)
    return ComparisonReport(t=probe.times, numeric=direct_out, reference=matrix_out,
                            discrepancies=discrepancies)
