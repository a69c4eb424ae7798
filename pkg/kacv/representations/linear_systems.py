"""
Sparse templates for linear systems whose coefficients are entries of
representation matrices.

A template lists (equation, unknown, source entry, sign) quadruples; building
it against a batch of entry vectors yields the dense coefficient matrices of
the whole batch in one numpy scatter.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from ..core.quiver import Quiver
from ..fields.galois import GaloisField
from .representation import arrow_offsets


@dataclass(frozen=True, eq=False)
class LinearTemplate:
    """Coefficient pattern of a system with entries drawn from a source vector."""
    n_equations: int
    n_unknowns: int
    equation: np.ndarray
    unknown: np.ndarray
    source: np.ndarray
    negate: np.ndarray

    def build(self, field: GaloisField, sources: np.ndarray) -> np.ndarray:
        """
        Dense coefficient matrices for a batch of source vectors.

        Args:
            field: Coefficient field
            sources: Shape (B, S)

        Returns:
            Shape (B, n_equations, n_unknowns)
        """
        sources = np.asarray(sources, dtype=np.int64)
        batch = sources.shape[0]
        matrices = np.zeros((batch, self.n_equations, self.n_unknowns), dtype=np.int64)
        if len(self.equation):
            values = sources[:, self.source]
            values = np.where(self.negate[None, :], field.neg(values), values)
            matrices[:, self.equation, self.unknown] = values
        return matrices


def _template(n_equations: int, n_unknowns: int,
              rows: List[Tuple[int, int, int, bool]]) -> LinearTemplate:
    if rows:
        equation, unknown, source, negate = (np.array(column) for column in zip(*rows))
    else:
        equation = unknown = source = np.zeros(0, dtype=np.int64)
        negate = np.zeros(0, dtype=bool)
    return LinearTemplate(
        n_equations=n_equations,
        n_unknowns=n_unknowns,
        equation=equation.astype(np.int64),
        unknown=unknown.astype(np.int64),
        source=source.astype(np.int64),
        negate=negate.astype(bool)
    )


def vertex_offsets(rows: Sequence[int], cols: Sequence[int]) -> Tuple[List[int], int]:
    """Offsets of per-vertex rows[i] × cols[i] blocks in a flat vector."""
    offsets = []
    total = 0
    for r, c in zip(rows, cols):
        offsets.append(total)
        total += int(r) * int(c)
    return offsets, total


@lru_cache(maxsize=256)
def intertwiner_template(quiver: Quiver, dims_v: Tuple[int, ...],
                         dims_w: Tuple[int, ...]) -> LinearTemplate:
    """
    Equations ψ_h x^V_a = x^W_a ψ_t for ψ ∈ Hom(V, W).

    Unknowns are the entries of ψ_i (dims_w[i] × dims_v[i], row-major, vertex
    order). The source vector is the concatenation of the entries of V and W.
    """
    v_offsets, v_total = arrow_offsets(quiver, dims_v)
    w_offsets, _ = arrow_offsets(quiver, dims_w)
    u_offsets, n_unknowns = vertex_offsets(dims_w, dims_v)

    rows = []
    n_equations = 0
    for a, (t, h) in enumerate(quiver.arrows):
        # equation (r, c) lives in a dims_w[h] × dims_v[t] block
        for r in range(dims_w[h]):
            for c in range(dims_v[t]):
                eq = n_equations + r * dims_v[t] + c
                for s in range(dims_v[h]):
                    rows.append((eq, u_offsets[h] + r * dims_v[h] + s,
                                 v_offsets[a] + s * dims_v[t] + c, False))
                for s in range(dims_w[t]):
                    rows.append((eq, u_offsets[t] + s * dims_v[t] + c,
                                 v_total + w_offsets[a] + r * dims_w[t] + s, True))
        n_equations += dims_w[h] * dims_v[t]

    return _template(n_equations, n_unknowns, rows)


@lru_cache(maxsize=256)
def moment_template(quiver: Quiver, alpha: Tuple[int, ...]) -> Tuple[LinearTemplate, np.ndarray]:
    """
    The moment-map equations Σ_a [x_a, y_a] = Λ as a linear system in y.

    At vertex i the equation reads
        Σ_{a: h(a)=i} x_a y_a − Σ_{a: t(a)=i} y_a x_a = λ_i · Id,
    with y_a of shape α_t × α_h. Unknowns are the entries of y in arrow order.

    Returns:
        (template, diagonal mask over equations): the right-hand side is λ_i
        on the equations flagged by the mask at vertex i.
    """
    x_offsets, _ = arrow_offsets(quiver, alpha)
    y_offsets, n_unknowns = vertex_offsets(
        [alpha[t] for t, _ in quiver.arrows], [alpha[h] for _, h in quiver.arrows]
    )
    e_offsets, n_equations = vertex_offsets(alpha, alpha)

    rows = []
    for a, (t, h) in enumerate(quiver.arrows):
        at, ah = alpha[t], alpha[h]
        # x_a y_a at the head
        for r in range(ah):
            for c in range(ah):
                for s in range(at):
                    rows.append((e_offsets[h] + r * ah + c, y_offsets[a] + s * ah + c,
                                 x_offsets[a] + r * at + s, False))
        # − y_a x_a at the tail
        for r in range(at):
            for c in range(at):
                for s in range(ah):
                    rows.append((e_offsets[t] + r * at + c, y_offsets[a] + r * ah + s,
                                 x_offsets[a] + s * at + c, True))

    vertex_of_equation = np.zeros(n_equations, dtype=np.int64)
    diagonal = np.zeros(n_equations, dtype=bool)
    for i, a in enumerate(alpha):
        for r in range(a):
            diagonal[e_offsets[i] + r * a + r] = True
        vertex_of_equation[e_offsets[i]:e_offsets[i] + a * a] = i

    template = _template(n_equations, n_unknowns, rows)
    return template, np.where(diagonal, vertex_of_equation, -1)


def moment_rhs(diagonal_vertex: np.ndarray, target: Sequence[int]) -> np.ndarray:
    """Right-hand side vector: target[i] on the diagonal equations of vertex i."""
    target = np.asarray(target, dtype=np.int64)
    rhs = np.zeros(len(diagonal_vertex), dtype=np.int64)
    mask = diagonal_vertex >= 0
    rhs[mask] = target[diagonal_vertex[mask]]
    return rhs
