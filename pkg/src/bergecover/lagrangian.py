"""Hypergraph Lagrangians.

``P_H(x)`` sums the monomials of the edges; the Lagrangian is its maximum over
the probability simplex.  :func:`maximize` is a multi-start projected
gradient ascent, so its value is always a certified *lower* bound on the
Lagrangian (it is ``P_H`` evaluated at the returned witness).  Graphs get the
exact value from the clique number as well.

Vertices are 1-based everywhere in this module; coordinate ``i`` of a weight
vector belongs to vertex ``i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InvalidParameters,
    NotUniform,
    PreconditionError,
    PreconditionNotChecked,
)
from .hypergraph import Hypergraph, is_covering

SUPPORT_THRESHOLD = 1e-8
NORMALIZATION_TOL = 1e-12
MIN_STEP = 1e-13
STEP_GROWTH = 1.5


@dataclass(frozen=True, eq=False)
class Weighting:
    """A point of the probability simplex (read-only numpy array)."""

    x: np.ndarray

    def __post_init__(self) -> None:
        x = np.array(self.x, dtype=float)
        if x.ndim != 1 or np.any(x < 0) or not np.isfinite(x).all():
            raise InvalidParameters("weights must be a finite nonnegative vector")
        if abs(x.sum() - 1.0) > NORMALIZATION_TOL:
            raise InvalidParameters(f"weights sum to {x.sum()!r}, not 1")
        x.setflags(write=False)
        object.__setattr__(self, "x", x)

    @classmethod
    def normalized(cls, x) -> "Weighting":
        x = np.clip(np.asarray(x, dtype=float), 0.0, None)
        total = x.sum()
        if total <= 0:
            raise InvalidParameters("cannot normalize a zero vector")
        return cls(x / total)

    @classmethod
    def uniform(cls, n: int, on=None) -> "Weighting":
        x = np.zeros(n)
        idx = np.arange(n) if on is None else np.array(sorted(on)) - 1
        x[idx] = 1.0 / len(idx)
        return cls(x)

    def support(self, threshold: float = SUPPORT_THRESHOLD) -> tuple[int, ...]:
        return tuple(int(i) + 1 for i in np.flatnonzero(self.x > threshold))

    def __len__(self) -> int:
        return len(self.x)


@dataclass(frozen=True, eq=False)
class LagrangianResult:
    value: float
    witness: Weighting
    support: tuple[int, ...]
    method: str
    induced_covering: bool | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "value": self.value,
            "witness": [float(v) for v in self.witness.x],
            "support": list(self.support),
            "method": self.method,
        }
        if self.induced_covering is not None:
            out["induced_covering"] = self.induced_covering
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _uniformity(h: Hypergraph) -> int:
    k = h.uniformity
    if k is None:
        raise NotUniform(f"edge sizes {sorted({len(e) for e in h.edges})} are not a single size")
    return k


def _edge_array(h: Hypergraph) -> np.ndarray:
    k = _uniformity(h)
    if not h.edges:
        return np.zeros((0, k), dtype=np.int64)
    return np.array(h.edges, dtype=np.int64) - 1


def _as_vector(h: Hypergraph, x) -> np.ndarray:
    v = x.x if isinstance(x, Weighting) else np.asarray(x, dtype=float)
    if v.shape != (h.n,):
        raise DimensionMismatch(f"weight vector has shape {v.shape}, expected ({h.n},)")
    return v


def polynomial_form(h: Hypergraph, x) -> float:
    E = _edge_array(h)
    v = _as_vector(h, x)
    if not len(E):
        return 0.0
    return float(np.prod(v[E], axis=1).sum())


def gradient(h: Hypergraph, x) -> np.ndarray:
    E = _edge_array(h)
    v = _as_vector(h, x)
    g = np.zeros(h.n)
    if not len(E):
        return g
    vals = v[E]
    k = E.shape[1]
    for j in range(k):
        others = np.prod(np.delete(vals, j, axis=1), axis=1) if k > 1 else np.ones(len(E))
        np.add.at(g, E[:, j], others)
    return g


def lambda_complete_exact(k: int, t: int) -> Fraction:
    """C(t, k) / t**k, the Lagrangian of the complete k-graph on t vertices."""
    if k < 2 or t < k:
        raise InvalidParameters(f"need t >= k >= 2, got k={k}, t={t}")
    return Fraction(comb(t, k), t**k)


def lambda_complete(k: int, t: int) -> float:
    return float(lambda_complete_exact(k, t))


def project_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the probability simplex (sort-based)."""
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    ind = np.arange(1, len(v) + 1)
    rho = np.nonzero(u - css / ind > 0)[0][-1]
    theta = css[rho] / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


def _ascend(E: np.ndarray, n: int, x: np.ndarray, tol: float, max_iter: int) -> tuple[np.ndarray, float]:
    k = E.shape[1]
    flat = E.ravel()
    drop = [[i for i in range(k) if i != j] for j in range(k)]

    def value(y):
        return float(np.prod(y[E], axis=1).sum())

    def grad(y):
        vals = y[E]
        others = np.stack([np.prod(vals[:, d], axis=1) for d in drop], axis=1)
        return np.bincount(flat, weights=others.ravel(), minlength=n)

    step = 1.0 / (k * n)
    val = value(x)
    for _ in range(max_iter):
        g = grad(x)
        # stationarity gap: zero exactly at KKT points of the simplex problem
        if g.max() - float(x @ g) < tol:
            break
        y = project_simplex(x + step * g)
        vy = value(y)
        if vy > val:
            x, val = y, vy
            step *= STEP_GROWTH
        else:
            step *= 0.5
            # flat optimal faces leave a gap at rounding level; the step then collapses
            if step < MIN_STEP:
                break
    return x, val


def clique_number(n: int, pairs) -> tuple[int, ...]:
    """A maximum clique (vertex labels 1..n) by branch and bound."""
    nbr = [0] * (n + 1)
    for u, v in pairs:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best: tuple[int, ...] = (1,) if n else ()

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        if len(clique) > len(best):
            best = tuple(clique)
        while cand:
            if len(clique) + bin(cand).count("1") <= len(best):
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            clique.append(v)
            expand(clique, cand & nbr[v])
            clique.pop()

    expand([], sum(1 << v for v in range(1, n + 1)))
    return tuple(sorted(best))


def motzkin_straus(h: Hypergraph) -> LagrangianResult:
    """Exact Lagrangian of a graph: (1 - 1/omega)/2, uniform on a maximum clique."""
    if _uniformity(h) != 2:
        raise NotUniform("Motzkin-Straus applies to 2-graphs only")
    if h.n > 20:
        raise InvalidParameters("brute-force clique search is limited to n <= 20")
    clique = clique_number(h.n, h.edges) if h.edges else ((1,) if h.n else ())
    omega = len(clique)
    w = Weighting.uniform(h.n, clique)
    value = polynomial_form(h, w)
    expected = 0.5 * (1 - 1 / omega)
    assert abs(value - expected) < 1e-12
    return LagrangianResult(value, w, w.support(), "exact-small")


def maximize(
    h: Hypergraph,
    restarts: int = 64,
    tol: float = 1e-9,
    seed: int = 0,
    exact_2graph: bool = True,
    max_iter: int = 20_000,
) -> LagrangianResult:
    """Best local maximum of ``P_H`` found from a uniform start and random Dirichlet starts."""
    k = _uniformity(h)
    if h.n < k:
        raise InvalidParameters(f"need n >= k, got n={h.n}, k={k}")
    E = _edge_array(h)
    if not len(E):
        w = Weighting.uniform(h.n)
        return LagrangianResult(0.0, w, w.support(), "ascent")
    rng = np.random.default_rng(seed)
    starts = [np.full(h.n, 1.0 / h.n)]
    starts.extend(rng.dirichlet(np.ones(h.n)) for _ in range(max(restarts - 1, 0)))
    best_x, best_val = None, -1.0
    for x0 in starts:
        x, val = _ascend(E, h.n, x0, tol, max_iter)
        if val > best_val:
            best_x, best_val = x, val
    w = Weighting.normalized(best_x)
    res = LagrangianResult(polynomial_form(h, w), w, w.support(), "ascent")
    if k == 2 and exact_2graph and h.n <= 20:
        exact = motzkin_straus(h)
        if exact.value >= res.value:
            return exact
    return res


def _restricted(h: Hypergraph, keep: tuple[int, ...]) -> Hypergraph:
    local = {v: i + 1 for i, v in enumerate(keep)}
    edges = tuple(tuple(local[v] for v in e) for e in h.edges if all(v in local for v in e))
    return Hypergraph(len(keep), edges, h.sizes)


def minimal_support(
    h: Hypergraph, result: LagrangianResult, tol: float = 1e-9, restarts: int = 8, seed: int = 0
) -> LagrangianResult:
    """Shrink the witness support while the value stays within ``tol``.

    At an optimum with minimal support the induced subhypergraph on the
    support is covering; whether that holds for the returned witness is
    reported in ``induced_covering``.
    """
    k = _uniformity(h)
    cur = result
    shrunk = True
    while shrunk and len(cur.support) > k:
        shrunk = False
        for drop in sorted(cur.support, key=lambda v: cur.witness.x[v - 1]):
            keep = tuple(v for v in cur.support if v != drop)
            sub = _restricted(h, keep)
            if not sub.edges:
                continue
            trial = maximize(sub, restarts=restarts, tol=tol, seed=seed)
            if trial.value >= cur.value - tol:
                x = np.zeros(h.n)
                x[np.array(keep) - 1] = trial.witness.x
                w = Weighting.normalized(x)
                cur = LagrangianResult(polynomial_form(h, w), w, w.support(), cur.method)
                shrunk = True
                break
    cover = is_covering(_restricted(h, cur.support)) if len(cur.support) >= 2 else True
    notes = [] if cover else ["induced subhypergraph on the support is not covering"]
    return LagrangianResult(cur.value, cur.witness, cur.support, cur.method, cover, notes)


def symmetrize_step(x, s: int, t: int) -> Weighting:
    """Replace the weights of vertices s and t by their average."""
    v = np.array(x.x if isinstance(x, Weighting) else x, dtype=float)
    for i in (s, t):
        if not 1 <= i <= len(v):
            raise IndexOutOfRange(f"vertex {i} outside 1..{len(v)}")
    avg = 0.5 * (v[s - 1] + v[t - 1])
    v[s - 1] = v[t - 1] = avg
    return Weighting(v)


def complete_on(k: int, support, n: int) -> Hypergraph:
    """The complete k-graph on ``support`` inside n vertices."""
    from itertools import combinations

    return Hypergraph(n, tuple(combinations(sorted(support), k)), frozenset({k}))


def verify_bound(
    h: Hypergraph, t: int, mode: str = "cycle", max_n: int = 9, tol: float = 1e-6, **maximize_kw
) -> dict:
    """Check ``maximize(h).value <= lambda(K^k_{t-1})`` for a Berge-C_t-free (or P_t-free) h.

    Freeness is established by exhaustive search first.  Because the value is
    a lower bound, a passing check is evidence, never proof; a failing one is
    a genuine violation.
    """
    from .oracle import exists_cycle, exists_path

    k = _uniformity(h)
    if mode not in ("cycle", "path"):
        raise InvalidParameters(f"mode must be 'cycle' or 'path', got {mode!r}")
    if t - 1 < k:
        raise InvalidParameters(f"need t - 1 >= k, got t={t}, k={k}")
    if h.n > max_n:
        raise PreconditionNotChecked(f"freeness check limited to n <= {max_n}, got {h.n}")
    if t <= h.n:
        found = exists_cycle(h, t) if mode == "cycle" else exists_path(h, t)
        if found is not None:
            what = f"Berge-{'C' if mode == 'cycle' else 'P'}{t}"
            raise PreconditionError(f"hypergraph contains a {what}: {found.to_json()}")
    res = maximize(h, **maximize_kw)
    bound = lambda_complete(k, t - 1)
    return {
        "mode": mode,
        "t": t,
        "k": k,
        "value": res.value,
        "bound": bound,
        "bound_exact": str(lambda_complete_exact(k, t - 1)),
        "margin": bound - res.value,
        "holds": res.value <= bound + tol,
        "witness": [float(v) for v in res.witness.x],
        "support": list(res.support),
        "note": "value is a certified lower bound on the Lagrangian; only violations are conclusive",
    }
