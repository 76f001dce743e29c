"""Dense linear-algebra reference implementations (the desk-scale ground truth).

Every structural claim made by the fast modules is checkable here against
explicit statevectors and density matrices.  Qubit 1 is the most significant
bit of the computational-basis index, so state strings read left to right.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import deque

import numpy as np

from .graphs import Graph, _bits, local_complement

STATEVECTOR_CAP = 14
DENSE_OP_CAP = 10

_S2 = 1.0 / math.sqrt(2.0)

#: Dense 2-vectors of the six single-qubit stabilizer states, keyed by label.
QUBIT_STATES = {
    "0": np.array([1.0, 0.0], dtype=complex),
    "1": np.array([0.0, 1.0], dtype=complex),
    "+": np.array([_S2, _S2], dtype=complex),
    "-": np.array([_S2, -_S2], dtype=complex),
    "i": np.array([_S2, _S2 * 1j], dtype=complex),
    "j": np.array([_S2, -_S2 * 1j], dtype=complex),
}

_PAULI_1Q = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
    (1, 1): np.array([[0, -1], [1, 0]], dtype=complex),  # X @ Z
}


def _check_cap(n: int, cap: int, what: str):
    if n > cap:
        raise ValueError(f"{what} limited to n <= {cap}, got n = {n}")


def statevector(g: Graph) -> np.ndarray:
    """Graph state vector: CZ along every edge applied to the all-plus state."""
    _check_cap(g.n, STATEVECTOR_CAP, "dense statevector")
    n = g.n
    dim = 1 << n
    amp = np.full(dim, 1.0 / math.sqrt(dim), dtype=complex)
    idx = np.arange(dim)
    for (u, v) in g.edges():
        bu = n - u  # qubit 1 is the most significant bit
        bv = n - v
        both = ((idx >> bu) & 1) & ((idx >> bv) & 1)
        amp[both == 1] *= -1.0
    return amp


def graph_basis_state(g: Graph, k) -> np.ndarray:
    """Z^k applied to the graph state; k is a bit-string over vertices 1..n."""
    bits = _as_bits(k, g.n)
    amp = statevector(g).copy()
    idx = np.arange(1 << g.n)
    for a, bit in enumerate(bits, start=1):
        if bit:
            amp[((idx >> (g.n - a)) & 1) == 1] *= -1.0
    return amp


def _as_bits(k, n: int) -> tuple[int, ...]:
    if isinstance(k, str):
        if len(k) != n or set(k) - {"0", "1"}:
            raise ValueError(f"bad bit-string {k!r} for n = {n}")
        return tuple(int(c) for c in k)
    bits = tuple(int(b) for b in k)
    if len(bits) != n or set(bits) - {0, 1}:
        raise ValueError(f"bad bit sequence for n = {n}")
    return bits


@functools.lru_cache(maxsize=1 << 16)
def product_state_vector(state: str) -> np.ndarray:
    """Dense vector of a product state string over the {0,1,+,-,i,j} alphabet.

    Cached and returned read-only; copy before mutating.
    """
    vec = np.array([1.0 + 0.0j])
    for ch in state:
        try:
            q = QUBIT_STATES[ch]
        except KeyError:
            raise ValueError(f"unknown qubit label {ch!r}") from None
        vec = np.kron(vec, q)
    vec.setflags(write=False)
    return vec


def pauli_dense(p) -> np.ndarray:
    """Kronecker build of a symplectic Pauli operator, phase included."""
    _check_cap(p.n, DENSE_OP_CAP, "dense Pauli")
    mat = np.array([[1.0 + 0.0j]])
    for a in range(1, p.n + 1):
        xb = (p.x >> (a - 1)) & 1
        zb = (p.z >> (a - 1)) & 1
        mat = np.kron(mat, _PAULI_1Q[(xb, zb)])
    return (1j ** (p.phase % 4)) * mat


def mixture_density(components, weights=None) -> np.ndarray:
    """Density matrix of a classical mixture of product state strings."""
    vecs = [product_state_vector(s) for s in components]
    if weights is None:
        weights = [1.0 / len(vecs)] * len(vecs)
    dim = len(vecs[0])
    rho = np.zeros((dim, dim), dtype=complex)
    for w, v in zip(weights, vecs):
        rho += w * np.outer(v, v.conj())
    return rho


def relative_entropy_pure(psi: np.ndarray, omega: np.ndarray, eig_floor: float = 1e-14) -> float:
    """S(rho||omega) = -<psi|log2 omega|psi> for pure rho; +inf outside support."""
    evals, evecs = np.linalg.eigh(omega)
    coeffs = evecs.conj().T @ psi
    weights = np.abs(coeffs) ** 2
    out_of_support = weights[evals <= eig_floor].sum()
    if out_of_support > 1e-10:
        return math.inf
    keep = evals > eig_floor
    return float(-(weights[keep] * np.log2(evals[keep])).sum())


def overlap2(psi: np.ndarray, phi: str) -> float:
    """Squared overlap of a dense state with a product state string."""
    vec = product_state_vector(phi)
    return float(abs(np.vdot(vec, psi)) ** 2)


def best_product_overlap(
    psi: np.ndarray, restarts: int = 200, iterations: int = 100, seed: int = 0
) -> float:
    """Heuristic max product overlap via alternating single-site optimisation.

    A lower bound witness only: used to check that no product state found by
    search beats a closest-product-state certificate, never to certify
    optimality on its own.
    """
    n = int(round(math.log2(psi.size)))
    if 1 << n != psi.size:
        raise ValueError("statevector length is not a power of two")
    _check_cap(n, 8, "product-overlap search")
    rng = np.random.default_rng(seed)
    tensor = psi.reshape((2,) * n)
    best = 0.0
    for _ in range(restarts):
        locs = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
        locs /= np.linalg.norm(locs, axis=1, keepdims=True)
        prev = -1.0
        for _ in range(iterations):
            for a in range(n):
                contracted = tensor
                for b in range(n):
                    if b == a:
                        continue
                    # sites before a are already gone, so a sits at axis 0
                    axis = 0 if b < a else 1
                    contracted = np.tensordot(locs[b].conj(), contracted, axes=([0], [axis]))
                env = np.asarray(contracted).reshape(2)
                norm = np.linalg.norm(env)
                if norm > 1e-15:
                    locs[a] = env / norm
            val = _product_overlap_value(tensor, locs)
            if abs(val - prev) < 1e-13:
                break
            prev = val
        best = max(best, prev)
    return best


def _product_overlap_value(tensor: np.ndarray, locs: np.ndarray) -> float:
    contracted = tensor
    for b in range(locs.shape[0]):
        contracted = np.tensordot(locs[b].conj(), contracted, axes=([0], [0]))
    return float(abs(complex(contracted)) ** 2)


def reduced_entropy(psi: np.ndarray, a, n: int | None = None) -> float:
    """Entanglement entropy (bits) across the cut (a, complement)."""
    if n is None:
        n = int(round(math.log2(psi.size)))
    part = sorted(set(a))
    if not part or len(part) >= n:
        raise ValueError("cut requires a proper nonempty vertex subset")
    rest = [v for v in range(1, n + 1) if v not in part]
    tensor = psi.reshape((2,) * n)
    perm = [v - 1 for v in part] + [v - 1 for v in rest]
    mat = tensor.transpose(perm).reshape(1 << len(part), 1 << len(rest))
    svals = np.linalg.svd(mat, compute_uv=False)
    probs = svals**2
    probs = probs[probs > 1e-14]
    return float(-(probs * np.log2(probs)).sum())


# ---------------------------------------------------------------------------
# Brute-force combinatorial references


def brute_mis(g: Graph) -> int:
    """Maximum independent set size by exhaustive subset enumeration."""
    if g.n > 16:
        raise ValueError("brute MIS limited to n <= 16")
    best = 0
    for mask in range(1 << g.n):
        ok = True
        for v in _bits(mask):
            if g.adj[v] & mask:
                ok = False
                break
        if ok:
            best = max(best, mask.bit_count())
    return best


def brute_matching(g: Graph) -> int:
    """Maximum matching size by exhaustive search over matchings."""
    edges = g.edges()

    def grow(start: int, used_mask: int) -> int:
        best = 0
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            pair = (1 << (u - 1)) | (1 << (v - 1))
            if used_mask & pair:
                continue
            best = max(best, 1 + grow(idx + 1, used_mask | pair))
        return best

    return grow(0, 0)


def brute_orbit(g: Graph, cap: int = 10_000) -> set[tuple[int, ...]]:
    """Labelled LC orbit by plain BFS; independent of graphs.lc_orbit internals."""
    if g.n > 8:
        raise ValueError("brute orbit limited to n <= 8")
    seen = {g.adj}
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        for a in range(1, cur.n + 1):
            nxt = local_complement(cur, a)
            if nxt.adj not in seen:
                if len(seen) >= cap:
                    raise RuntimeError("brute orbit cap exceeded")
                seen.add(nxt.adj)
                queue.append(nxt)
    return seen


def lc_unitary_dense(g: Graph, a: int) -> np.ndarray:
    """Dense local Clifford relating |g> to |local_complement(g, a)>.

    Convention: sqrt(-iX) = (I - iX)/sqrt(2) on a, sqrt(iZ) = (I + iZ)/sqrt(2)
    on each neighbour of a; locked by unit tests against the statevectors.
    """
    _check_cap(g.n, DENSE_OP_CAP, "dense LC unitary")
    sx = (np.eye(2) - 1j * _PAULI_1Q[(1, 0)]) / math.sqrt(2)
    sz = (np.eye(2) + 1j * _PAULI_1Q[(0, 1)]) / math.sqrt(2)
    nb = g.neighbors(a)
    mat = np.array([[1.0 + 0.0j]])
    for v in range(1, g.n + 1):
        if v == a:
            local = sx
        elif v in nb:
            local = sz
        else:
            local = np.eye(2, dtype=complex)
        mat = np.kron(mat, local)
    return mat


def equal_up_to_phase(u: np.ndarray, v: np.ndarray, tol: float = 1e-10) -> bool:
    """True when two state vectors differ only by a global phase."""
    k = int(np.argmax(np.abs(u)))
    if abs(u[k]) < tol or abs(v[k]) < tol:
        return bool(np.allclose(u, v, atol=tol))
    phase = v[k] / u[k]
    return bool(abs(abs(phase) - 1.0) < tol and np.allclose(u * phase, v, atol=tol))


def all_connected_graphs(n: int):
    """Yield every connected labelled graph on n vertices (small n only)."""
    if n > 6:
        raise ValueError("exhaustive enumeration limited to n <= 6")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            yield g
