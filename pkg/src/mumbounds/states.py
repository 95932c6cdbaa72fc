"""Benchmark density matrices and a plain-text file format for them.

Provides the tiles bound entangled state (built from an unextendible
product basis), the Horodecki 3x3 bound entangled family, white-noise
mixtures, maximally entangled states, and seeded random states.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .config import TOL


class StateFileError(ValueError):
    """A density-matrix file exists but fails validation."""


def _ket(d: int, index: int) -> np.ndarray:
    v = np.zeros(d, dtype=complex)
    v[index] = 1.0
    return v


def validate_density(rho: np.ndarray) -> list[str]:
    """Return the list of violated density-matrix invariants (empty if valid)."""
    rho = np.asarray(rho)
    problems: list[str] = []
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return [f"matrix is not square (shape {rho.shape})"]
    if not np.all(np.isfinite(rho.real)) or not np.all(np.isfinite(rho.imag)):
        return ["matrix contains non-finite entries"]
    herm = float(np.abs(rho - rho.conj().T).max())
    if herm > TOL.density_hermiticity:
        problems.append(f"not Hermitian (max deviation {herm:.3e})")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TOL.density_trace:
        problems.append(f"trace is {tr.real:.15g}, not 1")
    if not problems:
        min_eig = float(np.linalg.eigvalsh(rho).min())
        if min_eig < -TOL.density_psd:
            problems.append(f"negative eigenvalue {min_eig:.3e}")
    return problems


def tiles_state() -> np.ndarray:
    """The 3x3 bound entangled state (I - sum of the five tile projectors)/4.

    The five tile vectors form an unextendible product basis, so the
    state is entangled yet has positive partial transpose.
    """
    s2 = np.sqrt(2.0)
    e0, e1, e2 = (_ket(3, i) for i in range(3))
    plus = (e0 + e1 + e2) / np.sqrt(3.0)
    tiles = [
        np.kron(e0, (e0 - e1) / s2),
        np.kron((e0 - e1) / s2, e2),
        np.kron(e2, (e1 - e2) / s2),
        np.kron((e1 - e2) / s2, e0),
        np.kron(plus, plus),
    ]
    proj = sum(np.outer(v, v.conj()) for v in tiles)
    return (np.eye(9, dtype=complex) - proj) / 4.0


def mix_with_white_noise(rho: np.ndarray, weight: float) -> np.ndarray:
    """Convex mixture weight*rho + (1-weight)*I/dim."""
    if not 0.0 <= weight <= 1.0:
        raise ValueError(f"mixing weight {weight!r} must lie in [0, 1]")
    rho = np.asarray(rho, dtype=complex)
    n = rho.shape[0]
    return weight * rho + (1.0 - weight) * np.eye(n, dtype=complex) / n


def tiles_noisy(p: float) -> np.ndarray:
    """Tiles state mixed with white noise at weight p."""
    return mix_with_white_noise(tiles_state(), p)


def horodecki_state(upsilon: float) -> np.ndarray:
    """The Horodecki 3x3 bound entangled state at parameter upsilon in [0, 1]."""
    if not 0.0 <= upsilon <= 1.0:
        raise ValueError(f"upsilon = {upsilon!r} must lie in [0, 1]")
    u = upsilon
    corner = (1.0 + u) / 2.0
    root = np.sqrt(1.0 - u * u) / 2.0
    m = np.zeros((9, 9), dtype=complex)
    for i in (0, 1, 2, 3, 4, 5, 7):
        m[i, i] = u
    m[6, 6] = corner
    m[8, 8] = corner
    for i, j in ((0, 4), (0, 8), (4, 8)):
        m[i, j] = m[j, i] = u
    m[6, 8] = m[8, 6] = root
    return m / (1.0 + 8.0 * u)


def horodecki_noisy(upsilon: float, q: float) -> np.ndarray:
    """Horodecki state at upsilon mixed with white noise at weight q."""
    return mix_with_white_noise(horodecki_state(upsilon), q)


def max_entangled(d: int) -> np.ndarray:
    """Amplitudes of sum_i |ii> / sqrt(d) on C^d x C^d."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    psi = np.zeros(d * d, dtype=complex)
    psi[:: d + 1] = 1.0 / np.sqrt(d)
    return psi


def random_pure(dim_a: int, dim_b: int, seed: int) -> np.ndarray:
    """Seeded random pure state with complex standard-normal amplitudes."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(dim_a * dim_b) + 1j * rng.standard_normal(dim_a * dim_b)
    return z / np.linalg.norm(z)


def random_density(dim: int, rank: int | None = None, seed: int = 0) -> np.ndarray:
    """Seeded random density matrix G G^dag / Tr with G of shape dim x rank."""
    if rank is None:
        rank = dim
    if not 1 <= rank <= dim:
        raise ValueError(f"rank {rank!r} must lie in [1, {dim}]")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def save_state(rho: np.ndarray, path: str | Path) -> None:
    """Write a density matrix as JSON with dim, re and im fields.

    Entries are emitted with 17 significant digits, enough to round-trip
    IEEE doubles exactly.
    """
    rho = np.asarray(rho, dtype=complex)
    problems = validate_density(rho)
    if problems:
        raise StateFileError(
            "refusing to save an invalid density matrix: " + "; ".join(problems)
        )
    n = rho.shape[0]

    def block(part: np.ndarray) -> str:
        rows = [
            "    [" + ", ".join(f"{x:.17g}" for x in row) + "]" for row in part
        ]
        return ",\n".join(rows)

    text = (
        "{\n"
        f'  "dim": {n},\n'
        '  "re": [\n' + block(rho.real) + "\n  ],\n"
        '  "im": [\n' + block(rho.imag) + "\n  ]\n"
        "}\n"
    )
    Path(path).write_text(text)


def load_state(path: str | Path) -> np.ndarray:
    """Read a density matrix written by save_state, validating all invariants."""
    try:
        payload = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path}: not valid JSON ({exc})") from exc
    for key in ("dim", "re", "im"):
        if key not in payload:
            raise StateFileError(f"{path}: missing field {key!r}")
    n = int(payload["dim"])
    re = np.asarray(payload["re"], dtype=float)
    im = np.asarray(payload["im"], dtype=float)
    if re.shape != (n, n) or im.shape != (n, n):
        raise StateFileError(
            f"{path}: re/im shapes {re.shape}/{im.shape} do not match dim {n}"
        )
    rho = re + 1j * im
    problems = validate_density(rho)
    if problems:
        raise StateFileError(f"{path}: invalid density matrix: " + "; ".join(problems))
    return rho
