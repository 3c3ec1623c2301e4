"""Pure numpy implementation of the batched kernels (fallback backend).

Array conventions match the compiled module: ``basis[n, l, i]`` is
component ``l`` of basis vector ``i`` as ``(x, y)`` parts, ``state[n, l]`` is
component ``l`` of the state, and ``sigma`` is the square of the unit.
"""
import numpy as np


def _mul(a, b, sigma):
    return np.stack(
        [a[..., 0] * b[..., 0] + sigma * a[..., 1] * b[..., 1],
         a[..., 0] * b[..., 1] + a[..., 1] * b[..., 0]],
        axis=-1,
    )


def _conj(a):
    out = a.copy()
    out[..., 1] *= -1.0
    return out


def _sq(a, sigma):
    return a[..., 0] ** 2 - sigma * a[..., 1] ** 2


def born_tables(basis, state, sigma):
    """Return ``(priors, b_priors, singles, pair_num)`` for every instance.

    ``pair_num[n, l, c]`` is ``|psi_{l,k} + psi_{l,j}|^2`` for the c-th
    unordered pair ``(k, j)`` in ``(0, 1), (0, 2), (1, 2)``.
    """
    basis = np.ascontiguousarray(basis, dtype=np.float64)
    state = np.ascontiguousarray(state, dtype=np.float64)
    sigma = float(sigma)
    # <e_i|psi> = sum_l conj(basis[l, i]) * state[l]
    ov = _mul(_conj(basis), state[:, :, None, :], sigma).sum(axis=1)
    priors = _sq(ov, sigma)
    singles = _sq(basis, sigma)
    b_priors = _sq(state, sigma)
    # psi_{l,i} = conj(<e_i|psi>) * conj(basis[l, i])
    sub = _mul(_conj(ov)[:, None, :, :], _conj(basis), sigma)
    pair_num = np.stack(
        [_sq(sub[:, :, k] + sub[:, :, j], sigma) for k, j in ((0, 1), (0, 2), (1, 2))],
        axis=-1,
    )
    return priors, b_priors, singles, pair_num


def gram_residual(mats, sigma):
    """Max-norm of ``U^* U - I`` for each matrix in the batch."""
    mats = np.ascontiguousarray(mats, dtype=np.float64)
    sigma = float(sigma)
    g = _mul(_conj(mats)[:, :, :, None, :], mats[:, :, None, :, :], sigma).sum(axis=1)
    g[:, [0, 1, 2], [0, 1, 2], 0] -= 1.0
    return np.abs(g).max(axis=(1, 2, 3))
