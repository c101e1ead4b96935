"""Shared face-flux sweep used by the 1-D and 2-D drivers.

Input arrays carry the sweep direction on the last axis and include two
ghost layers on each end.  For m cells the sweep returns fluxes at the
m-3 faces between cells (j, j+1), j = 1..m-3, i.e. every face that
borders at least one interior cell.
"""

import numpy as np

from . import flux as riemann
from . import reconstruct, state
from .gravity import psi_stencil


def _slot(a, k, m):
    """Stencil slot k in 0..3 (cells j-1, j, j+1, j+2 for each face)."""
    return a[..., k:m - 3 + k]


def wb_face_fluxes(vext, phie, eos, kappa=2.0, recon="muscl_minmod", axis=0):
    """Well-balanced fluxes: reconstruct in face-relative scaled variables."""
    vext = np.asarray(vext, dtype=float)
    phie = np.asarray(phie, dtype=float)
    m = vext.shape[-1]
    theta = vext[-1] / vext[0]
    psi = psi_stencil(
        *(_slot(phie, k, m) for k in range(4)),
        *(_slot(theta, k, m) for k in range(4)),
    )
    w_m1 = state.to_w(_slot(vext, 0, m), psi.m1)
    w_0 = state.to_w(_slot(vext, 1, m), psi.c0)
    w_p1 = state.to_w(_slot(vext, 2, m), psi.p1)
    w_p2 = state.to_w(_slot(vext, 3, m), psi.p2)
    wL, wR = reconstruct.face_states(w_m1, w_0, w_p1, w_p2, kappa, recon)
    # psi is zero at the face itself, so wL/wR already are primitive states
    return riemann.hllc(wL, wR, eos, axis)


def nwb_face_fluxes(qext, eos, kappa=2.0, recon="muscl_minmod", axis=0):
    """Comparator fluxes: reconstruct the conserved variables directly."""
    qext = np.asarray(qext, dtype=float)
    m = qext.shape[-1]
    qL, qR = reconstruct.face_states(
        *(_slot(qext, k, m) for k in range(4)), kappa, recon
    )
    vL = state.cons_to_prim(qL, eos)
    vR = state.cons_to_prim(qR, eos)
    return riemann.hllc(vL, vR, eos, axis)
