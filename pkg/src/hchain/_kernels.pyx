# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled statevector kernels; semantics documented in _kernels_py."""

import numpy as np

from libc.math cimport cos, sin

ctypedef double complex cplx


cdef inline cplx _ipow(int ny_mod4):
    if ny_mod4 == 0:
        return 1.0 + 0j
    elif ny_mod4 == 1:
        return 1j
    elif ny_mod4 == 2:
        return -1.0 + 0j
    return -1j


def apply_pauli(cplx[::1] amps, Py_ssize_t x_mask, const signed char[::1] signs, int ny_mod4):
    cdef Py_ssize_t n = amps.shape[0]
    out_arr = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] out = out_arr
    cdef cplx iph = _ipow(ny_mod4)
    cdef Py_ssize_t b
    for b in range(n):
        out[b ^ x_mask] = iph * signs[b] * amps[b]
    return out_arr


def pauli_exp_inplace(cplx[::1] amps, Py_ssize_t x_mask, const signed char[::1] signs, int ny_mod4, double theta):
    cdef Py_ssize_t n = amps.shape[0]
    cdef double c = cos(theta)
    cdef cplx mis = -1j * sin(theta)
    cdef cplx iph = _ipow(ny_mod4)
    cdef Py_ssize_t b, partner
    cdef cplx ab, ap
    if x_mask == 0:
        # Diagonal string: eigenvalue signs[b] (ny is 0 without X/Y letters).
        for b in range(n):
            if signs[b] > 0:
                amps[b] = amps[b] * (c + mis)
            else:
                amps[b] = amps[b] * (c - mis)
        return
    for b in range(n):
        partner = b ^ x_mask
        if partner < b:
            continue
        ab = amps[b]
        ap = amps[partner]
        amps[b] = c * ab + mis * iph * signs[partner] * ap
        amps[partner] = c * ap + mis * iph * signs[b] * ab
