# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels for the two hot loops: 2**n spin-state enumeration and
noisy phase-walk Monte Carlo. Mirrors sarlab._core_py exactly (same splitmix64
stream consumption), modulo floating-point summation order in the enumeration.
"""

from libc.math cimport exp, log
from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #include <stdint.h>

    static const uint64_t SARLAB_GOLDEN = 0x9E3779B97F4A7C15ULL;

    static inline uint64_t sarlab_mix64(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static inline uint64_t sarlab_stream_at(uint64_t seed, uint64_t index) {
        return sarlab_mix64(seed + (index + 1) * SARLAB_GOLDEN);
    }
    """
    ctypedef unsigned long long uint64_t
    uint64_t sarlab_mix64(uint64_t z) nogil
    uint64_t sarlab_stream_at(uint64_t seed, uint64_t index) nogil
    const uint64_t SARLAB_GOLDEN

DEF DOUBLE_SCALE = 1.1102230246251565e-16  # 2**-53


cdef inline double _to_double(uint64_t x) nogil:
    return <double>(x >> 11) * DOUBLE_SCALE


def sk_log_prob_up(double[::1] couplings, int n, double h):
    """log p[all-up] = -E[all-up] - log Z over all 2**n spin states.

    Walks the states in Gray-code order (one spin flip per step), updating
    the energy and per-spin local fields incrementally, with a streaming
    log-sum-exp for log Z. O(2**n * n) time, O(n**2) memory.
    """
    cdef int n_pairs = n * (n - 1) // 2
    if couplings.shape[0] != n_pairs:
        raise ValueError("couplings length does not match n")

    cdef double *full = <double *> malloc(n * n * sizeof(double))
    cdef double *field = <double *> malloc(n * sizeof(double))
    cdef signed char *spin = <signed char *> malloc(n)
    if full == NULL or field == NULL or spin == NULL:
        free(full); free(field); free(spin)
        raise MemoryError()

    cdef int i, j, k
    cdef unsigned long long state, total
    cdef double e, e_up, x, m, acc, de, sk
    cdef double coupling_sum = 0.0
    try:
        with nogil:
            k = 0
            for i in range(n):
                full[i * n + i] = 0.0
            for i in range(n):
                for j in range(i + 1, n):
                    full[i * n + j] = couplings[k]
                    full[j * n + i] = couplings[k]
                    coupling_sum += couplings[k]
                    k += 1
            for i in range(n):
                spin[i] = 1
                field[i] = 0.0
                for j in range(n):
                    field[i] += full[i * n + j]

            e_up = -coupling_sum - h * n
            e = e_up
            m = -e
            acc = 1.0
            total = (<unsigned long long> 1) << n
            for state in range(1, total):
                # flipped bit = count of trailing zeros of the state index
                k = 0
                while not (state >> k) & 1:
                    k += 1
                sk = spin[k]
                e += 2.0 * sk * (field[k] + h)
                spin[k] = <signed char> (-spin[k])
                sk = -2.0 * sk
                for j in range(n):
                    field[j] += sk * full[k * n + j]
                x = -e
                if x > m:
                    acc = acc * exp(m - x) + 1.0
                    m = x
                else:
                    acc += exp(x - m)
        return -e_up - (m + log(acc))
    finally:
        free(full)
        free(field)
        free(spin)


def phase_walk_hits(double p_err, int steps, long long trials, unsigned long long seed):
    """Count noisy phase-accumulation walks ending on the true product phase.

    Stream layout matches sarlab._core_py.phase_walk_hits bit for bit.
    """
    cdef long long t, hits = 0
    cdef int j, mult, register, truth
    cdef uint64_t child, o0, o1, o2
    cdef double u
    with nogil:
        for t in range(trials):
            child = sarlab_stream_at(seed, <uint64_t> t)
            register = 0
            truth = 0
            for j in range(steps):
                o0 = sarlab_stream_at(child, <uint64_t> (3 * j))
                o1 = sarlab_stream_at(child, <uint64_t> (3 * j + 1))
                o2 = sarlab_stream_at(child, <uint64_t> (3 * j + 2))
                mult = <int> (o0 >> 62)
                truth = (truth + mult) & 3
                register = (register + mult) & 3
                u = _to_double(o1)
                if u < p_err:
                    register = (register + 1 + <int> (3.0 * _to_double(o2))) & 3
            if register == truth:
                hits += 1
    return hits
