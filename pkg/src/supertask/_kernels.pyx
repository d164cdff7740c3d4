# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels.  Mirrors ``_pykernels`` exactly."""
from libc.stdlib cimport malloc, free


def rho(successors, Py_ssize_t start):
    cdef Py_ssize_t n = len(successors)
    cdef Py_ssize_t *succ = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t *seen = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t i, x, step = 0
    if succ == NULL or seen == NULL:
        free(succ)
        free(seen)
        raise MemoryError()
    try:
        for i in range(n):
            succ[i] = successors[i]
            seen[i] = -1
        x = start
        while seen[x] < 0:
            seen[x] = step
            step += 1
            x = succ[x]
        return seen[x], step - seen[x]
    finally:
        free(succ)
        free(seen)


def spigot_digits(Py_ssize_t count):
    if count <= 0:
        return []
    cdef Py_ssize_t size = 10 * count // 3 + 1
    # largest intermediate is about 10 * 2 * size + q * size, well inside int64
    cdef long long *a = <long long *> malloc(size * sizeof(long long))
    cdef long long q, x, d
    cdef Py_ssize_t i, j
    cdef long long predigit = 0, nines = 0
    if a == NULL:
        raise MemoryError()
    out = []
    try:
        for i in range(size):
            a[i] = 2
        for j in range(count + 1):
            q = 0
            for i in range(size - 1, 0, -1):
                x = 10 * a[i] + q * (i + 1)
                d = 2 * i + 1
                q = x // d
                a[i] = x % d
            x = 10 * a[0] + q
            q = x // 10
            a[0] = x % 10
            if q == 9:
                nines += 1
            elif q == 10:
                out.append(predigit + 1)
                out.extend([0] * nines)
                predigit = 0
                nines = 0
            else:
                out.append(predigit)
                out.extend([9] * nines)
                predigit = q
                nines = 0
        out.append(predigit)
        out.extend([9] * nines)
    finally:
        free(a)
    return out[1:count + 1]


def period_scan(seq, Py_ssize_t max_tail, Py_ssize_t max_period):
    cdef Py_ssize_t n = len(seq)
    cdef long long *s = <long long *> malloc((n + 1) * sizeof(long long))
    cdef Py_ssize_t mu, k, i
    if s == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            s[i] = seq[i]
        for mu in range(max_tail + 1):
            for k in range(1, max_period + 1):
                i = mu
                while i + k < n and s[i] == s[i + k]:
                    i += 1
                if i + k >= n:
                    return mu, k
        return None
    finally:
        free(s)
