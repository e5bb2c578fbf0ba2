# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled float kernels for descent and best-first enumeration.

Mirrors ``_kernels_py`` exactly for double precision input, including the
ordering of ties, so the two backends produce identical lists.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.math cimport fabs

from .errors import InvariantViolation, NonTermination

cdef long long SLOPE_LIMIT = 1LL << 61


cdef struct Item:
    double v
    long long p
    long long q
    int has_info
    double av
    long long ap
    long long aq
    double bv
    long long bp
    long long bq


cdef inline void _norm(long long *p, long long *q):
    if q[0] < 0 or (q[0] == 0 and p[0] < 0):
        p[0] = -p[0]
        q[0] = -q[0]


cdef inline int _flip_slope(long long up, long long uq, long long vp, long long vq,
                            long long tp, long long tq, long long *rp, long long *rq) except -1:
    if (fabs(<double>up) + fabs(<double>vp) > SLOPE_LIMIT
            or fabs(<double>uq) + fabs(<double>vq) > SLOPE_LIMIT):
        raise OverflowError("slope exceeds 64-bit range")
    cdef long long p = up + vp, q = uq + vq
    _norm(&p, &q)
    if p == tp and q == tq:
        p = up - vp
        q = uq - vq
        _norm(&p, &q)
    rp[0] = p
    rq[0] = q
    return 0


cdef inline bint _less(Item *a, Item *b):
    if a.v != b.v:
        return a.v < b.v
    if a.p != b.p:
        return a.p < b.p
    return a.q < b.q


cdef class _Heap:
    cdef Item *data
    cdef Py_ssize_t n, cap

    def __cinit__(self, Py_ssize_t cap):
        self.cap = cap if cap > 8 else 8
        self.n = 0
        self.data = <Item *> malloc(self.cap * sizeof(Item))
        if self.data == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.data)

    cdef int push(self, Item it) except -1:
        cdef Item *grown
        if self.n == self.cap:
            grown = <Item *> realloc(self.data, 2 * self.cap * sizeof(Item))
            if grown == NULL:
                raise MemoryError()
            self.data = grown
            self.cap *= 2
        cdef Py_ssize_t i = self.n, parent
        self.n += 1
        while i > 0:
            parent = (i - 1) >> 1
            if _less(&it, &self.data[parent]):
                self.data[i] = self.data[parent]
                i = parent
            else:
                break
        self.data[i] = it
        return 0

    cdef Item pop(self):
        cdef Item top = self.data[0]
        cdef Item last
        cdef Py_ssize_t i = 0, child
        self.n -= 1
        last = self.data[self.n]
        while True:
            child = 2 * i + 1
            if child >= self.n:
                break
            if child + 1 < self.n and _less(&self.data[child + 1], &self.data[child]):
                child += 1
            if _less(&self.data[child], &last):
                self.data[i] = self.data[child]
                i = child
            else:
                break
        if self.n > 0:
            self.data[i] = last
        return top


cdef int _descend(double *v, long long *p, long long *q, double shift, double tol,
                  long long max_steps) except -1:
    cdef long long steps = 0
    cdef int i, j, k, best
    cdef double gain, best_gain, nv
    cdef long long bp, bq, rp, rq
    while True:
        if steps >= max_steps:
            raise NonTermination("descent did not finish in %d steps" % max_steps)
        best = -1
        best_gain = 0.0
        for i in range(3):
            j = (i + 1) % 3
            k = (i + 2) % 3
            gain = v[i] - (v[j] * v[k] - v[i] - shift)
            if gain <= 0 or (tol != 0 and gain <= tol * fabs(v[i])):
                continue
            if best < 0 or gain > best_gain or (gain == best_gain and (
                    p[i] < bp or (p[i] == bp and q[i] < bq))):
                best = i
                best_gain = gain
                bp = p[i]
                bq = q[i]
        if best < 0:
            return 0
        j = (best + 1) % 3
        k = (best + 2) % 3
        nv = v[j] * v[k] - v[best] - shift
        _flip_slope(p[j], q[j], p[k], q[k], p[best], q[best], &rp, &rq)
        v[best] = nv
        p[best] = rp
        q[best] = rq
        steps += 1


def descend(vals, slopes, double shift, double tol=0.0, long long max_steps=1000000):
    cdef double v[3]
    cdef long long p[3]
    cdef long long q[3]
    cdef int i
    for i in range(3):
        v[i] = vals[i]
        p[i] = slopes[i][0]
        q[i] = slopes[i][1]
    _descend(v, p, q, shift, tol, max_steps)
    return (v[0], v[1], v[2]), ((p[0], q[0]), (p[1], q[1]), (p[2], q[2]))


cdef inline bint _gt(double a, double b, double tol):
    if tol != 0:
        return a > b * (1 - tol)
    return a > b


cdef inline bint _geq(double a, double b, double tol):
    if tol != 0:
        return a >= b * (1 - tol)
    return a >= b


def enumerate_values(vals, slopes, double shift, Py_ssize_t k, double tol=0.0, bint check=True):
    """The ``k`` smallest regions as a list of ``(value, p, q)``."""
    cdef double v[3]
    cdef long long p[3]
    cdef long long q[3]
    cdef int i, j, l, side
    cdef Item it, top
    cdef double xv, yv, child
    cdef long long xp, xq, yp, yq, cp, cq
    out = []
    if k <= 0:
        return out
    for i in range(3):
        v[i] = vals[i]
        p[i] = slopes[i][0]
        q[i] = slopes[i][1]
    _descend(v, p, q, shift, tol, 1000000)

    cdef _Heap heap = _Heap(2 * k + 8)
    for i in range(3):
        it.v = v[i]
        it.p = p[i]
        it.q = q[i]
        it.has_info = 0
        heap.push(it)
    for i in range(3):
        j = (i + 1) % 3
        l = (i + 2) % 3
        it.v = v[j] * v[l] - v[i] - shift
        _flip_slope(p[j], q[j], p[l], q[l], p[i], q[i], &it.p, &it.q)
        if check and not (_geq(it.v, v[j], tol) and _geq(it.v, v[l], tol)):
            raise InvariantViolation("first flip %r below its parents" % it.v)
        it.has_info = 1
        it.av = v[j]
        it.ap = p[j]
        it.aq = q[j]
        it.bv = v[l]
        it.bp = p[l]
        it.bq = q[l]
        heap.push(it)

    while heap.n > 0 and len(out) < k:
        top = heap.pop()
        out.append((top.v, top.p, top.q))
        if not top.has_info:
            continue
        for side in range(2):
            if side == 0:
                xv, xp, xq, yv, yp, yq = top.av, top.ap, top.aq, top.bv, top.bp, top.bq
            else:
                xv, xp, xq, yv, yp, yq = top.bv, top.bp, top.bq, top.av, top.ap, top.aq
            child = xv * top.v - yv - shift
            _flip_slope(xp, xq, top.p, top.q, yp, yq, &cp, &cq)
            if check and not (_gt(child, top.v, tol) and _gt(child, xv, tol)):
                raise InvariantViolation(
                    "frontier not monotone: child %r of (%r, %r)" % (child, xv, top.v))
            it.v = child
            it.p = cp
            it.q = cq
            it.has_info = 1
            it.av = xv
            it.ap = xp
            it.aq = xq
            it.bv = top.v
            it.bp = top.p
            it.bq = top.q
            heap.push(it)
    return out
