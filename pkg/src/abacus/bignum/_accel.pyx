# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled magnitude kernel.

Schoolbook multiplication and Knuth algorithm-D division over 32-bit limb
vectors, little-endian limb order.  Values cross the boundary as Python
ints and are (de)serialized with to_bytes/from_bytes, so the conversion
cost is linear while the loops themselves run in C.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdint cimport int64_t, uint32_t, uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

BACKEND = "cython"

cdef uint64_t BASE = 0x100000000u


cdef uint32_t* _limbs_from_int(object n, Py_ssize_t* count) except NULL:
    cdef Py_ssize_t nl = (n.bit_length() + 31) // 32
    if nl == 0:
        nl = 1
    data = n.to_bytes(nl * 4, "little")
    cdef const unsigned char* src = data
    cdef uint32_t* w = <uint32_t*> malloc(nl * sizeof(uint32_t))
    if w == NULL:
        raise MemoryError()
    memcpy(w, src, nl * 4)
    count[0] = nl
    return w


cdef object _int_from_limbs(uint32_t* w, Py_ssize_t n):
    b = PyBytes_FromStringAndSize(<char*> w, n * 4)
    return int.from_bytes(b, "little")


def mul(a, b):
    """Product of two non-negative magnitudes."""
    if a == 0 or b == 0:
        return 0
    cdef Py_ssize_t na = 0, nb = 0, i, j
    cdef uint32_t* u = _limbs_from_int(a, &na)
    cdef uint32_t* v = NULL
    cdef uint32_t* w = NULL
    cdef uint64_t carry, t
    cdef uint32_t ui
    try:
        v = _limbs_from_int(b, &nb)
        w = <uint32_t*> malloc((na + nb) * sizeof(uint32_t))
        if w == NULL:
            raise MemoryError()
        memset(w, 0, (na + nb) * sizeof(uint32_t))
        for i in range(na):
            ui = u[i]
            if ui == 0:
                w[i + nb] = 0
                continue
            carry = 0
            for j in range(nb):
                t = <uint64_t> ui * v[j] + w[i + j] + carry
                w[i + j] = <uint32_t> t
                carry = t >> 32
            w[i + nb] = <uint32_t> carry
        return _int_from_limbs(w, na + nb)
    finally:
        free(u)
        if v != NULL:
            free(v)
        if w != NULL:
            free(w)


def divmod_big(a, b):
    """Quotient and remainder of two non-negative magnitudes."""
    if b == 0:
        raise ZeroDivisionError("integer division by zero")
    if a < b:
        return 0, a
    cdef Py_ssize_t m = 0, n = 0, i, j
    cdef uint32_t* u = _limbs_from_int(a, &m)
    cdef uint32_t* v = NULL
    cdef uint32_t* q = NULL
    cdef uint32_t* un = NULL
    cdef uint32_t* vn = NULL
    cdef uint64_t qhat, rhat, num, p, t2, carry
    cdef int64_t t, k
    cdef int s
    cdef uint32_t vtop
    try:
        v = _limbs_from_int(b, &n)
        q = <uint32_t*> malloc((m - n + 1) * sizeof(uint32_t))
        if q == NULL:
            raise MemoryError()

        if n == 1:
            # short division
            rhat = 0
            vtop = v[0]
            for i in range(m - 1, -1, -1):
                num = (rhat << 32) | u[i]
                q[i] = <uint32_t> (num // vtop)
                rhat = num % vtop
            quo = _int_from_limbs(q, m)
            return quo, int(rhat)

        # normalize so the divisor's top limb has its high bit set
        s = 0
        vtop = v[n - 1]
        while not (vtop & 0x80000000u):
            vtop <<= 1
            s += 1
        vn = <uint32_t*> malloc(n * sizeof(uint32_t))
        un = <uint32_t*> malloc((m + 1) * sizeof(uint32_t))
        if vn == NULL or un == NULL:
            raise MemoryError()
        if s == 0:
            memcpy(vn, v, n * sizeof(uint32_t))
            memcpy(un, u, m * sizeof(uint32_t))
            un[m] = 0
        else:
            for i in range(n - 1, 0, -1):
                vn[i] = (v[i] << s) | (v[i - 1] >> (32 - s))
            vn[0] = v[0] << s
            un[m] = u[m - 1] >> (32 - s)
            for i in range(m - 1, 0, -1):
                un[i] = (u[i] << s) | (u[i - 1] >> (32 - s))
            un[0] = u[0] << s

        for j in range(m - n, -1, -1):
            num = ((<uint64_t> un[j + n]) << 32) | un[j + n - 1]
            qhat = num // vn[n - 1]
            rhat = num % vn[n - 1]
            while qhat >= BASE or qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2]):
                qhat -= 1
                rhat += vn[n - 1]
                if rhat >= BASE:
                    break
            # multiply and subtract
            k = 0
            for i in range(n):
                p = qhat * vn[i]
                t = <int64_t> un[i + j] - k - <int64_t> (p & 0xFFFFFFFFu)
                un[i + j] = <uint32_t> t
                k = <int64_t> (p >> 32) - (t >> 32)
            t = <int64_t> un[j + n] - k
            un[j + n] = <uint32_t> t
            q[j] = <uint32_t> qhat
            if t < 0:
                # qhat was one too large: add the divisor back
                q[j] -= 1
                carry = 0
                for i in range(n):
                    t2 = <uint64_t> un[i + j] + vn[i] + carry
                    un[i + j] = <uint32_t> t2
                    carry = t2 >> 32
                un[j + n] = <uint32_t> (un[j + n] + carry)

        # denormalize the remainder
        if s > 0:
            for i in range(n - 1):
                un[i] = (un[i] >> s) | (un[i + 1] << (32 - s))
            un[n - 1] = un[n - 1] >> s
        quo = _int_from_limbs(q, m - n + 1)
        rem = _int_from_limbs(un, n)
        return quo, rem
    finally:
        free(u)
        if v != NULL:
            free(v)
        if q != NULL:
            free(q)
        if un != NULL:
            free(un)
        if vn != NULL:
            free(vn)
