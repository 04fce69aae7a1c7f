# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction and rank kernels.

Same contracts as ``_pykernel``.  Polynomials are packed into row-major
``uint32`` buffers, one row per term, sorted descending.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport uint32_t, uint64_t


cdef inline int cmp_row(const uint32_t* a, const uint32_t* b, int nv) noexcept nogil:
    cdef int i
    for i in range(nv):
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


cdef inline bint divides_row(const uint32_t* a, const uint32_t* b, int nv) noexcept nogil:
    cdef int i
    for i in range(nv):
        if a[i] > b[i]:
            return False
    return True


cdef uint32_t* pack_rows(list rows, int nv) except NULL:
    cdef Py_ssize_t n = len(rows), r
    cdef int i
    cdef uint32_t* buf = <uint32_t*> malloc((n if n > 0 else 1) * nv * sizeof(uint32_t) + sizeof(uint32_t))
    if buf == NULL:
        raise MemoryError()
    for r in range(n):
        row = rows[r]
        for i in range(nv):
            buf[r * nv + i] = <uint32_t> row[i]
    return buf


cdef tuple row_tuple(const uint32_t* row, int nv):
    return tuple([row[i] for i in range(nv)])


def top_reduce(list terms, list gens, bint full, long long bound):
    if not terms:
        return [], []
    cdef int nv = len(terms[0])
    cdef Py_ssize_t ng = len(gens), j, jj
    cdef Py_ssize_t n = len(terms), start = 0, cap, out, a, b, need
    cdef uint32_t** gdata = <uint32_t**> malloc((ng + 1) * sizeof(uint32_t*))
    cdef Py_ssize_t* glen = <Py_ssize_t*> malloc((ng + 1) * sizeof(Py_ssize_t))
    cdef uint32_t* cur = NULL
    cdef uint32_t* nxt = NULL
    cdef uint32_t* tmp_swap
    cdef uint32_t* mult = <uint32_t*> malloc(nv * sizeof(uint32_t))
    cdef uint32_t* prod = <uint32_t*> malloc(nv * sizeof(uint32_t))
    cdef uint32_t* lead
    cdef const uint32_t* grow
    cdef int i, c
    cdef uint64_t s
    cdef list rem = []
    cdef list steps = []
    if gdata == NULL or glen == NULL or mult == NULL or prod == NULL:
        raise MemoryError()
    for j in range(ng):
        gdata[j] = NULL
    try:
        for j in range(ng):
            glen[j] = len(gens[j])
            gdata[j] = pack_rows(gens[j], nv)
        cur = pack_rows(terms, nv)
        cap = n if n > 0 else 1
        nxt = <uint32_t*> malloc(cap * nv * sizeof(uint32_t))
        if nxt == NULL:
            raise MemoryError()
        while start < n:
            lead = cur + start * nv
            j = -1
            for jj in range(ng):
                if divides_row(gdata[jj], lead, nv):
                    j = jj
                    break
            if j < 0:
                if not full:
                    break
                rem.append(row_tuple(lead, nv))
                start += 1
                continue
            for i in range(nv):
                mult[i] = lead[i] - gdata[j][i]
            need = (n - start - 1) + (glen[j] - 1)
            if need > cap:
                cap = need * 2
                tmp_swap = <uint32_t*> realloc(nxt, cap * nv * sizeof(uint32_t))
                if tmp_swap == NULL:
                    raise MemoryError()
                nxt = tmp_swap
            a = start + 1
            b = 1
            out = 0
            while b < glen[j]:
                grow = gdata[j] + b * nv
                for i in range(nv):
                    s = <uint64_t> mult[i] + grow[i]
                    if s >= <uint64_t> bound:
                        raise OverflowError(f"exponent bound {bound} reached during reduction")
                    prod[i] = <uint32_t> s
                while a < n:
                    c = cmp_row(cur + a * nv, prod, nv)
                    if c > 0:
                        memcpy(nxt + out * nv, cur + a * nv, nv * sizeof(uint32_t))
                        out += 1
                        a += 1
                    else:
                        break
                if a < n and c == 0:
                    a += 1
                else:
                    memcpy(nxt + out * nv, prod, nv * sizeof(uint32_t))
                    out += 1
                b += 1
            if a < n:
                memcpy(nxt + out * nv, cur + a * nv, (n - a) * nv * sizeof(uint32_t))
                out += n - a
            steps.append((row_tuple(mult, nv), j))
            tmp_swap = cur
            cur = nxt
            nxt = tmp_swap
            # cur's old buffer may be smaller than cap; keep both at cap
            tmp_swap = <uint32_t*> realloc(nxt, cap * nv * sizeof(uint32_t))
            if tmp_swap == NULL:
                raise MemoryError()
            nxt = tmp_swap
            n = out
            start = 0
        for a in range(start, n):
            rem.append(row_tuple(cur + a * nv, nv))
        return rem, steps
    finally:
        for j in range(ng):
            if gdata[j] != NULL:
                free(gdata[j])
        free(gdata)
        free(glen)
        free(mult)
        free(prod)
        if cur != NULL:
            free(cur)
        if nxt != NULL:
            free(nxt)


def gf2_rank(list rows):
    cdef Py_ssize_t nrows = len(rows), r, p, rank = 0, q
    if nrows == 0:
        return 0
    cdef Py_ssize_t nbits = max([row.bit_length() for row in rows])
    if nbits == 0:
        return 0
    cdef Py_ssize_t nw = (nbits + 63) // 64, w, col, k
    cdef uint64_t bit
    cdef uint64_t* mat = <uint64_t*> malloc(nrows * nw * sizeof(uint64_t))
    cdef uint64_t* tmp = <uint64_t*> malloc(nw * sizeof(uint64_t))
    cdef bytes raw
    if mat == NULL or tmp == NULL:
        raise MemoryError()
    try:
        for r in range(nrows):
            raw = (<object> rows[r]).to_bytes(nw * 8, "little")
            memcpy(mat + r * nw, <char*> raw, nw * 8)
        with nogil:
            col = nbits - 1
            while col >= 0 and rank < nrows:
                w = col >> 6
                bit = (<uint64_t> 1) << (col & 63)
                p = -1
                for r in range(rank, nrows):
                    if mat[r * nw + w] & bit:
                        p = r
                        break
                if p >= 0:
                    if p != rank:
                        memcpy(tmp, mat + p * nw, nw * 8)
                        memcpy(mat + p * nw, mat + rank * nw, nw * 8)
                        memcpy(mat + rank * nw, tmp, nw * 8)
                    for r in range(rank + 1, nrows):
                        if mat[r * nw + w] & bit:
                            for k in range(w + 1):
                                mat[r * nw + k] ^= mat[rank * nw + k]
                    rank += 1
                col -= 1
        return rank
    finally:
        free(mat)
        free(tmp)
