# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled counting kernel for the matrix-point oracle.

Contract identical to ``_kernels_py.nullity_histogram``; see that module for
the full description.  This version keeps the A odometer, the power table,
and the stacked linear system in flat C arrays.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

COMPILED = True


cdef inline long long _mod(long long x, long long p) nogil:
    cdef long long r = x % p
    if r < 0:
        r += p
    return r


def nullity_histogram(int n, int p, long long start, long long stop,
                      a_filters, b_relations, int max_pow):
    cdef int nn = n * n
    cdef int ncols = nn + 1
    cdef long long i, j, k, l, idx, count

    hist = [0] * (nn + 1)
    cdef long long rejected = 0
    cdef long long inconsistent = 0
    if stop <= start:
        return hist, 0, 0
    if nn == 0:
        hist[0] = stop - start
        return hist, 0, 0

    # flatten the filter relations: per relation a list of (coeff, exp)
    cdef int n_filters = len(a_filters)
    cdef int total_fterms = 0
    for rel in a_filters:
        total_fterms += len(rel)
    cdef int *f_off = <int *> malloc((n_filters + 1) * sizeof(int))
    cdef long long *f_coeff = <long long *> malloc(max(total_fterms, 1) * sizeof(long long))
    cdef int *f_exp = <int *> malloc(max(total_fterms, 1) * sizeof(int))
    cdef int pos = 0
    cdef int r_i = 0
    f_off[0] = 0
    for rel in a_filters:
        for coeff, exp in rel:
            f_coeff[pos] = coeff % p
            f_exp[pos] = exp
            pos += 1
        r_i += 1
        f_off[r_i] = pos

    # flatten the B-linear relations: linear terms (coeff, pre, post) and
    # constant terms (coeff, exp)
    cdef int n_brel = len(b_relations)
    cdef int total_lin = 0
    cdef int total_con = 0
    for lin, con in b_relations:
        total_lin += len(lin)
        total_con += len(con)
    cdef int *l_off = <int *> malloc((n_brel + 1) * sizeof(int))
    cdef int *c_off = <int *> malloc((n_brel + 1) * sizeof(int))
    cdef long long *l_coeff = <long long *> malloc(max(total_lin, 1) * sizeof(long long))
    cdef int *l_pre = <int *> malloc(max(total_lin, 1) * sizeof(int))
    cdef int *l_post = <int *> malloc(max(total_lin, 1) * sizeof(int))
    cdef long long *c_coeff = <long long *> malloc(max(total_con, 1) * sizeof(long long))
    cdef int *c_exp = <int *> malloc(max(total_con, 1) * sizeof(int))
    cdef int lpos = 0, cpos = 0
    r_i = 0
    l_off[0] = 0
    c_off[0] = 0
    for lin, con in b_relations:
        for coeff, pre, post in lin:
            l_coeff[lpos] = coeff % p
            l_pre[lpos] = pre
            l_post[lpos] = post
            lpos += 1
        for coeff, exp in con:
            c_coeff[cpos] = coeff % p
            c_exp[cpos] = exp
            cpos += 1
        r_i += 1
        l_off[r_i] = lpos
        c_off[r_i] = cpos

    cdef long long *hist_c = <long long *> calloc(nn + 1, sizeof(long long))
    cdef long long *a = <long long *> calloc(nn, sizeof(long long))
    cdef long long *pows = <long long *> malloc((max_pow + 1) * nn * sizeof(long long))
    cdef long long *tmp = <long long *> malloc(nn * sizeof(long long))
    cdef int nrows_max = n_brel * nn
    cdef long long *rows = <long long *> malloc(max(nrows_max, 1) * ncols * sizeof(long long))
    cdef long long *inv_table = <long long *> malloc(p * sizeof(long long))

    # multiplicative inverses mod p by Fermat
    inv_table[0] = 0
    cdef long long v, acc, e
    for i in range(1, p):
        acc = 1
        v = i
        e = p - 2
        while e:
            if e & 1:
                acc = acc * v % p
            v = v * v % p
            e >>= 1
        inv_table[i] = acc

    # decode the starting odometer state (entry (0,0) least significant)
    idx = start
    for i in range(nn):
        a[i] = idx % p
        idx //= p

    cdef long long step, coeff_c, f, rhs, piv_val
    cdef int d, rank, piv, col, rr, t, tpre, tpost
    cdef bint ok, bad
    cdef long long *prow
    cdef long long *wrow
    cdef int nrows

    for step in range(start, stop):
        # power table: pows[0] = identity, pows[e] = A^e
        memset(pows, 0, (max_pow + 1) * nn * sizeof(long long))
        for i in range(n):
            pows[i * n + i] = 1 % p
        for e in range(1, max_pow + 1):
            # tmp = pows[e-1] * A
            for i in range(n):
                for j in range(n):
                    acc = 0
                    for k in range(n):
                        acc += pows[(e - 1) * nn + i * n + k] * a[k * n + j]
                    tmp[i * n + j] = acc % p
            memcpy(pows + e * nn, tmp, nn * sizeof(long long))

        ok = True
        for r_i in range(n_filters):
            for i in range(nn):
                acc = 0
                for t in range(f_off[r_i], f_off[r_i + 1]):
                    acc += f_coeff[t] * pows[f_exp[t] * nn + i]
                if acc % p:
                    ok = False
                    break
            if not ok:
                break

        if not ok:
            rejected += 1
        else:
            nrows = 0
            for r_i in range(n_brel):
                for i in range(n):
                    for j in range(n):
                        wrow = rows + nrows * ncols
                        memset(wrow, 0, ncols * sizeof(long long))
                        for t in range(l_off[r_i], l_off[r_i + 1]):
                            coeff_c = l_coeff[t]
                            tpre = l_pre[t]
                            tpost = l_post[t]
                            for k in range(n):
                                f = coeff_c * pows[tpre * nn + i * n + k] % p
                                if f:
                                    for l in range(n):
                                        wrow[k * n + l] = (
                                            wrow[k * n + l]
                                            + f * pows[tpost * nn + l * n + j]
                                        ) % p
                        rhs = 0
                        for t in range(c_off[r_i], c_off[r_i + 1]):
                            rhs -= c_coeff[t] * pows[c_exp[t] * nn + i * n + j]
                        wrow[nn] = _mod(rhs, p)
                        nrows += 1

            rank = 0
            for col in range(nn):
                piv = -1
                for rr in range(rank, nrows):
                    if rows[rr * ncols + col]:
                        piv = rr
                        break
                if piv < 0:
                    continue
                if piv != rank:
                    for t in range(ncols):
                        acc = rows[rank * ncols + t]
                        rows[rank * ncols + t] = rows[piv * ncols + t]
                        rows[piv * ncols + t] = acc
                prow = rows + rank * ncols
                piv_val = inv_table[prow[col]]
                if piv_val != 1:
                    for t in range(col, ncols):
                        prow[t] = prow[t] * piv_val % p
                for rr in range(nrows):
                    if rr != rank:
                        f = rows[rr * ncols + col]
                        if f:
                            wrow = rows + rr * ncols
                            for t in range(col, ncols):
                                wrow[t] = _mod(wrow[t] - f * prow[t], p)
                rank += 1
                if rank == nrows:
                    break
            bad = False
            for rr in range(rank, nrows):
                if rows[rr * ncols + nn]:
                    bad = True
                    break
            if bad:
                inconsistent += 1
            else:
                hist_c[nn - rank] += 1

        # advance the odometer
        for d in range(nn):
            a[d] += 1
            if a[d] < p:
                break
            a[d] = 0

    for i in range(nn + 1):
        hist[i] = hist_c[i]

    free(f_off)
    free(f_coeff)
    free(f_exp)
    free(l_off)
    free(c_off)
    free(l_coeff)
    free(l_pre)
    free(l_post)
    free(c_coeff)
    free(c_exp)
    free(hist_c)
    free(a)
    free(pows)
    free(tmp)
    free(rows)
    free(inv_table)

    return hist, rejected, inconsistent
