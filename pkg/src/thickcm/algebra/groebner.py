"""Buchberger's algorithm for submodules of free modules ``S^r``.

Vectors are raw dicts (see :mod:`.monomial`).  The engine uses the normal
selection strategy (smallest pair degree first) and the Gebauer-Moeller
installation of Buchberger's chain criterion; the coprime criterion is only
valid in rank one and is applied there only.
"""
import heapq

from . import monomial as mono
from .poly import add_into, scale_dict


class GroebnerEngine:
    """Incremental Groebner basis computation.

    Elements may be added one at a time with :meth:`add`; :meth:`complete`
    processes all pending S-pairs.  ``shifts[pos]`` is the degree of the
    basis vector ``e_pos`` and only steers pair selection.
    """

    def __init__(self, p, shifts=None, rank_one=False):
        self.p = p
        self.shifts = shifts
        self.rank_one = rank_one
        self.polys = []
        self.leads = []
        self.by_pos = {}
        self.pairs = []
        self._counter = 0

    # -- basic helpers ------------------------------------------------------
    def _sugar(self, m):
        return m[1] + (self.shifts[-m[0]] if self.shifts else 0)

    def _monic(self, f):
        m = max(f)
        c = f[m]
        if c != 1:
            inv = pow(c, self.p - 2, self.p) if self.p else 1 / c
            f = scale_dict(f, inv, self.p)
        return f, m

    def find_reducer(self, m):
        for i in self.by_pos.get(m[0], ()):
            if mono.divides(self.leads[i], m):
                return i
        return None

    def reduce(self, f, full=True):
        """Normal form of ``f`` with respect to the current basis."""
        f = dict(f)
        rem = {}
        p = self.p
        polys, leads = self.polys, self.leads
        while f:
            m = max(f)
            i = self.find_reducer(m)
            if i is None:
                if not full:
                    f.update(rem)
                    return f
                rem[m] = f.pop(m)
                continue
            c = f[m]
            add_into(f, polys[i], p, scale=-c, shift=mono.quo(m, leads[i]))
        return rem

    # -- insertion ----------------------------------------------------------
    def preload(self, vecs):
        """Insert vectors already forming a Groebner basis, without pairs.

        Only valid before any other insertion, or when the new vectors'
        S-pairs with everything present are known to reduce to zero.
        """
        for v in vecs:
            if not v:
                continue
            v, m = self._monic(dict(v))
            idx = len(self.polys)
            self.polys.append(v)
            self.leads.append(m)
            self.by_pos.setdefault(m[0], []).append(idx)

    def _insert(self, h):
        h, lh = self._monic(h)
        hi = len(self.polys)
        self.polys.append(h)
        self.leads.append(lh)
        leads = self.leads
        same = self.by_pos.get(lh[0], [])
        cands = [(g, mono.lcm(lh, leads[g])) for g in same]
        kept = []
        for idx, (g, l) in enumerate(cands):
            if self.rank_one and mono.coprime(lh, leads[g]):
                kept.append((g, l, True))
                continue
            if any(mono.divides(l2, l) for _, l2 in cands[idx + 1:]):
                continue
            if any(mono.divides(l2, l) for _, l2, _ in kept):
                continue
            kept.append((g, l, False))
        new_pairs = []
        for entry in self.pairs:
            _, _, l, i, j = entry
            if (l[0] == lh[0] and mono.divides(lh, l)
                    and mono.lcm(leads[i], lh) != l and mono.lcm(leads[j], lh) != l):
                continue
            new_pairs.append(entry)
        for g, l, copr in kept:
            if copr:
                continue
            self._counter += 1
            new_pairs.append((self._sugar(l), self._counter, l, g, hi))
        heapq.heapify(new_pairs)
        self.pairs = new_pairs
        self.by_pos[lh[0]] = [g for g in same if not mono.divides(lh, leads[g])] + [hi]
        return hi

    def add(self, f):
        """Reduce ``f`` and insert the remainder; returns the remainder."""
        r = self.reduce(f)
        if r:
            self._insert(dict(r))
        return r

    def _spoly(self, i, j, l):
        p = self.p
        f = {mono.mul(m, mono.quo(l, self.leads[i])): c for m, c in self.polys[i].items()}
        add_into(f, self.polys[j], p, scale=-1, shift=mono.quo(l, self.leads[j]))
        return f

    def complete(self, max_degree=None):
        """Process S-pairs (optionally only those of degree <= max_degree)."""
        while self.pairs:
            if max_degree is not None and self.pairs[0][0] > max_degree:
                return
            _, _, l, i, j = heapq.heappop(self.pairs)
            s = self._spoly(i, j, l)
            if not s:
                continue
            r = self.reduce(s)
            if r:
                self._insert(r)

    def basis_indices(self):
        return [i for lst in self.by_pos.values() for i in lst]

    def reduced_basis(self):
        """The reduced Groebner basis, sorted by leading monomial (descending)."""
        self.complete()
        idx = sorted(self.basis_indices(), key=lambda i: self.leads[i], reverse=True)
        out = []
        for i in idx:
            f = dict(self.polys[i])
            lm = self.leads[i]
            lc = f.pop(lm)
            tail = self._reduce_excluding(f, i)
            tail[lm] = lc
            out.append(tail)
        # reinstall tail-reduced polys so later reductions stay short
        for i, f in zip(idx, out):
            self.polys[i] = f
        return [dict(f) for f in out]

    def _reduce_excluding(self, f, skip):
        rem = {}
        p = self.p
        while f:
            m = max(f)
            i = None
            for k in self.by_pos.get(m[0], ()):
                if k != skip and mono.divides(self.leads[k], m):
                    i = k
                    break
            if i is None:
                rem[m] = f.pop(m)
                continue
            c = f[m]
            add_into(f, self.polys[i], p, scale=-c, shift=mono.quo(m, self.leads[i]))
        return rem


def groebner(vecs, p, shifts=None, rank_one=False, background=()):
    """Reduced Groebner basis of the span of ``vecs`` plus ``background``.

    ``background`` must already be a Groebner basis (e.g. ``I e_i`` for a
    Groebner basis of ``I``); it is preloaded without forming pairs.
    """
    eng = GroebnerEngine(p, shifts, rank_one)
    eng.preload(background)
    for v in sorted((v for v in vecs if v), key=lambda v: eng._sugar(max(v))):
        eng.add(v)
    return eng.reduced_basis()


def check_buchberger(basis, p):
    """True iff every S-vector of ``basis`` reduces to zero (a GB certificate)."""
    eng = GroebnerEngine(p)
    eng.preload(basis)
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            la, lb = max(basis[a]), max(basis[b])
            if la[0] != lb[0]:
                continue
            l = mono.lcm(la, lb)
            inv_a = pow(basis[a][la], p - 2, p) if p else 1 / basis[a][la]
            inv_b = pow(basis[b][lb], p - 2, p) if p else 1 / basis[b][lb]
            s = {}
            add_into(s, basis[a], p, scale=inv_a, shift=mono.quo(l, la))
            add_into(s, basis[b], p, scale=-inv_b, shift=mono.quo(l, lb))
            if eng.reduce(s):
                return False
    return True
