"""Encoding and a bounded brute-force oracle for the free distance.

The oracle enumerates every nonzero message of total degree at most a cap
D, modulo two weight-preserving symmetries (leading-coefficient scaling
and monomial shifts), and reports the minimum codeword weight found with
its witness.  Since only a subset of messages is covered, the result
always satisfies min_weight_found >= d_free(C).

Messages are enumerated by strata: the stratum of a coefficient vector is
the flat index of its first nonzero coefficient (component-major, terms in
canonical order).  Strata are scanned in ascending order; within a
stratum, tail coefficients count up in base q.  This order is what makes
reports deterministic and independent of the worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .multipoly import Polynomial, PolyMatrix, monomials_upto, term_key


@dataclass(frozen=True)
class DistanceReport:
    min_weight_found: int
    cap: int
    messages_tried: int
    witness_message: PolyMatrix
    below_bound: bool

    def to_json(self) -> dict:
        return {
            "min_weight": self.min_weight_found,
            "cap": self.cap,
            "messages_tried": self.messages_tried,
            "witness": [p.to_json() for p in self.witness_message.entries[0]],
            "below_bound": self.below_bound,
        }


def encode(u: PolyMatrix, G: PolyMatrix) -> PolyMatrix:
    """Codeword u * G for a 1 x k message and k x n generator."""
    if u.rows != 1:
        raise ValueError("message must be a single row")
    return u @ G


def codeword_weight_profile(G: PolyMatrix) -> list[tuple[int, int]]:
    """Weight of each generator row viewed as a codeword; rows numbered from 1."""
    return [
        (i + 1, sum(p.weight() for p in row)) for i, row in enumerate(G.entries)
    ]


@dataclass(frozen=True)
class _StratumResult:
    min_weight: Optional[int]
    witness: Optional[tuple[int, ...]]
    tried: int
    stopped: bool


class _Enumerator:
    """Shared geometry for the message enumeration of one (G, cap) pair."""

    def __init__(self, G: PolyMatrix, cap: int):
        self.G = G
        self.F = G.field
        self.k, self.n, self.m = G.rows, G.cols, G.m
        self.cap = cap
        self.monomials = monomials_upto(cap, self.m)
        self.s = len(self.monomials)
        self.dim = self.k * self.s
        # Output monomial set: every alpha + beta reachable from the cap
        # monomials and the generator supports.
        out = set()
        for alpha in self.monomials:
            for row in G.entries:
                for p in row:
                    for beta in p.terms:
                        out.add(tuple(a + b for a, b in zip(alpha, beta)))
        self.out_monomials = sorted(out, key=term_key)
        self.T = len(self.out_monomials)
        out_idx = {g: t for t, g in enumerate(self.out_monomials)}
        # Linear encode map: coefficient vector (k*s) -> codeword coefficients
        # (n*T), over GF(p).  Prime fields only; extension fields take the
        # scalar path.
        self.prime = self.F.e == 1
        if self.prime:
            M = np.zeros((self.dim, self.n * self.T), dtype=np.int64)
            for j in range(self.k):
                for a, alpha in enumerate(self.monomials):
                    for i in range(self.n):
                        for beta, cf in G.entries[j][i].terms.items():
                            g = tuple(x + y for x, y in zip(alpha, beta))
                            M[j * self.s + a, i * self.T + out_idx[g]] += cf
            self.M = M % self.F.p
        # Flat coefficient positions whose monomial has exponent 0 in each
        # variable, for the monomial-shift normalization.
        self.zero_exp_positions = [
            np.array(
                [j * self.s + a for j in range(self.k)
                 for a, alpha in enumerate(self.monomials) if alpha[v] == 0],
                dtype=np.int64,
            )
            for v in range(self.m)
        ]

    def message_from_vector(self, c) -> PolyMatrix:
        polys = []
        for j in range(self.k):
            terms = {}
            for a, alpha in enumerate(self.monomials):
                cf = int(c[j * self.s + a])
                if cf:
                    terms[alpha] = cf
            polys.append(Polynomial(self.F, self.m, terms))
        return PolyMatrix(self.F, self.m, [polys])

    # -- one stratum ------------------------------------------------------

    def scan_stratum(
        self,
        p0: int,
        normalize: bool,
        stop_below: Optional[int],
        batch_size: int,
    ) -> _StratumResult:
        if self.prime:
            return self._scan_stratum_numpy(p0, normalize, stop_below, batch_size)
        return self._scan_stratum_scalar(p0, normalize, stop_below)

    def _shift_keep_mask(self, C: np.ndarray) -> np.ndarray:
        keep = np.ones(len(C), dtype=bool)
        for pos in self.zero_exp_positions:
            keep &= (C[:, pos] != 0).any(axis=1)
        return keep

    def _scan_stratum_numpy(self, p0, normalize, stop_below, batch_size):
        q = self.F.q
        tail = self.dim - 1 - p0
        leads = [1] if normalize else list(range(1, q))
        best: Optional[int] = None
        witness = None
        tried = 0
        for lead in leads:
            total = q**tail
            for start in range(0, total, batch_size):
                end = min(start + batch_size, total)
                idx = np.arange(start, end, dtype=np.int64)
                C = np.zeros((end - start, self.dim), dtype=np.int64)
                C[:, p0] = lead
                rem = idx
                for d in range(tail - 1, -1, -1):
                    C[:, p0 + 1 + d] = rem % q
                    rem = rem // q
                if normalize and self.m > 0:
                    C = C[self._shift_keep_mask(C)]
                if not len(C):
                    continue
                tried += len(C)
                W = (C @ self.M) % self.F.p
                w = np.count_nonzero(W, axis=1)
                i = int(np.argmin(w))
                if best is None or int(w[i]) < best:
                    best = int(w[i])
                    witness = tuple(int(x) for x in C[i])
                if stop_below is not None and best < stop_below:
                    return _StratumResult(best, witness, tried, True)
        return _StratumResult(best, witness, tried, False)

    def _scan_stratum_scalar(self, p0, normalize, stop_below):
        from itertools import product

        q = self.F.q
        tail = self.dim - 1 - p0
        leads = [1] if normalize else list(range(1, q))
        best: Optional[int] = None
        witness = None
        tried = 0
        for lead in leads:
            for digits in product(range(q), repeat=tail):
                c = (0,) * p0 + (lead,) + digits
                if normalize and not self._shift_normalized(c):
                    continue
                tried += 1
                u = self.message_from_vector(c)
                w = (u @ self.G).weight()
                if best is None or w < best:
                    best, witness = w, c
                if stop_below is not None and best < stop_below:
                    return _StratumResult(best, witness, tried, True)
        return _StratumResult(best, witness, tried, False)

    def _shift_normalized(self, c) -> bool:
        for pos in self.zero_exp_positions:
            if not any(c[p] for p in pos):
                return False
        return True


def free_distance_estimate(
    G: PolyMatrix,
    cap: int,
    stop_below: Optional[int] = None,
    workers: int = 1,
    normalize: bool = True,
    batch_size: int = 1 << 16,
) -> DistanceReport:
    """Minimum codeword weight over all nonzero messages of total degree
    <= cap, modulo scaling and monomial-shift symmetries.

    With `stop_below`, scanning stops at the first codeword of weight below
    it and the report's `below_bound` flag is set.  Results are identical
    for any `workers` count: strata are reduced in ascending order and the
    witness is the first message (in enumeration order) attaining the
    minimum.
    """
    if cap < 0:
        raise ValueError("degree cap must be >= 0")
    enum = _Enumerator(G, cap)

    def job(p0: int) -> _StratumResult:
        return enum.scan_stratum(p0, normalize, stop_below, batch_size)

    strata = range(enum.dim)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, strata))
    else:
        results = [job(p0) for p0 in strata]

    best: Optional[int] = None
    witness = None
    tried = 0
    below = False
    for res in results:
        tried += res.tried
        if res.min_weight is not None and (best is None or res.min_weight < best):
            best, witness = res.min_weight, res.witness
        if res.stopped:
            below = True
            break

    if best is None:
        raise ValueError("enumeration covered no messages (empty message space)")
    return DistanceReport(
        min_weight_found=best,
        cap=cap,
        messages_tried=tried,
        witness_message=enum.message_from_vector(witness),
        below_bound=below,
    )


def default_cap(k: int, delta: int) -> int:
    """CLI default enumeration cap: delta + 1 for single-row codes, else 1
    (the search space grows as q^(k * C(cap + m, m)))."""
    return delta + 1 if k == 1 else 1
