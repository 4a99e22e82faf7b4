"""Flattening, the generalized Singleton bound, MDS constructions, and
certificates for multidimensional convolutional codes.

The flattening of a polynomial row of degree d in m variables stacks the
coefficient row-vectors of every monomial of total degree <= d (zero
coefficients included), in canonical order: ascending lexicographic on the
reversed exponent tuple, which is exactly the recursion on the last
variable.  Multi-row matrices flatten row by row, block after block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence, Union

from .galois import FiniteField
from .multipoly import (
    NEG_INF,
    ExponentVector,
    Polynomial,
    PolyMatrix,
    monomials_upto,
)
from . import superreg
from .superreg import ConstMatrix, cauchy_matrix, is_superregular, random_superregular

RATE_1N = "RATE_1N"
STAIRCASE_KN = "STAIRCASE_KN"
MD_STAIRCASE_BOUND = "MD_STAIRCASE_BOUND"

CERTIFIED_MDS = "CERTIFIED_MDS"
NOT_CERTIFIED = "NOT_CERTIFIED"


class ConstructionError(RuntimeError):
    """A construction cannot proceed as parametrized."""


class FieldTooSmallError(ConstructionError):
    """The field cannot supply the required superregular matrix source."""


def support_count(nu: int, m: int) -> int:
    """Number of exponent vectors (i_1, ..., i_m) with i_1 + ... + i_m <= nu."""
    if nu < 0 or m < 1:
        raise ValueError(f"need nu >= 0 and m >= 1, got ({nu}, {m})")
    return math.comb(nu + m, m)


def support_count_identity_check(nu: int, m: int) -> bool:
    """Self-test: the support count equals the sum of its last-variable slices."""
    if nu < 0 or m < 2:
        raise ValueError(f"need nu >= 0 and m >= 2, got ({nu}, {m})")
    return support_count(nu, m) == sum(support_count(nu - i, m - 1) for i in range(nu + 1))


def singleton_bound(m: int, k: int, n: int, delta: int) -> int:
    """Upper bound on the free distance of a rate-k/n degree-delta code in
    m variables:  n*C(floor(delta/k)+m, m) - k*(floor(delta/k)+1) + delta + 1."""
    if m < 1 or k < 1 or n < 1 or delta < 0 or k > n:
        raise ValueError(f"invalid dimensions (m={m}, k={k}, n={n}, delta={delta})")
    t = delta // k
    return n * support_count(t, m) - k * (t + 1) + delta + 1


def staircase_distance_bound(m: int, n: int, nu_last: int) -> int:
    """Distance bound n*C(nu_last+m, m) for descending row-degree profiles
    whose last row has degree nu_last."""
    if m < 1 or n < 1 or nu_last < 0:
        raise ValueError(f"invalid parameters (m={m}, n={n}, nu_last={nu_last})")
    return n * support_count(nu_last, m)


@dataclass(frozen=True)
class CodeDescriptor:
    """A code: field, variable count, dimensions, and generator matrix."""

    field: FiniteField
    m: int
    k: int
    n: int
    generator: PolyMatrix
    declared_row_degrees: tuple[int, ...] = dc_field(default=())

    def __post_init__(self):
        G = self.generator
        if (G.rows, G.cols) != (self.k, self.n) or G.field != self.field or G.m != self.m:
            raise ValueError("generator matrix does not match the declared dimensions")
        degrees = tuple(G.row_degrees())
        if self.declared_row_degrees and tuple(self.declared_row_degrees) != degrees:
            raise ValueError("declared row degrees disagree with the generator")
        object.__setattr__(self, "declared_row_degrees", degrees)

    @staticmethod
    def from_generator(G: PolyMatrix) -> "CodeDescriptor":
        return CodeDescriptor(G.field, G.m, G.rows, G.cols, G)

    def external_degree(self) -> int:
        return self.generator.external_degree()

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "m": self.m,
            "k": self.k,
            "n": self.n,
            "generator": self.generator.to_json(),
        }

    @staticmethod
    def from_json(obj: dict) -> "CodeDescriptor":
        F = FiniteField.from_json(obj["field"])
        m = int(obj["m"])
        G = PolyMatrix.from_json(obj["generator"], F, m)
        return CodeDescriptor(F, m, int(obj["k"]), int(obj["n"]), G)


@dataclass(frozen=True)
class FlattenedMatrix:
    """A flattened generator: constant matrix plus (source row, exponent)
    origin per flattened row.  Source rows are numbered from 1."""

    matrix: ConstMatrix
    row_index: tuple[tuple[int, ExponentVector], ...]

    def to_json(self) -> dict:
        return {
            "matrix": self.matrix.to_json(),
            "row_index": [[r, list(a)] for r, a in self.row_index],
        }


@dataclass(frozen=True)
class Hypothesis:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class MdsCertificate:
    theorem: str
    hypotheses: tuple[Hypothesis, ...]
    verdict: str
    certified_distance: Optional[int] = None

    def __post_init__(self):
        if self.verdict == CERTIFIED_MDS:
            assert all(h.passed for h in self.hypotheses)
            assert self.certified_distance is not None

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypotheses": [h.to_json() for h in self.hypotheses],
            "verdict": self.verdict,
            "certified_distance": self.certified_distance,
        }


def phi_flatten(G: PolyMatrix) -> FlattenedMatrix:
    """Stack, per source row, the coefficient row-vectors of all monomials of
    total degree up to the row degree (zero coefficients included), rows in
    source order, monomials in canonical order."""
    import warnings

    if all(p.is_zero() for row in G.entries for p in row):
        raise ValueError("cannot flatten the zero matrix")
    rows: list[tuple[int, ...]] = []
    index: list[tuple[int, ExponentVector]] = []
    for r, row in enumerate(G.entries):
        d = max((p.total_degree() for p in row), default=NEG_INF)
        if d == NEG_INF:
            # A zero row carries no support; emit its single degree-0 slice
            # (all zeros), which correctly fails any superregularity check.
            warnings.warn(f"row {r + 1} is zero; flattening a single zero slice", stacklevel=2)
            d = 0
        for alpha in monomials_upto(int(d), G.m):
            rows.append(tuple(p.coeff(alpha) for p in row))
            index.append((r + 1, alpha))
    return FlattenedMatrix(ConstMatrix(G.field, tuple(rows)), tuple(index))


def phi_lift(
    S: ConstMatrix, m: int, row_plan: Sequence[tuple[int, int]]
) -> PolyMatrix:
    """Inverse of `phi_flatten` for uniform-degree blocks.

    `row_plan` lists (rows_per_block, degree) pairs; each source row of
    degree d consumes C(d+m, m) consecutive rows of S as the coefficients
    of the canonical monomial sequence.
    """
    expected = sum(b * support_count(d, m) for b, d in row_plan)
    if expected != S.rows:
        raise ValueError(f"row plan needs {expected} rows, matrix has {S.rows}")
    F = S.field
    out_rows: list[list[Polynomial]] = []
    pos = 0
    for block_rows, d in row_plan:
        exps = monomials_upto(d, m)
        for _ in range(block_rows):
            polys = []
            for c in range(S.cols):
                terms = {
                    alpha: S.entries[pos + t][c]
                    for t, alpha in enumerate(exps)
                    if S.entries[pos + t][c] != 0
                }
                polys.append(Polynomial(F, m, terms))
            out_rows.append(polys)
            pos += len(exps)
    return PolyMatrix(F, m, out_rows)


# ---------------------------------------------------------------------------
# Certification
# ---------------------------------------------------------------------------

def _superregularity_hypothesis(G: PolyMatrix) -> tuple[Hypothesis, Optional[FlattenedMatrix]]:
    flat = phi_flatten(G)
    report = is_superregular(flat.matrix)
    if report.verdict:
        detail = f"all {report.minors_checked} minors nonzero"
    else:
        rsub, csub, _ = report.failing_minor
        detail = f"zero minor at rows {list(rsub)}, cols {list(csub)}"
    return Hypothesis("flatten_superregular", report.verdict, detail), flat


def certify(code: CodeDescriptor) -> MdsCertificate:
    """Match the generator's row-degree profile against the construction
    theorems and check each hypothesis.  NOT_CERTIFIED makes no claim of
    non-MDS-ness."""
    import warnings

    m, k, n = code.m, code.k, code.n
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        degrees = code.generator.row_degrees()
    if any(d == NEG_INF for d in degrees):
        return MdsCertificate(
            MD_STAIRCASE_BOUND,
            (Hypothesis("nonzero_rows", False, "generator contains a zero row"),),
            NOT_CERTIFIED,
        )
    degrees = [int(d) for d in degrees]

    if k == 1:
        delta = degrees[0]
        hyps = [
            Hypothesis("single_row_generator", True, f"k = 1, row degree {delta}"),
            Hypothesis(
                "length_at_least_degree_plus_one",
                n >= delta + 1,
                f"n = {n}, delta + 1 = {delta + 1}",
            ),
        ]
        if hyps[1].passed:
            sr, _ = _superregularity_hypothesis(code.generator)
            hyps.append(sr)
        distance = n * support_count(delta, m)
        theorem = RATE_1N
    elif degrees == [degrees[0]] * (k - 1) + [degrees[0] - 1]:
        nu = degrees[-1]
        hyps = [
            Hypothesis(
                "staircase_row_degrees",
                True,
                f"{k - 1} rows of degree {nu + 1}, one of degree {nu}",
            ),
            Hypothesis(
                "length_condition",
                n >= k * (nu + 2) - 1,
                f"n = {n}, k(nu+2) - 1 = {k * (nu + 2) - 1}",
            ),
        ]
        if hyps[1].passed:
            sr, _ = _superregularity_hypothesis(code.generator)
            hyps.append(sr)
        distance = singleton_bound(m, k, n, k * nu + k - 1)
        theorem = STAIRCASE_KN
    elif all(a >= b for a, b in zip(degrees, degrees[1:])) and degrees[-2] > degrees[-1]:
        nu_last = degrees[-1]
        length_needed = sum(d + 1 for d in degrees[:-1]) + nu_last + 1
        hyps = [
            Hypothesis(
                "descending_row_degrees",
                True,
                f"profile {degrees}, last degree strictly smallest",
            ),
            Hypothesis(
                "length_condition",
                n >= length_needed,
                f"n = {n}, required {length_needed}",
            ),
        ]
        if hyps[1].passed:
            sr, _ = _superregularity_hypothesis(code.generator)
            hyps.append(sr)
        distance = staircase_distance_bound(m, n, nu_last)
        theorem = MD_STAIRCASE_BOUND
    else:
        sr, _ = _superregularity_hypothesis(code.generator)
        return MdsCertificate(
            MD_STAIRCASE_BOUND,
            (
                Hypothesis(
                    "recognized_row_degree_profile",
                    False,
                    f"profile {degrees} matches no construction theorem",
                ),
                sr,
            ),
            NOT_CERTIFIED,
        )

    if all(h.passed for h in hyps):
        return MdsCertificate(theorem, tuple(hyps), CERTIFIED_MDS, distance)
    return MdsCertificate(theorem, tuple(hyps), NOT_CERTIFIED)


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

Source = Union[str, ConstMatrix]


def _superregular_source(
    F: FiniteField, rows: int, cols: int, source: Source, seed: int, max_tries: int
) -> ConstMatrix:
    if isinstance(source, ConstMatrix):
        if (source.rows, source.cols) != (rows, cols):
            raise ValueError(
                f"explicit matrix is {source.rows}x{source.cols}, need {rows}x{cols}"
            )
        if not is_superregular(source).verdict:
            raise ConstructionError("explicit source matrix is not superregular")
        return source
    if source == "cauchy":
        if F.q < rows + cols:
            raise FieldTooSmallError(
                f"Cauchy source needs q >= {rows + cols}, field has q = {F.q}"
            )
        xs = list(range(rows))
        ys = list(range(rows, rows + cols))
        return cauchy_matrix(F, xs, ys)
    if source == "random":
        return random_superregular(F, rows, cols, seed=seed, max_tries=max_tries)
    raise ValueError(f"unknown source {source!r}")


def construct_mds_rate_1n(
    F: FiniteField,
    m: int,
    n: int,
    delta: int,
    source: Source = "cauchy",
    seed: int = 0,
    max_tries: int = 10_000,
) -> tuple[CodeDescriptor, MdsCertificate]:
    """Build a certified MDS rate-1/n code of degree `delta` in m variables
    from a superregular C(delta+m, m) x n matrix."""
    if n < delta + 1:
        raise ValueError(f"need n >= delta + 1, got n = {n}, delta = {delta}")
    rows = support_count(delta, m)
    S = _superregular_source(F, rows, n, source, seed, max_tries)
    G = phi_lift(S, m, [(1, delta)])
    code = CodeDescriptor.from_generator(G)
    cert = certify(code)
    if cert.verdict != CERTIFIED_MDS:
        raise ConstructionError("construction failed its own certificate")
    return code, cert


def construct_mds_staircase(
    F: FiniteField,
    m: int,
    k: int,
    n: int,
    nu: int,
    source: Source = "cauchy",
    seed: int = 0,
    max_tries: int = 10_000,
) -> tuple[CodeDescriptor, MdsCertificate]:
    """Build a certified MDS rate-k/n code of degree k*nu + k - 1: k - 1 rows
    of degree nu + 1 and one row of degree nu, flattening superregular."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return construct_mds_rate_1n(F, m, n, nu, source, seed, max_tries)
    if n < k * (nu + 2) - 1:
        raise ValueError(
            f"need n >= k(nu+2) - 1 = {k * (nu + 2) - 1}, got n = {n}"
        )
    rows = (k - 1) * support_count(nu + 1, m) + support_count(nu, m)
    S = _superregular_source(F, rows, n, source, seed, max_tries)
    G = phi_lift(S, m, [(1, nu + 1)] * (k - 1) + [(1, nu)])
    code = CodeDescriptor.from_generator(G)
    cert = certify(code)
    if cert.verdict != CERTIFIED_MDS:
        raise ConstructionError("construction failed its own certificate")
    return code, cert


# ---------------------------------------------------------------------------
# Singleton-bound proof witness
# ---------------------------------------------------------------------------

def singleton_witness(code: CodeDescriptor) -> tuple[PolyMatrix, PolyMatrix, int]:
    """Produce a low-weight codeword along the lines of the bound's proof.

    Rows are ordered by descending row degree; within the minimal-degree
    block a nonzero constant combination is chosen whose constant slice
    vanishes on the first (block size - 1) coordinates.  The returned
    codeword has weight at most the generalized Singleton bound for the
    generator's external degree.
    """
    G = code.generator
    if not G.has_full_row_rank():
        raise ValueError("generator matrix is not full row rank")
    k, n, m, F = code.k, code.n, code.m, code.field
    degrees = [int(d) for d in G.row_degrees()]
    order = sorted(range(k), key=lambda i: -degrees[i])
    nu_min = degrees[order[-1]]
    # t is the 1-based position of the first minimal-degree row after sorting.
    t = next(pos + 1 for pos in range(k) if degrees[order[pos]] == nu_min)
    block = order[t - 1:]  # original indices of the minimal-degree rows

    zero_alpha = (0,) * m
    if len(block) == 1:
        u_tilde = (1,)
    else:
        # Constant slice of the minimal block, restricted to the first k - t
        # columns: (k - t + 1) rows vs k - t equations, so a nonzero left
        # kernel vector always exists.
        const_block = ConstMatrix(
            F,
            tuple(
                tuple(G.entries[r][c].coeff(zero_alpha) for c in range(k - t))
                for r in block
            ),
        )
        basis = superreg.left_nullspace(const_block)
        u_tilde = basis[0]

    coeffs = [0] * k
    for r, c in zip(block, u_tilde):
        coeffs[r] = c
    message = PolyMatrix(
        F, m, [[Polynomial.constant(F, m, c) if c else Polynomial.zero(F, m) for c in coeffs]]
    )
    codeword = message @ G
    return message, codeword, codeword.weight()
