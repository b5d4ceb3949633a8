"""Hyperplane arrangements and their intersection-lattice combinatorics.

An arrangement is either realized (exact linear forms over Q or a number
field) or abstract (matroid data only).  Internally every arrangement
carries the matroid of its projective cone on elements 0..n, where element
n plays the hyperplane at infinity; for a central arrangement that element
is simply a coloop.  All lattice, Betti and density computations run off
this one structure, so realized and abstract inputs share every code path
downstream of construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactla import NFElement, NumberField, field_rank
from .matroid import Matroid, parallel_connection, vector_matroid

__all__ = [
    "Arrangement",
    "Flat",
    "IntersectionLattice",
    "ZeroFormError",
    "NotEssentialError",
    "build_arrangement",
    "arrangement_from_circuits",
    "arrangement_from_cone_circuits",
    "intersection_lattice",
    "betti_numbers",
    "euler_characteristic",
    "projective_closure",
    "dense_edges",
    "generic_section",
    "product_arrangement",
    "essentialize",
]


class ZeroFormError(ValueError):
    """A defining form has zero coefficient part."""


class NotEssentialError(ValueError):
    """The normals of the forms do not span the ambient space."""


@dataclass(frozen=True)
class Flat:
    """A flat of the intersection lattice: which hyperplanes contain it."""

    hyperplanes: frozenset
    codim: int
    moebius: int

    @property
    def sorted_hyperplanes(self) -> tuple:
        return tuple(sorted(self.hyperplanes))

    def __repr__(self):
        hs = ",".join(str(h + 1) for h in self.sorted_hyperplanes)
        return f"Flat({{{hs}}}, codim={self.codim}, mu={self.moebius})"


class IntersectionLattice:
    """Flats grouped by codimension, with Moebius values from the bottom."""

    def __init__(self, levels: list[list[Flat]]):
        self.levels = levels

    def flats_of_codim(self, q: int) -> list[Flat]:
        return self.levels[q] if 0 <= q < len(self.levels) else []

    def all_flats(self) -> list[Flat]:
        return [f for level in self.levels for f in level]

    def __len__(self):
        return sum(len(level) for level in self.levels)


class Arrangement:
    """An arrangement of n distinct hyperplanes of full rank.

    Not meant to be constructed directly; use build_arrangement,
    arrangement_from_circuits, or the derived operations (sections,
    products, projective closures).
    """

    def __init__(
        self,
        n: int,
        rank: int,
        central: bool,
        cone_matroid: Matroid,
        field=None,
        forms=None,
        labels: Sequence[str] | None = None,
        product_factors=None,
    ):
        self.n = n
        self.rank = rank
        self.central = central
        self.cone_matroid = cone_matroid
        self.field = field
        self.forms = forms
        self.labels = list(labels) if labels else [f"H{i+1}" for i in range(n)]
        if len(self.labels) != n:
            raise ValueError("label count does not match hyperplane count")
        self.product_factors = product_factors
        self._cache: dict = {}

    # -- basic structure -----------------------------------------------------

    @property
    def infinity(self) -> int:
        """Index of the hyperplane at infinity inside the cone matroid."""
        return self.n

    def central_circuits(self) -> list[tuple]:
        """Circuits of the cone matroid avoiding infinity, as sorted tuples."""
        key = "central_circuits"
        if key not in self._cache:
            inf = self.infinity
            self._cache[key] = sorted(
                tuple(sorted(c)) for c in self.cone_matroid.circuits() if inf not in c
            )
        return self._cache[key]

    def minimal_noncentral(self) -> list[tuple]:
        """Minimal index sets with empty intersection (affine only)."""
        key = "minimal_noncentral"
        if key not in self._cache:
            inf = self.infinity
            self._cache[key] = sorted(
                tuple(sorted(c - {inf}))
                for c in self.cone_matroid.circuits()
                if inf in c
            )
        return self._cache[key]

    def is_central_set(self, s) -> bool:
        sm = set(s)
        return not any(sm.issuperset(c) for c in self.minimal_noncentral())

    # -- lattice -------------------------------------------------------------

    def intersection_lattice(self) -> IntersectionLattice:
        if "lattice" not in self._cache:
            self._cache["lattice"] = self._build_lattice()
        return self._cache["lattice"]

    def _build_lattice(self) -> IntersectionLattice:
        cm = self.cone_matroid
        inf_bit = 1 << self.infinity
        bottom = cm._closure_mask(0)
        levels_masks = [[bottom]]
        for _ in range(self.rank):
            nxt = set()
            for fm in levels_masks[-1]:
                covered = fm | inf_bit
                for e in range(self.n):
                    if covered >> e & 1:
                        continue
                    child = cm._closure_mask(fm | (1 << e))
                    covered |= child
                    if not child & inf_bit:
                        nxt.add(child)
            levels_masks.append(sorted(nxt))

        # Moebius recursion from the bottom within the poset of central flats
        mu: dict[int, int] = {}
        flat_levels: list[list[Flat]] = []
        seen: list[int] = []
        for q, level in enumerate(levels_masks):
            flats = []
            for fm in level:
                m = -sum(mu[g] for g in seen if g & ~fm == 0) if q else 1
                mu[fm] = m
                flats.append(Flat(_mask_to_frozenset(fm), q, m))
            seen.extend(level)
            flats.sort(key=lambda f: f.sorted_hyperplanes)
            flat_levels.append(flats)
        return IntersectionLattice(flat_levels)

    # -- numeric invariants --------------------------------------------------

    def betti_numbers(self) -> list[int]:
        if "betti" not in self._cache:
            lat = self.intersection_lattice()
            self._cache["betti"] = [
                sum(abs(f.moebius) for f in level) for level in lat.levels
            ]
        return list(self._cache["betti"])

    def euler_characteristic(self) -> int:
        b = self.betti_numbers()
        return sum((-1) ** q * bq for q, bq in enumerate(b))

    # -- derived arrangements ------------------------------------------------

    def projective_closure(self) -> tuple["Arrangement", int]:
        """Central arrangement of this plus the hyperplane at infinity.

        Returns the closure and the (0-based) index of infinity in it.
        """
        if "closure" not in self._cache:
            n1 = self.n + 1
            labels = self.labels + ["H_inf"]
            forms = None
            field = self.field
            if self.forms is not None:
                zero, one = _field_consts(field)
                forms = [list(a) + [c, zero] for a, c in self.forms]
                forms.append([zero] * self.rank + [one, zero])
                forms = [(tuple(r[:-1]), r[-1]) for r in forms]
            cone = _extend_by_coloop(self.cone_matroid)
            self._cache["closure"] = Arrangement(
                n1, self.rank + 1, True, cone, field=field, forms=forms, labels=labels
            )
        return self._cache["closure"], self.n

    def dense_edges(self) -> list[Flat]:
        """Flats of positive codimension whose localization is connected."""
        if not self.central:
            raise ValueError("dense edges are defined for central arrangements")
        if "dense" not in self._cache:
            cm = self.cone_matroid
            out = []
            for level in self.intersection_lattice().levels[1:]:
                for f in level:
                    if cm.restriction_connected(f.hyperplanes):
                        out.append(f)
            self._cache["dense"] = out
        return list(self._cache["dense"])


def _mask_to_frozenset(m: int) -> frozenset:
    out = []
    e = 0
    while m:
        if m & 1:
            out.append(e)
        m >>= 1
        e += 1
    return frozenset(out)


def _extend_by_coloop(m: Matroid) -> Matroid:
    return Matroid(m.n + 1, m.circuits())


def _field_consts(field):
    if isinstance(field, NumberField):
        return field.zero, field.one
    return Fraction(0), Fraction(1)


# ---------------------------------------------------------------------------
# constructors


def build_arrangement(rows, field="Q", labels=None, essentialize=False) -> Arrangement:
    """Arrangement from defining forms.

    Each row is [a_1, .., a_l, c] for the hyperplane a.z + c = 0, constant
    last.  Entries are ints, Fractions, strings like "2/3", or (over a
    number field) NFElements / coefficient lists.  The arrangement must be
    essential and free of zero or repeated forms; with ``essentialize``
    set, a non-essential input is first quotiented by the common center
    (the coefficients are rewritten in a basis of their row space).
    """
    rows = [list(r) for r in rows]
    if not rows:
        raise ValueError("no hyperplanes given")
    width = len(rows[0])
    if width < 2:
        raise ValueError("forms need at least one coordinate and a constant")
    if any(len(r) != width for r in rows):
        raise ValueError("rows of unequal length")
    ell = width - 1

    nf = field if isinstance(field, NumberField) else None
    if not (nf or field == "Q"):
        raise ValueError("field must be 'Q' or a NumberField")

    def coerce(x):
        return nf(x) if nf else Fraction(x)

    forms = []
    for i, r in enumerate(rows):
        coeffs = tuple(coerce(x) for x in r[:ell])
        const = coerce(r[ell])
        if not any(coeffs):
            raise ZeroFormError(f"hyperplane {i+1} has zero coefficient part")
        forms.append((coeffs, const))

    if field_rank([list(a) for a, _ in forms]) < ell:
        if not essentialize:
            raise NotEssentialError(
                "normals span a proper subspace; pass --essentialize or reduce rank"
            )
        basis = _row_space_basis([list(a) for a, _ in forms])
        forms = [(tuple(_solve_in_basis(basis, list(a))), c) for a, c in forms]
        ell = len(basis)
    _check_distinct(forms, ell)

    central = not any(c for _, c in forms)
    zero, one = _field_consts(nf)
    vectors = [list(a) + [c] for a, c in forms]
    vectors.append([zero] * ell + [one])
    cone = vector_matroid(vectors, field_rank)
    return Arrangement(
        len(forms), ell, central, cone, field=nf or "Q", forms=forms, labels=labels
    )


def _check_distinct(forms, ell):
    # proportional full rows define the same hyperplane
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            ri = list(forms[i][0]) + [forms[i][1]]
            rj = list(forms[j][0]) + [forms[j][1]]
            if field_rank([ri, rj]) < 2:
                raise ValueError(f"hyperplanes {i+1} and {j+1} coincide")


def arrangement_from_circuits(
    n, circuits, labels=None, validate=True, rank=None
) -> Arrangement:
    """Central arrangement from abstract matroid data (0-based circuits).

    With ``rank`` given, the listed circuits need only generate the
    dependent sets: the matroid is completed by truncation, so every
    (rank+1)-subset containing no listed circuit becomes a circuit too.
    This is how point-line configurations are entered: list the collinear
    triples and pass rank=3.
    """
    if rank is None:
        m = Matroid(n, circuits, validate=validate)
    else:
        gen = Matroid(n, circuits, validate=False)
        if rank > gen.full_rank:
            raise ValueError(
                f"rank {rank} exceeds the rank {gen.full_rank} generated "
                "by the circuits"
            )
        m = gen.truncate(rank)
        if validate:
            Matroid(n, m.circuits(), validate=True)
    cone = _extend_by_coloop(m)
    return Arrangement(n, m.full_rank, True, cone, labels=labels)


def arrangement_from_cone_circuits(n, cone_circuits, labels=None, validate=True):
    """Arrangement (possibly affine) from the circuits of its cone matroid.

    The cone matroid lives on n+1 elements with the hyperplane at infinity
    as element n (0-based).  This is the general abstract form: central
    arrangements are the special case where n is a coloop.
    """
    m = Matroid(n + 1, cone_circuits, validate=validate)
    if m.full_rank < 2:
        raise ValueError("cone matroid must have rank at least 2")
    central = n not in m.closure(range(n))
    return Arrangement(n, m.full_rank - 1, central, m, labels=labels)


def generic_section(arr: Arrangement, r: int) -> Arrangement:
    """Generic r-dimensional section: the rank-(r+1) truncation of the cone.

    Flats of codimension < r survive unchanged; higher intersections
    collapse.  A central arrangement becomes a (combinatorial) affine one.
    """
    if not 1 <= r < arr.rank:
        raise ValueError(f"section rank must be in 1..{arr.rank - 1}")
    cone = arr.cone_matroid.truncate(r + 1)
    central = arr.infinity not in cone.closure(range(arr.n))
    return Arrangement(arr.n, r, central, cone, labels=arr.labels)


def product_arrangement(a1: Arrangement, a2: Arrangement) -> Arrangement:
    """Product arrangement in the direct sum of the two ambient spaces."""
    n = a1.n + a2.n
    labels = [f"A.{s}" for s in a1.labels] + [f"B.{s}" for s in a2.labels]
    central = a1.central and a2.central
    rank = a1.rank + a2.rank
    if a1.forms is not None and a2.forms is not None and a1.field == a2.field:
        zero = _field_consts(a1.field if isinstance(a1.field, NumberField) else None)[0]
        forms = [(tuple(a) + (zero,) * a2.rank, c) for a, c in a1.forms]
        forms += [((zero,) * a1.rank + tuple(a), c) for a, c in a2.forms]
        cone = parallel_connection(
            a1.cone_matroid, a1.infinity, a2.cone_matroid, a2.infinity
        )
        return Arrangement(
            n, rank, central, cone, field=a1.field, forms=forms, labels=labels,
            product_factors=(a1, a2),
        )
    cone = parallel_connection(a1.cone_matroid, a1.infinity, a2.cone_matroid, a2.infinity)
    return Arrangement(
        n, rank, central, cone, labels=labels, product_factors=(a1, a2)
    )


def essentialize(arr: Arrangement) -> Arrangement:
    """Quotient a realized arrangement by the common center of its normals."""
    if arr.forms is None:
        raise ValueError("essentialize needs a realized arrangement")
    rows = [list(a) + [c] for a, c in arr.forms]
    nf = arr.field if isinstance(arr.field, NumberField) else "Q"
    return build_arrangement(rows, field=nf, labels=arr.labels, essentialize=True)


def _row_space_basis(rows):
    basis = []
    for row in rows:
        cand = basis + [row]
        if field_rank(cand) > len(basis):
            basis.append(row)
    return basis


def _solve_in_basis(basis, v):
    """Coordinates of v in the span of the basis rows (exact Gaussian solve)."""
    r = len(basis)
    width = len(v)
    # solve x * basis = v via the transposed system
    aug = [[basis[i][j] for i in range(r)] + [v[j]] for j in range(width)]
    x = [None] * r
    pivots = []
    rr = 0
    for c in range(r):
        piv = None
        for i in range(rr, width):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            continue
        aug[rr], aug[piv] = aug[piv], aug[rr]
        inv = _inv(aug[rr][c])
        aug[rr] = [e * inv for e in aug[rr]]
        for i in range(width):
            if i != rr and aug[i][c]:
                f = aug[i][c]
                aug[i] = [e - f * g for e, g in zip(aug[i], aug[rr])]
        pivots.append(c)
        rr += 1
    for row_idx, c in enumerate(pivots):
        x[c] = aug[row_idx][r]
    zero = Fraction(0) if not isinstance(v[0], NFElement) else v[0].field.zero
    return [zero if xi is None else xi for xi in x]


def _inv(x):
    if isinstance(x, NFElement):
        return x.inverse()
    return 1 / Fraction(x)


# functional aliases matching the operation names used throughout


def intersection_lattice(arr: Arrangement) -> IntersectionLattice:
    return arr.intersection_lattice()


def betti_numbers(arr: Arrangement) -> list[int]:
    return arr.betti_numbers()


def euler_characteristic(arr: Arrangement) -> int:
    return arr.euler_characteristic()


def projective_closure(arr: Arrangement):
    return arr.projective_closure()


def dense_edges(arr: Arrangement) -> list[Flat]:
    return arr.dense_edges()
