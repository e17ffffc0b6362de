"""The orientation series, its formal group law, and the axiom checks.

The orientation series is z(x) = sum_{i>=0} Z_i x^(i+1) with Z_0 = 1.  The
formal group law coefficients a_{i,j} are defined by the unique left-basis
expansion

    z(x + y) = sum_{i,j} a_{i,j} * z(x)^i * z(y)^j,

computed by :func:`ncfgl.series.left_expand` (a log/exp composition formula is
not available: left substitution is not multiplicative over noncommuting
coefficients).  The expansion route is pullback compatible, i.e. it commutes
with the substitutions x -> x + y, x -> -x of central variables, which is what
the axiom checks below exploit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import random

from .errors import DegenerateInputError, ParameterError, UnsupportedInputError
from .freealg import FreeAlgebra, FreeElement, random_homogeneous
from .series import CentralSeries, VarSet, left_expand


def orientation_series(
    order: int,
    algebra: FreeAlgebra | None = None,
    varset: VarSet | None = None,
    variable: str | None = None,
) -> CentralSeries:
    """z = x + Z_1 x^2 + Z_2 x^3 + ... truncated at total order ``order``."""
    if order < 1:
        raise ParameterError("orientation series needs order >= 1")
    if algebra is None:
        algebra = FreeAlgebra()
    if varset is None:
        varset = VarSet(("x",), algebra.profile.variable_degree)
    if variable is None:
        variable = varset.names[0]
    slot = varset.index(variable)
    coeffs = {}
    for i in range(order):
        index = [0] * len(varset)
        index[slot] = i + 1
        coeffs[tuple(index)] = algebra.one() if i == 0 else algebra.gen(i)
    return CentralSeries(algebra, varset, order, coeffs)


class FGLTable:
    """The coefficients a_{i,j} of the formal group law, i + j <= order.

    Checked by :func:`verify_axioms`, not assumed: the unit row and column
    a_{i,0} = a_{0,i} = [i == 1], the degree law deg a_{i,j} = 2(i+j) - 2 on
    the complex profile, and commutativity in the sense that both insertion
    orders sum to the same element (sum a_{i,j} z(x)^i z(y)^j equals
    sum a_{i,j} z(y)^i z(x)^j).  Entrywise symmetry a_{i,j} = a_{j,i} is a
    strictly stronger statement and is *false* over noncommuting
    coefficients: it holds through total degree 4 and first fails at
    a_{2,3} - a_{3,2} = 2 Z1 Z2 Z1 - 2 Z1 Z1 Z2, because in the ordered
    product z(x) z(y) the x-coefficient always precedes the y-coefficient.
    """

    __slots__ = ("algebra", "order", "_entries")

    def __init__(self, algebra: FreeAlgebra, order: int, entries: dict):
        self.algebra = algebra
        self.order = order
        self._entries = {
            (i, j): entries.get((i, j), algebra.zero())
            for i in range(order + 1)
            for j in range(order + 1 - i)
        }

    def entry(self, i: int, j: int) -> FreeElement:
        if i < 0 or j < 0 or i + j > self.order:
            raise ParameterError(f"entry ({i},{j}) is outside order {self.order}")
        return self._entries[(i, j)]

    def items(self):
        return [
            ((i, j), self._entries[(i, j)])
            for (i, j) in sorted(self._entries, key=lambda ij: (ij[0] + ij[1], ij[0]))
        ]

    def is_symmetric(self) -> bool:
        """Entrywise symmetry; true only up to total degree 4 in general."""
        return all(
            element == self._entries[(j, i)] for (i, j), element in self._entries.items()
        )

    def to_data(self):
        return {
            "order": self.order,
            "entries": [
                {"i": i, "j": j, "element": element.to_data()}
                for (i, j), element in self.items()
            ],
        }

    def __str__(self):
        lines = [f"formal group law table, order {self.order}"]
        for (i, j), element in self.items():
            if not element.is_zero():
                lines.append(f"a[{i},{j}] = {element}")
        return "\n".join(lines)


def fgl_table(order: int, algebra: FreeAlgebra | None = None) -> FGLTable:
    """Expand z(x + y) in the ordered basis z(x)^i z(y)^j."""
    if order < 2:
        raise ParameterError("formal group law table needs order >= 2")
    if algebra is None:
        algebra = FreeAlgebra()
    vardeg = algebra.profile.variable_degree
    pair = VarSet(("x", "y"), vardeg)
    z = orientation_series(order, algebra)
    target = z.specialize({"x": {"x": 1, "y": 1}}, pair)
    basis = {
        "x": z,
        "y": orientation_series(order, algebra, VarSet(("y",), vardeg)),
    }
    expansion = left_expand(target, basis)
    return FGLTable(algebra, order, expansion)


class InverseTable:
    """Coefficients of the formal inverse: xbar = -x + sum_k c_k x^(k+1)."""

    __slots__ = ("algebra", "order", "_entries")

    def __init__(self, algebra: FreeAlgebra, order: int, entries: dict):
        self.algebra = algebra
        self.order = order
        self._entries = {
            k: entries.get(k, algebra.zero()) for k in range(1, order)
        }

    @property
    def leading_sign(self) -> int:
        """The fixed linear coefficient of the inverse series."""
        return -1

    def entry(self, k: int) -> FreeElement:
        if k < 1 or k >= self.order:
            raise ParameterError(f"c_{k} is outside order {self.order}")
        return self._entries[k]

    def items(self):
        return sorted(self._entries.items())

    def to_data(self):
        return {
            "order": self.order,
            "gamma1": "-1",
            "entries": [
                {"k": k, "element": element.to_data()} for k, element in self.items()
            ],
        }

    def __str__(self):
        lines = [f"inverse series table, order {self.order}", "gamma[1] = -1"]
        for k, element in self.items():
            lines.append(f"c[{k}] = {element}")
        return "\n".join(lines)


def inverse_table(order: int, algebra: FreeAlgebra | None = None) -> InverseTable:
    """Expand z(-x) in the basis z(x): the coefficient of z^(k+1) is c_k."""
    if order < 2:
        raise ParameterError("inverse table needs order >= 2")
    if algebra is None:
        algebra = FreeAlgebra()
    z = orientation_series(order, algebra)
    zbar = z.specialize({"x": {"x": -1}})
    expansion = left_expand(zbar, {"x": z})
    linear = expansion.get((1,), algebra.zero())
    if linear != algebra.one().scale(-1):
        raise DegenerateInputError("inverse expansion lost its leading -1")
    return InverseTable(
        algebra, order, {k: expansion.get((k + 1,), algebra.zero()) for k in range(1, order)}
    )


@dataclass
class AxiomReport:
    """Outcome of the four formal group law checks at one truncation order."""

    order: int
    unit_ok: bool
    commutativity_ok: bool
    associativity_ok: bool
    inverse_ok: bool
    failures: dict = field(default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return self.unit_ok and self.commutativity_ok and self.associativity_ok and self.inverse_ok

    def to_data(self):
        return {
            "order": self.order,
            "checks": {
                "unit": self.unit_ok,
                "commutativity": self.commutativity_ok,
                "associativity": self.associativity_ok,
                "inverse": self.inverse_ok,
            },
            "failures": dict(self.failures),
        }

    def __str__(self):
        lines = [f"axiom checks at order {self.order}"]
        for name, ok in (
            ("unit", self.unit_ok),
            ("commutativity", self.commutativity_ok),
            ("associativity", self.associativity_ok),
            ("inverse", self.inverse_ok),
        ):
            status = "PASS" if ok else f"FAIL ({self.failures.get(name, 'no detail')})"
            lines.append(f"{name:>14}: {status}")
        return "\n".join(lines)


def _first_difference(left: CentralSeries, right: CentralSeries):
    diff = left - right
    if diff.is_zero():
        return None
    index = diff.support()[0]
    return f"first offending monomial {index}: {diff.coefficient(index)}"


def _fgl_sum(table: FGLTable, zs1, zs2) -> CentralSeries:
    """sum a_{i,j} * zs1^i * zs2^j with coefficients on the left."""
    some = zs1[0]
    total = CentralSeries.zero(some.algebra, some.varset, some.order)
    for (i, j), element in table.items():
        if element.is_zero():
            continue
        total = total + (zs1[i] * zs2[j]).scale_left(element)
    return total


def _powers(series: CentralSeries, order: int):
    out = [CentralSeries.unit(series.algebra, series.varset, series.order)]
    for _ in range(order):
        out.append(out[-1] * series)
    return out


def verify_axioms(
    order: int,
    algebra: FreeAlgebra | None = None,
    table: FGLTable | None = None,
) -> AxiomReport:
    """Check unit, commutativity, associativity (both groupings), and inverse.

    Commutativity is the identity of elements: inserting the two orientation
    series in either order reproduces the same expansion,
    sum a_{i,j} z(x)^i z(y)^j = z(x + y) = sum a_{i,j} z(y)^i z(x)^j.
    (Entrywise symmetry of the table is stronger and fails from total degree
    5 on; see :class:`FGLTable`.)  Associativity is checked in the
    three-variable series ring with the two groupings realized by the central
    substitutions x -> x + y and y -> y + w; the inverse identity is checked
    with the negated orientation series in both orders.  Failures are
    reported with the first offending monomial, never raised.
    """
    if order < 2:
        raise ParameterError("axiom verification needs order >= 2")
    if algebra is None:
        algebra = FreeAlgebra()
    if table is None:
        table = fgl_table(order, algebra)
    one = algebra.one()
    zero = algebra.zero()
    failures = {}

    unit_ok = True
    for i in range(order + 1):
        expected = one if i == 1 else zero
        for key in ((i, 0), (0, i)):
            if table.entry(*key) != expected:
                unit_ok = False
                failures.setdefault("unit", f"a[{key[0]},{key[1]}] = {table.entry(*key)}")

    vardeg = algebra.profile.variable_degree
    pair = VarSet(("x", "y"), vardeg)
    z2_x = orientation_series(order, algebra, pair, "x")
    z2_y = orientation_series(order, algebra, pair, "y")
    z2_sum = z2_x.specialize({"x": {"x": 1, "y": 1}})
    pow2_x = _powers(z2_x, order)
    pow2_y = _powers(z2_y, order)
    commutativity_ok = True
    for label, total in (
        ("F(x, y)", _fgl_sum(table, pow2_x, pow2_y)),
        ("F(y, x)", _fgl_sum(table, pow2_y, pow2_x)),
    ):
        detail = _first_difference(total, z2_sum)
        if detail is not None:
            commutativity_ok = False
            failures.setdefault("commutativity", f"{label}: {detail}")
    triple = VarSet(("x", "y", "w"), vardeg)
    z_x = orientation_series(order, algebra, triple, "x")
    z_w = orientation_series(order, algebra, triple, "w")
    z_xy = z_x.specialize({"x": {"x": 1, "y": 1}})
    z_yw = z_x.specialize({"x": {"y": 1, "w": 1}})
    z_xyw = z_x.specialize({"x": {"x": 1, "y": 1, "w": 1}})
    pow_x = _powers(z_x, order)
    pow_w = _powers(z_w, order)
    pow_xy = _powers(z_xy, order)
    pow_yw = _powers(z_yw, order)
    associativity_ok = True
    for label, left_sum in (
        ("(x+y)+w", _fgl_sum(table, pow_xy, pow_w)),
        ("x+(y+w)", _fgl_sum(table, pow_x, pow_yw)),
    ):
        detail = _first_difference(left_sum, z_xyw)
        if detail is not None:
            associativity_ok = False
            failures.setdefault("associativity", f"grouping {label}: {detail}")

    single = VarSet(("x",), vardeg)
    z = orientation_series(order, algebra, single)
    zbar = z.specialize({"x": {"x": -1}})
    pow_z = _powers(z, order)
    pow_zbar = _powers(zbar, order)
    zero_series = CentralSeries.zero(algebra, single, order)
    inverse_ok = True
    for label, total in (
        ("F(x, xbar)", _fgl_sum(table, pow_z, pow_zbar)),
        ("F(xbar, x)", _fgl_sum(table, pow_zbar, pow_z)),
    ):
        detail = _first_difference(total, zero_series)
        if detail is not None:
            inverse_ok = False
            failures.setdefault("inverse", f"{label}: {detail}")

    return AxiomReport(
        order, unit_ok, commutativity_ok, associativity_ok, inverse_ok, failures
    )


@dataclass
class FiltrationResult:
    """u z^k - z^k u together with its x-adic valuation."""

    k: int
    order: int
    series: CentralSeries
    valuation: int | None
    required: int

    @property
    def ok(self) -> bool:
        """Valuation at least k + 1 (filtration 2k + 2 in topological degree)."""
        return self.valuation is None or self.valuation >= self.required

    def first_term(self):
        if self.series.is_zero():
            return None
        index = self.series.support()[0]
        return index, self.series.coefficient(index)

    def to_data(self):
        return {
            "k": self.k,
            "order": self.order,
            "valuation": self.valuation,
            "required": self.required,
            "ok": self.ok,
            "series": self.series.to_data(),
        }

    def __str__(self):
        val = "infinite" if self.valuation is None else str(self.valuation)
        status = "OK" if self.ok else "VIOLATED"
        return (
            f"commutator with z^{self.k} at order {self.order}: "
            f"valuation {val} (required >= {self.required}) {status}\n{self.series}"
        )


def commutator_filtration(u: FreeElement, k: int, order: int) -> FiltrationResult:
    """u z(x)^k - z(x)^k u and its valuation, checked against the bound k + 1."""
    if k < 1:
        raise ParameterError("filtration exponent k must be >= 1")
    if order < k + 2:
        raise ParameterError("order must be at least k + 2 to see the bound")
    if not u.is_homogeneous():
        raise UnsupportedInputError("filtration statement applies to homogeneous u")
    algebra = u.algebra
    z = orientation_series(order, algebra)
    zk = z ** k
    diff = zk.scale_left(u) - zk.scale_right(u)
    return FiltrationResult(k, order, diff, diff.valuation(), k + 1)


def filtration_property_run(
    order: int = 12,
    samples: int = 100,
    seed: int = 0,
    algebra: FreeAlgebra | None = None,
    max_degree: int = 8,
    max_k: int = 4,
):
    """Seeded batch of filtration checks; returns (all_ok, list of results)."""
    if algebra is None:
        algebra = FreeAlgebra()
    rng = random.Random(seed)
    degrees = [d for d in range(1, max_degree + 1) if algebra.dim(d)]
    results = []
    for _ in range(samples):
        degree = rng.choice(degrees)
        k = rng.randint(1, min(max_k, order - 2))
        u = random_homogeneous(algebra, degree, rng)
        if u.is_zero():
            continue
        results.append(commutator_filtration(u, k, order))
    return all(r.ok for r in results), results
