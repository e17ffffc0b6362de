"""Truncated power series in up to three central variables.

Coefficients are free-algebra elements and every term is kept in left-normal
form: (coefficient) times (variable monomial), with the coefficient written on
the left.  The variables are central, so they commute with each other and with
every coefficient, but the coefficients themselves do not commute.  This makes
left substitution f(g) = sum_k f_k g^k well defined yet *not* a ring
homomorphism in f; see :func:`left_substitute`.

Truncation bounds the total variable exponent only; coefficient degrees are
unbounded.  A series is graded by "cohomological" degree D when every stored
term satisfies

    variable_degree * total_exponent - word_degree(coefficient) = D,

matching the convention that coefficient degrees count negatively against the
variable grading.
"""

from __future__ import annotations

from .errors import (
    ComposabilityError,
    ExpansionError,
    ParameterError,
    ReversionError,
    ShapeError,
)
from .freealg import FreeAlgebra, FreeElement


class VarSet:
    """An ordered tuple of 1 to 3 central variable names with one degree."""

    __slots__ = ("names", "variable_degree")

    def __init__(self, names, variable_degree: int):
        names = tuple(names)
        if not 1 <= len(names) <= 3:
            raise ParameterError("a variable set holds 1 to 3 variables")
        if len(set(names)) != len(names):
            raise ParameterError("variable names must be distinct")
        if variable_degree < 1:
            raise ParameterError("variable degree must be positive")
        self.names = names
        self.variable_degree = variable_degree

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ParameterError(f"unknown variable {name!r}") from None

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, VarSet)
            and self.names == other.names
            and self.variable_degree == other.variable_degree
        )

    def __hash__(self):
        return hash((self.names, self.variable_degree))

    def __repr__(self):
        return f"VarSet({self.names!r}, {self.variable_degree})"


def _graded_lex(index):
    return (sum(index), index)


class CentralSeries:
    """Truncated series sum_I (coefficient_I) * x^I with central variables."""

    __slots__ = ("algebra", "varset", "order", "_coeffs")

    def __init__(self, algebra: FreeAlgebra, varset: VarSet, order: int, coeffs: dict):
        if order < 0:
            raise ParameterError("truncation order must be nonnegative")
        clean = {}
        for index, element in coeffs.items():
            index = tuple(index)
            if len(index) != len(varset):
                raise ShapeError("multi-index width does not match the variable set")
            if any(e < 0 for e in index):
                raise ParameterError("exponents must be nonnegative")
            if sum(index) > order:
                continue
            if not element.is_zero():
                clean[index] = element
        self.algebra = algebra
        self.varset = varset
        self.order = order
        self._coeffs = clean

    # -- constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, algebra, varset, order) -> "CentralSeries":
        return cls(algebra, varset, order, {})

    @classmethod
    def unit(cls, algebra, varset, order) -> "CentralSeries":
        zero_index = (0,) * len(varset)
        return cls(algebra, varset, order, {zero_index: algebra.one()})

    @classmethod
    def variable(cls, algebra, varset, order, name: str) -> "CentralSeries":
        index = [0] * len(varset)
        index[varset.index(name)] = 1
        return cls(algebra, varset, order, {tuple(index): algebra.one()})

    # -- inspection ---------------------------------------------------------------

    def coefficient(self, index) -> FreeElement:
        return self._coeffs.get(tuple(index), self.algebra.zero())

    def support(self):
        """Stored multi-indices in graded-lexicographic order."""
        return sorted(self._coeffs, key=_graded_lex)

    def is_zero(self) -> bool:
        return not self._coeffs

    def valuation(self):
        """Least total exponent of a nonzero term; None for the zero series."""
        if not self._coeffs:
            return None
        return min(sum(index) for index in self._coeffs)

    def constant_term(self) -> FreeElement:
        return self.coefficient((0,) * len(self.varset))

    def cohomological_degree(self):
        """The degree D making the series graded, or None if it is not."""
        if not self._coeffs:
            return None
        vardeg = self.varset.variable_degree
        found = None
        for index, element in self._coeffs.items():
            if not element.is_homogeneous():
                return None
            d = vardeg * sum(index) - element.degree()
            if found is None:
                found = d
            elif found != d:
                return None
        return found

    # -- arithmetic -----------------------------------------------------------------

    def _check_shape(self, other: "CentralSeries"):
        if (
            self.algebra != other.algebra
            or self.varset != other.varset
            or self.order != other.order
        ):
            raise ShapeError("series operands disagree in algebra, variables, or order")

    def __add__(self, other: "CentralSeries") -> "CentralSeries":
        self._check_shape(other)
        out = dict(self._coeffs)
        for index, element in other._coeffs.items():
            acc = out.get(index)
            out[index] = element if acc is None else acc + element
        return CentralSeries(self.algebra, self.varset, self.order, out)

    def __neg__(self) -> "CentralSeries":
        return CentralSeries(
            self.algebra,
            self.varset,
            self.order,
            {index: -element for index, element in self._coeffs.items()},
        )

    def __sub__(self, other):
        return self + (-other)

    def scale_left(self, value) -> "CentralSeries":
        """Multiply every coefficient by ``value`` on the left."""
        if isinstance(value, int):
            return CentralSeries(
                self.algebra,
                self.varset,
                self.order,
                {i: e.scale(value) for i, e in self._coeffs.items()},
            )
        return CentralSeries(
            self.algebra,
            self.varset,
            self.order,
            {i: value * e for i, e in self._coeffs.items()},
        )

    def scale_right(self, value: FreeElement) -> "CentralSeries":
        """Multiply every coefficient by ``value`` on the right."""
        return CentralSeries(
            self.algebra,
            self.varset,
            self.order,
            {i: e * value for i, e in self._coeffs.items()},
        )

    def __mul__(self, other: "CentralSeries") -> "CentralSeries":
        """Product in left-normal form: (a x^I)(b x^J) = (ab) x^(I+J).

        The central variables pass through the coefficients; the coefficients
        keep their order.
        """
        self._check_shape(other)
        order = self.order
        out = {}
        right = [(index, sum(index), element) for index, element in other._coeffs.items()]
        for i1, a in self._coeffs.items():
            t1 = sum(i1)
            for i2, t2, b in right:
                if t1 + t2 > order:
                    continue
                index = tuple(x + y for x, y in zip(i1, i2))
                prod = a * b
                acc = out.get(index)
                out[index] = prod if acc is None else acc + prod
        return CentralSeries(self.algebra, self.varset, order, out)

    def __pow__(self, n: int) -> "CentralSeries":
        if n < 0:
            raise ParameterError("negative powers are not defined")
        result = CentralSeries.unit(self.algebra, self.varset, self.order)
        for _ in range(n):
            result = result * self
        return result

    def truncate(self, order: int) -> "CentralSeries":
        if order > self.order:
            raise ParameterError("cannot extend a truncated series")
        return CentralSeries(
            self.algebra,
            self.varset,
            order,
            {i: e for i, e in self._coeffs.items() if sum(i) <= order},
        )

    def __eq__(self, other):
        return (
            isinstance(other, CentralSeries)
            and self.algebra == other.algebra
            and self.varset == other.varset
            and self.order == other.order
            and self._coeffs == other._coeffs
        )

    # -- substitution of central variables ----------------------------------------------

    def specialize(self, assignment: dict, target: VarSet | None = None) -> "CentralSeries":
        """Substitute an integer linear combination of variables for each variable.

        ``assignment`` maps a variable name to ``{target_name: int}``.  Variables
        without an entry are carried along unchanged (they must exist in the
        target variable set).  This is a ring homomorphism: it touches only the
        central variables and leaves coefficient order alone.
        """
        if target is None:
            target = self.varset
        forms = []
        for name in self.varset.names:
            if name in assignment:
                form = assignment[name]
                for tname, c in form.items():
                    target.index(tname)
                    if not isinstance(c, int):
                        raise ParameterError("substitutions must have integer coefficients")
                vector = [form.get(t, 0) for t in target.names]
            else:
                vector = [0] * len(target)
                vector[target.index(name)] = 1
            forms.append(tuple(vector))
        width = len(target)
        order = self.order
        power_cache: dict = {}

        def form_power(fi: int, e: int) -> dict:
            # (sum_j c_j t_j)^e as {multi-index: int}, truncated at the order
            key = (fi, e)
            cached = power_cache.get(key)
            if cached is not None:
                return cached
            if e == 0:
                result = {(0,) * width: 1}
            else:
                prev = form_power(fi, e - 1)
                result = {}
                for index, c in prev.items():
                    for j, cj in enumerate(forms[fi]):
                        if cj == 0:
                            continue
                        new = list(index)
                        new[j] += 1
                        if sum(new) > order:
                            continue
                        new = tuple(new)
                        result[new] = result.get(new, 0) + c * cj
            power_cache[key] = result
            return result

        out: dict = {}
        for index, element in self._coeffs.items():
            expansion = {(0,) * width: 1}
            for fi, e in enumerate(index):
                if e == 0:
                    continue
                powered = form_power(fi, e)
                merged: dict = {}
                for i1, c1 in expansion.items():
                    t1 = sum(i1)
                    for i2, c2 in powered.items():
                        if t1 + sum(i2) > order:
                            continue
                        key = tuple(x + y for x, y in zip(i1, i2))
                        merged[key] = merged.get(key, 0) + c1 * c2
                expansion = merged
                if not expansion:
                    break
            for key, c in expansion.items():
                if c == 0:
                    continue
                piece = element.scale(c)
                acc = out.get(key)
                out[key] = piece if acc is None else acc + piece
        return CentralSeries(self.algebra, target, order, out)

    # -- presentation ----------------------------------------------------------

    def to_data(self):
        return {
            "variables": list(self.varset.names),
            "order": self.order,
            "terms": [
                {"exponents": list(index), "element": self._coeffs[index].to_data()}
                for index in self.support()
            ],
        }

    def __str__(self):
        if not self._coeffs:
            return "0"
        pieces = []
        for index in self.support():
            element = self._coeffs[index]
            coeff = str(element)
            if ("+" in coeff or " - " in coeff) or coeff.startswith("-"):
                coeff = f"({coeff})"
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.varset.names, index)
                if e
            )
            if not mono:
                pieces.append(coeff)
            elif coeff == "1":
                pieces.append(mono)
            else:
                pieces.append(f"{coeff}*{mono}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"<series {self}>"


def left_substitute(f: CentralSeries, g: CentralSeries) -> CentralSeries:
    """f(g) = sum_k f_k g^k with each f_k multiplied on the left of g^k.

    ``f`` must be univariate and ``g`` must have zero constant term.  Because
    the coefficients do not commute this is *not* multiplicative in f:
    left_substitute(f1 * f2, g) differs from the product of the separate
    substitutions in general.
    """
    if len(f.varset) != 1:
        raise ShapeError("left substitution needs a univariate series")
    if f.order != g.order:
        raise ShapeError("truncation orders must agree")
    if not g.constant_term().is_zero():
        raise ComposabilityError("substitution target must have zero constant term")
    order = g.order
    result = CentralSeries.zero(g.algebra, g.varset, order)
    power = CentralSeries.unit(g.algebra, g.varset, order)
    for k in range(order + 1):
        fk = f.coefficient((k,))
        if not fk.is_zero():
            result = result + power.scale_left(fk)
        if k < order:
            power = power * g
    return result


def revert(f: CentralSeries) -> CentralSeries:
    """Unique g = x + ... with f(g) = x to the truncation order.

    ``f`` must be of unit-linear form x + (higher order).  The coefficients of
    g are found by a triangular solve; no division is needed because the
    linear coefficient is 1.
    """
    if len(f.varset) != 1:
        raise ShapeError("reversion needs a univariate series")
    if not f.constant_term().is_zero():
        raise ReversionError("series must have zero constant term")
    if f.coefficient((1,)) != f.algebra.one():
        raise ReversionError("series must have linear coefficient 1")
    order = f.order
    g = CentralSeries.variable(f.algebra, f.varset, order, f.varset.names[0])
    for n in range(2, order + 1):
        overshoot = left_substitute(f, g).coefficient((n,))
        if not overshoot.is_zero():
            g = g + CentralSeries(f.algebra, f.varset, order, {(n,): -overshoot})
    return g


def left_expand(target: CentralSeries, basis: dict) -> dict:
    """Coefficients A(I) with sum_I A(I) * b_1^i1 * ... * b_m^im = target.

    ``basis`` maps each variable name of the target to a univariate series of
    unit-linear form in that variable.  Basis powers are multiplied in
    variable-set order with coefficients on the left; the expansion exists and
    is unique because each ordered basis power is x^I plus terms of higher
    total degree.  Returns only the nonzero A(I).
    """
    varset = target.varset
    order = target.order
    embedded = []
    for name in varset.names:
        b = basis.get(name)
        if b is None:
            raise ExpansionError(f"no basis series for variable {name!r}")
        if len(b.varset) != 1 or b.varset.names[0] != name:
            raise ExpansionError(f"basis series for {name!r} must be univariate in it")
        if b.order != order:
            raise ShapeError("basis and target must share the truncation order")
        if not b.constant_term().is_zero() or b.coefficient((1,)) != b.algebra.one():
            raise ExpansionError("basis series must be of unit-linear form")
        embedded.append(b.specialize({}, varset))

    powers = []
    for series in embedded:
        row = [CentralSeries.unit(target.algebra, varset, order)]
        for _ in range(order):
            row.append(row[-1] * series)
        powers.append(row)

    product_cache: dict = {}

    def basis_power(index) -> CentralSeries:
        cached = product_cache.get(index)
        if cached is not None:
            return cached
        result = powers[0][index[0]]
        for v in range(1, len(index)):
            if index[v]:
                result = result * powers[v][index[v]]
        product_cache[index] = result
        return result

    indices = sorted(_all_indices(len(varset), order), key=_graded_lex)
    remainder = target
    expansion = {}
    for index in indices:
        coeff = remainder.coefficient(index)
        if coeff.is_zero():
            continue
        expansion[index] = coeff
        remainder = remainder - basis_power(index).scale_left(coeff)
    if not remainder.is_zero():
        raise ExpansionError("expansion did not terminate; basis is not triangular")
    return expansion


def _all_indices(width: int, order: int):
    if width == 1:
        for a in range(order + 1):
            yield (a,)
    elif width == 2:
        for a in range(order + 1):
            for b in range(order + 1 - a):
                yield (a, b)
    else:
        for a in range(order + 1):
            for b in range(order + 1 - a):
                for c in range(order + 1 - a - b):
                    yield (a, b, c)
