"""
Polynomial hypergroups on {0, ..., D}.

A hypergroup is given by its recurrence triples ``(a_i, b_i, c_i)`` with
``delta_1 * delta_i = a_i delta_{i+1} + b_i delta_i + c_i delta_{i-1}``.
All algebra here is exact (``fractions.Fraction``); only polynomial
evaluation at floating points leaves the rationals.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Tuple

import numpy as np

from ..config import TENSOR_PRECOMPUTE_LIMIT
from ..exceptions import AxiomViolation, BadParam, NegativeCoefficient
from ..utils.conversions import is_exact, match_type, to_fraction

logger = logging.getLogger(__name__)

UNBOUNDED = "unbounded"

# triples of an unbounded hypergroup validated at construction
_EAGER_CHECK = 16


@dataclass(frozen=True, eq=False)
class PolynomialHypergroup:
    """
    Recurrence data of a polynomial hypergroup.

    Attributes
    ----------
    diameter : int or "unbounded"
        Largest index D of the hypergroup
    coeffs : tuple
        Stored ``(a_i, b_i, c_i)`` triples of Fractions; all of them for
        finite D, a prefix for unbounded hypergroups
    label : str
        Family descriptor text
    generator : callable, optional
        ``i -> (a_i, b_i, c_i)`` for indices beyond ``coeffs`` (unbounded only)
    """

    diameter: object
    coeffs: Tuple[Tuple[Fraction, Fraction, Fraction], ...]
    label: str = ""
    generator: Optional[Callable[[int], tuple]] = None
    _products: dict = field(default_factory=dict, repr=False)
    _generated: dict = field(default_factory=dict, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def finite(self):
        return self.diameter != UNBOUNDED

    def coefficients(self, i):
        """Return the triple ``(a_i, b_i, c_i)`` as Fractions."""
        if i < 0:
            raise BadParam(f"negative index {i}")
        if i < len(self.coeffs):
            return self.coeffs[i]
        if self.finite:
            raise BadParam(f"index {i} exceeds diameter {self.diameter}")
        triple = self._generated.get(i)
        if triple is None:
            triple = tuple(to_fraction(c) for c in self.generator(i))
            _check_triple(i, triple, UNBOUNDED)
            self._generated[i] = triple
        return triple

    def check_index(self, i):
        if i < 0 or (self.finite and i > self.diameter):
            raise BadParam(f"index {i} outside 0..{self.diameter}")

    def __repr__(self):
        return f"PolynomialHypergroup({self.label or 'custom'}, D={self.diameter})"


@dataclass(frozen=True)
class FiniteMeasure:
    """
    Finitely supported measure on the hypergroup indices.

    Attributes
    ----------
    weights : tuple
        Sorted ``(index, weight)`` pairs with nonzero weights
    """

    weights: Tuple[Tuple[int, object], ...]

    @classmethod
    def from_mapping(cls, mapping):
        return cls(tuple(sorted((int(k), v) for k, v in mapping.items() if v != 0)))

    def __getitem__(self, k):
        return dict(self.weights).get(k, 0)

    def __iter__(self):
        return iter(self.weights)

    @property
    def support(self):
        return tuple(k for k, _ in self.weights)

    @property
    def total_mass(self):
        return sum((w for _, w in self.weights), Fraction(0))

    def as_dict(self):
        return dict(self.weights)

    def integrate(self, f):
        """Return ``sum_k w_k f(k)`` for a callable or an indexable ``f``."""
        fn = f if callable(f) else f.__getitem__
        return sum(w * fn(k) for k, w in self.weights)

    def to_dict(self):
        return {str(k): w for k, w in self.weights}


def _check_triple(i, triple, diameter):
    a, b, c = triple
    if min(a, b, c) < 0:
        raise AxiomViolation(i, "coefficients must be nonnegative")
    if a + b + c != 1:
        raise AxiomViolation(i, f"a+b+c = {a + b + c}, expected 1")
    if i == 0:
        if (a, b, c) != (1, 0, 0):
            raise AxiomViolation(0, "a_0 = 1 and b_0 = c_0 = 0 required")
        return
    if c <= 0:
        raise AxiomViolation(i, "c_i > 0 required for i >= 1")
    finite = diameter != UNBOUNDED
    if finite and i == diameter:
        if a != 0:
            raise AxiomViolation(i, "a_D = 0 required at the diameter")
    elif a <= 0:
        raise AxiomViolation(i, "a_i > 0 required below the diameter")


def from_recurrence(coeffs, diameter=None, label="", generator=None):
    """
    Build and validate a polynomial hypergroup from recurrence triples.

    Parameters
    ----------
    coeffs : sequence
        Triples ``(a_i, b_i, c_i)`` of exact rationals (ints, Fractions or
        ``"p/q"`` strings), starting at i = 0
    diameter : int or "unbounded", optional
        Diameter D; by default ``len(coeffs) - 1`` when no generator is given
    label : str, optional
        Family descriptor, by default ""
    generator : callable, optional
        ``i -> (a_i, b_i, c_i)`` for an unbounded hypergroup, by default None

    Returns
    -------
    PolynomialHypergroup
        Validated hypergroup

    Raises
    ------
    AxiomViolation
        If a triple breaks one of the hypergroup axioms
    """
    triples = tuple(tuple(to_fraction(c) for c in triple) for triple in coeffs)
    if any(len(t) != 3 for t in triples):
        raise BadParam("every coefficient entry must be a triple (a, b, c)")

    if generator is not None or diameter == UNBOUNDED:
        if generator is None:
            raise BadParam("an unbounded hypergroup needs a coefficient generator")
        diameter = UNBOUNDED
        if not triples:
            triples = (tuple(to_fraction(c) for c in generator(0)),)
    elif diameter is None:
        diameter = len(triples) - 1

    if diameter != UNBOUNDED:
        if diameter < 1:
            raise BadParam(f"diameter must be a positive integer, got {diameter}")
        if len(triples) != diameter + 1:
            raise BadParam(f"expected {diameter + 1} triples for diameter {diameter}, got {len(triples)}")

    for i, triple in enumerate(triples):
        _check_triple(i, triple, diameter)

    hypergroup = PolynomialHypergroup(diameter, triples, label, generator)
    if diameter == UNBOUNDED:
        for i in range(len(triples), _EAGER_CHECK):
            hypergroup.coefficients(i)
    logger.debug("built %r", hypergroup)
    return hypergroup


def haar_weights(H, up_to=None):
    """
    Haar weights by ``omega_0 = 1``, ``omega_{i+1} = omega_i a_i / c_{i+1}``.

    Parameters
    ----------
    H : PolynomialHypergroup
        Hypergroup
    up_to : int, optional
        Last index; by default the diameter (required when unbounded)

    Returns
    -------
    list
        Exact weights ``[omega_0, ..., omega_up_to]``
    """
    if up_to is None:
        if not H.finite:
            raise BadParam("up_to is required for an unbounded hypergroup")
        up_to = H.diameter
    H.check_index(up_to)

    weights = [Fraction(1)]
    for i in range(up_to):
        a_i = H.coefficients(i)[0]
        c_next = H.coefficients(i + 1)[2]
        weights.append(weights[-1] * a_i / c_next)
    return weights


def _shift_by_one(H, measure):
    # delta_1 * measure, term by term
    out = {}
    for k, w in measure.items():
        a, b, c = H.coefficients(k)
        if a:
            out[k + 1] = out.get(k + 1, 0) + w * a
        if b:
            out[k] = out.get(k, 0) + w * b
        if c:
            out[k - 1] = out.get(k - 1, 0) + w * c
    return out


def convolve(H, i, j):
    """
    Convolution ``delta_i * delta_j`` as an exact probability measure.

    Products are obtained by linearisation,
    ``delta_{m+1} * delta_j = (delta_1 * (delta_m * delta_j) - b_m delta_m * delta_j
    - c_m delta_{m-1} * delta_j) / a_m``, and memoised on the hypergroup.

    Parameters
    ----------
    H : PolynomialHypergroup
        Hypergroup
    i, j : int
        Indices (at most D when finite)

    Returns
    -------
    FiniteMeasure
        Measure supported in ``[|i-j|, min(i+j, D)]``

    Raises
    ------
    NegativeCoefficient
        If a weight comes out negative, i.e. the coefficients are inconsistent
    """
    H.check_index(i)
    H.check_index(j)
    if i > j:
        i, j = j, i

    cached = H._products.get((i, j))
    if cached is not None:
        return cached

    previous = None
    current = {j: Fraction(1)}
    H._products.setdefault((0, j), FiniteMeasure.from_mapping(current))
    for m in range(i):
        a, b, c = H.coefficients(m)
        shifted = _shift_by_one(H, current)
        nxt = {}
        for k, w in shifted.items():
            nxt[k] = nxt.get(k, 0) + w
        for k, w in current.items():
            nxt[k] = nxt.get(k, 0) - b * w
        if previous is not None:
            for k, w in previous.items():
                nxt[k] = nxt.get(k, 0) - c * w
        nxt = {k: w / a for k, w in nxt.items() if w != 0}
        for k, w in nxt.items():
            if w < 0:
                raise NegativeCoefficient(m + 1, j, k, w)
        previous, current = current, nxt
        H._products.setdefault((m + 1, j), FiniteMeasure.from_mapping(current))

    return H._products[(i, j)]


def convolution_tensor(H):
    """
    All products ``delta_i * delta_j`` of a finite hypergroup.

    Returns
    -------
    dict
        ``(i, j) -> FiniteMeasure`` for all ``0 <= i, j <= D``

    Raises
    ------
    BadParam
        If the hypergroup is unbounded or D exceeds the precompute limit
    """
    if not H.finite or H.diameter > TENSOR_PRECOMPUTE_LIMIT:
        raise BadParam(f"full tensor only for finite D <= {TENSOR_PRECOMPUTE_LIMIT}")
    D = H.diameter
    return {(i, j): convolve(H, i, j) for i in range(D + 1) for j in range(D + 1)}


def polynomial_values(H, n, x):
    """
    Values ``[P_0(x), ..., P_n(x)]`` of the orthogonal polynomials.

    Uses ``P_0 = 1``, ``P_1 = x`` and
    ``P_{i+1} = ((x - b_i) P_i - c_i P_{i-1}) / a_i``. Exact rationals stay
    exact; floats and numpy arrays are evaluated in double precision.

    Parameters
    ----------
    H : PolynomialHypergroup
        Hypergroup
    n : int
        Highest degree (at most D when finite)
    x : int, Fraction, float or numpy.ndarray
        Evaluation point(s)

    Returns
    -------
    list
        Polynomial values in the arithmetic of ``x``
    """
    H.check_index(n)
    exact = is_exact(x)
    if isinstance(x, np.ndarray):
        x = x.astype(np.float64)
        values = [np.ones_like(x)]
    elif exact:
        x = Fraction(x)
        values = [Fraction(1)]
    else:
        x = float(x)
        values = [1.0]
    if n == 0:
        return values
    values.append(x)
    for i in range(1, n):
        a, b, c = (match_type(t, x) for t in H.coefficients(i))
        values.append(((x - b) * values[i] - c * values[i - 1]) / a)
    return values


def eval_polynomial(H, i, x):
    """Return ``P_i(x)`` by the three-term recurrence."""
    return polynomial_values(H, i, x)[i]
