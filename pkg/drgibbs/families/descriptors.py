"""
Family descriptors such as ``hamming:D=3,N=3`` and their closed-form metadata.
"""

import logging
import math
from dataclasses import dataclass, field
from math import comb

from ..config import ENDPOINT_TOLERANCE
from ..exceptions import BadParam
from ..hypergroup import from_recurrence
from ..positivity.region import PositivityRegion
from ..utils.conversions import to_fraction
from . import finite, trees

logger = logging.getLogger(__name__)

PARAMETERS = {
    "complete": ("N",),
    "hamming": ("D", "N"),
    "johnson": ("v", "D"),
    "qjohnson": ("q", "v", "D"),
    "gamma": ("a", "b"),
    "octahedron": (),
    "custom": (),
}

# powers q^-j listed explicitly in the predicted q-Johnson set
_Q_POWERS = 20


@dataclass(frozen=True)
class FamilySpec:
    """
    A distance-regular family instance.

    Attributes
    ----------
    kind : str
        One of complete, hamming, johnson, qjohnson, gamma, octahedron, custom
    params : dict
        Integer parameters of the kind, e.g. ``{"D": 3, "N": 3}``
    coeffs : tuple
        Recurrence triples for the custom kind
    """

    kind: str
    params: dict = field(default_factory=dict)
    coeffs: tuple = ()

    def __post_init__(self):
        if self.kind not in PARAMETERS:
            raise BadParam(f"unknown family kind {self.kind!r}")
        expected = set(PARAMETERS[self.kind])
        if set(self.params) != expected:
            raise BadParam(f"{self.kind} expects parameters {sorted(expected)}, got {sorted(self.params)}")
        self._validate()

    def _validate(self):
        p = self.params
        for name, value in p.items():
            if isinstance(value, bool) or not isinstance(value, int):
                raise BadParam(f"parameter {name} must be an integer, got {value!r}")
        if self.kind == "complete" and p["N"] < 2:
            raise BadParam("complete graphs need N >= 2")
        if self.kind == "hamming" and (p["N"] < 2 or p["D"] < 1):
            raise BadParam("Hamming graphs need N >= 2 and D >= 1")
        if self.kind in ("johnson", "qjohnson") and not 1 <= p["D"] <= p["v"] / 2:
            raise BadParam(f"{self.kind} graphs need 1 <= D <= v/2")
        if self.kind == "qjohnson" and p["q"] < 2:
            raise BadParam("q-Johnson graphs need q >= 2")
        if self.kind == "gamma" and (p["a"] < 2 or p["b"] < 2):
            raise BadParam("Gamma(a, b) needs a, b >= 2")
        if self.kind == "custom" and len(self.coeffs) < 2:
            raise BadParam("a custom recurrence needs at least two triples")

    @property
    def descriptor(self):
        if self.kind == "octahedron":
            return "octahedron"
        if self.kind == "custom":
            return "custom:" + ";".join(",".join(str(c) for c in t) for t in self.coeffs)
        body = ",".join(f"{name}={self.params[name]}" for name in PARAMETERS[self.kind])
        return f"{self.kind}:{body}"

    @property
    def finite(self):
        return self.kind != "gamma"

    @property
    def diameter(self):
        p = self.params
        return {
            "complete": lambda: 1,
            "hamming": lambda: p["D"],
            "johnson": lambda: p["D"],
            "qjohnson": lambda: p["D"],
            "octahedron": lambda: 2,
            "gamma": lambda: "unbounded",
            "custom": lambda: len(self.coeffs) - 1,
        }[self.kind]()

    def build(self):
        """Construct the hypergroup of this family."""
        p = self.params
        if self.kind == "complete":
            return finite.complete(p["N"])
        if self.kind == "hamming":
            return finite.hamming(p["D"], p["N"])
        if self.kind == "johnson":
            return finite.johnson(p["v"], p["D"])
        if self.kind == "qjohnson":
            return finite.q_johnson(p["q"], p["v"], p["D"])
        if self.kind == "octahedron":
            return finite.octahedron()
        if self.kind == "gamma":
            return trees.gamma_ab(p["a"], p["b"])[0]
        return from_recurrence(self.coeffs, label=self.descriptor)

    def tree_constants(self):
        if self.kind != "gamma":
            raise BadParam("tree constants exist only for gamma families")
        return trees.tree_constants(self.params["a"], self.params["b"])

    def closed_form_dual(self):
        """Dual points from the family formulas, or None when no closed form is known."""
        p = self.params
        if self.kind == "complete":
            return finite.hamming_dual(1, p["N"])
        if self.kind == "hamming":
            return finite.hamming_dual(p["D"], p["N"])
        if self.kind == "johnson":
            return finite.johnson_dual(p["v"], p["D"])
        if self.kind == "octahedron":
            return finite.johnson_dual(4, 2)
        if self.kind == "qjohnson":
            return finite.q_johnson_dual(p["q"], p["v"], p["D"])
        return None

    def haar_closed_form(self, up_to=None):
        """
        Sphere sizes from the family formulas.

        Parameters
        ----------
        up_to : int, optional
            Last index, required for gamma families

        Returns
        -------
        list of int or None
            ``omega_0, ..., omega_up_to``; None for custom recurrences
        """
        p = self.params
        if self.kind == "complete":
            return [1, p["N"] - 1]
        if self.kind == "hamming":
            return [comb(p["D"], i) * (p["N"] - 1) ** i for i in range(p["D"] + 1)]
        if self.kind == "johnson":
            return finite.johnson_haar(p["v"], p["D"])
        if self.kind == "octahedron":
            return finite.johnson_haar(4, 2)
        if self.kind == "qjohnson":
            return finite.q_johnson_haar(p["q"], p["v"], p["D"])
        if self.kind == "gamma":
            if up_to is None:
                raise BadParam("up_to is required for gamma families")
            a, b = p["a"], p["b"]
            return [1] + [a * (b - 1) * ((a - 1) * (b - 1)) ** (k - 1) for k in range(1, up_to + 1)]
        return None

    @property
    def vertex_count(self):
        """Number of vertices of the finite graph, None for gamma and custom."""
        p = self.params
        if self.kind == "complete":
            return p["N"]
        if self.kind == "hamming":
            return p["N"] ** p["D"]
        if self.kind == "johnson":
            return comb(p["v"], p["D"])
        if self.kind == "octahedron":
            return 6
        if self.kind == "qjohnson":
            return finite.gaussian_binomial(p["v"], p["D"], p["q"])
        return None

    def predicted_region(self, tolerance=ENDPOINT_TOLERANCE):
        """
        Positivity set stated by the theory of the family.

        Complete, Hamming, octahedron and gamma sets are exact; the Johnson
        interval and the q-Johnson powers are inner bounds. None for custom.
        """
        p = self.params
        if self.kind in ("complete", "hamming"):
            return PositivityRegion.from_intervals([(-1.0 / (p["N"] - 1), 1.0)], tolerance=tolerance)
        if self.kind == "octahedron":
            return PositivityRegion.from_intervals([(math.sqrt(3.0) - 2.0, 1.0)], tolerance=tolerance)
        if self.kind == "johnson":
            return PositivityRegion.from_intervals([(0.0, 1.0)], tolerance=tolerance, claim="inner")
        if self.kind == "qjohnson":
            q = p["q"]
            points = [0.0] + [q ** -j for j in range(_Q_POWERS)]
            return PositivityRegion.from_intervals([], points, tolerance=tolerance, claim="inner")
        if self.kind == "gamma":
            return trees.predicted_gamma_region(p["a"], p["b"])
        return None

    def enlarge(self, n):
        """
        The n-th member of the embedding sequence of this family.

        Hamming ``(D+n, N)``, Johnson and q-Johnson ``(v+2n, D+n)``, gamma
        ``(a+n, b)``; a complete graph is ``H(1, N)`` and the octahedron ``J(4, 2)``.
        """
        if n < 0:
            raise BadParam(f"n must be nonnegative, got {n}")
        p = self.params
        if self.kind == "complete":
            return FamilySpec("hamming", {"D": 1 + n, "N": p["N"]})
        if self.kind == "hamming":
            return FamilySpec("hamming", {"D": p["D"] + n, "N": p["N"]})
        if self.kind == "octahedron":
            return FamilySpec("johnson", {"v": 4 + 2 * n, "D": 2 + n})
        if self.kind == "johnson":
            return FamilySpec("johnson", {"v": p["v"] + 2 * n, "D": p["D"] + n})
        if self.kind == "qjohnson":
            return FamilySpec("qjohnson", {"q": p["q"], "v": p["v"] + 2 * n, "D": p["D"] + n})
        if self.kind == "gamma":
            return FamilySpec("gamma", {"a": p["a"] + n, "b": p["b"]})
        raise BadParam("custom recurrences have no embedding sequence")

    def to_dict(self):
        return {"kind": self.kind, "descriptor": self.descriptor, "params": dict(self.params)}


def parse_family(text):
    """
    Parse a family descriptor.

    Parameters
    ----------
    text : str
        ``kind:key=value,...``, ``octahedron`` or ``custom:a,b,c;a,b,c;...``

    Returns
    -------
    FamilySpec
        Validated family instance

    Raises
    ------
    BadParam
        For unknown kinds, unknown or missing keys and invalid values
    """
    text = text.strip()
    kind, _, body = text.partition(":")
    kind = kind.strip().lower()
    if kind not in PARAMETERS:
        raise BadParam(f"unknown family kind {kind!r} in {text!r}")

    if kind == "custom":
        try:
            coeffs = tuple(
                tuple(to_fraction(c) for c in triple.split(","))
                for triple in body.split(";") if triple.strip()
            )
        except (ValueError, ZeroDivisionError) as err:
            raise BadParam(f"cannot parse custom coefficients {body!r}: {err}") from err
        return FamilySpec("custom", {}, coeffs)

    params = {}
    for item in filter(None, (part.strip() for part in body.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise BadParam(f"expected key=value, got {item!r}")
        key = key.strip()
        if key in params:
            raise BadParam(f"duplicate key {key!r}")
        try:
            params[key] = int(value)
        except ValueError as err:
            raise BadParam(f"{key} must be an integer, got {value!r}") from err
    return FamilySpec(kind, params)


def build_family(spec):
    """Return the hypergroup of a FamilySpec or of a descriptor string."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    H = spec.build()
    logger.debug("built family %s", spec.descriptor)
    return H
