"""Integer arithmetic of principal 3-sphere-type bundles over the 4-sphere.

The bundles in question are classified by integer labels congruent to
1 mod 4 attached to the two halves of a two-disc decomposition of the
base; a pair (p_-, p_+) determines the bundle with Euler number
k = (p_-^2 - p_+^2)/8, always an integer for labels in that congruence
class. The two-integer families carry a pair (k, l), with l read off a
second label pair through l = -(q_-^2 - q_+^2)/8. Everything here is
exact integer arithmetic.
"""

import math
from dataclasses import dataclass

from .errors import ParameterError, ValidationError


def _check_label(p, name):
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValidationError("{} must be an integer".format(name))
    if p % 4 != 1:
        raise ValidationError(
            "{} must be congruent to 1 mod 4, got {}".format(name, p))


def euler_class(p_minus, p_plus):
    """Euler number k = (p_-^2 - p_+^2)/8 of the label pair."""
    _check_label(p_minus, "p_minus")
    _check_label(p_plus, "p_plus")
    num = p_minus * p_minus - p_plus * p_plus
    if num % 8 != 0:
        raise ValidationError("label pair is not in the solvable class")
    return num // 8


def _odd_divisors(n):
    n = abs(n)
    while n % 2 == 0:
        n //= 2
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 2
    return sorted(out)


def solve_euler(k, bound=None):
    """Every label pair (p_-, p_+), both congruent to 1 mod 4, with Euler
    number k.

    Writing p_- = 2m + n and p_+ = n - 2m turns the equation into
    k = n m with n odd, so the finite solution list for k != 0 comes from
    the odd divisors of k (both signs). For k = 0 the solutions form the
    infinite family (p, p) and a bound on |p| is required. Results are
    sorted by (|p_-|, |p_+|, p_-, p_+), which reproduces printed solution
    lists.
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise ParameterError("k must be an integer")
    if k == 0:
        if bound is None:
            raise ParameterError(
                "k = 0 has the infinite family (p, p); pass a bound on |p|")
        sols = [(p, p) for p in range(-int(bound), int(bound) + 1)
                if p % 4 == 1]
    else:
        found = set()
        for d in _odd_divisors(k):
            for n in (d, -d):
                m = k // n
                p_minus = 2 * m + n
                if p_minus % 4 == 1:
                    found.add((p_minus, n - 2 * m))
        sols = list(found)
    for p_minus, p_plus in sols:
        if euler_class(p_minus, p_plus) != k:
            raise AssertionError("solver produced a wrong pair")
    return sorted(sols, key=lambda pq: (abs(pq[0]), abs(pq[1]), pq[0], pq[1]))


def canonical_solution(k):
    """One distinguished solution of euler_class = k:
    (2k+1, -2k+1) for even k, (-k-2, -k+2) for k = 1 mod 4,
    (k+2, k-2) for k = 3 mod 4."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise ParameterError("k must be an integer")
    if k % 2 == 0:
        pair = (2 * k + 1, -2 * k + 1)
    elif k % 4 == 1:
        pair = (-k - 2, -k + 2)
    else:
        pair = (k + 2, k - 2)
    if euler_class(*pair) != k:
        raise AssertionError("canonical pair fails its own equation")
    return pair


def second_label(q_minus, q_plus):
    """The second integer l = -(q_-^2 - q_+^2)/8 of a two-parameter family.

    The sign convention is fixed so that the tabulated orbit-type formulas
    come out right when the q-labels are fed through canonical_solution
    with the slots swapped: (q_+, q_-) = canonical_solution(l).
    """
    return euler_class(q_plus, q_minus)


def classify_pair(p_minus, q_minus, p_plus, q_plus):
    """(k, l) of the four-label tuple."""
    return (euler_class(p_minus, p_plus), second_label(q_minus, q_plus))


@dataclass(frozen=True)
class MayerVietorisReport:
    """Difference map on degree-3 boundary cohomology for the two-disc
    decomposition, and the degree-4 torsion it generates."""
    matrix: tuple
    det: int
    torsion_order: int


def mayer_vietoris_matrix(p_minus, p_plus):
    """Matrix ((-1, 1), (p_-^2, -p_+^2)) of the glueing difference map;
    its determinant is -8k, so the degree-4 torsion group of the total
    space has order |k| (free of rank 1 when k = 0)."""
    _check_label(p_minus, "p_minus")
    _check_label(p_plus, "p_plus")
    matrix = ((-1, 1), (p_minus * p_minus, -p_plus * p_plus))
    det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    if det % 8 != 0:
        raise AssertionError("determinant must be divisible by 8")
    torsion = abs(det) // 8
    if torsion != abs(euler_class(p_minus, p_plus)):
        raise AssertionError("torsion order disagrees with the Euler number")
    return MayerVietorisReport(matrix=matrix, det=det, torsion_order=torsion)


#: Residues mod 12 realized by k(k+1)/2; exactly these classify the unit
#: second-label total spaces.
TOTAL_SPACE_RESIDUES = frozenset({0, 1, 3, 4, 6, 7, 9, 10})


def s7_bundle_class(k):
    """Residue k(k+1)/2 mod 12 classifying the total space of the
    (k, 1)-family up to equivariant diffeomorphism."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise ParameterError("k must be an integer")
    return (k * (k + 1) // 2) % 12


def s7_orientation_partner(residue):
    """Reversing orientation negates the residue mod 12."""
    if not isinstance(residue, int) or isinstance(residue, bool):
        raise ParameterError("residue must be an integer")
    return (-residue) % 12


@dataclass(frozen=True)
class CohomologyReport:
    kind: str
    label: tuple
    groups: tuple
    ring_note: str
    notes: tuple

    def group(self, degree):
        for deg, desc in self.groups:
            if deg == degree:
                return desc
        return "0"


def _torsion_desc(order):
    order = abs(order)
    if order == 0:
        return "Z"
    if order == 1:
        return "0"
    return "Z/{}".format(order)


def cohomology_report(kind, k, l=None):
    """Integral cohomology of the four bundle families.

    kind is one of:
      'principal3'  total space of the principal 3-sphere bundle, label k
      'sphere2'     associated 2-sphere bundle, label k
      'sphere3'     3-sphere bundle of the pair (k, l)
      'principal33' principal product-of-3-spheres bundle of the pair (k, l)
    Only nonzero groups are listed, as (degree, description) pairs.
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise ParameterError("k must be an integer")
    notes = []
    ring = ""
    if kind == "principal3":
        label = (k,)
        if k == 0:
            groups = ((0, "Z"), (3, "Z"), (4, "Z"), (7, "Z"))
            notes.append("trivial bundle: product of the 4-sphere and the 3-sphere")
        else:
            groups = tuple(g for g in
                           ((0, "Z"), (4, _torsion_desc(k)), (7, "Z"))
                           if g[1] != "0")
            if abs(k) == 1:
                notes.append("degree-4 torsion vanishes: homotopy 7-sphere")
            if abs(k) == 2:
                notes.append("unit tangent bundle of the 4-sphere")
        notes.append("sign-reversed label gives a diffeomorphic total space")
    elif kind == "sphere2":
        label = (k,)
        groups = ((0, "Z"), (2, "Z"), (4, "Z"), (6, "Z"))
        ring = "x^2 = {}y for generators x in degree 2, y in degree 4".format(k)
        if k == 0:
            notes.append("diffeomorphic to the product of the 2-sphere and the 4-sphere")
        if abs(k) == 1:
            notes.append("diffeomorphic to the complex projective 3-space")
        if abs(k) >= 2:
            notes.append("same groups as complex projective 3-space, "
                         "different ring")
        notes.append("sign-reversed label gives a diffeomorphic total space")
    elif kind == "sphere3":
        if l is None or not isinstance(l, int) or isinstance(l, bool):
            raise ParameterError("kind 'sphere3' needs the second label l")
        label = (k, l)
        e = k + l
        if e == 0:
            groups = ((0, "Z"), (3, "Z"), (4, "Z"), (7, "Z"))
        else:
            groups = tuple(g for g in
                           ((0, "Z"), (4, _torsion_desc(e)), (7, "Z"))
                           if g[1] != "0")
        notes.append("Euler number of the fibration: {}".format(e))
        notes.append("third homotopy group is cyclic of order {}".format(abs(e)))
        if abs(e) == 1:
            notes.append("homeomorphic to the 7-sphere")
    elif kind == "principal33":
        if l is None or not isinstance(l, int) or isinstance(l, bool):
            raise ParameterError("kind 'principal33' needs the second label l")
        label = (k, l)
        g = math.gcd(k, l)
        if g == 0:
            groups = ((0, "Z"), (3, "Z^2"), (4, "Z"), (6, "Z"),
                      (7, "Z^2"), (10, "Z"))
            notes.append("trivial bundle: full product cohomology")
        else:
            groups = tuple(gr for gr in
                           ((0, "Z"), (3, "Z"), (4, _torsion_desc(g)),
                            (7, "Z"), (10, "Z"))
                           if gr[1] != "0")
            notes.append("degree-4 torsion order is gcd(k, l) = {}".format(g))
    else:
        raise ParameterError("unknown cohomology kind {!r}".format(kind))
    return CohomologyReport(kind=kind, label=label, groups=groups,
                            ring_note=ring, notes=tuple(notes))
