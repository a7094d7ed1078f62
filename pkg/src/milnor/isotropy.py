"""Symbolic subgroup diagrams and orbit-type arithmetic for the rotation
actions on 3-sphere bundles.

The group data is small and rigid: inside a product of unit-quaternion
groups, the two singular-orbit subgroups are each a circle with integer
slopes around the i-axis (left side) or j-axis (right side) together with
one flip coset, and the principal isotropy is the diagonally embedded
quaternion group {+-1, +-i, +-j, +-k}. All membership questions reduce to
congruences over rational angles, so everything here is exact integer and
Fraction arithmetic; no floats.

Orbit types of the induced rotation action on the associated 3-sphere
bundle with labels (p_-, q_-, p_+, q_+), all congruent to 1 mod 4, are the
base types (1), (Z2), (D2) plus four dihedral types of order |p +- q|/2
per side, where order 0 degenerates to the circle types SO(2) + O(2) and
order 1 collapses into Z2. The congruence class makes the sum orders odd
and the difference orders even, which the code asserts.
"""

from dataclasses import dataclass
from fractions import Fraction

from .bundles import canonical_solution, classify_pair, solve_euler
from .errors import ParameterError, ValidationError

BASE_TYPES = frozenset({"1", "Z2", "D2"})


def _check_label(p, name):
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValidationError("{} must be an integer".format(name))
    if p % 4 != 1:
        raise ValidationError(
            "{} must be congruent to 1 mod 4, got {}".format(name, p))


def canonical_type_labels(order):
    """Type labels for a dihedral order: 0 degenerates to the circle pair,
    1 is the two-element group, the rest are honest dihedral groups."""
    if order < 0:
        raise ParameterError("orders are absolute values, got {}".format(order))
    if order == 0:
        return ("SO(2)", "O(2)")
    if order == 1:
        return ("Z2",)
    return ("D{}".format(order),)


_TYPE_RANK = {"1": (0, 0), "Z2": (1, 0), "SO(2)": (3, 0), "O(2)": (3, 1)}


def _rank(label):
    if label in _TYPE_RANK:
        return _TYPE_RANK[label]
    return (2, int(label[1:]))


@dataclass(frozen=True)
class OrbitTypeSet:
    """Orbit types as canonical labels plus the raw dihedral orders (the
    four numbers |p +- q|/2 before degeneration) they came from."""
    types: frozenset
    orders: tuple

    def sorted_labels(self):
        return sorted(self.types, key=_rank)

    @property
    def almost_free(self):
        return "SO(2)" not in self.types and "O(2)" not in self.types

    def dihedral_orders(self):
        """Orders of the honest dihedral members (D2 and up)."""
        return sorted(int(t[1:]) for t in self.types if t.startswith("D"))


def orbit_types(p_minus, q_minus, p_plus, q_plus):
    """Orbit types of the rotation action with the given label tuple."""
    for val, name in ((p_minus, "p_minus"), (q_minus, "q_minus"),
                      (p_plus, "p_plus"), (q_plus, "q_plus")):
        _check_label(val, name)
    sums = (abs(p_minus + q_minus), abs(p_plus + q_plus))
    diffs = (abs(p_minus - q_minus), abs(p_plus - q_plus))
    if any(s % 2 for s in sums + diffs):
        raise AssertionError("labels in 1 mod 4 must have even sums and differences")
    orders = (sums[0] // 2, diffs[0] // 2, sums[1] // 2, diffs[1] // 2)
    if orders[0] % 2 != 1 or orders[2] % 2 != 1:
        raise AssertionError("sum orders must be odd")
    if orders[1] % 2 != 0 or orders[3] % 2 != 0:
        raise AssertionError("difference orders must be even")
    labels = set(BASE_TYPES)
    for order in orders:
        labels.update(canonical_type_labels(order))
    return OrbitTypeSet(types=frozenset(labels), orders=orders)


def is_almost_free(type_set):
    """No circle isotropy anywhere."""
    return type_set.almost_free


def oliver_obstruction(type_set):
    """Can the action on the boundary 7-sphere extend to the 8-disc?

    A fixed-point-free rotation action on the disc must exhibit
    three-element cyclic or order-6 dihedral isotropy on the boundary, and
    an almost free boundary action cannot acquire fixed points inside. So:
    'not_applicable' when the action is not almost free, 'inconclusive'
    when (Z3) or (D3) occurs among the types, otherwise
    'extension_excluded'. The label alphabet of these actions cannot
    produce a standalone Z3, so in practice the D3 test decides; both are
    scanned anyway.
    """
    if not is_almost_free(type_set):
        return "not_applicable"
    if "D3" in type_set.types or "Z3" in type_set.types:
        return "inconclusive"
    return "extension_excluded"


# -- tabulated closed forms ---------------------------------------------------


def table_42(k, l, n=None):
    """Orbit types of the distinguished representative action for the
    bundle pair (k, l): p-labels from canonical_solution(k), q-labels from
    canonical_solution(l) with the slots swapped. l = 0 is an n-indexed
    family ((q_-, q_+) = (4n+1, 4n+1)) and needs n."""
    p_minus, p_plus = canonical_solution(k)
    if l == 0:
        if n is None:
            raise ParameterError("l = 0 is an n-indexed family; pass n")
        q_minus = q_plus = 4 * n + 1
    else:
        q_plus, q_minus = canonical_solution(l)
    return orbit_types(p_minus, q_minus, p_plus, q_plus)


def table_42_orders(k, l, n=None):
    """The same four dihedral orders from the printed closed forms
    (independent of the canonical-solution route; used to cross-check it).
    Returned sorted as a multiset."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise ParameterError("k must be an integer")
    if not isinstance(l, int) or isinstance(l, bool):
        raise ParameterError("l must be an integer")
    if l == 0:
        if n is None:
            raise ParameterError("l = 0 is an n-indexed family; pass n")
        if k % 2 == 0:
            orders = (abs(2 * n + 1 + k), abs(2 * n + 1 - k),
                      abs(2 * n + k), abs(2 * n - k))
        else:
            orders = (abs(4 * n + 3 + k) // 2, abs(4 * n + 3 - k) // 2,
                      abs(4 * n - 1 + k) // 2, abs(4 * n - 1 - k) // 2)
    elif k % 2 == 0 and l % 2 == 0:
        orders = (abs(k + l), abs(k + l), abs(k - l + 1), abs(k - l - 1))
    elif k % 2 == 0:
        orders = (abs(2 * k + l + 1) // 2, abs(2 * k + l - 1) // 2,
                  abs(2 * k - l + 3) // 2, abs(2 * k - l - 3) // 2)
    elif l % 2 == 0:
        orders = (abs(k + 2 * l + 1) // 2, abs(k + 2 * l - 1) // 2,
                  abs(k - 2 * l + 3) // 2, abs(k - 2 * l - 3) // 2)
    else:
        orders = (abs(k + l) // 2, abs(k + l) // 2,
                  abs(k - l + 4) // 2, abs(k - l - 4) // 2)
    return tuple(sorted(orders))


TABLE_42_CELLS = (
    ("k even, l even", "D|k+l| (twice), D|k-l+1|, D|k-l-1|"),
    ("k odd,  l even", "D|k+2l+1|/2, D|k+2l-1|/2, D|k-2l+3|/2, D|k-2l-3|/2"),
    ("k even, l odd", "D|2k+l+1|/2, D|2k+l-1|/2, D|2k-l+3|/2, D|2k-l-3|/2"),
    ("k odd,  l odd", "D|k+l|/2 (twice), D|k-l+4|/2, D|k-l-4|/2"),
    ("k even, l = 0", "D|2n+1+k|, D|2n+1-k|, D|2n+k|, D|2n-k|"),
    ("k odd,  l = 0", "D|4n+3+k|/2, D|4n+3-k|/2, D|4n-1+k|/2, D|4n-1-k|/2"),
)


def hopf_family(n):
    """Rotation actions on the total space of the quaternionic Hopf
    fibration, one per integer n: label tuple (-3, 4n+1, 1, 4n+1), orbit
    types (1), (Z2), (D2) plus D|2n-1|, D|2n|, D|2n+1|, D|2n+2| after
    degeneration. Almost free iff n not in {0, -1}."""
    ts = orbit_types(-3, 4 * n + 1, 1, 4 * n + 1)
    expected = tuple(sorted((abs(2 * n - 1), abs(2 * n),
                             abs(2 * n + 1), abs(2 * n + 2))))
    if tuple(sorted(ts.orders)) != expected:
        raise AssertionError("family orders drifted from the closed form")
    return ts


def cor_47_families(k, n):
    """Actions on the unit-Euler-number member (k, 1-k) shifted along the
    diffeomorphism period: the label pair (k + 56n, 1 - k - 56n) names the
    same smooth manifold for every n. Returns the orbit types and checks
    them against the period-shift closed forms: orders |k'+1 +- 1|/2 and
    |3k'-1 +- 3|/2 for even k, |k'-2 +- 1|/2 and |3k'-2 +- 3|/2 for odd k,
    with k' = k + 56n."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise ParameterError("k must be an integer")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParameterError("n must be an integer")
    kp = k + 56 * n
    # kp = 1 lands on the l = 0 family; its distinguished member is the
    # canonical q-pair (1, 1), the index-0 slot.
    ts = table_42(kp, 1 - kp, n=0 if kp == 1 else None)
    if k % 2 == 0:
        closed = (abs(kp + 2) // 2, abs(kp) // 2,
                  abs(3 * kp + 2) // 2, abs(3 * kp - 4) // 2)
    else:
        closed = (abs(kp - 1) // 2, abs(kp - 3) // 2,
                  abs(3 * kp + 1) // 2, abs(3 * kp - 5) // 2)
    if tuple(sorted(closed)) != tuple(sorted(ts.orders)):
        raise AssertionError(
            "closed forms disagree with the canonical route at (k={}, n={})".format(k, n))
    return ts


def find_almost_free_lift(k, l, bound=None):
    """All label tuples (p_-, q_-, p_+, q_+) classifying to (k, l) whose
    action is almost free (p_- != q_- and p_+ != q_+, killing the circle
    types). Sorted lexicographically.

    When k or l is 0 that side is the infinite family (p, p) and the
    search window on |p| is `bound`, by default 101. The default is wide
    enough that the finitely many labels on the other side can never
    exclude the whole window: each pair there rules out at most two
    family members."""
    window = bound
    if window is None and (k == 0 or l == 0):
        window = 101
    p_solutions = solve_euler(k, window)
    q_solutions = solve_euler(-l, window)
    out = []
    for p_minus, p_plus in p_solutions:
        for q_minus, q_plus in q_solutions:
            if p_minus != q_minus and p_plus != q_plus:
                out.append((p_minus, q_minus, p_plus, q_plus))
    for tup in out[:3]:
        if classify_pair(*tup) != (k, l):
            raise AssertionError("lift classifies to the wrong pair")
    return sorted(out)


# -- subgroup diagrams --------------------------------------------------------


@dataclass(frozen=True)
class PinLike:
    """Circle-with-flip subgroup of a product of unit-quaternion groups:
    theta -> (exp(axis slopes[t] theta))_t, plus the coset of the flip
    whose every slot is the complementary unit (j for an i-circle, i for
    a j-circle). flip_last_trivial builds a broken variant whose flip is
    the identity in the last slot; it exists for freeness tests."""
    axis: str
    slopes: tuple
    flip_last_trivial: bool = False

    def __post_init__(self):
        if self.axis not in ("i", "j"):
            raise ValidationError("axis must be 'i' or 'j'")
        if not self.slopes:
            raise ValidationError("need at least one slope")

    @property
    def flip_unit(self):
        return "j" if self.axis == "i" else "i"


@dataclass(frozen=True)
class GroupDiagram:
    """The gluing data of a two-disc group decomposition: the ambient
    product size, the two circle-with-flip subgroups, and the principal
    isotropy (always the diagonal quaternion group here)."""
    factors: int
    k_minus: PinLike
    k_plus: PinLike
    h: str = "diagonal_quaternion"

    def __post_init__(self):
        for part in (self.k_minus, self.k_plus):
            if len(part.slopes) != self.factors:
                raise ValidationError("slope count must match the ambient product")


def sphere_diagram():
    """The cohomogeneity-one 4-sphere picture: one quaternion factor,
    unit slopes, principal isotropy the quaternion group."""
    return GroupDiagram(1, PinLike("i", (1,)), PinLike("j", (1,)))


def principal_diagram(p_minus, p_plus):
    """Two factors, slopes (p, 1): the total space of the principal
    3-sphere bundle with Euler number (p_-^2 - p_+^2)/8."""
    _check_label(p_minus, "p_minus")
    _check_label(p_plus, "p_plus")
    return GroupDiagram(2, PinLike("i", (p_minus, 1)),
                        PinLike("j", (p_plus, 1)))


def two_parameter_diagram(p_minus, q_minus, p_plus, q_plus):
    """Three factors, slopes (p, q, 1): the total space of the principal
    product-of-3-spheres bundle with pair classification
    ((p_-^2-p_+^2)/8, -(q_-^2-q_+^2)/8)."""
    for val, name in ((p_minus, "p_minus"), (q_minus, "q_minus"),
                      (p_plus, "p_plus"), (q_plus, "q_plus")):
        _check_label(val, name)
    return GroupDiagram(3, PinLike("i", (p_minus, q_minus, 1)),
                        PinLike("j", (p_plus, q_plus, 1)))


def rotation_lift_diagram(p_minus, q_minus, p_plus, q_plus):
    """Two factors, slopes (p, q): the maps along which the rotation
    action's isotropy is computed."""
    for val, name in ((p_minus, "p_minus"), (q_minus, "q_minus"),
                      (p_plus, "p_plus"), (q_plus, "q_plus")):
        _check_label(val, name)
    return GroupDiagram(2, PinLike("i", (p_minus, q_minus)),
                        PinLike("j", (p_plus, q_plus)))


def _circle_hits(slopes, target):
    """Exact solvability of slopes[t] * x = target (mod 1) over x in Q/Z."""
    target = Fraction(target)
    solutions = None
    for s in slopes:
        if s == 0:
            if target % 1 != 0:
                return False
            continue
        cand = {Fraction(target + m, s) % 1 for m in range(abs(s))}
        if solutions is None:
            solutions = cand
        else:
            solutions &= cand
        if not solutions:
            return False
    return True


@dataclass(frozen=True)
class DiagramReport:
    ok: bool
    violations: tuple
    notes: tuple


def validate_diagram(diagram):
    """Structural checks: slopes congruent to 1 mod 4, the diagonal
    quaternion group inside both circle-with-flip subgroups (an exact
    rational-angle congruence), and both subgroup-mod-principal quotients
    circles (two components, each meeting the principal isotropy)."""
    violations = []
    notes = []
    for side, part in (("minus", diagram.k_minus), ("plus", diagram.k_plus)):
        for s in part.slopes:
            if s % 4 != 1:
                violations.append(
                    "{} slope {} is not 1 mod 4".format(side, s))
        # (u,...,u) for the axis unit u sits in the circle iff every slot
        # can reach a quarter turn at a common angle; the flip coset then
        # supplies the complementary units, so this single congruence
        # decides containment of the whole diagonal quaternion group.
        if _circle_hits(part.slopes, Fraction(1, 4)):
            notes.append("{}: quotient by the principal isotropy is a "
                         "circle (both components meet it)".format(side))
        else:
            violations.append(
                "principal isotropy not contained in the {} subgroup".format(side))
        if part.flip_last_trivial:
            violations.append(
                "{} flip is trivial in the last slot (broken variant)".format(side))
    return DiagramReport(ok=not violations, violations=tuple(violations),
                         notes=tuple(notes))


@dataclass(frozen=True)
class FreenessReport:
    free: bool
    violations: tuple


def check_principal_freeness(diagram):
    """Whether the product of all factors but the last acts freely on the
    decomposition's total space: equivalent to the last-slot projection
    being injective on both subgroups and on the principal isotropy.

    For a circle with slopes s and last slope b != 0, injectivity says
    every angle killed in the last slot (x = m/|b|) is killed in all
    slots, i.e. b divides s_t * m. The flip coset can never project to the
    identity because its last slot is a flip times a circle element,
    except in the broken flip_last_trivial variants. The diagonal
    principal isotropy is always injective slotwise.
    """
    if diagram.factors < 2:
        raise ParameterError("freeness needs at least two factors")
    violations = []
    for side, part in (("minus", diagram.k_minus), ("plus", diagram.k_plus)):
        b = part.slopes[-1]
        if b == 0:
            if any(s != 0 for s in part.slopes[:-1]):
                violations.append(
                    "{} circle collapses in the last slot but moves "
                    "elsewhere".format(side))
        else:
            for m in range(1, abs(b)):
                if any((s * m) % b != 0 for s in part.slopes[:-1]):
                    violations.append(
                        "{} circle meets the acting factor at angle "
                        "{}/{}".format(side, m, abs(b)))
                    break
        if part.flip_last_trivial:
            violations.append(
                "{} flip coset projects into the acting factor".format(side))
    return FreenessReport(free=not violations, violations=tuple(violations))


# -- lifted circle isotropy ---------------------------------------------------


@dataclass(frozen=True)
class BinaryDihedralGroup:
    """<exp(2 pi i/|p|), j> inside the unit quaternions: cyclic part of
    order 2|p| (the sign comes along for odd |p|), total order 4|p|;
    its image under the double cover is the dihedral group of order
    2|p|."""
    p: int
    order: int
    so3_image_order: int
    generators: tuple


def binary_dihedral_lift(p_minus, p_plus):
    """Isotropy groups of the unit-quaternion action on the principal
    total space with labels (p_-, p_+): one binary dihedral group per
    half."""
    _check_label(p_minus, "p_minus")
    _check_label(p_plus, "p_plus")

    def descriptor(p):
        m = abs(p)
        return BinaryDihedralGroup(
            p=p, order=4 * m, so3_image_order=2 * m,
            generators=("exp(2*pi*i/{})".format(m), "j"))

    return descriptor(p_minus), descriptor(p_plus)


def binary_dihedral_elements(p):
    """The 4|p| elements as (axis_angle_halfturns, flipped) pairs:
    e^(i pi t / |p|) for t in 0..2|p|-1, optionally multiplied by j.
    Kept symbolic so tests can realize them as quaternions."""
    m = abs(p)
    return [(Fraction(t, m), flip) for flip in (False, True)
            for t in range(2 * m)]
