"""Classification of two-main multigraphs against the known families,
the six pendant-neighborhood types, and the cycle mirror-symmetry check."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .canon import canonical_form
from .errors import BadParameters, NoTypeMatches, NotAdjacent
from .families import FamilySpec, U_PATTERNS, generate_family, is_member_H1
from .graphs import Multigraph, b_graph, degree_profile
from .spectral import ABCertificate, TwoMainEvidence, two_main_check
from .structure import unicyclic_decompose

UNCLASSIFIED = "UNCLASSIFIED"


def case_of(a, b) -> int | None:
    """Which of the four (a, b) parameter cases a certificate falls in."""
    if a == 0 and b > 0:
        return 1
    if a == 1 and b != 0:
        return 2
    if a >= 2 and b != 0:
        return 3
    if a > 0 and b == 0:
        return 4
    return None


@dataclass(frozen=True)
class ClassificationResult:
    case_tag: int | None
    family_tag: str
    family_params: dict | None
    certificate: object


_CYCLE_TAGS = ("U1", "U2", "U3", "U4", "U5")


def _h_ring_t(tag: str, b: int, n: int) -> int | None:
    """Block count t consistent with order n for a block family, if any."""
    if tag == "H2":
        if b % 4 != 0 or b < 4:
            return None
        block = b // 2 + 2
    else:
        if b % 4 != 2 or b < 6:
            return None
        block = (b + 4) // 2
    if n % block != 0:
        return None
    t = n // block
    return t if t >= 3 else None


def _block_cycle_profile_ok(m: Multigraph, b: int, tag: str) -> bool:
    """Structural cross-check of the hub/bridge pattern along the cycle."""
    decomp = unicyclic_decompose(b_graph(m))
    cyc = decomp.cycle_vertices
    deg = degree_profile(m).degrees
    hub = 1 + b // 2
    if any(m.weight(cyc[i], cyc[(i + 1) % len(cyc)]) != 1 for i in range(len(cyc))):
        return False
    word = tuple(deg[v] for v in cyc)
    pattern = (2, hub) if tag == "H2" else (2, hub, hub)
    if len(word) % len(pattern) != 0:
        return False
    reps = len(word) // len(pattern)
    target = pattern * reps
    doubled = word + word
    return any(doubled[s:s + len(word)] == target for s in range(len(word)))


def classify_two_main(
    m: Multigraph,
    evidence: TwoMainEvidence | None = None,
    max_order: int | None = None,
) -> ClassificationResult:
    """Match a two-main multigraph with unicyclic B-graph against the families.

    UNCLASSIFIED is a legal outcome: it is exactly the output of interest
    for the open parameter ranges.
    """
    ev = evidence if evidence is not None else two_main_check(m)
    if not ev.two_main:
        raise ValueError("classification requires exactly two main eigenvalues")
    decomp = unicyclic_decompose(b_graph(m))  # raises NotUnicyclic otherwise
    cert = ev.certificate
    if not getattr(cert, "valid", False):
        # rank says two-main but no valid certificate: surfaced, not resolved
        return ClassificationResult(None, UNCLASSIFIED, None, cert)
    a, b = cert.a, cert.b
    case = case_of(a, b)
    n = m.n
    # family matching may never refuse a valid graph over size policy alone
    cap = max_order if max_order is not None else n

    if not decomp.forest_vertices:
        key = canonical_form(m, max(cap, n))
        for tag in _CYCLE_TAGS:
            n1, n2 = U_PATTERNS[tag]
            block = n1 + n2
            if n % block != 0:
                continue
            t = n // block
            cand = generate_family(FamilySpec(tag, t))
            if canonical_form(cand, max(cap, n)) == key:
                return ClassificationResult(case, tag, {"t": t}, cert)
        return ClassificationResult(case, UNCLASSIFIED, None, cert)

    if case == 1:
        if is_member_H1(m, b):
            params = {"b": b, "t": len(decomp.cycle_vertices)}
            return ClassificationResult(1, "H1", params, cert)
        return ClassificationResult(1, UNCLASSIFIED, None, cert)
    if case == 2:
        key = canonical_form(m, max(cap, n))
        for tag in ("H2", "H3"):
            t = _h_ring_t(tag, b, n)
            if t is None:
                continue
            cand = generate_family(FamilySpec(tag, t, b))
            if canonical_form(cand, max(cap, n)) == key and _block_cycle_profile_ok(m, b, tag):
                return ClassificationResult(2, tag, {"b": b, "t": t}, cert)
        return ClassificationResult(2, UNCLASSIFIED, None, cert)
    return ClassificationResult(case, UNCLASSIFIED, None, cert)


@dataclass(frozen=True)
class SixTypeResult:
    """The unique pendant-neighborhood type, with its derived degrees."""

    type_index: int
    d_v1: int
    d_v2: int
    k: int | None


def six_type_classify(m: Multigraph, v1: int, v2: int, cert: ABCertificate) -> SixTypeResult:
    """Identify which of the six pendant-neighborhood conditions holds at
    (v1, v2), given a valid certificate. Raises NoTypeMatches when none
    (or more than one) fits: that signals an inconsistency."""
    if m.weight(v1, v2) == 0:
        raise NotAdjacent(f"{v1} and {v2} are not adjacent")
    base = b_graph(m)
    others = [x for x in m.neighbors(v1) if x != v2]
    if any(base.degree(x) != 1 for x in others):
        raise ValueError("every neighbor of v1 other than v2 must be a pendant vertex")

    a = Fraction(cert.a)
    b = Fraction(cert.b)
    deg = degree_profile(m).degrees
    d1, d2 = deg[v1], deg[v2]
    w12 = m.weight(v1, v2)
    pendant_w = [m.weight(x, v1) for x in others]
    n_single = sum(1 for w in pendant_w if w == 1)
    n_double = sum(1 for w in pendant_w if w == 2)
    all1 = n_double == 0
    all2 = n_single == 0
    mixed = n_single >= 1 and n_double >= 1
    half = b / 2

    def is_int(x: Fraction) -> bool:
        return x.denominator == 1

    candidates: list[tuple[int, int | None]] = []
    if w12 == 1 and all1:
        f1, f2 = a + b, a * (a + b - 1) + 1
        if f1 >= 2 and d1 == f1 and d2 == f2:
            candidates.append((1, None))
    if w12 == 1 and all2:
        f1, f2 = a + half, a * (a + half - 2) + 2
        if is_int(f1) and f1 >= 3 and int(f1) % 2 == 1 and d1 == f1 and d2 == f2:
            candidates.append((2, None))
    if w12 == 2 and all1:
        f1, f2 = a + b, a * (a + b - 1) / 2 + 1
        if f1 >= 3 and d1 == f1 and d2 == f2:
            candidates.append((3, None))
    if w12 == 2 and all2:
        f1, f2 = a + half, a * (a + half - 2) / 2 + 2
        if is_int(f1) and f1 >= 4 and int(f1) % 2 == 0 and d1 == f1 and d2 == f2:
            candidates.append((4, None))
    if w12 == 1 and mixed:
        k1 = n_double
        f1, f2 = a, a * a - a + 1 - 2 * k1
        if f1 >= 2 * k1 + 2 and d1 == f1 and d2 == f2:
            candidates.append((5, k1))
    if w12 == 2 and mixed:
        k2 = n_double
        f1, f2 = a, (a * a - a + 2 - 2 * k2) / 2
        if f1 >= 2 * k2 + 3 and d1 == f1 and d2 == f2:
            candidates.append((6, k2))

    if len(candidates) != 1:
        raise NoTypeMatches(
            f"{len(candidates)} types match at ({v1},{v2}) with "
            f"(a,b)=({cert.a},{cert.b}); structure or certificate inconsistent"
        )
    idx, k = candidates[0]
    return SixTypeResult(idx, d1, d2, k)


def check_cycle_symmetry(m: Multigraph, u1: int, v1: int) -> bool:
    """Mirror test around a weight-2 anchor on a cycle B-graph: walking both
    ways from the anchor, opposing edge weights must agree all the way
    around (including the shared midpoint vertex when the order is odd)."""
    decomp = unicyclic_decompose(b_graph(m))
    if decomp.forest_vertices:
        raise BadParameters("B-graph is not a cycle")
    if m.weight(u1, v1) != 2:
        raise BadParameters(f"anchor pair ({u1},{v1}) must carry weight 2")
    ev = two_main_check(m)
    if not ev.two_main:
        raise BadParameters("graph does not have exactly two main eigenvalues")

    n = m.n
    half = n // 2 if n % 2 == 0 else (n - 1) // 2

    def advance(chain: list[int], prev: int) -> int:
        nbrs = [x for x in m.neighbors(chain[-1]) if x != prev]
        return nbrs[0]

    us, vs = [u1], [v1]
    prev_u, prev_v = v1, u1
    for _ in range(half - 1):
        nu = advance(us, prev_u)
        nv = advance(vs, prev_v)
        prev_u, prev_v = us[-1], vs[-1]
        us.append(nu)
        vs.append(nv)

    if half >= 2 and m.weight(us[0], us[1]) != m.weight(vs[0], vs[1]):
        raise BadParameters("first opposing edges differ; mirror hypothesis violated")

    for i in range(1, half):
        if m.weight(us[i - 1], us[i]) != m.weight(vs[i - 1], vs[i]):
            return False
    if n % 2 == 1:
        x = advance(us, prev_u)
        if m.weight(us[-1], x) != m.weight(vs[-1], x):
            return False
    return True
