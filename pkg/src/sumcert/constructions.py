"""Constructive procedures: greedy finite-sums bases, the finite-carrier
pipeline, the pair-Ramsey pullback, support arithmetic, pairwise-sum pattern
layouts, and the greedy sumset inside an interval set.

Each construction is deterministic, verifies its own output exactly, and
returns a certificate whose payload re-checks by direct evaluation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence, Union

from .certificate import Certificate, EXHAUSTED, INCONCLUSIVE, WITNESS
from .coloring import support_parity_color
from .exact import Pattern, QVec, Rat, format_qvec, format_rat, pattern_of, supp
from .intervals import Interval, IntervalSet, format_interval_set
from .search import (
    Budget,
    _elapsed_ms,
    find_mono_fu_blocks,
    format_elements,
    fu_number,
    pair_ramsey_homogeneous,
)
from .semigroup import FinSemigroup, NatCarrier
from .sumsets import fs_enumerate


class PoolExhaustedError(RuntimeError):
    """The greedy basis ran out of usable pool elements."""


class PipelinePreconditionError(ValueError):
    """The carrier is smaller than the size bound the pipeline needs."""


# ---------------------------------------------------------------------------
# Greedy finite-sums basis.


def greedy_fs_basis(
    carrier: Union[FinSemigroup, type[NatCarrier], NatCarrier],
    count: int,
    pool: Optional[Iterable[int]] = None,
) -> list[int]:
    """Greedily pick h_0..h_{count-1} so that summing over any nonempty
    index subset (in ascending order) is injective.

    Each step takes the pool-least element that is neither an accumulated
    sum, nor a solution of e + g = f over accumulated sums e, f (with e also
    allowed to be absent), nor an element whose new sums would collide with
    each other.  The last guard goes beyond the two forbidden sets: on
    carriers without cancellation the forbidden sets alone do not keep two
    *new* sums apart, and injectivity is this function's contract.

    Raises PoolExhaustedError when no pool element qualifies.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    is_nat = not isinstance(carrier, FinSemigroup)
    add = NatCarrier.add if is_nat else carrier.add
    if pool is None:
        candidates = None if is_nat else list(range(carrier.n))
    else:
        candidates = list(pool)
        if len(set(candidates)) != len(candidates):
            raise ValueError("pool enumeration must be injective")

    hs: list[int] = []
    sums: list[int] = []  # subset-sum values accumulated so far
    sums_set: set[int] = set()
    for step in range(count):
        forbidden = set(sums_set)
        if is_nat:
            for f in sums_set:
                for e in sums_set:
                    if f - e >= 1:
                        forbidden.add(f - e)
        else:
            for e in sums_set:
                for g in range(carrier.n):
                    if carrier.add(e, g) in sums_set:
                        forbidden.add(g)

        def viable(h: int) -> bool:
            if h in hs or h in forbidden:
                return False
            new_sums = [add(e, h) for e in sums] + [h]
            return len(set(new_sums)) == len(new_sums) and sums_set.isdisjoint(new_sums)

        if candidates is None:
            # default pool on the naturals: 1, 2, 3, ...; always succeeds
            chosen = 1
            while not viable(chosen):
                chosen += 1
        else:
            chosen = next((h for h in candidates if viable(h)), None)
            if chosen is None:
                raise PoolExhaustedError(f"no viable element at step {step}")
        hs.append(chosen)
        new_sums = [add(e, chosen) for e in sums] + [chosen]
        sums.extend(new_sums)
        sums_set.update(new_sums)
    return hs


def subset_sums(hs: Sequence[int], add: Callable[[int, int], int]) -> dict[frozenset, int]:
    """Map from nonempty index subsets of hs to their ascending-order sums."""
    return {idx: val for idx, val in fs_enumerate(list(hs), add)}


# ---------------------------------------------------------------------------
# The finite-finite pipeline.


def fin_fin_pipeline(
    g: FinSemigroup,
    coloring: Callable[[int], int],
    k: int,
    t: int,
    budget: Budget = Budget(),
    workers: int = 1,
    external_f: Optional[int] = None,
) -> Certificate:
    """Find k distinct elements with a monochromatic finite-sums set, via
    either a long monogenic chain or a greedy basis plus finite-unions
    reduction.

    The size precondition uses the bound S = max(R+1, 4**F * (L+1)) with
    R = 2**F - 1; F is the finite-unions forcing number for (k, t), or an
    externally supplied stand-in, in which case the certificate is marked
    conditional on F.
    """
    t0 = time.perf_counter()
    colors_used = {coloring(x) for x in g.elements()}
    if len(colors_used) > t:
        raise ValueError(f"colouring uses {len(colors_used)} colours, more than t={t}")

    cancel_bound = g.cancellativity_bound()
    if external_f is not None:
        f_val = external_f
        f_source = "external"
    else:
        f_cert = fu_number(k, t, budget=budget, workers=workers)
        if f_cert.verdict == INCONCLUSIVE:
            return Certificate.build(
                "fin-fin-pipeline",
                {"k": k, "t": t, "carrier_size": g.n},
                INCONCLUSIVE,
                {"reason": "finite-unions number exceeded budget"},
                g.n,
                _elapsed_ms(t0),
            )
        f_val = int(f_cert.payload_value("value"))
        f_source = "computed"
    r_val = (1 << f_val) - 1
    s_val = max(r_val + 1, 4**f_val * (cancel_bound + 1))
    params = {
        "k": k,
        "t": t,
        "carrier_size": g.n,
        "cancellativity_bound": cancel_bound,
        "f": f_val,
        "f_source": f_source,
        "r": r_val,
        "s": s_val,
    }
    if g.n < s_val:
        raise PipelinePreconditionError(
            f"carrier of size {g.n} is below the required bound {s_val}"
        )

    long_gen = None
    for x in g.elements():
        if len(g.monogenic(x)) > r_val:
            long_gen = x
            break

    if long_gen is not None:
        chain = [long_gen]
        for _ in range(r_val - 1):
            chain.append(g.add(chain[-1], long_gen))
        witness = _scan_fs_witness(chain, g.add, coloring, k)
        if witness is None:  # cannot happen when F is genuinely forcing
            return Certificate.build(
                "fin-fin-pipeline", params, EXHAUSTED,
                {"case": 1, "note": "no witness in the monogenic chain"},
                g.n, _elapsed_ms(t0),
            )
        payload = {
            "case": 1,
            "generator": long_gen,
            "witness": " ".join(str(x) for x in witness),
            "color": coloring(witness[0]),
        }
        _assert_fs_mono(witness, g.add, coloring)
        if f_source == "external":
            payload["conditional_on_f"] = f_val
        return Certificate.build(
            "fin-fin-pipeline", params, WITNESS, payload, g.n, _elapsed_ms(t0)
        )

    pool = [x for x in g.elements() if x != g.identity]
    hs = greedy_fs_basis(g, f_val, pool)
    sums = subset_sums(hs, g.add)

    def induced(subset: frozenset) -> int:
        return coloring(sums[frozenset(subset)])

    blocks = find_mono_fu_blocks(induced, f_val, k)
    if blocks is None:
        payload = {"case": 2, "basis": " ".join(str(h) for h in hs),
                   "note": "no monochromatic union family at this f"}
        if f_source == "external":
            payload["conditional_on_f"] = f_val
        return Certificate.build(
            "fin-fin-pipeline", params, EXHAUSTED, payload, g.n, _elapsed_ms(t0)
        )
    witness = [sums[b] for b in blocks]
    if len(set(witness)) != len(witness):
        raise AssertionError("induced subset-sum map lost injectivity")
    _assert_fs_mono(witness, g.add, coloring)
    payload = {
        "case": 2,
        "basis": " ".join(str(h) for h in hs),
        "blocks": "; ".join(",".join(str(i) for i in sorted(b)) for b in blocks),
        "witness": " ".join(str(x) for x in witness),
        "color": coloring(witness[0]),
    }
    if f_source == "external":
        payload["conditional_on_f"] = f_val
    return Certificate.build(
        "fin-fin-pipeline", params, WITNESS, payload, g.n, _elapsed_ms(t0)
    )


def _scan_fs_witness(ground, add, coloring, k) -> Optional[tuple]:
    for combo in combinations(range(len(ground)), k):
        elems = [ground[i] for i in combo]
        if len(set(elems)) != k:
            continue
        vals = {coloring(s) for _, s in fs_enumerate(elems, add)}
        if len(vals) == 1:
            return tuple(elems)
    return None


def _assert_fs_mono(elems, add, coloring) -> None:
    vals = {coloring(s) for _, s in fs_enumerate(list(elems), add)}
    if len(vals) != 1:
        raise AssertionError("witness failed re-verification")


# ---------------------------------------------------------------------------
# Ramsey pullback.


def ramsey_pullback_fs(
    kappa: int, coloring: Callable[[QVec], object]
) -> tuple[Optional[tuple[QVec, QVec]], Certificate]:
    """Colour pairs {a, b} by the colour of basis(b) - basis(a), find a
    homogeneous triple, and pull it back to a monochromatic two-term
    finite-sums witness."""
    if kappa < 3:
        raise ValueError("need at least three basis indices")
    t0 = time.perf_counter()

    def pair_color(a: int, b: int):
        return coloring(QVec.basis(b) - QVec.basis(a))

    triple = pair_ramsey_homogeneous(kappa, pair_color, 3)
    params = {"kappa": kappa}
    space = kappa * (kappa - 1) * (kappa - 2) // 6
    if triple is None:
        return None, Certificate.build(
            "ramsey-pullback", params, EXHAUSTED, {}, space, _elapsed_ms(t0)
        )
    alpha, beta, gamma = triple
    v = QVec.basis(beta) - QVec.basis(alpha)
    w = QVec.basis(gamma) - QVec.basis(beta)
    cv, cw, cvw = coloring(v), coloring(w), coloring(v + w)
    if not (cv == cw == cvw):
        raise AssertionError("homogeneous triple failed colour re-verification")
    payload = {
        "triple": f"{alpha} {beta} {gamma}",
        "v": format_qvec(v),
        "w": format_qvec(w),
        "color": str(cv),
    }
    return (v, w), Certificate.build(
        "ramsey-pullback", params, WITNESS, payload, space, _elapsed_ms(t0)
    )


# ---------------------------------------------------------------------------
# Support arithmetic of the Delta-system colouring argument.


def support_arithmetic_check(support_size: int, root_size: int) -> Certificate:
    """Materialize a Delta-system of vectors with constant root coefficients
    and check that summing 2**(a-b)+1 of them lands the support size exactly
    on root + count * petal, flipping the support-parity colour.

    Here a = floor(log2 of the support size) and b = floor(log2 of the petal
    size); the root must be nonempty and smaller than the whole support.
    """
    if not 1 <= root_size < support_size:
        raise ValueError("need 1 <= root size < support size")
    t0 = time.perf_counter()
    petal = support_size - root_size
    size_exp = _floor_log2(support_size)
    gap_exp = _floor_log2(petal)
    count = (1 << (size_exp - gap_exp)) + 1

    members = []
    for i in range(count):
        entries = {j: Fraction(1) for j in range(root_size)}
        base = root_size + i * petal
        for j in range(petal):
            entries[base + j] = Fraction(1)
        members.append(QVec(entries))

    total = QVec.zero()
    for v in members:
        total = total + v
    got = len(supp(total))
    expected = root_size + count * petal
    if got != expected:
        raise AssertionError(f"support size {got} != {expected}")
    single_color = support_parity_color(members[0])
    sum_color = support_parity_color(total)
    if single_color == sum_color:
        raise AssertionError("support parities failed to differ")
    payload = {
        "support_size": support_size,
        "root_size": root_size,
        "size_exponent": size_exp,
        "petal_exponent": gap_exp,
        "summands": count,
        "sum_support_size": got,
        "single_color": str(single_color),
        "sum_color": str(sum_color),
    }
    return Certificate.build(
        "support-arithmetic",
        {"support_size": support_size, "root_size": root_size},
        WITNESS,
        payload,
        count,
        _elapsed_ms(t0),
    )


def _floor_log2(x: int) -> int:
    if x < 1:
        raise ValueError("positive integer required")
    return x.bit_length() - 1


# ---------------------------------------------------------------------------
# Pairwise-sum pattern construction.


def coefficient_run_pattern(colors: int, index: int) -> Pattern:
    """The pattern with `index` twos followed by 2*(colors - index) ones."""
    if not 0 <= index <= colors:
        raise ValueError("pattern index out of range")
    return (Fraction(2),) * index + (Fraction(1),) * (2 * (colors - index))


@dataclass(frozen=True)
class PatternFixture:
    """Layout data for the pairwise-sum construction.

    ``head`` indices carry coefficient 1 and are shared by every vector;
    ``middle`` holds one disjoint index block per pattern step, from which
    vector n uses slot n; ``tail`` indices carry coefficient 1/2 and are
    shared.  All head indices precede all middle indices, which precede all
    tail indices.
    """

    colors: int
    i1: int
    i2: int
    color: object
    head: tuple[int, ...]
    middle: tuple[tuple[int, ...], ...]
    tail: tuple[int, ...]

    @property
    def capacity(self) -> int:
        return min((len(b) for b in self.middle), default=0)

    @classmethod
    def standard(
        cls, colors: int, i1: int, i2: int, capacity: int, color: object = 0
    ) -> "PatternFixture":
        """The canonical layout on the naturals with disjoint width-W blocks."""
        _check_pattern_indices(colors, i1, i2)
        width = max(capacity, 2 * (colors - i2), 1)
        base = i1
        head = tuple(range(i1))
        middle = tuple(
            tuple(base + (r + 1) * width + n for n in range(capacity))
            for r in range(i2 - i1)
        )
        tail_base = base + (i2 - i1 + 1) * width
        tail = tuple(tail_base + r for r in range(2 * (colors - i2)))
        return cls(colors, i1, i2, color, head, middle, tail)


def _check_pattern_indices(colors: int, i1: int, i2: int) -> None:
    if colors < 1:
        raise ValueError("need at least one colour")
    if not 0 <= i1 < i2 <= colors:
        raise ValueError("need 0 <= i1 < i2 <= colour count")


def _validate_fixture(fx: PatternFixture, count: int) -> None:
    _check_pattern_indices(fx.colors, fx.i1, fx.i2)
    if len(fx.head) != fx.i1:
        raise ValueError("head must hold exactly i1 indices")
    if len(fx.middle) != fx.i2 - fx.i1:
        raise ValueError("middle must hold i2 - i1 blocks")
    if len(fx.tail) != 2 * (fx.colors - fx.i2):
        raise ValueError("tail size must be twice the colour surplus")
    if fx.capacity < count:
        raise ValueError(f"fixture capacity {fx.capacity} below count {count}")
    flat = list(fx.head)
    for block in fx.middle:
        if list(block) != sorted(block):
            raise ValueError("middle blocks must be ascending")
        if flat and block and block[0] <= max(flat):
            raise ValueError("layout blocks must be strictly increasing")
        flat.extend(block)
    if fx.tail and flat and fx.tail[0] <= max(flat):
        raise ValueError("tail must come after the middle blocks")
    flat.extend(fx.tail)
    if len(set(flat)) != len(flat):
        raise ValueError("layout indices must be distinct")


def owings_pattern_construct(
    colors: int, fixture: PatternFixture, count: int
) -> tuple[list[QVec], Certificate]:
    """Materialize vectors x_0..x_{count-1} whose pairwise sums realize the
    i1-pattern for distinct indices and the i2-pattern for doubles, so the
    whole pairwise sumset is monochromatic under any colouring that sends
    both patterns to the fixture colour."""
    if count < 2:
        raise ValueError("count must be >= 2")
    if colors != fixture.colors:
        raise ValueError("fixture colour count mismatch")
    _validate_fixture(fixture, count)
    t0 = time.perf_counter()
    half = Fraction(1, 2)
    xs = []
    for n in range(count):
        entries: dict[int, Fraction] = {j: Fraction(1) for j in fixture.head}
        for block in fixture.middle:
            entries[block[n]] = Fraction(1)
        for j in fixture.tail:
            entries[j] = half
        xs.append(QVec(entries))

    mixed_expected = coefficient_run_pattern(colors, fixture.i1)
    double_expected = coefficient_run_pattern(colors, fixture.i2)
    for a in range(count):
        for b in range(a, count):
            got = pattern_of(xs[a] + xs[b])
            want = double_expected if a == b else mixed_expected
            if got != want:
                raise AssertionError(f"pattern mismatch at ({a},{b}): {got}")
    payload = {
        "i1": fixture.i1,
        "i2": fixture.i2,
        "count": count,
        "mixed_pattern": _format_pattern(mixed_expected),
        "double_pattern": _format_pattern(double_expected),
        "color": str(fixture.color),
        "layout_head": " ".join(str(i) for i in fixture.head) or "-",
        "layout_blocks": "; ".join(
            " ".join(str(i) for i in block) for block in fixture.middle
        ) or "-",
        "layout_tail": " ".join(str(i) for i in fixture.tail) or "-",
        "vectors": format_elements(xs),
    }
    cert = Certificate.build(
        "owings-construct",
        {"colors": colors, "i1": fixture.i1, "i2": fixture.i2, "count": count},
        WITNESS,
        payload,
        count * (count + 1) // 2,
        _elapsed_ms(t0),
    )
    return xs, cert


def _format_pattern(p: Pattern) -> str:
    return "(" + ",".join(format_rat(c) for c in p) + ")"


def pattern_vector(colors: int, index: int, positions: Sequence[int]) -> QVec:
    """Place the index-th run pattern on the last coordinates of an
    ascending 2*colors-tuple of basis positions (leading slots absorb the
    zero padding)."""
    length = 2 * colors
    if len(positions) != length:
        raise ValueError(f"need exactly {length} positions")
    if list(positions) != sorted(set(positions)):
        raise ValueError("positions must be strictly ascending")
    pat = coefficient_run_pattern(colors, index)
    offset = length - len(pat)
    return QVec({positions[offset + r]: c for r, c in enumerate(pat)})


def required_homogeneous_size(colors: int, count: int) -> int:
    """Enough indices to lay out any admissible (i1, i2) fixture."""
    best = 2 * colors
    for i1 in range(colors + 1):
        for i2 in range(i1 + 1, colors + 1):
            best = max(best, i1 + (i2 - i1) * count + 2 * (colors - i2))
    return best


def owings_fixture_from_coloring(
    colors: int,
    coloring: Callable[[QVec], int],
    kappa: int,
    count: int,
    budget: Budget = Budget(),
) -> Optional[PatternFixture]:
    """Search kappa basis indices for a set homogeneous for every run
    pattern at once, then pigeonhole two pattern indices sharing a colour
    and lay the fixture out inside that set.

    Returns None when the index budget admits no homogeneous set of the
    needed size (the finite analogue of the large-index hypothesis simply
    failing); raises BudgetExceeded when the node budget runs out first.
    """
    length = 2 * colors
    size = max(required_homogeneous_size(colors, count), length)
    if kappa < size:
        return None
    nodes = 0
    limit = budget.nodes

    def dvalue(subset: tuple[int, ...]) -> tuple:
        nonlocal nodes
        nodes += 1
        if limit is not None and nodes > limit:
            from .search import BudgetExceeded

            raise BudgetExceeded()
        out = []
        for i in range(colors + 1):
            c = coloring(pattern_vector(colors, i, subset))
            if not isinstance(c, int) or not 0 <= c < colors:
                raise ValueError(f"colouring must map into 0..{colors - 1}, got {c!r}")
            out.append(c)
        return tuple(out)

    chosen: list[int] = []
    reference: Optional[tuple] = None

    def extend(start: int) -> bool:
        nonlocal reference
        if len(chosen) == size:
            return True
        for cand in range(start, kappa):
            chosen.append(cand)
            ok = True
            if len(chosen) >= length:
                for rest in combinations(chosen[:-1], length - 1):
                    subset = tuple(sorted(rest + (cand,)))
                    val = dvalue(subset)
                    if reference is None:
                        reference = val
                    elif val != reference:
                        ok = False
                        break
            if ok and extend(cand + 1):
                return True
            chosen.pop()
            if len(chosen) < length:
                reference = None
        return False

    if not extend(0):
        return None
    values = reference if reference is not None else dvalue(tuple(chosen[:length]))
    i1 = i2 = None
    for a in range(colors + 1):
        for b in range(a + 1, colors + 1):
            if values[a] == values[b]:
                i1, i2 = a, b
                break
        if i1 is not None:
            break
    if i1 is None:  # impossible: colors+1 values in a colors-sized codomain
        raise AssertionError("pigeonhole failure")
    common = values[i1]

    ordered = sorted(chosen)
    head = tuple(ordered[:i1])
    pos = i1
    middle = []
    for _ in range(i2 - i1):
        middle.append(tuple(ordered[pos : pos + count]))
        pos += count
    tail = tuple(ordered[pos : pos + 2 * (colors - i2)])
    return PatternFixture(colors, i1, i2, common, head, tuple(middle), tail)


# ---------------------------------------------------------------------------
# Greedy sumset construction inside an interval set.


def baire_sumset_construct(
    region: IntervalSet, n: int
) -> tuple[list[Rat], Certificate]:
    """Pick n rationals whose pairwise sums (doubles included) all lie in
    the region, by translating the region to put 0 in its open part and
    greedily taking canonical rationals subject to the sum constraints."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not region.has_interior():
        raise ValueError("region has no interior")
    t0 = time.perf_counter()

    anchor = _canonical_interior_point(region)
    shifted = region.translated(-anchor)
    delta = Fraction(1)
    while not shifted.covers_open(0, 2 * delta):
        delta /= 2

    window = IntervalSet([Interval(Fraction(0), False, delta, False)])
    constraint = window.intersect(shifted.scaled(Fraction(1, 2)))
    picks: list[Rat] = []
    for _ in range(n):
        x = constraint.canonical_point(extra_excluded=picks)
        picks.append(x)
        constraint = constraint.intersect(shifted.translated(-x))

    out = [x + anchor / 2 for x in picks]
    pairs = 0
    for i in range(n):
        for j in range(i, n):
            if not region.contains(out[i] + out[j]):
                raise AssertionError(f"sum {out[i] + out[j]} escaped the region")
            pairs += 1
    payload = {
        "region": format_interval_set(region),
        "translation": format_rat(anchor),
        "delta": format_rat(delta),
        "values": format_elements(out),
        "verified_pairs": pairs,
    }
    cert = Certificate.build(
        "baire-construct",
        {"region": format_interval_set(region), "n": n},
        WITNESS,
        payload,
        pairs,
        _elapsed_ms(t0),
    )
    return out, cert


def _canonical_interior_point(region: IntervalSet, max_den: int = 1_000_000) -> Rat:
    """Least-denominator, then least-numerator rational strictly inside the
    open part (exclusions are irrelevant for the translation anchor)."""
    spans = region.open_part()
    if not spans:
        raise ValueError("region has no interior")
    for q in range(1, max_den + 1):
        best = None
        for lo, hi in spans:
            p = (lo.numerator * q) // lo.denominator + 1
            while Fraction(p, q) < hi:
                x = Fraction(p, q)
                if x > lo and x.denominator == q:
                    if best is None or x < best:
                        best = x
                    break
                p += 1
        if best is not None:
            return best
    raise RuntimeError("no interior point below the denominator cap")
