import logging

import diagram_lemmas.data_types as data_types
import diagram_lemmas.double_complex as double_complex
import diagram_lemmas.lattice as lattice
import diagram_lemmas.table_group as table_group
from diagram_lemmas.double_complex import Double_Complex, Position

from .corollaries import Verified_Isomorphism, corner_iso, donor_receptor_iso, is_exact_on_line

H = data_types.Edge_Direction.HORIZONTAL
V = data_types.Edge_Direction.VERTICAL
Kind = data_types.Homology_Kind

NAMES = {
    (0, 0): "A'", (0, 1): "B'", (0, 2): "C'",
    (1, 0): "A", (1, 1): "B", (1, 2): "C",
    (2, 0): "A''", (2, 1): "B''", (2, 2): "C''",
}

# the homology objects whose definedness the isomorphism chains rely on
DEFINEDNESS = [
    ((0, 0), Kind.HORIZONTAL), ((0, 0), Kind.DONOR), ((0, 0), Kind.VERTICAL),
    ((0, 1), Kind.HORIZONTAL), ((0, 1), Kind.DONOR), ((1, 1), Kind.RECEPTOR),
    ((1, 0), Kind.DONOR), ((1, 0), Kind.VERTICAL),
    ((0, 2), Kind.HORIZONTAL), ((0, 2), Kind.DONOR), ((1, 2), Kind.RECEPTOR),
    ((1, 1), Kind.DONOR), ((2, 1), Kind.RECEPTOR), ((2, 0), Kind.DONOR),
    ((2, 0), Kind.VERTICAL),
]

# (step, position, argument); the last step names the object known to be trivial
CHAINS = {
    (0, 0): [
        ("corner", (0, 0), data_types.Corner_Shape.B),
        ("corner", (0, 0), data_types.Corner_Shape.A),
        ("trivial", (0, 0), Kind.VERTICAL),
    ],
    (0, 1): [
        ("corner", (0, 1), data_types.Corner_Shape.B),
        ("edge", (0, 1), V),
        ("edge", (1, 0), H),
        ("corner", (1, 0), data_types.Corner_Shape.A),
        ("trivial", (1, 0), Kind.VERTICAL),
    ],
    (0, 2): [
        ("corner", (0, 2), data_types.Corner_Shape.B),
        ("edge", (0, 2), V),
        ("edge", (1, 1), H),
        ("edge", (1, 1), V),
        ("edge", (2, 0), H),
        ("corner", (2, 0), data_types.Corner_Shape.A),
        ("trivial", (2, 0), Kind.VERTICAL),
    ],
}


def _name(pos: Position, kind: Kind) -> str:
    return kind.symbol.format(NAMES.get(tuple(pos), f"({pos[0]},{pos[1]})"))


def check_hypotheses(dc: Double_Complex) -> None:
    """Complex laws, support inside the 3x3 box, exact columns and exact rows two and three."""
    report = double_complex.validate(dc)
    if not report.passed:
        first = report.failures()[0]
        raise data_types.Hypothesis_Error(
            f"not a double complex: {first.code} fails at {first.instance}"
        )
    outside = [pos for pos in dc.support() if not (0 <= pos[0] <= 2 and 0 <= pos[1] <= 2)]
    if outside:
        raise data_types.Structural_Error(f"positions {outside} lie outside the 3x3 grid")
    for m in range(3):
        for n in range(3):
            if not is_exact_on_line(dc, (n, m), V):
                raise data_types.Hypothesis_Error(
                    f"column {m} is not exact at {NAMES[(n, m)]} ({n},{m})"
                )
    for n in (1, 2):
        for m in range(3):
            if not is_exact_on_line(dc, (n, m), H):
                raise data_types.Hypothesis_Error(
                    f"row {n} is not exact at {NAMES[(n, m)]} ({n},{m})"
                )


def definedness_checks(dc: Double_Complex) -> list[data_types.Check_Result]:
    checks = []
    for pos, kind in DEFINEDNESS:
        obj = double_complex.homology(dc, pos, kind)
        checks.append(
            data_types.Check_Result(
                status=data_types.Check_Status.PASS if obj.defined else data_types.Check_Status.FAIL,
                code="DEF",
                instance=_name(pos, kind),
                message=obj.reason,
            )
        )
    return checks


def first_row_complex(dc: Double_Complex) -> list[str]:
    """Row 0 squares to zero: pushed down into row 1 it vanishes, and C' -> C is an embedding."""
    across = lattice.compose(dc.h((0, 1)), dc.h((0, 0)))
    embedding = dc.v((0, 2))
    around = lattice.compose(embedding, across)
    below = lattice.compose(dc.h((1, 1)), lattice.compose(dc.h((1, 0)), dc.v((0, 0))))
    return [
        f"row 0 complex: C'->C after A'->B'->C' is zero: {around.is_zero()}",
        f"row 0 complex: A'->A->B->C is zero: {below.is_zero()}",
        f"row 0 complex: C'->C is an embedding: {embedding.is_embedding()}",
        f"row 0 complex: A'->B'->C' is zero: {across.is_zero()}",
    ]


def _links(
    dc: Double_Complex, step: str, pos: Position, argument
) -> tuple[Verified_Isomorphism, list[Verified_Isomorphism]]:
    """The isomorphism that continues the chain, and every isomorphism the step produced."""
    if step == "corner":
        side, link = corner_iso(dc, pos, argument)
        return link, [side, link]
    link = donor_receptor_iso(dc, pos, argument)
    return link, [link]


def run_chain(dc: Double_Complex, target: Position, trace: list[str]) -> bool:
    """Follow the isomorphism chain from the row homology at ``target``; True if it ends in 1."""
    orders, verified = [], True
    for step, pos, argument in CHAINS[target]:
        if step == "trivial":
            end = double_complex.homology(dc, pos, argument)
            trace.append(f"{_name(pos, argument)} = 1: {end.is_trivial()}")
            orders.append(end.value.order)
            verified = verified and end.is_trivial()
            continue
        link, produced = _links(dc, step, pos, argument)
        for iso in produced:
            trace.append(f"{step} {argument} at {NAMES[pos]}: {iso.describe()}")
            verified = verified and iso.verified
        orders += [link.source.order, link.target.order]
    ends_in_one = verified and set(orders) == {1}
    trace.append(f"{_name(target, Kind.HORIZONTAL)} trivial by the chain: {ends_in_one}")
    return ends_in_one


def three_by_three(dc: Double_Complex) -> data_types.Three_By_Three_Verdict:
    """Exactness of the first row from exact columns and exact rows two and three."""
    check_hypotheses(dc)
    definedness = definedness_checks(dc)
    undefined = [check.instance for check in definedness if not check.passed]
    if undefined:
        raise data_types.Hypothesis_Error(f"homology objects undefined: {', '.join(undefined)}")
    trace = first_row_complex(dc)
    chain_exact = all(run_chain(dc, target, trace) for target in CHAINS)
    direct_exact = all(is_exact_on_line(dc, (0, m), H) for m in range(3))
    trace.append(f"row 0 exact by direct computation: {direct_exact}")
    verdict = data_types.Three_By_Three_Verdict(
        chain_exact=chain_exact,
        direct_exact=direct_exact,
        trace=trace,
        definedness=definedness,
    )
    if not verdict.agree:
        logging.error(f"{dc.name}: isomorphism chains and direct computation disagree")
    return verdict


def _place(
    rows: list[list[lattice.Structure_Object]],
    horizontal: dict[Position, lattice.Morphism],
    vertical: dict[Position, lattice.Morphism],
    name: str,
) -> Double_Complex:
    objects = {(n, m): obj for n, row in enumerate(rows) for m, obj in enumerate(row)}
    return Double_Complex(objects, horizontal, vertical, name=name)


def _two_equal_rows(
    first: lattice.Morphism, second: lattice.Morphism, name: str
) -> Double_Complex:
    """Rows 0 and 1 both X -> Y -> Z, joined by identities; row 2 trivial."""
    row = [first.source, first.target, second.target]
    return _place(
        [row, row],
        {(0, 0): first, (0, 1): second, (1, 0): first, (1, 1): second},
        {(0, m): obj.identity() for m, obj in enumerate(row)},
        name,
    )


def cyclic_grid() -> Double_Complex:
    """3x3 grid with exact rows and columns over C2, C4 and their products."""
    inclusion, reduction = table_group.cyclic_sequence()
    rows = _two_equal_rows(inclusion, reduction, "rows")
    return double_complex.direct_sum(rows, rows.transpose(), name="cyclic_3x3")


def sign_grid() -> Double_Complex:
    """Two copies of 1 -> C3 -> S3 -> C2 -> 1 over a trivial row."""
    inclusion, sign = table_group.sign_sequence()
    return _two_equal_rows(inclusion, sign, "sign_3x3")


def trivial_grid() -> Double_Complex:
    return Double_Complex({}, name="trivial_3x3")


def mutated_grid(dc: Double_Complex, pos: Position = (0, 0)) -> Double_Complex:
    """``dc`` with the object at ``pos`` replaced by the trivial one."""
    return dc.with_object(pos, dc.trivial)
