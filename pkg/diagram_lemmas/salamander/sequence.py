import logging

from pydantic import BaseModel, ConfigDict

import diagram_lemmas.data_types as data_types
import diagram_lemmas.double_complex as double_complex
import diagram_lemmas.lattice as lattice
import diagram_lemmas.subquotient as subquotient
from diagram_lemmas.double_complex import Double_Complex, Position

_PASS, _FAIL, _SKIP = (
    data_types.Check_Status.PASS,
    data_types.Check_Status.FAIL,
    data_types.Check_Status.SKIP,
)


def _label(pos: Position) -> str:
    return f"({pos[0]},{pos[1]})"


def orient(
    dc: Double_Complex, pos: Position, direction: data_types.Edge_Direction
) -> tuple[Double_Complex, Position]:
    """The complex and anchor on which the horizontal construction runs."""
    if direction == data_types.Edge_Direction.HORIZONTAL:
        return dc, tuple(pos)
    return dc.transpose(), (pos[1], pos[0])


def restore(pos: Position, direction: data_types.Edge_Direction) -> Position:
    if direction == data_types.Edge_Direction.HORIZONTAL:
        return tuple(pos)
    return pos[1], pos[0]


class Six_Term_Sequence(BaseModel):
    """C_□ -> A_h -> A_□ -> □B -> B_h -> □D around the anchor A.

    ``complex`` and ``star`` are the oriented ones: for the vertical
    sequence they belong to the transposed complex.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    anchor: Position
    direction: data_types.Edge_Direction
    complex: Double_Complex
    star: double_complex.Local_Star
    labels: list[str]
    objects: list[subquotient.Subquotient]
    maps: list[subquotient.Induced_Morphism]
    hypotheses: list[data_types.Check_Result]

    def describe(self) -> list[str]:
        lines = [f"{label}: order {sq.order}" for label, sq in zip(self.labels, self.objects)]
        lines += [
            f"{self.labels[i]} -> {self.labels[i + 1]}: {induced.map.describe()}"
            for i, induced in enumerate(self.maps)
        ]
        return lines


def sequence_hypotheses(
    dc: Double_Complex,
    pos: Position,
    direction: data_types.Edge_Direction = data_types.Edge_Direction.HORIZONTAL,
) -> tuple[list[double_complex.Homology_Object], list[data_types.Check_Result], list[str]]:
    """The six homology objects, their definedness checks and their labels."""
    work, (n, m) = orient(dc, pos, direction)
    A, B, C, D = (n, m), (n, m + 1), (n - 1, m), (n + 1, m + 1)
    side = "h" if direction == data_types.Edge_Direction.HORIZONTAL else "v"
    pieces = [
        double_complex.donor(work, C),
        double_complex.horizontal_homology(work, A),
        double_complex.donor(work, A),
        double_complex.receptor(work, B),
        double_complex.horizontal_homology(work, B),
        double_complex.receptor(work, D),
    ]
    templates = ["{}_□", "{}_" + side, "{}_□", "□{}", "{}_" + side, "□{}"]
    labels = [
        template.format(_label(restore(piece.position, direction)))
        for template, piece in zip(templates, pieces)
    ]
    checks = [
        data_types.Check_Result(
            status=_PASS if piece.defined else _FAIL,
            code="DEF",
            instance=label,
            message=piece.reason,
        )
        for piece, label in zip(pieces, labels)
    ]
    star = double_complex.local_star(work, A)
    checks.append(
        data_types.Check_Result(
            status=_PASS if lattice.is_normal(star.c.image()) else _FAIL,
            code="NRM",
            instance=f"Im c in {_label(restore(A, direction))}",
        )
    )
    return pieces, checks, labels


def salamander_sequence(
    dc: Double_Complex,
    pos: Position,
    direction: data_types.Edge_Direction = data_types.Edge_Direction.HORIZONTAL,
) -> Six_Term_Sequence:
    pieces, checks, labels = sequence_hypotheses(dc, pos, direction)
    failed = [check for check in checks if not check.passed]
    if failed:
        names = "; ".join(
            f"{check.instance} {'undefined' if check.code == 'DEF' else 'not normal'}"
            + (f" ({check.message})" if check.message else "")
            for check in failed
        )
        raise data_types.Hypothesis_Error(
            f"salamander hypotheses fail at {_label(pos)}: {names}"
        )
    work, (n, m) = orient(dc, pos, direction)
    star = double_complex.local_star(work, (n, m))
    objects = [piece.value for piece in pieces]
    maps = [
        subquotient.induced_morphism(star.c, objects[0], objects[1]),
        subquotient.identity_induced(work.object_at((n, m)), objects[1], objects[2]),
        subquotient.induced_morphism(star.e, objects[2], objects[3]),
        subquotient.identity_induced(work.object_at((n, m + 1)), objects[3], objects[4]),
        subquotient.induced_morphism(star.g, objects[4], objects[5]),
    ]
    logging.debug(
        f"{dc.name}: {direction} salamander sequence at {_label(pos)}: "
        + " -> ".join(f"{label}[{sq.order}]" for label, sq in zip(labels, objects))
    )
    return Six_Term_Sequence(
        anchor=tuple(pos),
        direction=direction,
        complex=work,
        star=star,
        labels=labels,
        objects=objects,
        maps=maps,
        hypotheses=checks,
    )


def _closed_forms(star: double_complex.Local_Star) -> list[lattice.Subgroup]:
    ker_e, ker_g, ker_s = star.e.kernel(), star.g.kernel(), star.s.kernel()
    im_c, im_d, im_e = star.c.image(), star.d.image(), star.e.image()
    return [
        lattice.join(lattice.meet(ker_e, im_c), im_d),
        lattice.join(ker_e, im_c),
        lattice.meet(im_e, ker_g),
        lattice.join(lattice.meet(ker_s, ker_g), im_e),
    ]


def verify_salamander(seq: Six_Term_Sequence) -> data_types.Salamander_Report:
    """Exactness at A_h, A_□, □B and B_h, directly and through the lattice criterion."""
    report = data_types.Salamander_Report(
        anchor=f"{seq.direction} {_label(seq.anchor)}"
    )
    for i, closed in enumerate(_closed_forms(seq.star), start=1):
        incoming, outgoing = seq.maps[i - 1], seq.maps[i]
        first, middle, last = incoming.source_sq, incoming.target_sq, outgoing.target_sq
        f, g = incoming.ambient_map, outgoing.ambient_map
        direct = subquotient.is_exact_at(incoming, outgoing)
        criterion = subquotient.exactness_criterion(
            f,
            g,
            first.numerator,
            first.denominator,
            middle.numerator,
            middle.denominator,
            last.numerator,
            last.denominator,
        )
        left, right = subquotient.criterion_sides(
            f, g, first.numerator, middle.denominator, middle.numerator, last.denominator
        )
        entry = data_types.Exactness_Entry(
            position=seq.labels[i],
            direct=direct,
            criterion=criterion,
            closed_form=left == closed and right == closed,
        )
        if not entry.passed:
            logging.error(
                f"salamander at {report.anchor} fails at {entry.position}: "
                f"direct={direct} criterion={criterion} closed form={entry.closed_form}"
            )
        report.entries.append(entry)
    return report


def _coherence(
    code: str,
    instance: str,
    direct: subquotient.Induced_Morphism,
    via: list[subquotient.Subquotient | None],
    ambient: list[lattice.Morphism],
) -> data_types.Check_Result:
    if any(sq is None for sq in via):
        return data_types.Check_Result(
            status=_SKIP, code=code, instance=instance, message="intermediate object undefined"
        )
    first = subquotient.induced_morphism(ambient[0], via[0], via[1])
    second = subquotient.induced_morphism(ambient[1], via[1], via[2])
    composite = subquotient.compose_induced(second, first)
    holds = composite.map == direct.map
    return data_types.Check_Result(
        status=_PASS if holds else _FAIL,
        code=code,
        instance=instance,
        witness=[] if holds else [direct.map.describe(), composite.map.describe()],
    )


def check_composite_coherence(seq: Six_Term_Sequence) -> list[data_types.Check_Result]:
    """C_□ -> A_h through □A and B_h -> □D through B_□ agree with the direct maps."""
    work, star = seq.complex, seq.star
    n, m = star.position
    receptor_A = double_complex.receptor(work, (n, m)).value
    donor_B = double_complex.donor(work, (n, m + 1)).value
    identity_A = work.object_at((n, m)).identity()
    identity_B = work.object_at((n, m + 1)).identity()
    return [
        _coherence(
            "CMP",
            f"{seq.labels[0]} -> {seq.labels[1]}",
            seq.maps[0],
            [seq.objects[0], receptor_A, seq.objects[1]],
            [star.c, identity_A],
        ),
        _coherence(
            "CMP",
            f"{seq.labels[4]} -> {seq.labels[5]}",
            seq.maps[4],
            [seq.objects[4], donor_B, seq.objects[5]],
            [identity_B, star.g],
        ),
    ]
