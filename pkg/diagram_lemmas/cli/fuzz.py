import logging

import numpy as np

import diagram_lemmas.data_types as data_types
import diagram_lemmas.double_complex as double_complex
import diagram_lemmas.lattice as lattice
import diagram_lemmas.salamander as salamander
import diagram_lemmas.table_group as table_group
import diagram_lemmas.vector_space as vector_space
from diagram_lemmas.double_complex import Double_Complex, Position

# offsets covered by each elementary piece and the identity arrows inside it
PIECES = {
    "single": ([(0, 0)], [], []),
    "h_arrow": ([(0, 0), (0, 1)], [(0, 0)], []),
    "v_arrow": ([(0, 0), (1, 0)], [], [(0, 0)]),
    "square": ([(0, 0), (0, 1), (1, 0), (1, 1)], [(0, 0), (1, 0)], [(0, 0), (0, 1)]),
}


def _size(obj: lattice.Structure_Object) -> int:
    if obj.backend_tag == data_types.Backend_Tag.VECTOR_SPACE:
        return obj.dim
    return obj.order


def _piece_objects(
    params: data_types.Fuzz_Parameters, rng: np.random.Generator, p: int
) -> list[lattice.Structure_Object]:
    if params.backend == data_types.Backend_Tag.VECTOR_SPACE:
        return [vector_space.vector_space(p, d) for d in range(1, params.max_dim + 1)]
    return [
        group
        for group in table_group.small_groups(params.max_order)
        if params.allow_nonabelian or group.is_abelian()
    ]


def _piece(
    X: lattice.Structure_Object, kind: str, corner: Position, trivial: lattice.Structure_Object
) -> Double_Complex:
    offsets, horizontal, vertical = PIECES[kind]
    n, m = corner
    return Double_Complex(
        {(n + dn, m + dm): X for dn, dm in offsets},
        {(n + dn, m + dm): X.identity() for dn, dm in horizontal},
        {(n + dn, m + dm): X.identity() for dn, dm in vertical},
        trivial=trivial,
        name=f"{kind}@{corner}",
    )


def _fits(dc: Double_Complex, piece: Double_Complex, limit: int) -> bool:
    """Position-wise sums stay within the order (or dimension) limit."""
    tables = dc.backend_tag == data_types.Backend_Tag.TABLE_GROUP
    for pos, obj in piece.objects.items():
        current = _size(dc.object_at(pos))
        if (current * _size(obj) if tables else current + _size(obj)) > limit:
            return False
    return True


def _automorphism(X: lattice.Structure_Object, rng: np.random.Generator) -> lattice.Morphism:
    if X.backend_tag == data_types.Backend_Tag.VECTOR_SPACE:
        return vector_space.random_automorphism(X, rng)
    options = table_group.automorphisms(X)
    return options[int(rng.integers(len(options)))]


def conjugate(dc: Double_Complex, rng: np.random.Generator) -> Double_Complex:
    """Replace every differential d: X -> Y by φ_Y d φ_X⁻¹ for random automorphisms φ."""
    phi = {pos: _automorphism(obj, rng) for pos, obj in sorted(dc.objects.items())}

    def twist(f: lattice.Morphism, source: Position, target: Position) -> lattice.Morphism:
        inner = phi[source].inverse() if source in phi else f.source.identity()
        outer = phi.get(target, f.target.identity())
        return lattice.compose(outer, lattice.compose(f, inner))

    horizontal = {(n, m): twist(f, (n, m), (n, m + 1)) for (n, m), f in dc.horizontal.items()}
    vertical = {(n, m): twist(f, (n, m), (n + 1, m)) for (n, m), f in dc.vertical.items()}
    return Double_Complex(
        dc.objects, horizontal, vertical, trivial=dc.trivial, name=dc.name
    )


def fuzz_complex(
    seed: int | np.random.SeedSequence, params: data_types.Fuzz_Parameters | None = None
) -> Double_Complex:
    """A random valid double complex: a direct sum of elementary pieces, conjugated position-wise."""
    params = params or data_types.Fuzz_Parameters()
    rng = np.random.default_rng(seed)
    p = int(rng.choice(params.primes))
    name = f"fuzz-{params.backend}"
    if params.backend == data_types.Backend_Tag.VECTOR_SPACE:
        trivial, limit = vector_space.vector_space(p, 0), params.max_dim
    else:
        trivial, limit = table_group.trivial_group(), params.max_order
    dc = Double_Complex({}, trivial=trivial, name=name)
    if params.rows == 0 or params.cols == 0:
        return dc
    choices = _piece_objects(params, rng, p)
    kinds = list(PIECES)
    for _ in range(params.pieces):
        kind = kinds[int(rng.integers(len(kinds)))]
        X = choices[int(rng.integers(len(choices)))]
        offsets = PIECES[kind][0]
        height = max(dn for dn, _ in offsets) + 1
        width = max(dm for _, dm in offsets) + 1
        if height > params.rows or width > params.cols:
            continue
        corner = (
            int(rng.integers(params.rows - height + 1)),
            int(rng.integers(params.cols - width + 1)),
        )
        piece = _piece(X, kind, corner, trivial)
        if _fits(dc, piece, limit):
            dc = double_complex.direct_sum(dc, piece, name=name)
    dc.name = name
    dc = conjugate(dc, rng)
    logging.debug(f"fuzzed {dc!r}: {[obj.name for _, obj in sorted(dc.objects.items())]}")
    return dc


def scan_positions(dc: Double_Complex) -> list[Position]:
    """Anchors whose salamander touches the support."""
    rows, cols = dc.extent()
    return [(n, m) for n in range(-1, rows) for m in range(-1, cols)]


def check_complex(dc: Double_Complex) -> data_types.Fuzz_Statistics:
    """Validate, then verify every salamander and donor/receptor isomorphism that applies."""
    stats = data_types.Fuzz_Statistics(complexes=1)
    report = double_complex.validate(dc)
    if not report.passed:
        stats.failures.append(f"{dc.name}: invalid complex ({len(report.failures())} laws)")
        return stats
    stats.valid = 1
    exact = True
    for pos in scan_positions(dc):
        for direction in data_types.Edge_Direction:
            try:
                seq = salamander.salamander_sequence(dc, pos, direction)
            except data_types.Hypothesis_Error as error:
                logging.warning(f"{dc.name} {direction} at {pos} skipped: {error}")
                stats.positions_skipped += 1
                continue
            verdict = salamander.verify_salamander(seq)
            coherence = salamander.check_composite_coherence(seq)
            stats.positions_verified += 1
            bad = [entry.position for entry in verdict.entries if not entry.passed]
            bad += [check.instance for check in coherence if not check.passed]
            if bad:
                exact = False
                stats.failures.append(f"{dc.name} {direction} at {pos}: {', '.join(bad)}")
            try:
                iso = salamander.donor_receptor_iso(dc, pos, direction)
            except data_types.Hypothesis_Error:
                continue
            stats.qualifying_edges += 1
            if iso.verified:
                stats.isomorphisms_verified += 1
            else:
                stats.failures.append(f"{dc.name} {direction} at {pos}: {iso.describe()}")
    stats.exact = int(exact)
    return stats
