from collections.abc import Iterable

import diagram_lemmas.lattice as lattice
import diagram_lemmas.vector_space as vector_space

from .law_strategy import Law_Strategy, Outcome


class ORC(Law_Strategy):
    """Vector-space operations agree with the same space realised as a Cayley table."""

    _law_code = "ORC"
    _has_dual = False

    def _instances(self) -> Iterable[tuple]:
        for f in self.fixture.morphisms:
            source = self.fixture.lattice_of(f.source)
            target = self.fixture.lattice_of(f.target)
            for S in source:
                for S2 in source:
                    for T in target:
                        yield f, S, S2, T

    def _primary(self, instance: tuple) -> Outcome:
        f, S, S2, T = instance
        tr = vector_space.translate_subgroup
        g = vector_space.translate_morphism(f)
        checks = (
            tr(lattice.join(S, S2)) == lattice.join(tr(S), tr(S2)),
            tr(lattice.meet(S, S2)) == lattice.meet(tr(S), tr(S2)),
            lattice.leq(S, S2) == lattice.leq(tr(S), tr(S2)),
            S.order == tr(S).order,
            tr(f.direct_image(S)) == g.direct_image(tr(S)),
            tr(f.inverse_image(T)) == g.inverse_image(tr(T)),
            tr(f.image()) == g.image(),
            tr(f.kernel()) == g.kernel(),
        )
        if all(checks):
            return None
        return (f, S, S2, T, f"check {checks.index(False)}")
