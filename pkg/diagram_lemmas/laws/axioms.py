from collections.abc import Iterable

import diagram_lemmas.data_types as data_types
import diagram_lemmas.lattice as lattice

from .law_strategy import Law_Strategy, Outcome, failing

SKIP = data_types.Check_Status.SKIP


class GAL(Law_Strategy):
    """Direct and inverse image form a Galois connection."""

    _law_code = "GAL"

    def _instances(self) -> Iterable[tuple]:
        return ((f,) for f in self.fixture.morphisms)

    def _primary(self, instance: tuple) -> Outcome:
        (f,) = instance
        for S in self.fixture.lattice_of(f.source):
            fS = f.direct_image(S)
            for T in self.fixture.lattice_of(f.target):
                if lattice.leq(fS, T) != lattice.leq(S, f.inverse_image(T)):
                    return (f, S, T)
        return None

    def _dual(self, instance: tuple) -> Outcome:
        (f,) = instance
        for S in self.fixture.lattice_of(f.source):
            if not lattice.leq(S, f.inverse_image(f.direct_image(S))):
                return (f, S)
        for T in self.fixture.lattice_of(f.target):
            if not lattice.leq(f.direct_image(f.inverse_image(T)), T):
                return (f, T)
        return None


class AX1(Law_Strategy):
    """Images are functorial."""

    _law_code = "AX1"

    def _instances(self) -> Iterable[tuple]:
        return self.fixture.composable_pairs()

    def _primary(self, instance: tuple) -> Outcome:
        f, g = instance
        gf = lattice.compose(g, f)
        identity = f.source.identity()
        for S in self.fixture.lattice_of(f.source):
            if gf.direct_image(S) != g.direct_image(f.direct_image(S)):
                return (f, g, S)
            if identity.direct_image(S) != S:
                return (identity, S)
        return None

    def _dual(self, instance: tuple) -> Outcome:
        f, g = instance
        gf = lattice.compose(g, f)
        identity = g.target.identity()
        for T in self.fixture.lattice_of(g.target):
            if gf.inverse_image(T) != f.inverse_image(g.inverse_image(T)):
                return (f, g, T)
            if identity.inverse_image(T) != T:
                return (identity, T)
        return None


class AX2(Law_Strategy):
    """f f^-1 B = B meet Im f, and dually f^-1 f A = A join Ker f."""

    _law_code = "AX2"

    def _instances(self) -> Iterable[tuple]:
        return ((f,) for f in self.fixture.morphisms)

    def _primary(self, instance: tuple) -> Outcome:
        (f,) = instance
        im = f.image()
        for B in self.fixture.lattice_of(f.target):
            if f.direct_image(f.inverse_image(B)) != lattice.meet(B, im):
                return (f, B)
        return None

    def _dual(self, instance: tuple) -> Outcome:
        (f,) = instance
        ker = f.kernel()
        for A in self.fixture.lattice_of(f.source):
            if f.inverse_image(f.direct_image(A)) != lattice.join(A, ker):
                return (f, A)
        return None


class AX3(Law_Strategy):
    """Embeddings and projections exist and have their universal properties."""

    _law_code = "AX3"

    def _instances(self) -> Iterable[tuple]:
        for G in self.fixture.objects:
            for S in self.fixture.pool_of(G):
                yield G, S

    def _primary(self, instance: tuple) -> Outcome:
        G, S = instance
        if not lattice.is_conormal(S):
            return SKIP
        iota = lattice.embedding_of(S)
        if iota.image() != S or not iota.is_embedding():
            return (S, iota)
        for h in self.fixture.morphisms_into(G):
            if lattice.leq(h.image(), S):
                u = h.factor_through_embedding(iota)
                if lattice.compose(iota, u) != h:
                    return (S, h)
        return None

    def _dual(self, instance: tuple) -> Outcome:
        G, S = instance
        pi = lattice.projection_by(S)
        N = pi.kernel()
        if not lattice.leq(S, N) or N != lattice.normal_closure(S):
            return (S, pi)
        for h in self.fixture.morphisms_out_of(G):
            if lattice.leq(S, h.kernel()):
                v = h.factor_through_projection(pi)
                if lattice.compose(v, pi) != h:
                    return (S, h)
        return None


class AX4(Law_Strategy):
    """Every morphism factors as projection, isomorphism, embedding."""

    _law_code = "AX4"

    def _instances(self) -> Iterable[tuple]:
        return ((f,) for f in self.fixture.morphisms)

    def _primary(self, instance: tuple) -> Outcome:
        (f,) = instance
        triple = lattice.factorize(f)
        return failing(
            triple.composite() == f and triple.middle.is_isomorphism(), f
        )

    def _dual(self, instance: tuple) -> Outcome:
        (f,) = instance
        triple = lattice.factorize(f)
        return failing(
            triple.projection.kernel() == f.kernel()
            and triple.embedding.image() == f.image(),
            f,
        )


class AX5(Law_Strategy):
    """Joins of normal subgroups are normal; meets of conormal subgroups are conormal."""

    _law_code = "AX5"

    def _instances(self) -> Iterable[tuple]:
        for G in self.fixture.objects:
            L = self.fixture.pool_of(G)
            for i, S in enumerate(L):
                for T in L[i:]:
                    yield G, S, T

    def _primary(self, instance: tuple) -> Outcome:
        _, S, T = instance
        if not (lattice.is_normal(S) and lattice.is_normal(T)):
            return SKIP
        return failing(lattice.is_normal(lattice.join(S, T)), S, T)

    def _dual(self, instance: tuple) -> Outcome:
        _, S, T = instance
        if not (lattice.is_conormal(S) and lattice.is_conormal(T)):
            return SKIP
        return failing(lattice.is_conormal(lattice.meet(S, T)), S, T)
