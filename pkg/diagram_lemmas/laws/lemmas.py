from collections.abc import Iterable

import diagram_lemmas.data_types as data_types
import diagram_lemmas.lattice as lattice

from .law_strategy import Law_Strategy, Outcome, failing

SKIP = data_types.Check_Status.SKIP


def _pairs(fixture, G) -> Iterable[tuple]:
    L = fixture.lattice_of(G)
    for S in L:
        for T in L:
            yield S, T


class LA(Law_Strategy):
    """Direct images preserve joins; inverse images preserve meets."""

    _law_code = "LA"

    def _instances(self) -> Iterable[tuple]:
        return ((f,) for f in self.fixture.morphisms)

    def _primary(self, instance: tuple) -> Outcome:
        (f,) = instance
        for S, T in _pairs(self.fixture, f.source):
            if f.direct_image(lattice.join(S, T)) != lattice.join(
                f.direct_image(S), f.direct_image(T)
            ):
                return (f, S, T)
        return None

    def _dual(self, instance: tuple) -> Outcome:
        (f,) = instance
        for S, T in _pairs(self.fixture, f.target):
            if f.inverse_image(lattice.meet(S, T)) != lattice.meet(
                f.inverse_image(S), f.inverse_image(T)
            ):
                return (f, S, T)
        return None


class LA1(Law_Strategy):
    """Embeddings are monomorphisms and projections are epimorphisms."""

    _law_code = "LA1"

    def _instances(self) -> Iterable[tuple]:
        return self.fixture.parallel_pairs()

    def _primary(self, instance: tuple) -> Outcome:
        h, k = instance
        iota = lattice.embedding_of(lattice.join(h.image(), k.image()))
        u = h.factor_through_embedding(iota)
        v = k.factor_through_embedding(iota)
        if u == v:
            return failing(h == k, h, k)
        return failing(lattice.compose(iota, u) != lattice.compose(iota, v), h, k)

    def _dual(self, instance: tuple) -> Outcome:
        h, k = instance
        pi = lattice.projection_by(lattice.meet(h.kernel(), k.kernel()))
        u = h.factor_through_projection(pi)
        v = k.factor_through_projection(pi)
        if u == v:
            return failing(h == k, h, k)
        return failing(lattice.compose(u, pi) != lattice.compose(v, pi), h, k)


class LB(Law_Strategy):
    """Embeddings have trivial kernel; projections have full image."""

    _law_code = "LB"

    def _instances(self) -> Iterable[tuple]:
        for G in self.fixture.objects:
            for S in self.fixture.pool_of(G):
                yield G, S

    def _primary(self, instance: tuple) -> Outcome:
        _, S = instance
        iota = lattice.embedding_of(S)
        return failing(iota.kernel() == iota.source.bottom(), S, iota)

    def _dual(self, instance: tuple) -> Outcome:
        _, S = instance
        pi = lattice.projection_by(S)
        return failing(pi.image() == pi.target.top(), S, pi)


class LB1(Law_Strategy):
    """A morphism is an isomorphism iff it is both an embedding and a projection."""

    _law_code = "LB1"

    def _instances(self) -> Iterable[tuple]:
        return ((f,) for f in self.fixture.morphisms)

    def _primary(self, instance: tuple) -> Outcome:
        (f,) = instance
        inverse = f.inverse()
        both = f.is_embedding() and f.is_projection()
        if both != (inverse is not None):
            return (f,)
        if inverse is not None:
            return failing(lattice.compose(f, inverse) == f.target.identity(), f)
        return None

    def _dual(self, instance: tuple) -> Outcome:
        (f,) = instance
        inverse = f.inverse()
        if inverse is None:
            return SKIP
        return failing(lattice.compose(inverse, f) == f.source.identity(), f)


class LC(Law_Strategy):
    """Inverse image along an embedding preserves joins below its image, and dually."""

    _law_code = "LC"

    def _instances(self) -> Iterable[tuple]:
        for G in self.fixture.objects:
            L = self.fixture.lattice_of(G)
            for S in L:
                for i, A in enumerate(L):
                    for B in L[i:]:
                        yield S, A, B

    def _primary(self, instance: tuple) -> Outcome:
        S, A, B = instance
        AB = lattice.join(A, B)
        if not (lattice.leq(AB, S) and lattice.is_conormal(S)):
            return SKIP
        iota = lattice.embedding_of(S)
        return failing(
            iota.inverse_image(AB)
            == lattice.join(iota.inverse_image(A), iota.inverse_image(B)),
            S,
            A,
            B,
        )

    def _dual(self, instance: tuple) -> Outcome:
        S, A, B = instance
        AB = lattice.meet(A, B)
        if not (lattice.leq(S, AB) and lattice.is_normal(S)):
            return SKIP
        pi = lattice.projection_by(S, strict=True)
        return failing(
            pi.direct_image(AB) == lattice.meet(pi.direct_image(A), pi.direct_image(B)),
            S,
            A,
            B,
        )


class LB2(Law_Strategy):
    """Projections preserve normality; embeddings reflect conormality."""

    _law_code = "LB2"

    def _instances(self) -> Iterable[tuple]:
        for G in self.fixture.objects:
            for S, T in _pairs(self.fixture, G):
                yield S, T

    def _primary(self, instance: tuple) -> Outcome:
        S, N = instance
        if not lattice.is_normal(N):
            return SKIP
        pi = lattice.projection_by(S)
        return failing(lattice.is_normal(pi.direct_image(N)), S, N)

    def _dual(self, instance: tuple) -> Outcome:
        S, C = instance
        if not (lattice.is_conormal(S) and lattice.is_conormal(C)):
            return SKIP
        iota = lattice.embedding_of(S)
        return failing(lattice.is_conormal(iota.inverse_image(C)), S, C)


class RML(Law_Strategy):
    """Restricted modular law."""

    _law_code = "RML"

    def _instances(self) -> Iterable[tuple]:
        for G in self.fixture.objects:
            L = self.fixture.lattice_of(G)
            for X in L:
                for Y in L:
                    for Z in L:
                        yield X, Y, Z

    def _primary(self, instance: tuple) -> Outcome:
        X, Y, Z = instance
        if not lattice.leq(X, Z):
            return SKIP
        if not (
            (lattice.is_normal(Y) and lattice.is_conormal(Z))
            or (lattice.is_conormal(Y) and lattice.is_normal(X))
        ):
            return SKIP
        return failing(
            lattice.join(X, lattice.meet(Y, Z)) == lattice.meet(lattice.join(X, Y), Z),
            X,
            Y,
            Z,
        )

    def _dual(self, instance: tuple) -> Outcome:
        X, Y, Z = instance
        if not lattice.leq(Z, X):
            return SKIP
        if not (
            (lattice.is_conormal(Y) and lattice.is_normal(Z))
            or (lattice.is_normal(Y) and lattice.is_conormal(X))
        ):
            return SKIP
        return failing(
            lattice.meet(X, lattice.join(Y, Z)) == lattice.join(lattice.meet(X, Y), Z),
            X,
            Y,
            Z,
        )
