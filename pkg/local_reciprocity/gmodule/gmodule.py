"""G-modules: an abelian group with one automorphism per group element."""

import logging

from local_reciprocity.abgroup.fg_ab_group import AbHom, ElementOf, FgAbGroup
from local_reciprocity.abgroup.int_matrix import IntMatrix
from local_reciprocity.group.finite_group import FiniteGroup
from local_reciprocity.utils.errors import InvalidModule, MalformedHom

_logger = logging.getLogger(__name__)


class GModule:
    """
    A finitely generated abelian group with a left action of a finite group.

    action[g] is the AbHom of g acting on the underlying group, in the
    coordinates of its presentation.
    """

    def __init__(self, group: FiniteGroup, underlying: FgAbGroup, action, name: str = None):
        """
        Args:
            group (FiniteGroup): the acting group.
            underlying (FgAbGroup): the module as an abelian group.
            action: one AbHom or integer matrix per group element, indexed by element.
            name: optional label used in reports.
        Raises:
            InvalidModule: If a matrix is malformed or the action axioms fail.
        """
        if len(action) != group.order:
            raise InvalidModule(f"Expected {group.order} action maps, got {len(action)}")
        maps = []
        for g, a in enumerate(action):
            if isinstance(a, AbHom):
                if not (a.source.same_presentation(underlying)
                        and a.target.same_presentation(underlying)):
                    raise InvalidModule(f"Action of element {g} is not an endomorphism")
                maps.append(a)
                continue
            try:
                maps.append(AbHom(underlying, underlying, a))
            except MalformedHom as ex:
                raise InvalidModule(f"Action of element {g} is malformed: {ex}") from ex
        self.group = group
        self.underlying = underlying
        self.action = tuple(maps)
        self.name = name or "M"
        self._scan()

    def _scan(self):
        group = self.group
        if self.action[group.identity] != AbHom.identity(self.underlying):
            raise InvalidModule("The identity must act trivially")
        for g in group.elements():
            for h in group.elements():
                if self.action[g] @ self.action[h] != self.action[group.op(g, h)]:
                    raise InvalidModule(f"Action is not compatible at ({g}, {h})")

    @property
    def ngens(self) -> int:
        return self.underlying.ngens

    def matrix(self, g: int) -> IntMatrix:
        return self.action[g].matrix

    def act(self, g: int, x: ElementOf) -> ElementOf:
        return self.action[g](x)

    def act_coords(self, g: int, coords) -> tuple:
        return self.action[g].apply_coords(coords)

    def element(self, coords) -> ElementOf:
        return self.underlying.element(coords)

    def is_trivial_action(self) -> bool:
        identity = AbHom.identity(self.underlying)
        return all(a == identity for a in self.action)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GModule):
            return False
        return (self.group == other.group
                and self.underlying.same_presentation(other.underlying)
                and self.action == other.action)

    def __hash__(self) -> int:
        return hash((self.group, self.underlying.orders, self.action))

    def __repr__(self) -> str:
        return f"GModule({self.name}: {self.underlying!r} over {self.group!r})"

    def serialize(self) -> dict:
        return {
            "group": self.group.serialize(),
            "underlying": self.underlying.serialize(),
            "action": [[[str(x) for x in row] for row in a.matrix.entries] for a in self.action],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GModule":
        group = FiniteGroup.from_json(data["group"])
        underlying = FgAbGroup.from_json(data["underlying"])
        action = [IntMatrix([[int(x) for x in row] for row in m], underlying.ngens)
                  for m in data["action"]]
        return cls(group, underlying, action)


class GModuleHom:
    """An equivariant homomorphism of G-modules."""

    def __init__(self, source: GModule, target: GModule, hom):
        """
        Args:
            source (GModule): domain.
            target (GModule): codomain over the same group.
            hom: AbHom or matrix between the underlying groups.
        Raises:
            InvalidModule: If the groups differ or the map is not equivariant.
        """
        if source.group != target.group:
            raise InvalidModule("Source and target are modules over different groups")
        if not isinstance(hom, AbHom):
            try:
                hom = AbHom(source.underlying, target.underlying, hom)
            except MalformedHom as ex:
                raise InvalidModule(f"Module map is malformed: {ex}") from ex
        elif not (hom.source.same_presentation(source.underlying)
                  and hom.target.same_presentation(target.underlying)):
            raise InvalidModule("Map does not run between the underlying groups")
        for g in source.group.elements():
            if hom @ source.action[g] != target.action[g] @ hom:
                raise InvalidModule(f"Map is not equivariant for element {g}")
        self.source = source
        self.target = target
        self.hom = hom

    @classmethod
    def identity(cls, module: GModule) -> "GModuleHom":
        return cls(module, module, AbHom.identity(module.underlying))

    @classmethod
    def zero(cls, source: GModule, target: GModule) -> "GModuleHom":
        return cls(source, target, AbHom.zero(source.underlying, target.underlying))

    def __call__(self, x: ElementOf) -> ElementOf:
        return self.hom(x)

    def __matmul__(self, other: "GModuleHom") -> "GModuleHom":
        return GModuleHom(other.source, self.target, self.hom @ other.hom)

    def __repr__(self) -> str:
        return f"GModuleHom({self.source.name} -> {self.target.name})"
