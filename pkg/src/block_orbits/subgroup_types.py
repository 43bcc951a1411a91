"""Contains the SubgroupType variants, the isomorphism types of subgroups of PGL(2,q)"""

from dataclasses import dataclass
from math import gcd

from finite_fields import FieldSpec


@dataclass(frozen=True)
class SubgroupType:
    """Base class of the isomorphism types a stabilizer is classified into"""

    def group_order(self, p: int) -> int:
        raise NotImplementedError

    def label(self, p: int) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Cyclic(SubgroupType):
    d: int

    def group_order(self, p: int) -> int:
        return self.d

    def label(self, p: int) -> str:
        return f"C{self.d}"


@dataclass(frozen=True)
class Dihedral(SubgroupType):
    """Dihedral group of the given order 2d"""

    order: int

    @property
    def d(self) -> int:
        return self.order // 2

    def group_order(self, p: int) -> int:
        return self.order

    def label(self, p: int) -> str:
        return f"D{self.order}"


@dataclass(frozen=True)
class A4(SubgroupType):
    def group_order(self, p: int) -> int:
        return 12

    def label(self, p: int) -> str:
        return "A4"


@dataclass(frozen=True)
class S4(SubgroupType):
    def group_order(self, p: int) -> int:
        return 24

    def label(self, p: int) -> str:
        return "S4"


@dataclass(frozen=True)
class A5(SubgroupType):
    def group_order(self, p: int) -> int:
        return 60

    def label(self, p: int) -> str:
        return "A5"


@dataclass(frozen=True)
class PSLSub(SubgroupType):
    """PSL(2,p^m) over a subfield"""

    m: int

    def group_order(self, p: int) -> int:
        pm = p**self.m
        return pm * (pm * pm - 1) // gcd(2, p - 1)

    def label(self, p: int) -> str:
        return f"PSL(2,{p ** self.m})"


@dataclass(frozen=True)
class PGLSub(SubgroupType):
    """PGL(2,p^m) over a subfield"""

    m: int

    def group_order(self, p: int) -> int:
        pm = p**self.m
        return pm * (pm * pm - 1)

    def label(self, p: int) -> str:
        return f"PGL(2,{p ** self.m})"


@dataclass(frozen=True)
class ElemAbelian(SubgroupType):
    """Elementary abelian group of order p^m"""

    m: int

    def group_order(self, p: int) -> int:
        return p**self.m

    def label(self, p: int) -> str:
        return f"Z{p}" if self.m == 1 else f"Z{p}^{self.m}"


@dataclass(frozen=True)
class Semidirect(SubgroupType):
    """Z_p^m extended by a cyclic group of order d dividing p^m - 1"""

    m: int
    d: int

    def group_order(self, p: int) -> int:
        return p**self.m * self.d

    def label(self, p: int) -> str:
        return f"{ElemAbelian(self.m).label(p)}:C{self.d}"


@dataclass(frozen=True)
class Unclassified(SubgroupType):
    order: int

    def group_order(self, p: int) -> int:
        return self.order

    def label(self, p: int) -> str:
        return f"Unclassified({self.order})"


def _coincidences(p: int) -> list[frozenset[SubgroupType]]:
    """Pairs of names that denote the same abstract group in characteristic p"""

    classes = [frozenset({Cyclic(p), ElemAbelian(1)})]
    if p == 2:
        classes += [
            frozenset({Dihedral(4), ElemAbelian(2)}),
            frozenset({Dihedral(6), PGLSub(1), PSLSub(1)}),
            frozenset({A4(), Semidirect(2, 3)}),
            frozenset({A5(), PGLSub(2), PSLSub(2)}),
        ]
    else:
        classes.append(frozenset({Dihedral(2 * p), Semidirect(1, 2)}))
    if p == 3:
        classes += [frozenset({A4(), PSLSub(1)}), frozenset({S4(), PGLSub(1)})]
    if p == 5:
        classes.append(frozenset({A5(), PSLSub(1)}))
    return classes


def _direct_aliases(t: SubgroupType, p: int) -> set[SubgroupType]:
    names: set[SubgroupType] = {t}
    for group in _coincidences(p):
        if t in group:
            names |= group

    if p == 2 and isinstance(t, PGLSub):
        names.add(PSLSub(t.m))
    if p == 2 and isinstance(t, PSLSub):
        names.add(PGLSub(t.m))
    if isinstance(t, Semidirect) and t.d == 1:
        names.add(ElemAbelian(t.m))
    return names


def isomorphic_names(t: SubgroupType, p: int) -> frozenset[SubgroupType]:
    """Every name in the table that denotes the same group as t, t included"""

    names = {t}
    pending = [t]
    while pending:
        for alias in _direct_aliases(pending.pop(), p):
            if alias not in names:
                names.add(alias)
                pending.append(alias)
    return frozenset(names)


def _fits_dickson(t: SubgroupType, spec: FieldSpec) -> bool:
    q, p, n = spec.q, spec.p, spec.n

    match t:
        case Cyclic(d):
            return (q - 1) % d == 0 or (q + 1) % d == 0
        case Dihedral():
            d = t.d
            return (q - 1) % d == 0 or (q + 1) % d == 0
        case A4():
            return True
        case S4():
            return p != 2
        case A5():
            return p == 5 or (q * q - 1) % 5 == 0
        case PSLSub(m) | PGLSub(m):
            return n % m == 0
        case ElemAbelian(m):
            return 1 <= m <= n
        case Semidirect(m, d):
            return 1 <= m <= n and (q - 1) % d == 0 and (p**m - 1) % d == 0
    return False


def satisfies_dickson_constraints(t: SubgroupType, spec: FieldSpec) -> bool:
    """Whether t, under any of its names, appears in Dickson's subgroup list"""

    return any(_fits_dickson(name, spec) for name in isomorphic_names(t, spec.p))
