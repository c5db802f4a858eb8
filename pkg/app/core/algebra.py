#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Álgebra libre graduada sobre las letras E, H, theta, xi, chi y b.

Los valores son siempre elementos del álgebra libre; las relaciones se
imponen mediante otras operaciones (ordenación normal, enderezamiento y la
prueba de anulación por apareamiento).
"""

from typing import NamedTuple

from app.core.cartan import Weight
from app.core.errors import AlgebraError
from app.core.scalars import ONE, ZERO, scalar, vpow
from app.core.symfunc import check_partition

E, H, THETA, XI, CHI, SCHUR = "E", "H", "theta", "xi", "chi", "b"
KIND_ORDER = {E: 0, H: 1, THETA: 2, XI: 3, CHI: 4, SCHUR: 5}


class Letter(NamedTuple):
    """Generador: tipo, nodo e índice (grado, o partición para b)."""

    kind: str
    node: int
    index: object

    def sort_key(self):
        return (KIND_ORDER[self.kind], self.node, self.index)

    @property
    def degree(self):
        """Grado de lazo de la letra."""
        if self.kind == SCHUR:
            return sum(self.index)
        return self.index

    @property
    def is_E(self):
        return self.kind == E


def make_letter(kind, node, index):
    """
    Construye una letra validada.

    Returns:
        Letter, o None si la letra es la unidad (theta/xi/chi de grado 0,
        b de la partición vacía).

    Raises:
        AlgebraError: Si el índice no es admisible.
    """
    if kind not in KIND_ORDER:
        raise AlgebraError(f"tipo de letra desconocido: {kind}")
    if kind == SCHUR:
        partition = check_partition(index)
        return Letter(kind, node, partition) if partition else None
    index = int(index)
    if kind == H and index < 1:
        raise AlgebraError(f"H({node},{index}) no es una letra: se requiere s >= 1")
    if kind in (THETA, XI, CHI):
        if index < 0:
            raise AlgebraError(f"{kind}({node},{index}) con grado negativo")
        if index == 0:
            return None
    return Letter(kind, node, index)


def letter_weight(letter, rank):
    qpart = [0] * rank
    if letter.kind == E:
        qpart[letter.node - 1] = 1
    return Weight(tuple(qpart), letter.degree)


def weight_of(monomial, rank):
    """Peso de un monomio: suma de los pesos de sus letras."""
    rank = getattr(rank, "rank", rank)
    qpart = [0] * rank
    degree = 0
    for letter in monomial:
        if letter.kind == E:
            qpart[letter.node - 1] += 1
        degree += letter.degree
    return Weight(tuple(qpart), degree)


def monomial_key(monomial):
    return (len(monomial), tuple(letter.sort_key() for letter in monomial))


def accumulate(target, key, coeff):
    total = target.get(key, ZERO) + coeff
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class Element:
    """Combinación lineal finita de monomios con coeficientes en K."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        """
        Inicializa el elemento.

        Args:
            terms (dict): {monomio (tupla de Letter): escalar}.
        """
        self.terms = {}
        for monomial, coeff in (terms or {}).items():
            accumulate(self.terms, tuple(monomial), scalar(coeff))

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls, coeff=ONE):
        return cls({(): coeff})

    @classmethod
    def monomial(cls, letters, coeff=ONE):
        return cls({tuple(letters): coeff})

    @classmethod
    def generator(cls, kind, node, index):
        letter = make_letter(kind, node, index)
        return cls.one() if letter is None else cls.monomial((letter,))

    @classmethod
    def E(cls, node, degree):
        return cls.generator(E, node, degree)

    def items(self):
        return self.terms.items()

    def monomials(self):
        return sorted(self.terms, key=monomial_key)

    def coefficient(self, monomial):
        return self.terms.get(tuple(monomial), ZERO)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        other = _coerce(other)
        result = Element()
        result.terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            accumulate(result.terms, monomial, coeff)
        return result

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-ONE)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def scale(self, coeff):
        coeff = scalar(coeff)
        if not coeff:
            return Element()
        result = Element()
        result.terms = {m: c * coeff for m, c in self.terms.items()}
        return result

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        result = Element()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                accumulate(result.terms, m1 + m2, c1 * c2)
        return result

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent):
        result = Element.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def map_coefficients(self, function):
        return Element({m: function(c) for m, c in self.terms.items()})

    def weights(self, rank):
        return {weight_of(m, rank) for m in self.terms}

    def weight(self, rank):
        """
        Peso común de todos los monomios.

        Raises:
            AlgebraError: Si el elemento no es homogéneo o es cero.
        """
        weights = self.weights(rank)
        if len(weights) != 1:
            raise AlgebraError(f"elemento no homogéneo ({len(weights)} pesos)")
        return weights.pop()

    def homogeneous_parts(self, rank):
        """Componentes homogéneas {peso: Element}."""
        parts = {}
        for monomial, coeff in self.terms.items():
            parts.setdefault(weight_of(monomial, rank), {})[monomial] = coeff
        return {w: Element(t) for w, t in sorted(parts.items())}

    def letters(self):
        return {letter for monomial in self.terms for letter in monomial}

    def is_pure_E(self):
        return all(letter.kind == E for letter in self.letters())

    def E_degrees(self):
        return [l.index for l in self.letters() if l.kind == E]

    def __str__(self):
        from app.utils.parser import serialize
        return serialize(self)

    __repr__ = __str__


def _coerce(value):
    if isinstance(value, Element):
        return value
    if isinstance(value, int) or hasattr(value, "numer"):
        return Element.one(scalar(value)) if value else Element()
    raise TypeError(f"no se puede convertir {type(value).__name__} en Element")


class TensorElement:
    """Suma finita de pares monomio (x) monomio."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for pair, coeff in (terms or {}).items():
            accumulate(self.terms, (tuple(pair[0]), tuple(pair[1])), scalar(coeff))

    @classmethod
    def one(cls):
        return cls({((), ()): ONE})

    @classmethod
    def pure(cls, left, right, coeff=ONE):
        """x (x) y para elementos x, y."""
        terms = {}
        for m1, c1 in left.items():
            for m2, c2 in right.items():
                accumulate(terms, (m1, m2), scalar(coeff) * c1 * c2)
        result = cls()
        result.terms = terms
        return result

    def items(self):
        return self.terms.items()

    def __add__(self, other):
        result = TensorElement()
        result.terms = dict(self.terms)
        for pair, coeff in other.terms.items():
            accumulate(result.terms, pair, coeff)
        return result

    def scale(self, coeff):
        result = TensorElement()
        result.terms = {p: c * coeff for p, c in self.terms.items()} if coeff else {}
        return result

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        from app.utils.parser import serialize_tensor
        return serialize_tensor(self)

    __repr__ = __str__


def tensor_multiply(t, u, cartan):
    """
    Producto torcido (x1 (x) x2)(y1 (x) y2) = v^{-(wt x2, wt y1)} x1 y1 (x) x2 y2.

    Solo intervienen las partes Q de los pesos, con la forma simétrica B.
    """
    result = TensorElement()
    for (x1, x2), c1 in t.terms.items():
        q2 = weight_of(x2, cartan.rank).qpart
        for (y1, y2), c2 in u.terms.items():
            twist = cartan.form(q2, weight_of(y1, cartan.rank).qpart)
            accumulate(result.terms, (x1 + y1, x2 + y2), c1 * c2 * vpow(-twist))
    return result
