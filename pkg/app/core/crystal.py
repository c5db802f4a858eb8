#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Potencias divididas, proyectores, operadores de Kashiwara de lazo y retículos.

Todo se calcula sobre el contexto de apareamiento: F' y la descomposición
W' + Z' vienen de ``app.core.pairing`` y las coordenadas de los generadores de
un retículo se obtienen resolviendo sistemas de Gram en cada bloque de peso.
"""

import logging
from dataclasses import dataclass, field

from sympy import Matrix

from app.core.algebra import E, Element, Letter, accumulate
from app.core.errors import NilpotencyError, NotInZError, WindowError
from app.core.linalg import RowSpace, triangularize_over_A
from app.core.loopalg import normal_order_H
from app.core.scalars import ONE, ZERO, in_A, qfact, residue, val0, vpow
from app.ui.report import FAIL, PASS, WINDOW_LIMITED, Report

logger = logging.getLogger(__name__)


def divided_power_E(cartan, i, n, s, x=None):
    """
    E^{(s)}_{i,n} x = E_{i,n}^s x / [s]_{v_i}!, y 0 si s < 0.

    Args:
        cartan (CartanData): Datos de Cartan.
        i (int): Nodo.
        n (int): Grado de lazo.
        s (int): Exponente.
        x (Element): Factor derecho (1 por defecto).
    """
    x = Element.one() if x is None else x
    if s < 0:
        return Element()
    word = (Letter(E, i, n),) * s
    return Element.monomial(word, ONE / qfact(s, cartan.r(i))) * x


def _vi_power(cartan, i, exponent):
    return vpow(cartan.r(i) * exponent)


def _check_in_Z(ctx, i, n, x):
    w, _ = ctx.decompose_Z(i, n - 1, x)
    if w:
        raise NotInZError(f"el elemento no está en Z'_{{{i},{n - 1}}}")


def fprime_orbit(ctx, i, n, x):
    """
    Lista [x, F'x, F'^2 x, ...] hasta el primer cero.

    Raises:
        NilpotencyError: Si F'^{q+1} x no se anula, con q la coordenada de
            alpha_i en el peso de x.
    """
    orbit = [x]
    if not x:
        return orbit
    cap = max(q[i - 1] for q in (w.qpart for w in x.weights(ctx.rank)))
    for _ in range(cap + 1):
        following = ctx.fprime(i, n, orbit[-1])
        if not following:
            return orbit
        orbit.append(following)
    raise NilpotencyError(f"F'_{{{i},{n}}} no se anuló tras {cap + 1} aplicaciones")


def pi_projector(ctx, i, n, t, x, checked=False):
    """
    Pi_{i,n,t}(x) = sum_s (-1)^s v_i^{-s(s-1)/2} E^{(s)}_{i,n} F'^{s+t}_{i,n}(x).

    Raises:
        NotInZError: Si x no está en Z'_{i,n-1}.
    """
    if not checked:
        _check_in_Z(ctx, i, n, x)
    orbit = fprime_orbit(ctx, i, n, x)
    result = Element()
    for s in range(len(orbit) - t):
        coeff = _vi_power(ctx.cartan, i, -s * (s - 1) // 2) * (-1) ** s
        result = result + divided_power_E(ctx.cartan, i, n, s, orbit[s + t]) * coeff
    return result


@dataclass
class StringDecomposition:
    """x = sum_N E^{(N)}_{i,n} y_N con y_N en Z'_{i,n-1}(0)."""

    node: int
    degree: int
    components: dict = field(default_factory=dict)

    def reassemble(self, cartan, shift=0):
        """sum_N E^{(N + shift)} y_N (los términos con N + shift < 0 se anulan)."""
        result = Element()
        for N, y in sorted(self.components.items()):
            result = result + divided_power_E(cartan, self.node, self.degree, N + shift, y)
        return result


def string_decompose(ctx, i, n, x, checked=False):
    """
    Componentes y_N = v_i^{N(N-1)/2} Pi_{i,n,N}(x).

    Returns:
        StringDecomposition con las componentes no nulas.
    """
    if not checked:
        _check_in_Z(ctx, i, n, x)
    decomposition = StringDecomposition(i, n)
    orbit = fprime_orbit(ctx, i, n, x)
    for N in range(len(orbit)):
        component = pi_projector(ctx, i, n, N, x, checked=True)
        component = component * _vi_power(ctx.cartan, i, N * (N - 1) // 2)
        if component:
            decomposition.components[N] = component
    return decomposition


def _split_tail(x, cartan):
    """Agrupa la forma normal de x por cola de letras no E: {cola: parte en E}."""
    blocks = {}
    for monomial, coeff in normal_order_H(x, cartan).items():
        cut = next((k for k, letter in enumerate(monomial) if letter.kind != E), len(monomial))
        accumulate(blocks.setdefault(monomial[cut:], {}), monomial[:cut], coeff)
    return {tail: Element(terms) for tail, terms in sorted(blocks.items(), key=lambda kv: str(kv[0]))}


def _act_on_E_part(ctx, x, action):
    """Aplica ``action`` a la parte en E de cada bloque homogéneo y repone la cola."""
    result = Element()
    for tail, e_part in _split_tail(x, ctx.cartan).items():
        tail_element = Element.monomial(tail)
        for _, part in e_part.homogeneous_parts(ctx.rank).items():
            result = result + action(part) * tail_element
    return result


def _kashiwara(ctx, i, n, x, shift):
    def action(part):
        _, z = ctx.decompose_Z(i, n - 1, part)
        if not z:
            return Element()
        return string_decompose(ctx, i, n, z, checked=True).reassemble(ctx.cartan, shift)
    return _act_on_E_part(ctx, x, action)


def kashiwara_E(ctx, i, n, x):
    """E~_{i,n}: anula W'_{i,n-1} y sube N en uno en la descomposición en cuerdas."""
    ctx.cartan.check_node(i)
    return _kashiwara(ctx, i, n, x, 1)


def kashiwara_F(ctx, i, n, x):
    """F~_{i,n}: baja N en uno; la componente N = 0 se anula."""
    ctx.cartan.check_node(i)
    return _kashiwara(ctx, i, n, x, -1)


def z_projection(ctx, i, k, x):
    """Componente de x en Z'_{i,k} (por bloques de cola)."""
    return _act_on_E_part(ctx, x, lambda part: ctx.decompose_Z(i, k, part)[1])


# ----------------------------------------------------------------------
# Retículos
# ----------------------------------------------------------------------

def _runs(word):
    runs = []
    for letter in word:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    return runs


def _divided_scale(word, cartan):
    """Escalar c con c * palabra = producto de potencias divididas de sus bloques."""
    scale = ONE
    for letter, count in _runs(word):
        if letter.kind == E:
            scale /= qfact(count, cartan.r(letter.node))
    return scale


def _nondecreasing(word):
    keys = [(letter.node, letter.index) for letter in word if letter.kind == E]
    return all(a <= b for a, b in zip(keys, keys[1:]))


class AmbientBlock:
    """
    Base de palabras de un peso, elegida por independencia de apareamientos.

    Se prueban primero las palabras no decrecientes en (nodo, grado): en un
    solo nodo son la base PBW en la que los monomios de potencias divididas
    con grados crecientes tienen coordenadas unitarias. Cada palabra se usa
    con la normalización de potencias divididas.
    """

    def __init__(self, ctx, weight, with_h=False):
        self.ctx = ctx
        self.weight = weight
        candidates = ctx.window_words(weight, with_h=with_h)
        self.tests = candidates
        self.space = RowSpace()
        self.words = []
        self.scales = []
        ordered = sorted(candidates, key=lambda word: not _nondecreasing(word))
        for word in ordered:
            scale = _divided_scale(word, ctx.cartan)
            vector = [ctx.pair_words(word, test) * scale for test in self.tests]
            if self.space.add(vector, len(self.words)):
                self.words.append(word)
                self.scales.append(scale)
        logger.debug("Bloque %s: %d palabras, dimensión %d",
                     weight.to_text(), len(candidates), len(self.words))

    @property
    def dimension(self):
        return len(self.words)

    def element(self, index):
        return Element.monomial(self.words[index], self.scales[index])

    def coordinates(self, x):
        """Coordenadas de x en la base del bloque, o None si no está en su espacio."""
        vector = [self.ctx.pair(Element.monomial(test), x) for test in self.tests]
        combo = self.space.coordinates(vector)
        if combo is None:
            return None
        return [combo.get(k, ZERO) for k in range(self.dimension)]


@dataclass
class LatticeBasis:
    """Generadores de un retículo con sus coordenadas ambiente y procedencia."""

    generators: list
    provenance: list
    weights: list
    coordinates: list
    blocks: dict
    triangular: dict
    ctx: object = None
    with_h: bool = False

    @property
    def valuations(self):
        """Valoración mínima de las coordenadas de cada generador."""
        return [min((val0(c) for c in coords if c), default=0) for coords in self.coordinates]

    @property
    def integral(self):
        return all(in_A(c) for coords in self.coordinates for c in coords if c)

    def __len__(self):
        return len(self.generators)

    def block(self, weight):
        if weight not in self.blocks:
            self.blocks[weight] = AmbientBlock(self.ctx, weight, with_h=self.with_h)
        return self.blocks[weight]

    def coordinates_of(self, x):
        """(peso, coordenadas) de un elemento homogéneo, o None fuera del espacio."""
        weight = normal_order_H(x, self.ctx.cartan).weight(self.ctx.rank)
        coords = self.block(weight).coordinates(x)
        return None if coords is None else (weight, coords)

    @classmethod
    def from_elements(cls, ctx, elements, provenance=None):
        """
        Calcula bloques, coordenadas y formas triangulares de una familia.

        Raises:
            WindowError: Si un generador no está en el espacio de su bloque.
        """
        elements = list(elements)
        provenance = list(provenance) if provenance else [f"g{k}" for k in range(len(elements))]
        with_h = any(letter.kind != E for x in elements for letter in x.letters())
        degrees = [d for x in elements for d in x.E_degrees()]
        if degrees:
            ctx = ctx.widened(ctx.window.widened(min(degrees), max(degrees)))
        blocks, weights, coordinates = {}, [], []
        for x, label in zip(elements, provenance):
            weight = normal_order_H(x, ctx.cartan).weight(ctx.rank)
            if weight not in blocks:
                blocks[weight] = AmbientBlock(ctx, weight, with_h=with_h)
            coords = blocks[weight].coordinates(x)
            if coords is None:
                raise WindowError(f"el generador {label} no está en el espacio de la ventana")
            weights.append(weight)
            coordinates.append(coords)
        triangular = {}
        for weight in blocks:
            rows = [c for w, c in zip(weights, coordinates) if w == weight]
            triangular[weight] = triangularize_over_A(rows)
        return cls(elements, provenance, weights, coordinates, blocks, triangular, ctx, with_h)

    def contains(self, weight, coords):
        """True si las coordenadas están en el A-módulo generado en ese peso."""
        form = self.triangular.get(weight)
        vector = list(coords)
        if form is not None:
            for pivot, row in zip(form.pivots, form.rows):
                if not vector[pivot]:
                    continue
                factor = vector[pivot] / row[pivot]
                if not in_A(factor):
                    return False
                vector = [a - factor * b if b else a for a, b in zip(vector, row)]
        return not any(vector)


def _provenance_text(word, seed_label):
    ops = "".join(f"~E({i},{n})" for i, n in word)
    return f"{ops}*{seed_label}" if ops else seed_label


def generate_lattice(ctx, depth, seeds=None):
    """
    Aplica todas las palabras de E~ de longitud <= depth a las semillas.

    Args:
        ctx (PairingContext): Contexto; el alfabeto es nodos x grados de la ventana.
        depth (int): Longitud máxima de las palabras.
        seeds (list): Pares (etiqueta, Element); por defecto [("1", 1)].

    Returns:
        LatticeBasis con los resultados no nulos y distintos.
    """
    seeds = seeds or [("1", Element.one())]
    alphabet = [(i, n) for i in ctx.cartan.nodes() for n in ctx.window.degrees()]
    generators, provenance, seen = [], [], []
    frontier = []
    for label, seed in seeds:
        if seed and not ctx.is_zero(seed):
            frontier.append((seed, (), label))
            generators.append(seed)
            provenance.append(label)
            seen.append(seed)
    for level in range(1, depth + 1):
        following = []
        for x, word, label in frontier:
            for i, n in alphabet:
                y = kashiwara_E(ctx, i, n, x)
                if not y or any(y == other for other in seen) or ctx.is_zero(y):
                    continue
                seen.append(y)
                following.append((y, ((i, n),) + word, label))
                generators.append(y)
                provenance.append(_provenance_text(((i, n),) + word, label))
        logger.info("Nivel %d: %d generadores nuevos", level, len(following))
        frontier = following
    return LatticeBasis.from_elements(ctx, generators, provenance)


@dataclass
class ResidueReport:
    """Imágenes de los generadores en L / vL."""

    residues: list
    poles: list
    zeros: list
    duplicates: list
    independent: bool

    @property
    def size(self):
        """Número de clases no nulas distintas."""
        return len({r for r in self.residues if r is not None and any(r[1])})


def residue_vector(weight, coords):
    """(peso, residuos en v = 0) o None si alguna coordenada tiene polo."""
    if not all(in_A(c) for c in coords if c):
        return None
    return weight, tuple(residue(c) if c else residue(ZERO) for c in coords)


def mod_v_basis(lattice):
    """Reduce las coordenadas de cada generador en v = 0."""
    residues, poles, zeros = [], [], []
    for index, (weight, coords) in enumerate(zip(lattice.weights, lattice.coordinates)):
        value = residue_vector(weight, coords)
        residues.append(value)
        if value is None:
            poles.append(index)
        elif not any(value[1]):
            zeros.append(index)
    duplicates = []
    first = {}
    for index, value in enumerate(residues):
        if value is None or index in zeros:
            continue
        if value in first:
            duplicates.append((first[value], index))
        else:
            first[value] = index
    independent = True
    for weight in lattice.blocks:
        rows = [list(value[1]) for value in first if value[0] == weight]
        if rows and Matrix(rows).rank() != len(rows):
            independent = False
    return ResidueReport(residues, poles, zeros, duplicates, independent)


def crystal_report(ctx, depth, seeds=None, lattice=None):
    """
    Informe exploratorio sobre el retículo generado a profundidad ``depth``.

    Los apartados ITEM son conjeturales y no hacen fallar el proceso; las
    comprobaciones CHECK de integralidad y de inversión F~E~ sí.

    Args:
        ctx (PairingContext): Contexto.
        depth (int): Profundidad de generación.
        seeds (list): Semillas; por defecto la unidad.
        lattice (LatticeBasis): Retículo ya generado con ``ctx``, ``depth`` y
            ``seeds``; se genera si falta.
    """
    report = Report()
    if lattice is None:
        lattice = generate_lattice(ctx, depth, seeds)
    alphabet = [(i, n) for i in ctx.cartan.nodes() for n in ctx.window.degrees()]
    report.note(f"generators={len(lattice)} depth={depth} window={ctx.window.to_text()}")
    for label, valuation in zip(lattice.provenance, lattice.valuations):
        report.note(f"generator {label} val0={valuation}")

    # (1) libertad a escala de ventana
    forms = [lattice.triangular[w] for w in sorted(lattice.triangular)]
    integral = all(f.integral for f in forms)
    full = all(lattice.triangular[w].rank == lattice.blocks[w].dimension for w in lattice.triangular)
    if not integral:
        report.item(1, FAIL, "triangular form not A-integral")
    elif not all(f.unit_pivots for f in forms):
        report.item(1, FAIL, "non-unit pivots")
    elif not full:
        report.item(1, WINDOW_LIMITED, "rank below weight dimension")
    else:
        report.item(1, PASS, f"blocks={len(forms)}")

    # (2) residuos
    residues = mod_v_basis(lattice)
    ok = not residues.poles and not residues.zeros and not residues.duplicates and residues.independent
    report.item(2, PASS if ok else FAIL,
                f"size={residues.size} poles={len(residues.poles)} zeros={len(residues.zeros)} "
                f"duplicates={len(residues.duplicates)}")

    # (3) estabilidad, (4) cierre de B, (5) inversión en clases
    classes = {value for value in residues.residues if value is not None and any(value[1])}
    stable, closed, limited = True, True, False
    images = {}
    inverse_failures = 0
    for index, x in enumerate(lattice.generators):
        for i, n in alphabet:
            raised = kashiwara_E(ctx, i, n, x)
            lowered = kashiwara_F(ctx, i, n, x)
            for kind, image in (("E", raised), ("F", lowered)):
                located = lattice.coordinates_of(image) if image else None
                if image and located is None:
                    limited = True
                    continue
                if image:
                    weight, coords = located
                    if not lattice.contains(weight, coords):
                        stable = False
                    value = residue_vector(weight, coords)
                else:
                    value = None
                if value is not None and any(value[1]) and value not in classes:
                    closed = False
                if image and located is not None and value is None:
                    closed = False
                images[(index, kind, i, n)] = value
            if raised and not ctx.is_zero(raised):
                back = kashiwara_F(ctx, i, n, raised)
                if not ctx.is_zero(back - z_projection(ctx, i, n - 1, x)):
                    inverse_failures += 1
    report.item(3, PASS if stable else (WINDOW_LIMITED if limited else FAIL),
                "lattice stable under windowed operators" if stable else "image outside lattice")
    report.item(4, PASS if closed else FAIL, "images of classes in B or 0")

    matches, mismatches = 0, 0
    for index, value in enumerate(residues.residues):
        if value is None or not any(value[1]):
            continue
        for other, target in enumerate(residues.residues):
            if target is None or not any(target[1]):
                continue
            for i, n in alphabet:
                raised = images.get((index, "E", i, n)) == target
                lowered = images.get((other, "F", i, n)) == value
                if raised or lowered:
                    if raised and lowered:
                        matches += 1
                    else:
                        mismatches += 1
    report.item(5, PASS if not mismatches else FAIL, f"pairs={matches} mismatches={mismatches}")

    report.check("lattice-integrality", lattice.integral,
                 f"min_val0={min(lattice.valuations, default=0)}")
    report.check("kashiwara-inverse", inverse_failures == 0, f"failures={inverse_failures}")
    return report
