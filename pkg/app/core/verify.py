#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Suites de verificación.

Cada suite escribe líneas ``CHECK <nombre> <PASS|FAIL> <detalle>`` en un
Report; las muestras aleatorias salen de un generador de numpy con semilla
fija, así que dos ejecuciones producen el mismo informe.
"""

import logging
from itertools import combinations_with_replacement, product

import numpy as np
from sympy import Rational, oo

from app.core import barcomp, crystal
from app.core.algebra import E, SCHUR, Element, Letter, weight_of
from app.core.cartan import CartanData, Weight, Window
from app.core.errors import ConfigError, PaddingError
from app.core.linalg import rank
from app.core.loopalg import (
    divided_power_form, divided_power_word, normal_order_H, quadratic_residual,
    serre_residual, serre_words, straighten_rank1, theta_commutator_residual,
)
from app.core.pairing import PairingContext, Verdict
from app.core.run_monitor import RunMonitor
from app.core.scalars import (
    ONE, ZERO, RING, K, bar_scalar, in_A, qbinom, qfact, qint, v, val0, vpow,
)
from app.core.symfunc import (
    chi_coeff, pair_H, partitions_of, power_sum, theta_coeff, xi_coeff, SymElement,
)
from app.ui.report import Report
from app.utils.settings import Settings

logger = logging.getLogger(__name__)


class Verifier:
    """Ejecuta las suites sobre un contexto de apareamiento."""

    def __init__(self, ctx, monitor=None):
        """
        Inicializa el verificador.

        Args:
            ctx (PairingContext): Datos de Cartan y ventana.
            monitor (RunMonitor): Monitor de tiempos y memoria.
        """
        self.ctx = ctx
        self.cartan = ctx.cartan
        self.window = ctx.window
        self.monitor = monitor or RunMonitor()
        self.report = Report()
        self.rng = np.random.default_rng(Settings.RANDOM_SEED)

    # ------------------------------------------------------------------
    # Utilidades
    # ------------------------------------------------------------------

    def check(self, name, function):
        """Ejecuta ``function() -> (bool, detalle)`` midiendo tiempo y memoria."""
        with self.monitor.track(name):
            passed, detail = function()
        return self.report.check(name, passed, detail)

    def run(self, suite):
        """
        Ejecuta una suite y retorna su Report.

        Raises:
            ConfigError: Si la suite no existe.
        """
        if not Settings.is_suite(suite):
            raise ConfigError(f"suite desconocida: {suite}")
        self.report = Report()
        self.rng = np.random.default_rng(Settings.RANDOM_SEED)
        getattr(self, "_suite_" + suite.replace("-", "_"))()
        self.monitor.log_summary()
        return self.report

    def _letters(self, window=None):
        window = window or self.window
        return [Letter(E, i, d) for i in self.cartan.nodes() for d in window.degrees()]

    def _words(self, max_length, window=None):
        letters = self._letters(window)
        words = [()]
        for length in range(1, max_length + 1):
            words.extend(product(letters, repeat=length))
        return words

    def _random_scalar(self):
        top = Settings.SCALAR_MAX_DEGREE
        while True:
            num = [int(c) for c in self.rng.integers(-3, 4, size=top + 1)]
            den = [int(c) for c in self.rng.integers(-3, 4, size=top + 1)]
            if any(den):
                break
        shift = int(self.rng.integers(-top, top + 1))
        numerator = K(RING({(e,): c for e, c in enumerate(num) if c}))
        denominator = K(RING({(e,): c for e, c in enumerate(den) if c}))
        return numerator / denominator * vpow(shift)

    def _is_zero(self, x):
        return self.ctx.is_zero(x)

    def _z_samples(self, i, n, max_length=2):
        """Proyecciones en Z'_{i,n-1} de las palabras de la ventana."""
        samples = []
        for word in self._words(max_length):
            z = self.ctx.z_part(i, n - 1, Element.monomial(word))
            if z:
                samples.append(z)
        return samples

    # ------------------------------------------------------------------
    # scalars
    # ------------------------------------------------------------------

    def _suite_scalars(self):
        self.check("qint-3", lambda: (qint(3) == vpow(-2) + ONE + v ** 2, "[3] = v^-2 + 1 + v^2"))
        self.check("qfact-2", lambda: (qfact(2) == ONE / v + v, "[2]! = v^-1 + v"))
        self.check("qbinom-out-of-range", lambda: (qbinom(3, 5) == ZERO, "[3 choose 5] = 0"))

        samples = [self._random_scalar() for _ in range(Settings.SCALAR_SAMPLES)]

        def involution():
            bad = sum(1 for a in samples if bar_scalar(bar_scalar(a)) != a)
            return bad == 0, f"samples={len(samples)} failures={bad}"
        self.check("bar-involution", involution)

        def qint_addition():
            bad = [(m, n) for m in range(11) for n in range(11)
                   if qint(m + n) != vpow(-n) * qint(m) + vpow(m) * qint(n)]
            return not bad, f"pairs=121 failures={len(bad)}"
        self.check("qint-addition", qint_addition)

        def valuation():
            bad = 0
            for a, b in zip(samples[::2], samples[1::2]):
                if val0(a * b) != val0(a) + val0(b):
                    bad += 1
                if in_A(a) and in_A(b) and not (in_A(a + b) and in_A(a * b)):
                    bad += 1
            return bad == 0, f"pairs={len(samples) // 2} failures={bad}"
        self.check("val0-additive", valuation)

    # ------------------------------------------------------------------
    # symfunc
    # ------------------------------------------------------------------

    def _suite_symfunc(self):
        node = 1
        top = Settings.SYMFUNC_MAX_DEGREE

        def xi_chi():
            bad = 0
            for s in range(1, top + 1):
                total = SymElement(node)
                for r in range(s + 1):
                    total = total + xi_coeff(node, r) * chi_coeff(node, s - r)
                bad += bool(total)
            return bad == 0, f"degrees=1..{top}"
        self.check("xi-chi-inverse", xi_chi)

        def theta_factorization():
            bad = 0
            for s in range(top + 1):
                total = SymElement(node)
                for r in range(s + 1):
                    total = total + xi_coeff(node, r) * chi_coeff(node, s - r) * (vpow(-r) * vpow(s - r))
                bad += total != theta_coeff(node, s)
            return bad == 0, f"degrees=0..{top}"
        self.check("theta-factorization", theta_factorization)

        def gram_diagonal():
            for d in range(1, Settings.SYMFUNC_GRAM_DEGREE + 1):
                parts = partitions_of(d)
                for a in parts:
                    for b in parts:
                        value = pair_H(power_sum(node, a), power_sum(node, b))
                        if (a == b) != bool(value):
                            return False, f"degree={d} partitions={a},{b}"
            return True, f"degrees=1..{Settings.SYMFUNC_GRAM_DEGREE}"
        self.check("power-sum-gram-diagonal", gram_diagonal)

        self.check("theta-norm", lambda: (
            pair_H(theta_coeff(node, 1), theta_coeff(node, 1)) == vpow(-2) - vpow(2),
            "(theta_1, theta_1) = v^-2 - v^2"))

    # ------------------------------------------------------------------
    # relations
    # ------------------------------------------------------------------

    def _suite_relations(self):
        ctx, cartan = self.ctx, self.cartan
        dmin, dmax = self.window.dmin, self.window.dmax

        def quadratic():
            count, bad = 0, []
            for i in cartan.nodes():
                for j in cartan.nodes():
                    for l in range(dmin, dmax):
                        for m in range(dmin, dmax):
                            residual = quadratic_residual(cartan, i, j, l, m)
                            count += 1
                            if ctx.is_zero_windowed(residual) is not Verdict.PRESUMED_ZERO:
                                bad.append((i, j, l, m))
            return not bad, f"residuals={count} nonzero={len(bad)}"
        self.check("quadratic-presumed-zero", quadratic)

        def serre():
            count, bad = 0, 0
            for i in cartan.nodes():
                for j in cartan.nodes():
                    if i == j:
                        continue
                    r = 1 - cartan.a(i, j)
                    for degrees in ((dmin,) * r, tuple(range(dmin, dmin + r))):
                        if max(degrees) > dmax:
                            continue
                        residual = serre_residual(cartan, i, j, degrees, dmin)
                        count += 1
                        if ctx.is_zero_windowed(residual) is not Verdict.PRESUMED_ZERO:
                            bad += 1
            return bad == 0, f"residuals={count} nonzero={bad}"
        if cartan.rank > 1:
            self.check("serre-presumed-zero", serre)

            def serre_count():
                i, j = 1, 2
                r = 1 - cartan.a(i, j)
                words = serre_words(cartan, i, j, (0,) * r, 0)
                expected = int(np.prod(range(1, r + 1))) * (r + 1)
                return len(words) == expected, f"words={len(words)} expected={expected}"
            self.check("serre-word-count", serre_count)

        def theta_commutator():
            bad = 0
            for i in cartan.nodes():
                for j in cartan.nodes():
                    for l in (1, 2):
                        residual = theta_commutator_residual(cartan, i, l, j, dmin)
                        bad += bool(normal_order_H(residual, cartan))
            return bad == 0, "l=1,2"
        self.check("theta-commutator", theta_commutator)

        def normal_order():
            b = cartan.b(1, 1)
            x = Element.generator("H", 1, 1) * Element.E(1, 0)
            expected = Element.E(1, 0) * Element.generator("H", 1, 1) + Element.E(1, 1) * qint(b)
            return normal_order_H(x, cartan) == expected, "H(1,1)E(1,0)"
        self.check("normal-order-H", normal_order)

        def straighten():
            twist = vpow(cartan.b(1, 1))
            x = Element.E(1, 0) * Element.E(1, 2)
            expected = (Element.E(1, 2) * Element.E(1, 0) * twist
                        + Element.E(1, 1) * Element.E(1, 1) * (twist - ONE))
            return straighten_rank1(x, 1, cartan) == expected, "E(1,0)E(1,2)"
        self.check("straighten-gap", straighten)

        def straighten_samples():
            bad = 0
            for _ in range(Settings.STRAIGHTEN_SAMPLES):
                length = int(self.rng.integers(2, 4))
                degrees = [int(d) for d in self.rng.integers(dmin, dmax + 1, size=length)]
                x = Element.monomial([Letter(E, 1, d) for d in degrees])
                y = straighten_rank1(x, 1, cartan)
                if y.weights(cartan.rank) != x.weights(cartan.rank):
                    bad += 1
                elif ctx.is_zero_windowed(y - x) is not Verdict.PRESUMED_ZERO:
                    bad += 1
            return bad == 0, f"samples={Settings.STRAIGHTEN_SAMPLES} failures={bad}"
        self.check("straighten-samples", straighten_samples)

    # ------------------------------------------------------------------
    # pairing
    # ------------------------------------------------------------------

    def _suite_pairing(self):
        ctx, cartan = self.ctx, self.cartan
        c = ONE / (vpow(-2) - ONE)
        E10, E11 = Element.E(1, 0), Element.E(1, 1)
        if ctx.h_form == "cartan" and any(cartan.r(i) != 1 for i in cartan.nodes()):
            self.report.note("non-simply-laced nodes: cartan (H, H) form uses b_ii = 2 r_i "
                             "with [.] in v; the v_i reading is untested")

        self.check("pair-E-E", lambda: (ctx.pair(E10, E10) == c, "(E(1,0),E(1,0)) = 1/(v^-2-1)"))
        self.check("pair-H-H", lambda: (
            pair_H(power_sum(1, (1,)), power_sum(1, (1,))) == qint(2) / (ONE / v - v),
            "(p1,p1) = [2]/(v^-1-v)"))
        if cartan.b(1, 1) == 2:
            self.check("gram-values", lambda: (
                ctx.pair(E11 * E10, E11 * E10) == vpow(-4) * c ** 2
                and ctx.pair(E10 * E11, E11 * E10) == vpow(-2) * c ** 2,
                "(E1E0,E1E0) = v^-4 c^2, (E0E1,E1E0) = v^-2 c^2"))
            self.check("gram-rank", lambda: (
                rank(ctx.gram([E11 * E10, E10 * E11], [E11 * E10, E10 * E11])) == 1,
                "rank 1"))

        def symmetry():
            window = Window(max(self.window.dmin, -1), min(self.window.dmax, 2))
            blocks = {}
            for word in self._words(3, window):
                blocks.setdefault(weight_of(word, cartan.rank), []).append(word)
            count, bad = 0, 0
            for words in blocks.values():
                for k, x in enumerate(words):
                    for y in words[k + 1:]:
                        count += 1
                        bad += ctx.pair_words(x, y) != ctx.pair_words(y, x)
            return bad == 0, f"pairs={count} asymmetric={bad}"
        self.check("pairing-symmetric", symmetry)

        def coproduct():
            delta = ctx.coproduct(E10)
            expected = 2 - self.window.dmin if self.window.dmin <= 0 else 1
            theta = ctx.coproduct(Element.generator("theta", 1, 1))
            return (len(delta.terms) == expected and len(theta.terms) == 2,
                    f"terms={len(delta.terms)} expected={expected}")
        self.check("coproduct-truncated", coproduct)

        self.check("counit", lambda: (
            ctx.coproduct(Element.one()).terms == {((), ()): ONE}
            and not ctx.coproduct(Element()), "Delta'(1) = 1 (x) 1"))

        def admissibility():
            bad, count = 0, 0
            for _ in range(4 * Settings.ASSOCIATIVITY_SAMPLES):
                length = int(self.rng.integers(1, 4))
                y = tuple(Letter(E, int(self.rng.integers(1, cartan.rank + 1)),
                                 int(self.rng.integers(self.window.dmin, self.window.dmax + 1)))
                          for _ in range(length))
                letter = y[int(self.rng.integers(0, length))]
                i, n = letter.node, int(self.rng.integers(self.window.dmin, self.window.dmax + 1))
                rest = weight_of(y, cartan.rank) - Weight(cartan.alpha(i), n)
                candidates = ctx.window_words(rest) if rest.is_positive() else []
                if not candidates:
                    continue
                x = Element.monomial(candidates[int(self.rng.integers(0, len(candidates)))])
                y = Element.monomial(y)
                left = ctx.pair(x, ctx.fprime(i, n, y))
                right = (vpow(-2) - ONE) * ctx.pair(Element.E(i, n) * x, y)
                count += 1
                bad += left != right
            return bad == 0, f"samples={count} failures={bad}"
        self.check("admissibility", admissibility)
        self.report.note("admissibility holds as (x, F'y) = (v^-2 - 1)(E x, y); "
                         "the constant (1 - v_i^-2) gives the opposite sign")

        self.check("zero-test-examples", lambda: (
            ctx.is_zero_windowed(quadratic_residual(cartan, 1, 1, 0, 0)) is Verdict.PRESUMED_ZERO
            and ctx.is_zero_windowed(E10) is Verdict.NONZERO
            and ctx.is_zero_windowed(Element()) is Verdict.PRESUMED_ZERO,
            "residual, E(1,0), 0"))

        def fprime_examples():
            n = self.window.dmin + 1
            ok = not ctx.fprime(1, n, Element.one())
            ok = ok and ctx.fprime(1, n, Element.E(1, n)) == Element.one()
            if cartan.b(1, 1) == 2:
                ok = ok and ctx.fprime(1, 1, E11 * E10) == E10 * vpow(-4)
            return ok, f"n={n}"
        self.check("fprime-examples", fprime_examples)

        def decompose_examples():
            n = self.window.dmin + 1
            x = Element.E(1, n)
            w1, z1 = ctx.decompose_Z(1, n - 1, x)
            w2, z2 = ctx.decompose_Z(1, n, x)
            w3, z3 = ctx.decompose_Z(1, n, Element.one())
            return (not w1 and z1 == x and w2 == x and not z2 and not w3 and z3 == Element.one(),
                    f"n={n}")
        self.check("decompose-Z-examples", decompose_examples)

        def z_subalgebra():
            bad, count = 0, 0
            for i in cartan.nodes():
                for k in range(self.window.dmin, self.window.dmax):
                    samples = [ctx.z_part(i, k, Element.monomial((letter,)))
                               for letter in self._letters()]
                    samples = [z for z in samples if z]
                    for z1 in samples[:3]:
                        for z2 in samples[:3]:
                            w, _ = ctx.decompose_Z(i, k, z1 * z2)
                            count += 1
                            bad += not self._is_zero(w)
            return bad == 0, f"products={count} failures={bad}"
        self.check("z-subalgebra", z_subalgebra)

    # ------------------------------------------------------------------
    # fprime-lemmas
    # ------------------------------------------------------------------

    def _apply(self, operators, x):
        """Compone F' de derecha a izquierda: operators = [(coef, [(i, n), ...])]."""
        total = Element()
        for coeff, word in operators:
            y = x
            for i, n in reversed(word):
                y = self.ctx.fprime(i, n, y)
                if not y:
                    break
            total = total + y * coeff
        return total

    def _suite_fprime_lemmas(self):
        ctx, cartan = self.ctx, self.cartan
        dmin, dmax = self.window.dmin, self.window.dmax
        words = [Element.monomial(w) for w in self._words(2)]

        def quadratic():
            bad, count = 0, 0
            for i in cartan.nodes():
                for j in cartan.nodes():
                    twist = vpow(cartan.b(i, j))
                    for l in range(dmin, dmax):
                        for m in range(dmin, dmax):
                            operators = [
                                (ONE, [(i, l + 1), (j, m)]),
                                (-twist, [(j, m), (i, l + 1)]),
                                (-twist, [(i, l), (j, m + 1)]),
                                (ONE, [(j, m + 1), (i, l)]),
                            ]
                            for x in words:
                                count += 1
                                bad += bool(self._apply(operators, x))
            return bad == 0, f"evaluations={count} failures={bad}"
        self.check("fprime-quadratic", quadratic)

        if cartan.rank > 1:
            def serre():
                bad, count = 0, 0
                for i in cartan.nodes():
                    for j in cartan.nodes():
                        if i == j:
                            continue
                        r = 1 - cartan.a(i, j)
                        degrees = tuple(range(dmin, dmin + r))
                        if max(degrees) > dmax:
                            continue
                        operators = [(coeff, [(l.node, l.index) for l in word])
                                     for coeff, word in serre_words(cartan, i, j, degrees, dmin)]
                        weight = Weight(tuple(r * a + b for a, b in zip(cartan.alpha(i), cartan.alpha(j))),
                                        sum(degrees) + dmin)
                        for word in ctx.window_words(weight):
                            count += 1
                            bad += bool(self._apply(operators, Element.monomial(word)))
                return bad == 0, f"evaluations={count} failures={bad}"
            self.check("fprime-serre", serre)

        def commutation():
            bad, count = 0, 0
            cases = [(i, m, j, n) for i in cartan.nodes() for j in cartan.nodes()
                     for m in self.window.degrees() for n in self.window.degrees()]
            singles = [Element.monomial(w) for w in self._words(1)]
            pairs = [Element.monomial(w) for w in self._words(2) if len(w) == 2]
            for i, m, j, n in cases:
                b = cartan.b(i, j)
                tests = list(singles)
                if pairs:
                    picks = self.rng.integers(0, len(pairs), size=min(4, len(pairs)))
                    tests.extend(pairs[int(k)] for k in picks)
                for x in tests:
                    lowest = min(x.E_degrees(), default=m)
                    residual = ctx.fprime(i, m, Element.E(j, n) * x)
                    residual = residual - Element.E(j, n) * ctx.fprime(i, m, x) * vpow(-b)
                    if i == j and n == m:
                        residual = residual - x
                    for t in range(1, max(m - lowest, 0) + 1):
                        coeff = vpow(-t * b) * (vpow(-b) - vpow(b))
                        residual = residual - Element.E(j, n - t) * ctx.fprime(i, m - t, x) * coeff
                    count += 1
                    bad += not self._is_zero(residual)
            return bad == 0, f"evaluations={count} failures={bad}"
        self.check("fprime-commutation", commutation)

    # ------------------------------------------------------------------
    # qboson
    # ------------------------------------------------------------------

    def _suite_qboson(self):
        ctx, cartan = self.ctx, self.cartan
        if any(cartan.r(i) != 1 for i in cartan.nodes()):
            self.report.note("non-simply-laced nodes: v and v_i readings differ and are untested")
        self.report.note("q-Boson relation read with F' on both sides")

        def qboson():
            bad, count = 0, 0
            for i in cartan.nodes():
                for n in self.window.degrees():
                    twist = vpow(-2 * cartan.r(i))
                    for z in self._z_samples(i, n):
                        lhs = ctx.fprime(i, n, Element.E(i, n) * z)
                        lhs = lhs - Element.E(i, n) * ctx.fprime(i, n, z) * twist
                        count += 1
                        bad += not self._is_zero(lhs - z)
            return bad == 0, f"samples={count} failures={bad}"
        self.check("qboson", qboson)

        def divided_powers():
            bad, count = 0, 0
            for i in cartan.nodes():
                n = self.window.dmin + 1 if self.window.dmax > self.window.dmin else self.window.dmin
                for z in self._z_samples(i, n, max_length=1):
                    for s in range(1, Settings.DIVIDED_POWER_MAX + 1):
                        lhs = ctx.fprime(i, n, crystal.divided_power_E(cartan, i, n, s, z))
                        rhs = (crystal.divided_power_E(cartan, i, n, s, ctx.fprime(i, n, z)) * vpow(-2 * s)
                               + crystal.divided_power_E(cartan, i, n, s - 1, z) * vpow(-(s - 1)))
                        count += 1
                        bad += not self._is_zero(lhs - rhs)
            return bad == 0, f"samples={count} failures={bad}"
        self.check("divided-power-commutation", divided_powers)

    # ------------------------------------------------------------------
    # projectors
    # ------------------------------------------------------------------

    def _suite_projectors(self):
        ctx, cartan = self.ctx, self.cartan
        n = self.window.dmin + 1 if self.window.dmax > self.window.dmin else self.window.dmin
        E1 = Element.E(1, n)

        self.check("projector-examples", lambda: (
            crystal.pi_projector(ctx, 1, n, 0, Element.one()) == Element.one()
            and not crystal.pi_projector(ctx, 1, n, 0, E1)
            and crystal.pi_projector(ctx, 1, n, 1, E1) == Element.one(),
            f"n={n}"))

        def annihilated():
            bad, count = 0, 0
            for i in cartan.nodes():
                for z in self._z_samples(i, n):
                    for t in range(Settings.PROJECTOR_MAX_T + 1):
                        count += 1
                        image = crystal.pi_projector(ctx, i, n, t, z, checked=True)
                        bad += not self._is_zero(ctx.fprime(i, n, image))
            return bad == 0, f"samples={count} failures={bad}"
        self.check("fprime-kills-projector", annihilated)

        def resolution():
            bad, count = 0, 0
            for i in cartan.nodes():
                for z in self._z_samples(i, n):
                    decomposition = crystal.string_decompose(ctx, i, n, z, checked=True)
                    count += 1
                    bad += not self._is_zero(decomposition.reassemble(cartan) - z)
            return bad == 0, f"samples={count} failures={bad}"
        self.check("projector-resolution", resolution)

        def injective():
            bad = 0
            for i in cartan.nodes():
                samples = self._z_samples(i, n)
                blocks = {}
                for z in samples:
                    blocks.setdefault(z.weight(cartan.rank), []).append(z)
                for zs in blocks.values():
                    before = rank(ctx.gram(zs, zs))
                    lifted = [Element.E(i, n) * z for z in zs]
                    bad += rank(ctx.gram(lifted, lifted)) != before
            return bad == 0, f"failures={bad}"
        self.check("E-multiplication-injective", injective)

        def stability():
            bad, count = 0, 0
            for i in cartan.nodes():
                for z in self._z_samples(i, n, max_length=1):
                    w, _ = ctx.decompose_Z(i, n - 1, Element.E(i, n) * z)
                    count += 1
                    bad += not self._is_zero(w)
            return bad == 0, f"samples={count} failures={bad}"
        self.check("z-stable-under-E", stability)

    # ------------------------------------------------------------------
    # kashiwara
    # ------------------------------------------------------------------

    def _suite_kashiwara(self):
        ctx, cartan = self.ctx, self.cartan
        n = self.window.dmin + 1 if self.window.dmax > self.window.dmin else self.window.dmin
        E1 = Element.E(1, n)

        self.check("kashiwara-examples", lambda: (
            crystal.kashiwara_E(ctx, 1, n, Element.one()) == E1
            and crystal.kashiwara_F(ctx, 1, n, E1) == Element.one()
            and self._is_zero(crystal.kashiwara_E(ctx, 1, n, E1)
                              - crystal.divided_power_E(cartan, 1, n, 2)),
            f"n={n}"))

        def string_examples():
            square = crystal.string_decompose(ctx, 1, n, E1 * E1).components
            return (crystal.string_decompose(ctx, 1, n, Element.one()).components == {0: Element.one()}
                    and crystal.string_decompose(ctx, 1, n, E1).components == {1: Element.one()}
                    and list(square) == [2] and square[2] == Element.one(qint(2, cartan.r(1))),
                    "1, E, E^2")
        self.check("string-examples", string_examples)

        def inverse():
            lattice = crystal.generate_lattice(ctx, Settings.KASHIWARA_DEPTH)
            alphabet = [(i, m) for i in cartan.nodes() for m in self.window.degrees()]
            bad, count = 0, 0
            for x in lattice.generators:
                for i, m in alphabet:
                    raised = crystal.kashiwara_E(ctx, i, m, x)
                    if not raised or self._is_zero(raised):
                        continue
                    back = crystal.kashiwara_F(ctx, i, m, raised)
                    count += 1
                    bad += not self._is_zero(back - crystal.z_projection(ctx, i, m - 1, x))
            return bad == 0, f"generators={len(lattice)} pairs={count} failures={bad}"
        self.check("kashiwara-inverse", inverse)

        def small_lattices():
            narrow = ctx.widened(Window(0, 0))
            trivial = crystal.generate_lattice(ctx, 0)
            one = crystal.generate_lattice(narrow, 1)
            return (len(trivial) == 1 and len(one) == cartan.rank + 1
                    and any(g == Element.E(1, 0) for g in one.generators),
                    f"L=0 size={len(trivial)} L=1 size={len(one)}")
        self.check("lattice-examples", small_lattices)

        def residues():
            lattice = crystal.LatticeBasis.from_elements(
                ctx, [Element.one(), Element.E(1, 0) * v])
            report = crystal.mod_v_basis(lattice)
            return report.zeros == [1] and report.size == 1, f"size={report.size}"
        self.check("mod-v-examples", residues)

    # ------------------------------------------------------------------
    # bar
    # ------------------------------------------------------------------

    def _suite_bar(self):
        ctx, cartan = self.ctx, self.cartan
        padded = ctx.widened(Settings.padded(self.window))
        degrees = [l for l in self.window.degrees() if l >= 0] or list(self.window.degrees())

        self.check("bar-scalar", lambda: (
            barcomp.bar_element(ctx, Element.one(v)) == Element.one(ONE / v), "phi(v) = v^-1"))
        self.check("bar-fixes-xi", lambda: (
            barcomp.bar_element(ctx, Element.generator("xi", 1, 2)) == Element.generator("xi", 1, 2),
            "phi(xi) = xi"))

        def first_term():
            l = self.window.dmax
            image = barcomp.bar_generator(ctx, 1, l)
            word = (Letter(E, 1, l - 1), Letter("xi", 1, 1))
            return image.coefficient(word) == -(ONE / v - v), f"l={l}"
        if self.window.dmax > self.window.dmin:
            self.check("bar-generator-first-term", first_term)

        def involutive():
            bad = 0
            for i in cartan.nodes():
                for l in degrees:
                    twice = barcomp.bar_element(ctx, barcomp.bar_generator(ctx, i, l))
                    bad += barcomp.canonical(twice) != Element.E(i, l)
            return bad == 0, f"degrees={degrees[0]}..{degrees[-1]}"
        self.check("bar-involutive", involutive)

        def currents():
            bad = 0
            for i in cartan.nodes():
                for l in self.window.degrees():
                    bad += bool(barcomp.currents_residual(ctx, i, l))
            return bad == 0, "phi(E(z)) theta(z) = E(z)"
        self.check("bar-currents", currents)

        def e1_invariant():
            bad = 0
            for i in cartan.nodes():
                for l in self.window.degrees():
                    current = barcomp.e1_current(ctx, i, l)
                    bad += (barcomp.canonical(barcomp.bar_element(ctx, current))
                            != barcomp.canonical(current))
            return bad == 0, "E(z) xi(vz)"
        self.check("bar-e1-current", e1_invariant)

        def relations():
            bad, count = 0, 0
            dmin, dmax = self.window.dmin, self.window.dmax
            # residuos con letras a distancia >= margen por encima de dmin
            low = min(dmin + Settings.PADDING_MARGIN, dmax - 1)
            for i in cartan.nodes():
                for j in cartan.nodes():
                    for l in range(low, dmax):
                        for m in range(low, dmax):
                            residual = quadratic_residual(cartan, i, j, l, m)
                            image = barcomp.bar_element(ctx, residual)
                            level = barcomp.relation_level(dmin, max(l, m) + 1)
                            count += 1
                            value = barcomp.jet(ctx, image, level).value
                            bad += not self._is_zero(value)
            return bad == 0, f"residuals={count} degrees={low}..{dmax - 1} failures={bad}"
        self.check("bar-preserves-relations", relations)

        def serre():
            a2 = CartanData.type_a(2)
            local = PairingContext(a2, Window(-1, 1), ctx.h_form)
            residual = serre_residual(a2, 1, 2, (0, 0), 0)
            image = barcomp.bar_element(local, residual)
            # los términos con alguna cola xi tienen un prefijo en E de pendiente <= -1/3
            level = Rational(-1, 3)
            value = barcomp.jet(local, image, level).value
            return local.is_zero(value), f"A2 i=1 j=2 degrees=(0,0) lprime=0 level={level}"
        self.check("bar-preserves-serre", serre)

        def filtration():
            bad, count = 0, 0
            level = self.window.dmin
            weight = Weight(tuple(2 if k == 0 else 0 for k in range(cartan.rank)),
                            2 * self.window.dmin + 1)
            for word in barcomp.w_filtration_span(ctx, weight, level)[:Settings.JET_SAMPLES // 10]:
                image = barcomp.bar_element(padded, Element.monomial(word))
                count += 1
                bad += not self._is_zero(barcomp.jet(ctx, image, level).value)
            return bad == 0, f"members={count} failures={bad}"
        self.check("bar-filtration", filtration)

    # ------------------------------------------------------------------
    # jets
    # ------------------------------------------------------------------

    def _random_element(self, weight):
        words = self.ctx.window_words(weight)
        x = Element()
        for k in self.rng.integers(0, len(words), size=min(3, len(words))):
            x = x + Element.monomial(words[int(k)], int(self.rng.integers(1, 4)))
        return x

    def _suite_jets(self):
        ctx, cartan = self.ctx, self.cartan
        self.check("slope", lambda: (
            barcomp.slope(Weight((2,) + (0,) * (cartan.rank - 1), 3)) == Rational(3, 2)
            and barcomp.slope(Weight.zero(cartan.rank)) == oo, "3/2, oo"))

        two = tuple(2 if k == 0 else 0 for k in range(cartan.rank))
        dmin, dmax = self.window.dmin, self.window.dmax
        weights = [Weight(two, d) for d in range(2 * dmin, 2 * dmax + 1)]
        weights = [w for w in weights if ctx.window_words(w)]

        def monotone():
            bad = 0
            for weight in weights:
                previous = set()
                for m in range(dmin - 1, dmax + 1):
                    current = set(barcomp.w_filtration_span(ctx, weight, m))
                    bad += not previous <= current
                    previous = current
            return bad == 0, f"weights={len(weights)}"
        self.check("filtration-monotone", monotone)

        def idempotent():
            bad, count = 0, 0
            for weight in weights:
                for m in (dmin, (dmin + dmax) // 2):
                    x = self._random_element(weight)
                    first = barcomp.jet(ctx, x, m)
                    second = barcomp.jet(ctx, first.value, m)
                    rest = barcomp.r_m(ctx, x, m)
                    count += 1
                    bad += second.value != first.value or rest + first.value != x
            return bad == 0, f"samples={count} failures={bad}"
        self.check("jet-idempotent", idempotent)

        def padding():
            bad, count = 0, 0
            for _ in range(Settings.JET_SAMPLES):
                da, db = (int(d) for d in self.rng.integers(dmin, dmax + 1, size=2))
                a = Element.E(1, da) * int(self.rng.integers(1, 4))
                b = Element.E(1, db) * int(self.rng.integers(1, 4))
                n = int(self.rng.integers(dmin, dmax + 1))
                ja = barcomp.jet(ctx, a, n)
                level = barcomp.padding_level(ja.weight, n)
                products = [barcomp.jet_multiply(ctx, ja, barcomp.jet(ctx, b, pad), n)
                            for pad in (level, level - 1)]
                exact = barcomp.jet(ctx, a * b, n).value
                count += 1
                bad += not self._is_zero(products[0].value - products[1].value)
                bad += not self._is_zero(products[0].value - exact)
                bad += products[0].weight != Weight(two, da + db)
            return bad == 0, f"triples={count} failures={bad}"
        self.check("jet-padding-stable", padding)

        def padding_error():
            a = barcomp.jet(ctx, Element.E(1, dmin), dmax)
            b = barcomp.jet(ctx, Element.E(1, dmin), dmax)
            try:
                barcomp.jet_multiply(ctx, a, b, dmin - 1)
            except PaddingError:
                return True, "raised"
            return False, "not raised"
        self.check("jet-padding-error", padding_error)

        def unit():
            x = Element.E(1, dmin) * Element.E(1, dmax)
            n = dmin
            unit = barcomp.jet_multiply(ctx, barcomp.jet(ctx, Element.one(), n),
                                        barcomp.jet(ctx, x, n), n)
            return self._is_zero(unit.value - barcomp.jet(ctx, x, n).value), f"level={n}"
        self.check("jet-unit", unit)

        def associative():
            bad = 0
            n = (dmin + dmax) // 2
            for _ in range(Settings.ASSOCIATIVITY_SAMPLES):
                ds = [int(d) for d in self.rng.integers(dmin, dmax + 1, size=3)]
                xs = [Element.E(1, d) for d in ds]
                wa, wb = (x.weight(cartan.rank) for x in xs[:2])
                inner = barcomp.padding_level(wa, n)
                a = barcomp.jet(ctx, xs[0], n)
                b = barcomp.jet(ctx, xs[1], inner)
                c = barcomp.jet(ctx, xs[2], min(barcomp.padding_level(wa + wb, n),
                                                barcomp.padding_level(wb, inner)))
                left = barcomp.jet_multiply(ctx, barcomp.jet_multiply(ctx, a, b, n), c, n)
                right = barcomp.jet_multiply(ctx, a, barcomp.jet_multiply(ctx, b, c, inner), n)
                exact = barcomp.jet(ctx, xs[0] * xs[1] * xs[2], n).value
                bad += not self._is_zero(left.value - right.value)
                bad += not self._is_zero(left.value - exact)
            return bad == 0, f"samples={Settings.ASSOCIATIVITY_SAMPLES} level={n} failures={bad}"
        self.check("jet-associative", associative)

    # ------------------------------------------------------------------
    # pbw
    # ------------------------------------------------------------------

    def _suite_pbw(self):
        ctx, cartan = self.ctx, self.cartan
        low, high = Settings.PBW_DEGREES
        power = cartan.r(1)
        seeds = [p for size in range(Settings.PBW_MAX_SEED + 1) for p in partitions_of(size)]
        multisets = [tuple(sorted(c, reverse=True))
                     for size in range(Settings.PBW_MAX_LETTERS + 1)
                     for c in combinations_with_replacement(range(low, high + 1), size)]

        def runs(degrees):
            out = []
            for d in degrees:
                if out and out[-1][0] == d:
                    out[-1][1] += 1
                else:
                    out.append([d, 1])
            return [tuple(r) for r in out]

        elements = []
        for degrees in multisets:
            base = divided_power_word(1, runs(degrees), power)
            for partition in seeds:
                elements.append(base * Element.generator(SCHUR, 1, partition))

        def gram_rank():
            blocks = {}
            for x in elements:
                blocks.setdefault(normal_order_H(x, cartan).weight(cartan.rank), []).append(x)
            total = sum(rank(ctx.gram(xs, xs)) for xs in blocks.values())
            return total == len(elements), f"elements={len(elements)} rank={total}"
        self.check("pbw-gram-rank", gram_rank)

        def oracle():
            letters = [Letter(E, 1, d) for d in range(low, high + 1)]
            found = set()
            for size in range(Settings.PBW_MAX_LETTERS + 1):
                for word in product(letters, repeat=size):
                    straight = straighten_rank1(Element.monomial(word), 1, cartan)
                    found.update(straight.terms)
            count = len(found) * len(seeds)
            return count == len(elements), f"oracle={count} expected={len(elements)}"
        self.check("pbw-count-oracle", oracle)

        def coordinates():
            bad = 0
            for degrees in multisets:
                form = divided_power_form(divided_power_word(1, runs(degrees), power), 1, cartan)
                bad += form != {(tuple(runs(degrees)), ()): ONE}
            return bad == 0, f"monomials={len(multisets)}"
        self.check("divided-power-coordinates", coordinates)

    # ------------------------------------------------------------------
    # crystal
    # ------------------------------------------------------------------

    def _suite_crystal(self):
        with self.monitor.track("crystal-report"):
            self.report.extend(crystal.crystal_report(self.ctx, Settings.KASHIWARA_DEPTH))


def verify(cartan, window, suite, h_form=None, monitor=None):
    """Ejecuta una suite con un contexto nuevo y retorna su Report."""
    ctx = PairingContext(cartan, window, h_form)
    return Verifier(ctx, monitor).run(suite)
