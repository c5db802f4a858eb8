#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Módulo principal de la línea de comandos.
"""

import argparse
import logging
import sys

from sympy import Rational

from app.core import barcomp, crystal
from app.core.algebra import E
from app.core.cartan import Window, load_cartan
from app.core.errors import QLoopError, WindowError
from app.core.loopalg import normal_order_H, straighten_rank1
from app.core.pairing import PairingContext
from app.core.run_monitor import RunMonitor
from app.core.scalars import format_scalar
from app.core.verify import Verifier
from app.utils.parser import parse_element, serialize, serialize_tensor
from app.utils.settings import Settings

logger = logging.getLogger(__name__)

# Comandos cuyo resultado depende de la ventana
WINDOWED = {"coprod", "kashiwara", "bar", "bar-gen", "jet", "lattice", "verify",
            "decompose", "string"}


class UsageError(QLoopError):
    """Argumentos de línea de comandos inválidos."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    """Construye el analizador de argumentos con todos los subcomandos."""
    parser = _Parser(prog="qloop", description="Cálculo exacto en U+_v(Lg).")
    parser.add_argument("--cartan", required=True, metavar="FILE",
                        help="archivo con los datos de Cartan")
    parser.add_argument("--dmin", type=int, help="grado mínimo de la ventana")
    parser.add_argument("--dmax", type=int, help="grado máximo de la ventana")
    parser.add_argument("--h-form", choices=Settings.H_FORMS, default=Settings.DEFAULT_H_FORM,
                        help="lectura del apareamiento (H, H)")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    commands.add_parser("straighten").add_argument("x")
    commands.add_parser("normal-order").add_argument("x")
    commands.add_parser("coprod").add_argument("x")
    pair = commands.add_parser("pair")
    pair.add_argument("x")
    pair.add_argument("y")
    fprime = commands.add_parser("fprime")
    fprime.add_argument("i", type=int)
    fprime.add_argument("n", type=int)
    fprime.add_argument("x")
    kashiwara = commands.add_parser("kashiwara")
    kashiwara.add_argument("direction", choices=("e", "f"))
    kashiwara.add_argument("i", type=int)
    kashiwara.add_argument("n", type=int)
    kashiwara.add_argument("x")
    commands.add_parser("bar").add_argument("x")
    bar_gen = commands.add_parser("bar-gen")
    bar_gen.add_argument("i", type=int)
    bar_gen.add_argument("l", type=int)
    jet = commands.add_parser("jet")
    jet.add_argument("m")
    jet.add_argument("x")
    lattice = commands.add_parser("lattice")
    lattice.add_argument("--depth", type=int, required=True)
    lattice.add_argument("--seed", action="append", default=[])
    commands.add_parser("verify").add_argument("suite")
    decompose = commands.add_parser("decompose")
    decompose.add_argument("i", type=int)
    decompose.add_argument("k", type=int)
    decompose.add_argument("x")
    string = commands.add_parser("string")
    string.add_argument("i", type=int)
    string.add_argument("n", type=int)
    string.add_argument("x")
    return parser


def configure_logging(verbosity):
    """WARNING por defecto, INFO con -v y DEBUG con -vv, siempre a stderr."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(name)s:%(levelname)s:%(message)s", force=True)


def _level(text):
    try:
        return Rational(text)
    except (TypeError, ValueError):
        raise UsageError(f"nivel inválido: {text}") from None


class App:
    """Sesión de línea de comandos: datos de Cartan, ventana y comando."""

    def __init__(self, args):
        """
        Inicializa la sesión; los datos de Cartan se cargan antes de cualquier comando.

        Args:
            args (argparse.Namespace): Argumentos ya analizados.

        Raises:
            UsageError: Si falta la ventana en un comando que la requiere.
        """
        self.args = args
        self.cartan = load_cartan(args.cartan)
        if (args.dmin is None) != (args.dmax is None):
            raise UsageError("--dmin y --dmax deben darse juntos")
        if args.command in WINDOWED and args.dmin is None:
            raise UsageError(f"el comando {args.command} requiere --dmin y --dmax")
        self.window = Window(args.dmin, args.dmax) if args.dmin is not None else None
        self.monitor = RunMonitor()

    def parse(self, text):
        return parse_element(text, self.cartan)

    def context(self, *elements):
        """Contexto de apareamiento; sin ventana explícita cubre los grados dados."""
        window = self.window
        if window is None:
            degrees = [d for x in elements for d in x.E_degrees()] or [0]
            window = Window(min(degrees), max(degrees))
        return PairingContext(self.cartan, window, self.args.h_form)

    def run(self, out):
        """
        Ejecuta el comando.

        Returns:
            int: Código de salida (0, o 1 si una verificación falla).
        """
        handler = getattr(self, "cmd_" + self.args.command.replace("-", "_"))
        return handler(out) or 0

    # ------------------------------------------------------------------
    # Comandos
    # ------------------------------------------------------------------

    def cmd_normal_order(self, out):
        out.write(serialize(normal_order_H(self.parse(self.args.x), self.cartan)) + "\n")

    def cmd_straighten(self, out):
        x = normal_order_H(self.parse(self.args.x), self.cartan)
        nodes = {l.node for l in x.letters() if l.kind == E}
        if len(nodes) > 1:
            raise UsageError("straighten requiere letras E de un solo nodo")
        if nodes:
            x = straighten_rank1(x, nodes.pop(), self.cartan)
        out.write(serialize(x) + "\n")

    def cmd_coprod(self, out):
        x = self.parse(self.args.x)
        out.write(serialize_tensor(self.context(x).coproduct(x)) + "\n")

    def cmd_pair(self, out):
        x, y = self.parse(self.args.x), self.parse(self.args.y)
        out.write(format_scalar(self.context(x, y).pair(x, y)) + "\n")

    def cmd_fprime(self, out):
        x = self.parse(self.args.x)
        out.write(serialize(self.context(x).fprime(self.args.i, self.args.n, x)) + "\n")

    def cmd_kashiwara(self, out):
        x = self.parse(self.args.x)
        operator = crystal.kashiwara_E if self.args.direction == "e" else crystal.kashiwara_F
        out.write(serialize(operator(self.context(x), self.args.i, self.args.n, x)) + "\n")

    def cmd_bar(self, out):
        x = self.parse(self.args.x)
        out.write(serialize(barcomp.canonical(barcomp.bar_element(self.context(x), x))) + "\n")

    def cmd_bar_gen(self, out):
        image = barcomp.bar_generator(self.context(), self.args.i, self.args.l)
        out.write(serialize(image) + "\n")

    def cmd_jet(self, out):
        x = self.parse(self.args.x)
        out.write(barcomp.jet(self.context(x), x, _level(self.args.m)).to_text())

    def cmd_decompose(self, out):
        w, z = self.context().decompose_Z(self.args.i, self.args.k, self.parse(self.args.x))
        out.write(f"w = {serialize(w)}\nz = {serialize(z)}\n")

    def cmd_string(self, out):
        x = self.parse(self.args.x)
        decomposition = crystal.string_decompose(self.context(), self.args.i, self.args.n, x)
        for N, y in sorted(decomposition.components.items()):
            out.write(f"{N}: {serialize(y)}\n")

    def cmd_lattice(self, out):
        ctx = self.context()
        seeds = [(text, self.parse(text)) for text in self.args.seed] or None
        if self.args.depth < 0:
            raise UsageError("--depth debe ser >= 0")
        lattice = crystal.generate_lattice(ctx, self.args.depth, seeds)
        for label, valuation, x in zip(lattice.provenance, lattice.valuations, lattice.generators):
            out.write(f"{label} val0={valuation} {serialize(x)}\n")
        out.write(crystal.crystal_report(ctx, self.args.depth, seeds, lattice).render())

    def cmd_verify(self, out):
        if not Settings.is_suite(self.args.suite):
            raise UsageError(f"suite desconocida: {self.args.suite}")
        report = Verifier(self.context(), self.monitor).run(self.args.suite)
        out.write(report.render())
        return 1 if report.failed else 0


def run_command(argv, out=None, err=None):
    """
    Analiza ``argv``, ejecuta el comando y retorna el código de salida.

    Args:
        argv (list): Argumentos sin el nombre del programa.
        out: Flujo de salida (por defecto stdout).
        err: Flujo de errores (por defecto stderr).

    Returns:
        int: 0 si todo fue bien, 1 si una verificación falló, 2 ante errores
        de uso, de análisis, de configuración o de cálculo.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.verbose)
        return App(args).run(out)
    except WindowError as exc:
        err.write(f"qloop: ventana insuficiente: {exc}\n")
        return 2
    except QLoopError as exc:
        err.write(f"qloop: {exc}\n")
        return 2


def main():
    sys.exit(run_command(sys.argv[1:]))
