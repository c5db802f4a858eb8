#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Informe textual de verificación
-------------------------------
Líneas ``CHECK``, ``ITEM`` y ``NOTE`` en el orden en que se registran, sin
marcas de tiempo, para que dos ejecuciones den salidas idénticas.
"""

PASS = "PASS"
FAIL = "FAIL"
WINDOW_LIMITED = "WINDOW-LIMITED"


class Report:
    """Acumula las líneas de un informe y recuerda si hubo fallos."""

    def __init__(self):
        self.lines = []
        self.failed = False

    def check(self, name, passed, detail=""):
        """
        Registra una comprobación.

        Args:
            name (str): Nombre de la comprobación (sin espacios).
            passed (bool): Resultado.
            detail (str): Texto adicional.

        Returns:
            bool: El mismo resultado, para encadenar.
        """
        status = PASS if passed else FAIL
        self.lines.append(f"CHECK {name} {status} {detail}".rstrip())
        if not passed:
            self.failed = True
        return passed

    def item(self, number, status, detail="", conjectural=True):
        """Registra un apartado; un FAIL sólo cuenta si no es conjetural."""
        self.lines.append(f"ITEM {number} {status} {detail}".rstrip())
        if status == FAIL and not conjectural:
            self.failed = True

    def note(self, text):
        self.lines.append(f"NOTE {text}")

    def extend(self, other):
        """Añade las líneas de otro informe."""
        self.lines.extend(other.lines)
        self.failed = self.failed or other.failed

    def render(self):
        return "".join(line + "\n" for line in self.lines)

    def __len__(self):
        return len(self.lines)
