#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
qloop
-----
Cálculo simbólico exacto en la mitad positiva del álgebra de lazos cuántica:
apareamiento de Hopf, operadores F', operadores de Kashiwara, retículos
cristalinos, jets de la completación e involución barra truncada.
"""

import sys

from app.cli import run_command

if __name__ == "__main__":
    # Ejecutar el comando y propagar el código de salida
    sys.exit(run_command(sys.argv[1:]))
