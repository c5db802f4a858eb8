"""
Módulo core: Contiene el álgebra, el apareamiento, los cristales y las suites de verificación.
"""
