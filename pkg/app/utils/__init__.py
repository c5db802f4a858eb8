"""
Módulo utils: Contiene la configuración y la gramática de elementos.
"""
