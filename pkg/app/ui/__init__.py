"""
Módulo UI: Contiene el informe textual de verificación.
"""
