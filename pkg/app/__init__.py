"""
Paquete principal de la aplicación qloop.
"""
