"""
Richardson Seeds Library

Exact constructions of Ingermanson's and Leclerc's cluster seeds for open
Richardson varieties in type A, and the checks comparing them.
"""

__version__ = "1.0.0"
