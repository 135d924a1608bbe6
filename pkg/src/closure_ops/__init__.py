"""Closure, semiprime and prime operations on ideal lattices of small commutative rings."""
