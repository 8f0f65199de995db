"""Drinfeld modules over A = F_q[T] with exact and precision-tracked arithmetic."""

__version__ = "0.1.0"
