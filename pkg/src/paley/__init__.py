"""Paley graphs over GF(q): triple intersection numbers, curve point counts
and exhaustive verification scans."""

__version__ = "0.1.0"

from .ff import FieldSpec, field_of_order, make_field, quadratic_character, trace_to_prime  # noqa: E402

__all__ = ["FieldSpec", "field_of_order", "make_field", "quadratic_character", "trace_to_prime", "__version__"]
