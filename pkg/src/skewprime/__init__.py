"""Primeness of induced ideals and modules over skew polynomial rings,
skew Laurent rings and monoid crossed products, with associated primes of
induced modules."""

__version__ = "0.1.0"
