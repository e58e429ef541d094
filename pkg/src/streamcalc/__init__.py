"""Exact stream calculus for polynomial drift systems.

Streams are denoted by polynomials over a system of drifts and read off by a
transition map determined by a stream product.  The package computes stream
prefixes, decides polynomial identities between streams, and derives
generating functions for linear systems.  All arithmetic is over the
rationals.
"""
