"""Exact-arithmetic computations around the even cohomology lattice of an
abelian surface: integral Clifford algebra and spin groups, triality,
cohomological Fourier-Mukai actions, stabilizer characters, Cayley-type
invariant classes and Weil-type complex multiplication.

All arithmetic is exact (arbitrary-precision integers and rationals);
the package has no runtime dependencies outside the standard library.
"""

__version__ = "0.1.0"
