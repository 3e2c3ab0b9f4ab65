"""Exact conjugacy-class and character censuses of GL_n(q) and GU_n(q),
checked against brute-force matrix groups."""

__version__ = "0.1.0"
