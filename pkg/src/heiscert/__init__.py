"""Exact-arithmetic certificates for a unipotent matrix group acting on
convex projective domains: group law, representations, orbit geometry,
Jordan structure, cone picture and an auditable CLI."""

__version__ = "0.1.0"
