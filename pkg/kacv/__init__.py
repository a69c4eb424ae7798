"""kacv: Kac polynomials, root multiplicities and HN identities for quivers."""

__version__ = "1.0.0"
