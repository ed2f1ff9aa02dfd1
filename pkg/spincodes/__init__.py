"""Binary-dihedral covariant spin codes and their Dicke-bootstrapped multiqubit codes."""

__version__ = "1.0.0"
