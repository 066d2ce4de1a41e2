"""Catalogue of the model tensors the library is built around."""

from ..exterior import Endo, KForm, SymBilinear

_G2_TERMS = {
    (1, 2, 3): 1,
    (1, 4, 5): 1,
    (1, 6, 7): 1,
    (2, 4, 6): 1,
    (2, 5, 7): -1,
    (3, 4, 7): -1,
    (3, 5, 6): -1,
}

_SPLIT_G2_TERMS = {
    (1, 2, 3): 1,
    (1, 4, 5): -1,
    (1, 6, 7): -1,
    (2, 4, 6): 1,
    (2, 5, 7): -1,
    (3, 4, 7): -1,
    (3, 5, 6): -1,
}

_SPLIT_G2_DUAL_TERMS = {
    (4, 5, 6, 7): 1,
    (2, 3, 6, 7): -1,
    (2, 3, 4, 5): -1,
    (1, 3, 5, 7): 1,
    (1, 3, 4, 6): -1,
    (1, 2, 5, 6): -1,
    (1, 2, 4, 7): -1,
}

_SL3C_TERMS = {
    (1, 3, 5): 1,
    (1, 4, 6): -1,
    (2, 3, 6): -1,
    (2, 4, 5): -1,
}

_SL3R2_TERMS = {
    (1, 2, 3): 1,
    (4, 5, 6): 1,
}


_BUILDERS = {
    # Riemannian-type 3-form on R^7, stabilised by the compact group.
    "g2": lambda: KForm(7, 3, _G2_TERMS),
    # Split-type 3-form on R^7; induces a (3,4)-signature metric.
    "split_g2": lambda: KForm(7, 3, _SPLIT_G2_TERMS),
    # Its Hodge-dual 4-form with respect to the split metric.
    "split_g2_dual": lambda: KForm(7, 4, _SPLIT_G2_DUAL_TERMS),
    # The split metric diag(1,1,1,-1,-1,-1,-1).
    "split_metric": lambda: SymBilinear.diagonal([1, 1, 1, -1, -1, -1, -1]),
    # Standard para-complex structure diag(1,1,1,-1,-1,-1) on R^6.
    "para": lambda: Endo.diagonal([1, 1, 1, -1, -1, -1]),
    # Real part of the complex volume form on C^3 = R^6.
    "sl3c": lambda: KForm(6, 3, _SL3C_TERMS),
    # Sum of the volume forms of the two standard 3-plane factors of R^6.
    "sl3r2": lambda: KForm(6, 3, _SL3R2_TERMS),
}


def standard_form(name):
    """Return the named model object; raises ValueError on unknown names."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        known = ", ".join(sorted(_BUILDERS))
        raise ValueError(f"unknown standard form {name!r} (known: {known})") from None
    return builder()


STANDARD_NAMES = tuple(sorted(_BUILDERS))
