"""Exact workbench for metric connections with totally skew-symmetric torsion."""

from .forms import Form, wedge, interior, contract, hodge, inner, sigma_t, volume_form

__all__ = [
    "Form", "wedge", "interior", "contract", "hodge", "inner", "sigma_t",
    "volume_form",
]
