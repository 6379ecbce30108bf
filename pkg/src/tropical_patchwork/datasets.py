"""Bundled example instances."""

from __future__ import annotations

from importlib.resources import files

from .core import SignDistribution, TropicalPolynomial, parse_instance


def instance_text(name: str) -> str:
    return files("tropical_patchwork").joinpath(f"data/{name}.txt").read_text("utf-8")


def instance_path(name: str) -> str:
    return str(files("tropical_patchwork").joinpath(f"data/{name}.txt"))


def harnack_cubic() -> tuple[TropicalPolynomial, SignDistribution]:
    """Plane cubic whose patchwork has two components."""
    return parse_instance(instance_text("harnack_cubic"))


def cubic_surface_212() -> tuple[TropicalPolynomial, SignDistribution]:
    """Cubic surface instance with Betti vector (2, 1, 2)."""
    return parse_instance(instance_text("cubic_surface_212"))
