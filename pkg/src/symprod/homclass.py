"""Formal homology classes and the homological Adams operations.

A GradedClass stands for a characteristic class cl_*(F) in the even-degree
Borel-Moore homology of Z.  Degree ``i`` means H^BM_{2i}.  Each (label, i)
pair is one basis vector of the stand-in for H_*(Z).

Hirzebruch classes use the unnormalized T_{-y*} convention: the stored
variable is ``y`` and the Adams operation sends y to y**r.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exactalg import (
    ZERO,
    Poly,
    as_poly,
    is_laurent,
    laurent_from_json,
    laurent_substitute,
    laurent_to_json,
    parse_laurent,
    parse_rational,
    format_rational,
)

_LABEL_RE = re.compile(r"[A-Za-z0-9_.\-]+")


class ClassKind(enum.Enum):
    CHERN = "chern"
    TODD = "todd"
    HIRZEBRUCH_MINUS_Y = "hirzebruch"

    @classmethod
    def parse(cls, text: str) -> "ClassKind":
        aliases = {"c": "chern", "td": "todd", "t": "hirzebruch", "hirzebruch_minus_y": "hirzebruch",
                   "hirzebruchminusy": "hirzebruch", "t_-y": "hirzebruch"}
        key = text.strip().lower()
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown class kind {text!r}; use chern, todd or hirzebruch") from None


@dataclass(frozen=True)
class GradedClass:
    kind: ClassKind
    components: Mapping[int, Poly]
    label: str = "v"

    def __post_init__(self):
        if not _LABEL_RE.fullmatch(self.label):
            raise ValueError(f"basis label must match {_LABEL_RE.pattern}: {self.label!r}")
        comps = {}
        for i, c in sorted(self.components.items()):
            i = int(i)
            if i < 0:
                raise ValueError("homological degrees are non-negative")
            c = as_poly(c)
            if not is_laurent(c):
                raise ValueError(f"component {i} is not a Laurent polynomial in y")
            if self.kind is not ClassKind.HIRZEBRUCH_MINUS_Y and not c.is_constant():
                raise ValueError(f"{self.kind.value} classes have rational coefficients")
            if c:
                comps[i] = c
        object.__setattr__(self, "components", comps)

    def component(self, i: int) -> Poly:
        return self.components.get(i, ZERO)

    def scaled(self, c) -> "GradedClass":
        return GradedClass(self.kind, {i: v * c for i, v in self.components.items()}, self.label)

    def __add__(self, other: "GradedClass") -> "GradedClass":
        if (other.kind, other.label) != (self.kind, self.label):
            raise ValueError("can only add classes of the same kind and label")
        comps = dict(self.components)
        for i, v in other.components.items():
            comps[i] = comps.get(i, ZERO) + v
        return GradedClass(self.kind, comps, self.label)


def adams(r: int, c: GradedClass) -> GradedClass:
    """Homological Adams operation Psi_r."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    if c.kind is ClassKind.CHERN or r == 1:
        return c
    comps = {}
    for i, v in c.components.items():
        v = v * Fraction(1, r ** i)
        if c.kind is ClassKind.HIRZEBRUCH_MINUS_Y:
            v = laurent_substitute(v, r)
        comps[i] = v
    return GradedClass(c.kind, comps, c.label)


def degree_of(c: GradedClass) -> Poly:
    """Pushforward to a point: the degree-0 component."""
    return c.component(0)


@dataclass
class HomologyModel:
    """User-supplied stand-in for H_*(Z): named classes with unique labels."""

    classes: dict[str, GradedClass] = field(default_factory=dict)

    def add(self, c: GradedClass) -> GradedClass:
        if c.label in self.classes:
            raise ValueError(f"duplicate basis label {c.label!r}")
        self.classes[c.label] = c
        return c

    def __getitem__(self, label: str) -> GradedClass:
        return self.classes[label]

    @property
    def basis(self) -> list[tuple[str, int]]:
        return sorted((lab, i) for lab, c in self.classes.items() for i in c.components)


# JSON


def _scalar_to_json(v: Poly):
    if v.is_constant():
        return format_rational(v.constant_term())
    return laurent_to_json(v)


def _scalar_from_json(v) -> Poly:
    if isinstance(v, dict):
        return laurent_from_json(v)
    if isinstance(v, (int, Fraction)):
        return as_poly(v)
    text = str(v)
    try:
        return as_poly(parse_rational(text))
    except ValueError:
        return parse_laurent(text)


def class_to_json(c: GradedClass) -> dict:
    return {
        "kind": c.kind.value,
        "components": {str(i): _scalar_to_json(v) for i, v in c.components.items()},
        "label": c.label,
    }


def class_from_json(obj: Mapping) -> GradedClass:
    if not isinstance(obj, Mapping) or "kind" not in obj or "components" not in obj:
        raise ValueError('class JSON needs "kind" and "components"')
    comps = {int(i): _scalar_from_json(v) for i, v in obj["components"].items()}
    return GradedClass(ClassKind.parse(obj["kind"]), comps, obj.get("label", "v"))
