"""Run configurations in a flat ``key = value`` text format.

Example::

    # surface of degrees (3,3,3) on the Fermat sextic
    field = Fp:13
    ambient = 5
    cy_degrees = 6
    surface_degrees = 3, 3, 3
    construction = fermat-sextic
    cross_check = Fp:10009

Explicit equations go one per line with repeated ``cy_poly`` and
``surface_poly`` keys. Blank lines and ``#`` comments are ignored, and values
may be wrapped in double quotes.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field

from .chern import SurfaceDegrees
from .constructions import CONSTRUCTIONS, build_construction
from .errors import Cy4SurfError, FieldError, ParseError, ValidationError
from .fields import QQ, Field, PrimeField, parse_field
from .normal_bundle import ExplicitPair
from .polyring import HomogeneousPolynomial

PRIME_ENV = "CY4SURF_PRIME"
COMMANDS = ("hilbert", "chern", "rvd", "invariants", "rigid-table", "symplectic")
SCALAR_KEYS = {"command", "field", "ambient", "cy_degrees", "surface_degrees", "construction", "seed", "format", "cross_check"}
LIST_KEYS = {"cy_poly", "surface_poly"}


def default_prime_field() -> PrimeField | None:
    """Prime field named by the environment, if any."""
    value = os.environ.get(PRIME_ENV)
    if not value:
        return None
    try:
        return PrimeField(int(value))
    except (ValueError, FieldError) as exc:
        raise ValidationError(f"{PRIME_ENV}={value!r} is not a prime") from exc


@dataclass
class RunConfig:
    command: str = "invariants"
    field: Field | None = None
    ambient_N: int | None = None
    cy_degrees: tuple = ()
    surface_degrees: tuple = ()
    cy_polys: list = dc_field(default_factory=list)
    surface_polys: list = dc_field(default_factory=list)
    construction: str | None = None
    seed: int = 0
    output_format: str = "text"
    cross_fields: list = dc_field(default_factory=list)
    poly_text: dict = dc_field(default_factory=dict)

    @property
    def mode(self) -> str:
        if self.surface_polys:
            return "explicit"
        if self.construction:
            return "construction"
        return "degrees"

    def degrees(self) -> SurfaceDegrees:
        return SurfaceDegrees(self.ambient_N, self.cy_degrees, self.surface_degrees)

    def _explicit_pair(self, F: Field) -> ExplicitPair:
        n_vars = self.ambient_N + 1
        if F == self.field:
            cy, s = self.cy_polys, self.surface_polys
        else:
            cy = [HomogeneousPolynomial.parse(t, F, n_vars) for t in self.poly_text["cy_poly"]]
            s = [HomogeneousPolynomial.parse(t, F, n_vars) for t in self.poly_text["surface_poly"]]
        return ExplicitPair(F, self.ambient_N, tuple(cy), tuple(s), label="explicit")

    def pair(self, F: Field | None = None) -> ExplicitPair | None:
        """The explicit pair this config describes (over ``F`` if given), or None in degree-only mode."""
        F = F or self.field
        if self.mode == "explicit":
            return self._explicit_pair(F)
        if self.mode == "construction":
            return build_construction(self.construction, self.ambient_N, self.cy_degrees, self.surface_degrees, F, self.seed)
        return None

    def cross_pairs(self) -> list:
        return [self.pair(F) for F in self.cross_fields]


def _strip_quotes(value: str) -> str:
    if len(value) >= 2 and value[0] == value[-1] == '"':
        return value[1:-1]
    return value


def _int_list(value, lineno, col, key):
    out = []
    for part in value.split(","):
        part = part.strip()
        try:
            out.append(int(part))
        except ValueError:
            raise ParseError(f"{key}: {part!r} is not an integer", lineno, col) from None
    return tuple(out)


def parse_config(source: str) -> RunConfig:
    """Parse and validate a configuration text."""
    scalars: dict = {}
    lists: dict = {k: [] for k in LIST_KEYS}
    where: dict = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if "=" not in line:
            col = len(raw) - len(raw.lstrip()) + 1
            raise ParseError("expected 'key = value'", lineno, col)
        key_part, value_part = line.split("=", 1)
        key = key_part.strip()
        key_col = len(key_part) - len(key_part.lstrip()) + 1
        if key not in SCALAR_KEYS | LIST_KEYS:
            raise ParseError(f"unknown key {key!r}", lineno, key_col)
        value_col = len(key_part) + 2 + (len(value_part) - len(value_part.lstrip()))
        value = value_part.strip()
        if value.startswith('"'):
            value_col += 1
        value = _strip_quotes(value)
        if not value:
            raise ParseError(f"empty value for {key!r}", lineno, value_col)
        if key in LIST_KEYS:
            lists[key].append((value, lineno, value_col))
        else:
            if key in scalars:
                raise ParseError(f"duplicate key {key!r}", lineno, key_col)
            scalars[key] = value
            where[key] = (lineno, value_col)

    cfg = RunConfig()
    if "command" in scalars:
        if scalars["command"] not in COMMANDS:
            raise ValidationError(f"unknown command {scalars['command']!r}")
        cfg.command = scalars["command"]
    if "format" in scalars:
        if scalars["format"] not in ("text", "json"):
            raise ValidationError("format must be text or json")
        cfg.output_format = scalars["format"]
    if "ambient" in scalars:
        try:
            cfg.ambient_N = int(scalars["ambient"])
        except ValueError:
            raise ParseError("ambient must be an integer", *where["ambient"]) from None
    for key in ("cy_degrees", "surface_degrees"):
        if key in scalars:
            setattr(cfg, key, _int_list(scalars[key], *where[key], key))
    if "seed" in scalars:
        try:
            cfg.seed = int(scalars["seed"])
        except ValueError:
            raise ParseError("seed must be an integer", *where["seed"]) from None
        if not 0 <= cfg.seed < 2**64:
            raise ValidationError("seed must fit in 64 unsigned bits")
    if "construction" in scalars:
        if scalars["construction"] not in CONSTRUCTIONS:
            raise ValidationError(
                f"unknown construction {scalars['construction']!r}; choose from {', '.join(CONSTRUCTIONS)}"
            )
        cfg.construction = scalars["construction"]

    def field_of(text, loc):
        try:
            return parse_field(text)
        except (FieldError, ParseError) as exc:
            raise ParseError(f"bad field descriptor: {exc}", *loc) from None

    if "field" in scalars:
        cfg.field = field_of(scalars["field"], where["field"])
    if "cross_check" in scalars:
        cfg.cross_fields = [field_of(t, where["cross_check"]) for t in scalars["cross_check"].split(",")]

    if lists["surface_poly"] and cfg.construction:
        raise ValidationError("give either surface_poly lines or a construction, not both")
    if lists["cy_poly"] and not lists["surface_poly"]:
        raise ValidationError("cy_poly lines need matching surface_poly lines")
    if lists["surface_poly"] and not lists["cy_poly"]:
        raise ValidationError("surface_poly lines need matching cy_poly lines")
    if cfg.ambient_N is None:
        raise ValidationError("missing key 'ambient'")
    if cfg.ambient_N < 5:
        raise ValidationError("ambient dimension must be at least 5 for a Calabi-Yau 4-fold")

    if lists["surface_poly"]:
        if cfg.field is None:
            cfg.field = QQ
        n_vars = cfg.ambient_N + 1
        for key, target in (("cy_poly", cfg.cy_polys), ("surface_poly", cfg.surface_polys)):
            for text, lineno, col in lists[key]:
                try:
                    target.append(HomogeneousPolynomial.parse(text, cfg.field, n_vars))
                except ParseError as exc:
                    inner = exc.column - 1 if exc.column else 0
                    raise ParseError(exc.message, lineno, col + inner) from None
                except Cy4SurfError as exc:
                    raise ParseError(str(exc), lineno, col) from None
            cfg.poly_text[key] = [t for t, _, _ in lists[key]]
        got_e = tuple(f.degree for f in cfg.cy_polys)
        got_d = tuple(s.degree for s in cfg.surface_polys)
        if cfg.cy_degrees and cfg.cy_degrees != got_e:
            raise ValidationError(f"cy_degrees {cfg.cy_degrees} disagree with the polynomials' degrees {got_e}")
        if cfg.surface_degrees and cfg.surface_degrees != got_d:
            raise ValidationError(f"surface_degrees {cfg.surface_degrees} disagree with the polynomials' degrees {got_d}")
        cfg.cy_degrees, cfg.surface_degrees = got_e, got_d
    elif cfg.field is None:
        cfg.field = default_prime_field()

    if not cfg.cy_degrees:
        raise ValidationError("missing key 'cy_degrees'")
    if not cfg.surface_degrees:
        raise ValidationError("missing key 'surface_degrees'")
    # checks sum e = N+1, the equation counts and positivity
    cfg.degrees()
    return cfg
