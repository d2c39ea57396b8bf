"""
Division ring specifications.

A spec is either read from a ``key=value`` ring file or from the command
line shorthand ``F<q>[:<j>]`` (GF(q), tau = Frobenius^j) or
``H[(a,b)][:<q0>]`` (rational quaternions (a,b), tau = conjugation by q0).
"""

import logging
import re
from pathlib import Path
from typing import Literal, Optional

from decouple import RepositoryEnv
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator
from sympy import factorint, isprime

from .exceptions import ConfigurationError

logger = logging.getLogger(__name__)

FIELD_SHORTHAND = re.compile(r'^F(\d+)(?::(-?\d+))?$')
QUATERNION_SHORTHAND = re.compile(r'^H(?:\((-?\d+),(-?\d+)\))?(?::(.+))?$')


class DivisionRingSpec(BaseModel):
    """Which division ring D to build and which automorphism tau it carries."""

    model_config = ConfigDict(frozen=True)

    kind: Literal['finite_field', 'rational_quaternion']
    p: Optional[int] = None
    k: int = 1
    tau_exponent: int = 0
    a: int = -1
    b: int = -1
    q0: str = '1'

    @field_validator('k')
    @classmethod
    def validate_degree(cls, value: int) -> int:
        if value < 1:
            raise ValueError('extension degree k must be at least 1')
        return value

    @model_validator(mode='after')
    def validate_kind(self) -> 'DivisionRingSpec':
        if self.kind == 'finite_field':
            if self.p is None or not isprime(self.p):
                raise ValueError(f'p must be a prime, got {self.p}')
        else:
            # (a,b) is a division algebra over Q as soon as the norm form is definite
            if self.a >= 0 or self.b >= 0:
                raise ValueError('quaternion parameters a and b must both be negative')
        return self

    @property
    def label(self) -> str:
        if self.kind == 'finite_field':
            return f'F{self.p ** self.k}:{self.tau_exponent}'
        return f'H({self.a},{self.b}):{self.q0}'


def _build_spec(**fields) -> DivisionRingSpec:
    try:
        return DivisionRingSpec(**fields)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid ring specification: {e}") from e


def parse_shorthand(text: str) -> Optional[DivisionRingSpec]:
    """Parse ``F4``, ``F9:0``, ``H`` or ``H(-1,-3):1+j``; None if it is not shorthand."""
    text = text.strip()
    match = FIELD_SHORTHAND.match(text)
    if match:
        q = int(match.group(1))
        factors = factorint(q)
        if q < 2 or len(factors) != 1:
            raise ConfigurationError(f"F{q}: field order must be a prime power")
        (p, k), = factors.items()
        default_tau = 1 if k > 1 else 0
        tau = int(match.group(2)) if match.group(2) is not None else default_tau
        return _build_spec(kind='finite_field', p=p, k=k, tau_exponent=tau)

    match = QUATERNION_SHORTHAND.match(text)
    if match:
        a = int(match.group(1)) if match.group(1) else -1
        b = int(match.group(2)) if match.group(2) else -1
        q0 = match.group(3) or '1+i'
        return _build_spec(kind='rational_quaternion', a=a, b=b, q0=q0)
    return None


def load_ring_file(path: Path) -> DivisionRingSpec:
    """Read a ``key=value`` ring file."""
    repository = RepositoryEnv(str(path))
    fields = {}
    for key in ('kind', 'p', 'k', 'tau_exponent', 'a', 'b', 'q0'):
        if key in repository:
            fields[key] = repository[key].strip()
    if 'kind' not in fields:
        raise ConfigurationError(f"Ring file {path} does not declare a kind")
    logger.debug(f"Loaded ring file {path}: {fields}")
    return _build_spec(**fields)


def load_ring_spec(source: str) -> DivisionRingSpec:
    """Resolve a ``--ring`` argument: an existing file path or a shorthand."""
    path = Path(source)
    if path.is_file():
        return load_ring_file(path)
    spec = parse_shorthand(source)
    if spec is None:
        raise ConfigurationError(f"Unknown ring '{source}': not a file and not a shorthand")
    return spec
