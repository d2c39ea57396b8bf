"""
Run configuration shared by every twl command.

Defaults come from the ``TWL_*`` settings (read with python-decouple);
command-line flags override them.
"""

from pathlib import Path
from typing import Any, Optional

from django.conf import settings
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ring.exceptions import ConfigurationError
from ring.scalars import DivisionRing, build_ring
from ring.specs import DivisionRingSpec, load_ring_spec


class RunConfig(BaseModel):
    """Everything a report depends on; equal configs give byte-identical reports."""

    model_config = ConfigDict(frozen=True)

    ring: DivisionRingSpec
    n: int = Field(ge=2)
    seed: int = Field(ge=0, lt=2 ** 64)
    samples: int = Field(ge=1)
    degree_cap: int = Field(ge=0)
    word_length: int = Field(ge=1)
    workers: int = Field(ge=1)
    output: Optional[Path] = None

    @classmethod
    def from_options(cls, options: dict[str, Any]) -> 'RunConfig':
        """Build a config from parsed command options, filling gaps from settings."""
        if not options.get('ring'):
            raise ConfigurationError("--ring is required")

        def pick(key: str, default: Any) -> Any:
            value = options.get(key)
            return default if value is None else value

        try:
            return cls(
                ring=load_ring_spec(options['ring']),
                n=pick('n', settings.TWL_DEFAULT_N),
                seed=pick('seed', settings.TWL_DEFAULT_SEED),
                samples=pick('samples', settings.TWL_DEFAULT_SAMPLES),
                degree_cap=pick('degree_cap', settings.TWL_DEGREE_CAP),
                word_length=pick('word_length', settings.TWL_WORD_LENGTH),
                workers=pick('workers', settings.TWL_WORKERS),
                output=options.get('output'),
            )
        except ValidationError as e:
            raise ConfigurationError(f"Invalid run configuration: {e}") from e

    def build_ring(self) -> DivisionRing:
        return build_ring(self.ring)

    def echo(self) -> dict:
        """The config as it appears in report headers; workers and output do not change results."""
        return {
            'ring': self.ring.label,
            'n': self.n,
            'seed': self.seed,
            'samples': self.samples,
            'degree_cap': self.degree_cap,
            'word_length': self.word_length,
        }
