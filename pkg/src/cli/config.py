"""
Validated command-line configuration
"""
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from config.settings import DEFAULT_BENCH_LENGTHS, DEFAULT_VERIFY_LENGTH, ORACLE_MAX_LENGTH
from src.words.word_core import parse_word

Subcommand = Literal["rank", "unrank", "count", "enumerate", "verify", "bench"]
Selector = Literal["unlabelled", "necklace", "symmetric", "enclosing", "asymmetric", "lyndon"]


class CliConfig(BaseModel):
    """One parsed invocation"""
    subcommand: Subcommand
    word: Optional[str] = None
    length: Optional[int] = Field(default=None, ge=1)
    k: Optional[int] = Field(default=None, ge=0)
    selector: Selector = "unlabelled"
    output: Literal["text", "json"] = "text"
    max_length: int = Field(default=DEFAULT_VERIFY_LENGTH, ge=1, le=ORACLE_MAX_LENGTH)
    lengths: List[int] = Field(default_factory=lambda: list(DEFAULT_BENCH_LENGTHS))
    seed: Optional[int] = None
    canonicalize: bool = True
    verbose: bool = False

    @field_validator("word")
    @classmethod
    def validate_word(cls, value: Optional[str]) -> Optional[str]:
        return None if value is None else parse_word(value)

    @field_validator("lengths")
    @classmethod
    def validate_lengths(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("At least one bench length is required")
        if any(length < 1 for length in value):
            raise ValueError(f"Bench lengths must be positive, got {value}")
        return value

    @model_validator(mode="after")
    def check_required(self) -> "CliConfig":
        if self.subcommand == "rank":
            if self.word is None:
                raise ValueError("rank needs a word")
            if self.length is not None and self.length > len(self.word):
                raise ValueError(f"Length {self.length} exceeds |word| = {len(self.word)}")
        if self.subcommand == "unrank" and (self.k is None or self.length is None):
            raise ValueError("unrank needs a rank and --length")
        if self.subcommand in ("count", "enumerate") and self.length is None:
            raise ValueError(f"{self.subcommand} needs --length")
        if self.subcommand == "enumerate" and self.length > ORACLE_MAX_LENGTH:
            raise ValueError(f"enumerate is limited to length {ORACLE_MAX_LENGTH}")
        return self
