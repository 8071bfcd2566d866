"""Configuration models for quarticaudit.

Each section bounds one kind of work: trial division and form reduction in
the quadratic layer, relation harvesting in the quartic class group, which
primes get deep checks, and how scans are distributed.
"""

from pydantic import BaseModel, Field, field_validator


class ArithmeticConfig(BaseModel):
    """Bounds for the quadratic-field layer."""

    trial_division_cap: int = Field(
        default=10**7,
        ge=2,
        description="Largest prime used to split off small factors of the unit's b",
    )
    form_discriminant_bound: int = Field(
        default=10**8,
        ge=1,
        description="Largest |D| for which reduced forms are enumerated",
    )

    class Config:
        """Pydantic configuration."""

        extra = "forbid"


class ClassGroupConfig(BaseModel):
    """Search limits for the quartic class group computation."""

    principal_search_bound: int = Field(
        default=4, ge=1, description="Initial sup-norm for principality search"
    )
    principal_doublings: int = Field(
        default=2, ge=0, description="How often the search bound doubles on failure"
    )
    relation_radius: int = Field(
        default=2, ge=1, description="Coefficient radius for small elements of base ideals"
    )
    order_relation_radius: int = Field(
        default=3, ge=1, description="Coefficient radius for small elements of O_K"
    )
    stable_relations: int = Field(
        default=40,
        ge=1,
        description="Stop after this many useful relations leave the determinant unchanged",
    )
    max_discriminant: int = Field(
        default=10**12, ge=1, description="Largest |disc| accepted as desk scale"
    )
    grh_bach_bound: bool = Field(
        default=False, description="Reserved; GRH-conditional bounds are not implemented"
    )

    class Config:
        """Pydantic configuration."""

        extra = "forbid"

    @field_validator("grh_bach_bound")
    @classmethod
    def _reserved(cls, value: bool) -> bool:
        if value:
            raise ValueError("grh_bach_bound is reserved and cannot be enabled")
        return value


class DeepCheckConfig(BaseModel):
    """Which primes get direct class group confirmation."""

    nine_mod_16_primes: list[int] = Field(default_factory=lambda: [41, 73, 89, 137])
    one_mod_16_primes: list[int] = Field(default_factory=lambda: [17, 97, 113])
    deep_max: int = Field(
        default=137, ge=0, description="Quartic class groups only for p ≤ deep_max"
    )
    unit_field_max: int = Field(
        default=41, ge=0, description="Unit-field class groups only for p ≤ this"
    )
    subfield_max: int = Field(
        default=137, ge=0, description="Cyclic subfield check only for p ≤ this"
    )

    class Config:
        """Pydantic configuration."""

        extra = "forbid"

    @property
    def primes(self) -> list[int]:
        return sorted(set(self.nine_mod_16_primes) | set(self.one_mod_16_primes))


class ScanConfig(BaseModel):
    """Distribution of a range scan over worker processes."""

    jobs: int = Field(default=1, ge=1, description="Worker processes")
    keep_going: bool = Field(
        default=False, description="Continue past a falsification instead of aborting"
    )
    chunksize: int = Field(default=8, ge=1, description="Primes per worker task")

    class Config:
        """Pydantic configuration."""

        extra = "forbid"


class VerifierConfig(BaseModel):
    """Everything verify_prime and scan_range depend on."""

    arithmetic: ArithmeticConfig = Field(default_factory=ArithmeticConfig)
    classgroup: ClassGroupConfig = Field(default_factory=ClassGroupConfig)
    deep: DeepCheckConfig = Field(default_factory=DeepCheckConfig)
    scan: ScanConfig = Field(default_factory=ScanConfig)

    class Config:
        """Pydantic configuration."""

        extra = "forbid"
