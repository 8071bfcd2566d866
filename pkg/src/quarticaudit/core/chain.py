"""Proof chains: ordered, witnessed steps with a single conclusion.

A chain yields raw ``ChainStep`` objects without indices; ``ChainRunner``
numbers them, stops at the first failed step and derives the conclusion.
"""

from collections.abc import Iterator
from enum import Enum
from typing import Any, Protocol

from pydantic import BaseModel, Field


class Verdict(str, Enum):
    """Outcome of a single check or of a whole chain."""

    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    HYPOTHESIS_NOT_MET = "hypothesis_not_met"


def witness(**values: Any) -> dict[str, str]:
    """Render witness values as strings; big integers stay exact."""
    rendered: dict[str, str] = {}
    for key, value in values.items():
        if isinstance(value, Enum):
            rendered[key] = str(value.value)
        elif isinstance(value, list | tuple):
            rendered[key] = ",".join(str(v) for v in value)
        else:
            rendered[key] = str(value)
    return rendered


class ChainStep(BaseModel):
    """One step of a proof chain: a claim, its witness and whether it held."""

    name: str = Field(..., description="Short step identifier")
    claim: str = Field(..., description="What the step asserts")
    witness: dict[str, str] = Field(default_factory=dict)
    verdict: Verdict = Field(..., description="pass or fail")
    index: int | None = Field(default=None, ge=0)

    class Config:
        extra = "forbid"


class ChainVerdict(BaseModel):
    """The recorded run of a chain."""

    chain: str
    p: int
    steps: list[ChainStep] = Field(default_factory=list)
    conclusion: Verdict

    class Config:
        extra = "forbid"

    @property
    def passed(self) -> bool:
        return self.conclusion == Verdict.PASS

    def step(self, name: str) -> ChainStep:
        """Look up a step by name."""
        for step in self.steps:
            if step.name == name:
                return step
        raise KeyError(name)

    def failed_step(self) -> ChainStep | None:
        return next((s for s in self.steps if s.verdict == Verdict.FAIL), None)


class ProofChain(Protocol):
    """Protocol every chain implements."""

    name: str

    def applies(self, p: int) -> bool:
        """Whether the chain's hypothesis holds for p."""
        ...

    def steps(self, p: int) -> Iterator[ChainStep]:
        """Yield steps in order. Indices are assigned by ChainRunner."""
        ...


class ChainRunner:
    """Runs a chain, numbering its steps and deriving the conclusion."""

    def __init__(self, chain: ProofChain):
        self.chain = chain

    def run(self, p: int, enforce_hypothesis: bool = True) -> ChainVerdict:
        if enforce_hypothesis and not self.chain.applies(p):
            return ChainVerdict(
                chain=self.chain.name, p=p, conclusion=Verdict.HYPOTHESIS_NOT_MET
            )

        steps: list[ChainStep] = []
        for i, step in enumerate(self.chain.steps(p)):
            steps.append(step.model_copy(update={"index": i}))
            if step.verdict != Verdict.PASS:
                break

        conclusion = (
            Verdict.PASS
            if steps and all(s.verdict == Verdict.PASS for s in steps)
            else Verdict.FAIL
        )
        return ChainVerdict(chain=self.chain.name, p=p, steps=steps, conclusion=conclusion)
