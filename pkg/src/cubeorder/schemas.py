"""Pydantic request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Union

from pydantic import BaseModel, Field


class OrderModel(BaseModel):
    k: int = Field(ge=1)
    n: int = Field(ge=0)
    ranks: list[int]


class TreeNodeModel(BaseModel):
    level: int = Field(ge=1)
    children: list[Union["TreeNodeModel", Literal["leaf"]]]


TreeNodeModel.model_rebuild()

TreeModel = Union[TreeNodeModel, Literal["leaf"]]


class CubeModel(BaseModel):
    x0: int
    xs: list[int]


class ColoringModel(BaseModel):
    m: int = Field(ge=1)
    r: int = Field(ge=1)
    edges: list[tuple[int, int, int]]


class HealthResponse(BaseModel):
    status: str


class TreeEnumerationRequest(BaseModel):
    k: int = Field(ge=1, le=8, description="leaf count; capped at 8 to bound the explosion")


class TreeEnumerationResponse(BaseModel):
    k: int
    count: int
    trees: list[TreeModel]


class CounterexampleModel(BaseModel):
    d: int
    patterns: tuple[str, str]


class UniformityModel(BaseModel):
    uniform: bool
    verdicts: dict[str, bool]
    counterexamples: list[CounterexampleModel]


class ClassificationModel(BaseModel):
    tree: TreeModel
    base: list[int]
    subcube_agreement: bool
    full_cube_equal: bool


class ClassifyRequest(BaseModel):
    order: OrderModel


class ClassifyResponse(BaseModel):
    uniformity: UniformityModel
    classification: ClassificationModel | None = None
    note: str | None = None


class OrderedSubcubeSearchRequest(BaseModel):
    order: OrderModel
    d: int = Field(ge=1)
    family: Literal["lex", "tree"] = "tree"


class OrderedSubcubeWitnessModel(BaseModel):
    pattern: str
    tree: TreeModel
    base: list[int]
    verified: bool


class OrderedSubcubeSearchResponse(BaseModel):
    found: bool
    witness: OrderedSubcubeWitnessModel | None = None


class MonotoneCubeSearchRequest(BaseModel):
    values: list[int]
    d: int = Field(ge=1)


class MonotoneCubeWitnessModel(BaseModel):
    cube: CubeModel
    elements: list[int]
    direction: Literal["increasing", "decreasing"]
    verified: bool


class MonotoneCubeSearchResponse(BaseModel):
    found: bool
    witness: MonotoneCubeWitnessModel | None = None


class MonochromaticCubeSearchRequest(BaseModel):
    coloring: ColoringModel
    d: int = Field(ge=1)
    route: Literal["direct", "subcube-coloring"] = "direct"


class MonochromaticCubeWitnessModel(BaseModel):
    cube: CubeModel
    elements: list[int]
    color: int
    verified: bool


class MonochromaticCubeSearchResponse(BaseModel):
    found: bool
    witness: MonochromaticCubeWitnessModel | None = None
    exhaustive: bool


class SweepRequest(BaseModel):
    k: int = Field(ge=1)
    n: int = Field(ge=1)
    mode: Literal["exhaustive", "sample"]
    seed: int | None = None
    samples: int | None = Field(default=None, ge=1)
    d: int = Field(default=1, ge=1, description="dimension for the lex-subcube hit count")
    jobs: int = Field(default=1, ge=1)


class SweepResponse(BaseModel):
    k: int
    n: int
    mode: str
    d: int
    orders_scanned: int
    uniform_count: int
    uniform_orders: list[list[int]]
    lex_witness_hits: int
    violations: list[dict]
    notable: list[dict]
    seed: int | None = None
    samples: int | None = None
    generator: str | None = None


class ThreeApFreeRequest(BaseModel):
    t: int = Field(ge=0, le=20)


class SequenceResponse(BaseModel):
    values: list[int]


class SequenceVerifyRequest(BaseModel):
    values: list[int]


class ThreeApVerifyResponse(BaseModel):
    ok: bool
    progression: tuple[int, int, int] | None = None
    direction: Literal["increasing", "decreasing"] | None = None


class OrderVerifyRequest(BaseModel):
    order: OrderModel


class TreeLikeVerifyResponse(BaseModel):
    tree_like: bool
    axiom: str | None = None
    witness: list[list[int]] | None = None


class ErrorResponse(BaseModel):
    detail: str
