"""FastAPI service exposing the cube-ordering library.

All endpoints are stateless request/response computations over the pure
library functions; run with ``uvicorn cubeorder.service:app``.  Every
witness a search endpoint reports is re-verified by the independent
checkers in :mod:`cubeorder.checks` before the response is built.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import checks, schemas
from .intervals import is_tree_like, relation_from_order
from .orders import LinearOrder
from .ramsey import (
    EdgeColoring,
    find_monochromatic_affine_cube,
    find_monochromatic_cube_via_subcube_coloring,
    find_monotone_affine_cube,
    gen_3ap_free,
    verify_no_monotone_3ap,
)
from .sweep import SweepConfig, run_sweep
from .trees import enumerate_trees, tree_to_json
from .uniformity import classify_uniform, find_ordered_subcube, is_uniform

app = FastAPI(
    title="cubeorder",
    description="Linear orderings of combinatorial cubes: enumeration, "
    "classification, and Ramsey-type witness searches.",
    version="0.1.0",
)


def _load_order(model: schemas.OrderModel) -> LinearOrder:
    try:
        return LinearOrder(model.k, model.n, tuple(model.ranks))
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=f"bad order: {exc}") from exc


def _load_coloring(model: schemas.ColoringModel) -> EdgeColoring:
    try:
        return EdgeColoring.from_json(model.model_dump())
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=f"bad coloring: {exc}") from exc


def _uniformity_model(order: LinearOrder) -> schemas.UniformityModel:
    report = is_uniform(order)
    doc = report.to_json()
    return schemas.UniformityModel(
        uniform=doc["uniform"],
        verdicts=doc["verdicts"],
        counterexamples=doc["counterexamples"],
    )


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok")


@app.post("/trees/enumerate", response_model=schemas.TreeEnumerationResponse)
def trees_enumerate(request: schemas.TreeEnumerationRequest) -> schemas.TreeEnumerationResponse:
    trees = [tree_to_json(t) for t in enumerate_trees(request.k)]
    return schemas.TreeEnumerationResponse(k=request.k, count=len(trees), trees=trees)


@app.post("/orders/classify", response_model=schemas.ClassifyResponse)
def orders_classify(request: schemas.ClassifyRequest) -> schemas.ClassifyResponse:
    order = _load_order(request.order)
    uniformity = _uniformity_model(order)
    if not uniformity.uniform:
        return schemas.ClassifyResponse(uniformity=uniformity, note="not uniform")
    if order.n < 3:
        return schemas.ClassifyResponse(
            uniformity=uniformity, note="classification requires n >= 3"
        )
    try:
        result = classify_uniform(order)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    classification = schemas.ClassificationModel(
        tree=tree_to_json(result.tree),
        base=list(result.base.perm),
        subcube_agreement=result.subcube_agreement,
        full_cube_equal=result.full_cube_equal,
    )
    return schemas.ClassifyResponse(uniformity=uniformity, classification=classification)


@app.post("/search/ordered-subcube", response_model=schemas.OrderedSubcubeSearchResponse)
def search_ordered_subcube(
    request: schemas.OrderedSubcubeSearchRequest,
) -> schemas.OrderedSubcubeSearchResponse:
    order = _load_order(request.order)
    if not 1 <= request.d <= order.n:
        raise HTTPException(status_code=400, detail=f"d={request.d} outside 1..{order.n}")
    witness = find_ordered_subcube(order, request.d, request.family)
    if witness is None:
        return schemas.OrderedSubcubeSearchResponse(found=False)
    verified = checks.verify_ordered_subcube(order, witness.pattern, witness.tree, witness.base)
    if not verified:
        raise HTTPException(status_code=500, detail="witness failed re-verification")
    return schemas.OrderedSubcubeSearchResponse(
        found=True,
        witness=schemas.OrderedSubcubeWitnessModel(
            pattern=str(witness.pattern),
            tree=tree_to_json(witness.tree),
            base=list(witness.base.perm),
            verified=True,
        ),
    )


@app.post("/search/monotone-cube", response_model=schemas.MonotoneCubeSearchResponse)
def search_monotone_cube(
    request: schemas.MonotoneCubeSearchRequest,
) -> schemas.MonotoneCubeSearchResponse:
    try:
        found = find_monotone_affine_cube(request.values, request.d)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    if found is None:
        return schemas.MonotoneCubeSearchResponse(found=False)
    cube, direction = found
    verified = checks.verify_monotone_cube(request.values, cube, direction)
    if not verified:
        raise HTTPException(status_code=500, detail="witness failed re-verification")
    return schemas.MonotoneCubeSearchResponse(
        found=True,
        witness=schemas.MonotoneCubeWitnessModel(
            cube=schemas.CubeModel(**cube.to_json()),
            elements=list(cube.elements),
            direction=direction,
            verified=True,
        ),
    )


@app.post("/search/monochromatic-cube", response_model=schemas.MonochromaticCubeSearchResponse)
def search_monochromatic_cube(
    request: schemas.MonochromaticCubeSearchRequest,
) -> schemas.MonochromaticCubeSearchResponse:
    coloring = _load_coloring(request.coloring)
    try:
        if request.route == "direct":
            found = find_monochromatic_affine_cube(coloring, request.d)
        else:
            found = find_monochromatic_cube_via_subcube_coloring(coloring, request.d)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    exhaustive = request.route == "direct"
    if found is None:
        return schemas.MonochromaticCubeSearchResponse(found=False, exhaustive=exhaustive)
    cube, color = found
    verified = checks.verify_monochromatic_cube(coloring, cube, color)
    if not verified:
        raise HTTPException(status_code=500, detail="witness failed re-verification")
    return schemas.MonochromaticCubeSearchResponse(
        found=True,
        witness=schemas.MonochromaticCubeWitnessModel(
            cube=schemas.CubeModel(**cube.to_json()),
            elements=list(cube.elements),
            color=color,
            verified=True,
        ),
        exhaustive=exhaustive,
    )


@app.post("/sweep", response_model=schemas.SweepResponse)
def sweep(request: schemas.SweepRequest) -> schemas.SweepResponse:
    try:
        config = SweepConfig(
            k=request.k,
            n=request.n,
            mode=request.mode,
            seed=request.seed,
            samples=request.samples,
            d=request.d,
            jobs=request.jobs,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return schemas.SweepResponse(**run_sweep(config).to_json())


@app.post("/sequences/3ap-free", response_model=schemas.SequenceResponse)
def sequences_3ap_free(request: schemas.ThreeApFreeRequest) -> schemas.SequenceResponse:
    return schemas.SequenceResponse(values=list(gen_3ap_free(request.t)))


@app.post("/verify/no-monotone-3ap", response_model=schemas.ThreeApVerifyResponse)
def verify_no_monotone_3ap_endpoint(
    request: schemas.SequenceVerifyRequest,
) -> schemas.ThreeApVerifyResponse:
    try:
        report = verify_no_monotone_3ap(request.values)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return schemas.ThreeApVerifyResponse(
        ok=report.ok, progression=report.progression, direction=report.direction
    )


@app.post("/verify/uniform", response_model=schemas.UniformityModel)
def verify_uniform(request: schemas.OrderVerifyRequest) -> schemas.UniformityModel:
    return _uniformity_model(_load_order(request.order))


@app.post("/verify/tree-like", response_model=schemas.TreeLikeVerifyResponse)
def verify_tree_like(request: schemas.OrderVerifyRequest) -> schemas.TreeLikeVerifyResponse:
    order = _load_order(request.order)
    try:
        report = is_tree_like(relation_from_order(order))
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return schemas.TreeLikeVerifyResponse(
        tree_like=report.ok,
        axiom=report.axiom,
        witness=[list(iv) for iv in report.witness] if report.witness else None,
    )
