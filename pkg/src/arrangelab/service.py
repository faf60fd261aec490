"""FastAPI service exposing the arrangement analysis pipeline.

All computation lives in the core modules; endpoints only translate between
the wire models and core types.  Run with:

    uvicorn arrangelab.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .arrangement import graphical_arrangement
from .factorization import (
    EnumerationBoundExceeded,
    chain_construction_plan,
    enumerate_nice_partitions,
    partition_labels,
)
from .graphs import ChordlessCycleWitness, EliminationOrdering, blocks, chordality, parse_graph
from .lattice import (
    FlatBoundExceeded,
    build_lattice,
    characteristic_polynomial,
    lattice_to_dot,
    lattice_to_json,
    maximal_modular_chains,
)
from .oracle import CampaignBoundError, campaign
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    BlockOut,
    ChainOut,
    ChainsRequest,
    ChainsResponse,
    CharPolyRequest,
    CharPolyResponse,
    FlatOut,
    GraphInput,
    HealthResponse,
    LatticeRequest,
    LatticeResponse,
    NicePartitionOut,
    NiceRequest,
    NiceResponse,
    PolynomialOut,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(title="arrangelab", version=__version__)


def _graph(inp: GraphInput):
    try:
        return parse_graph(inp.text, inp.format)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=f"graph input: {exc}") from None


def _poly_out(poly) -> PolynomialOut:
    return PolynomialOut(coefficients=list(poly.coefficients), text=poly.text())


def _flat_out(flat) -> FlatOut:
    return FlatOut(
        rank=flat.rank,
        blocks=[list(b) for b in flat.blocks] if flat.blocks is not None else None,
        hyperplanes=sorted(flat.hyperplanes),
    )


def _chain_out(a, chain) -> ChainOut:
    pi_parts = []
    for prev, cur in zip(chain.flats, chain.flats[1:]):
        added = sorted(cur.hyperplanes - prev.hyperplanes)
        pi_parts.append([a.hyperplanes[k].label for k in added])
    return ChainOut(flats=[_flat_out(f) for f in chain.flats], parts=pi_parts)


@app.get("/health", response_model=HealthResponse)
def health():
    return HealthResponse(status="ok", service="arrangelab", version=__version__)


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(req: AnalyzeRequest):
    g = _graph(req.graph)
    a = graphical_arrangement(g)
    try:
        l = build_lattice(a)
    except FlatBoundExceeded as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    cert = chordality(g)
    block_list = [
        BlockOut(
            vertices=sorted({v for e in b.edges for v in e}),
            edges=[f"{i}-{j}" for i, j in b.sorted_edges()],
        )
        for b in blocks(g)
    ]
    return AnalyzeResponse(
        n=g.n,
        m=g.m,
        blocks=block_list,
        chordal=isinstance(cert, EliminationOrdering),
        elimination_order=list(cert.order) if isinstance(cert, EliminationOrdering) else None,
        chordless_cycle=list(cert.cycle) if isinstance(cert, ChordlessCycleWitness) else None,
        supersolvable=bool(maximal_modular_chains(l)),
        characteristic_polynomial=_poly_out(characteristic_polynomial(l)),
        lattice_size=l.size,
    )


@app.post("/nice", response_model=NiceResponse)
def nice(req: NiceRequest):
    g = _graph(req.graph)
    a = graphical_arrangement(g)
    try:
        l = build_lattice(a)
        parts = enumerate_nice_partitions(a, l, req.max_hyperplanes)
    except (FlatBoundExceeded, EnumerationBoundExceeded) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    total = len(parts)
    shown = parts if req.limit is None else parts[: req.limit]
    out = []
    for pi in shown:
        chain = None
        if req.chains:
            chain = _chain_out(a, chain_construction_plan(g, pi, l).chain)
        out.append(NicePartitionOut(parts=partition_labels(a, pi), chain=chain))
    return NiceResponse(count=total, truncated=len(shown) < total, partitions=out)


@app.post("/chain", response_model=ChainsResponse)
def chains(req: ChainsRequest):
    g = _graph(req.graph)
    a = graphical_arrangement(g)
    try:
        l = build_lattice(a)
    except FlatBoundExceeded as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    found = maximal_modular_chains(l)
    total = len(found)
    shown = found if req.limit is None else found[: req.limit]
    return ChainsResponse(
        count=total,
        truncated=len(shown) < total,
        supersolvable=bool(found),
        chains=[_chain_out(a, c) for c in shown],
    )


@app.post("/lattice", response_model=LatticeResponse)
def lattice(req: LatticeRequest):
    if req.format not in ("json", "dot"):
        raise HTTPException(status_code=400, detail=f"unknown lattice format {req.format!r}")
    g = _graph(req.graph)
    a = graphical_arrangement(g)
    try:
        l = build_lattice(a)
    except FlatBoundExceeded as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    if req.format == "dot":
        return LatticeResponse(dot=lattice_to_dot(l))
    return LatticeResponse(lattice=lattice_to_json(l))


@app.post("/char-poly", response_model=CharPolyResponse)
def char_poly(req: CharPolyRequest):
    g = _graph(req.graph)
    a = graphical_arrangement(g)
    try:
        l = build_lattice(a)
    except FlatBoundExceeded as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    return CharPolyResponse(characteristic_polynomial=_poly_out(characteristic_polynomial(l)))


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    try:
        report = campaign(
            req.max_n,
            checks=tuple(req.theorems),
            corpus_text=req.corpus,
            workers=req.workers,
        )
    except CampaignBoundError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=f"corpus input: {exc}") from None
    return VerifyResponse(report=report.as_dict(), exit_code=report.exit_code)
