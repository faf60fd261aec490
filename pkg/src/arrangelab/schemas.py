"""Pydantic request/response models for the analysis service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class GraphInput(BaseModel):
    text: str
    format: str = "auto"  # auto | edgelist | graph6


class PolynomialOut(BaseModel):
    coefficients: list[int]
    text: str


class BlockOut(BaseModel):
    vertices: list[int]
    edges: list[str]


class AnalyzeRequest(BaseModel):
    graph: GraphInput


class AnalyzeResponse(BaseModel):
    n: int
    m: int
    blocks: list[BlockOut]
    chordal: bool
    elimination_order: list[int] | None = None
    chordless_cycle: list[int] | None = None
    supersolvable: bool
    characteristic_polynomial: PolynomialOut
    lattice_size: int


class FlatOut(BaseModel):
    rank: int
    blocks: list[list[int]] | None = None
    hyperplanes: list[int]


class ChainOut(BaseModel):
    flats: list[FlatOut]
    parts: list[list[str]]  # hyperplanes added at each step


class NiceRequest(BaseModel):
    graph: GraphInput
    limit: int | None = None
    chains: bool = False
    max_hyperplanes: int = 15


class NicePartitionOut(BaseModel):
    parts: list[list[str]]
    chain: ChainOut | None = None


class NiceResponse(BaseModel):
    count: int
    truncated: bool
    partitions: list[NicePartitionOut]


class ChainsRequest(BaseModel):
    graph: GraphInput
    limit: int | None = None


class ChainsResponse(BaseModel):
    count: int
    truncated: bool
    supersolvable: bool
    chains: list[ChainOut]


class LatticeRequest(BaseModel):
    graph: GraphInput
    format: str = "json"  # json | dot


class LatticeResponse(BaseModel):
    lattice: dict | None = None
    dot: str | None = None


class CharPolyRequest(BaseModel):
    graph: GraphInput


class CharPolyResponse(BaseModel):
    characteristic_polynomial: PolynomialOut


class VerifyRequest(BaseModel):
    max_n: int = 5
    theorems: list[str] = Field(default_factory=lambda: ["T1", "T2", "T3", "T4"])
    corpus: str | None = None  # graph6 text, one graph per line
    workers: int = 1


class VerifyResponse(BaseModel):
    report: dict
    exit_code: int


class HealthResponse(BaseModel):
    status: str
    service: str
    version: str
