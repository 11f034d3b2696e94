"""HTTP service exposing the library.

Every endpoint is a pure function of its request body, so responses are
deterministic and the service is safe to scale out.  The CLI talks to
this app in-process; ``uvicorn twistgroups.service:app`` serves it over
the network.
"""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import stallings
from .algebra import INFINITE, lattice_index
from .classify import (
    InternalConsistencyError,
    NoWitnessError,
    Verdict,
    certify,
    conjugation_class,
    generation_witness,
    pretty_group,
    substitute_witness,
)
from .reps import (
    SurfaceContext,
    equal_in_context,
    eval_burau,
    eval_sl2,
    exponent_vector,
    order_of,
)
from .suites import run_suite
from .torus import CurveClass, intersection, twist_action, twist_matrix
from .words import (
    TwistWord,
    WordSizeError,
    WordSyntaxError,
    XSpec,
    free_reduce,
    parse_word,
    print_word,
)

app = FastAPI(
    title="twistgroups",
    description="Structure of two-generator Dehn twist subgroups <X, T_a>.",
)


def _parse(text: str) -> TwistWord:
    try:
        return parse_word(text)
    except (WordSyntaxError, WordSizeError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _context(intersection: int, torus: bool) -> SurfaceContext:
    try:
        return SurfaceContext(intersection, is_torus=torus)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _index_json(value: Union[int, float]) -> Union[int, str]:
    return "infinite" if value == INFINITE else int(value)


FormName = Literal["ab", "ba"]


class ClassifyRequest(BaseModel):
    form: FormName
    k: int
    intersection: int = Field(ge=0)
    torus: bool = False
    certificates: bool = True


class ClassifyResponse(BaseModel):
    group: str
    relation: Union[str, Dict[str, int]]
    full_group: str
    certificates: Optional[List[Dict[str, Any]]] = None
    human: str


def _human_verdict(v: Verdict, x: XSpec) -> str:
    g = pretty_group(v.group_class)
    full = pretty_group(v.full_group_class)
    if v.relation.kind == "equal":
        return f"G = ⟨T_a,T_b⟩ ≅ {g}"
    if x.k == 0:
        head = f"G = ⟨T_a⟩ ≅ {g}"
    else:
        head = f"G ≅ {g}"
    if v.relation.kind == "finite_index":
        return f"{head}, index {v.relation.index} in ⟨T_a,T_b⟩ ≅ {full}"
    return f"{head}, infinite index in ⟨T_a,T_b⟩ ≅ {full}"


@app.post("/classify", response_model=ClassifyResponse,
          response_model_exclude_none=True)
def classify_endpoint(req: ClassifyRequest) -> ClassifyResponse:
    ctx = _context(req.intersection, req.torus)
    x = XSpec(req.form, req.k)
    try:
        verdict, certs = certify(x, ctx)
    except InternalConsistencyError as exc:
        raise HTTPException(status_code=500, detail=str(exc))
    doc = verdict.to_json(certs if req.certificates else None)
    return ClassifyResponse(**doc, human=_human_verdict(verdict, x))


class EqRequest(BaseModel):
    w1: str
    w2: str
    intersection: int = Field(ge=0)
    torus: bool = False


class EqResponse(BaseModel):
    equal: bool


@app.post("/words/eq", response_model=EqResponse)
def eq_endpoint(req: EqRequest) -> EqResponse:
    ctx = _context(req.intersection, req.torus)
    return EqResponse(equal=equal_in_context(_parse(req.w1), _parse(req.w2), ctx))


class ReduceRequest(BaseModel):
    word: str


class ReduceResponse(BaseModel):
    reduced: str
    length: int


@app.post("/words/reduce", response_model=ReduceResponse)
def reduce_endpoint(req: ReduceRequest) -> ReduceResponse:
    reduced = free_reduce(_parse(req.word))
    return ReduceResponse(reduced=print_word(reduced), length=len(reduced))


class RepRequest(BaseModel):
    word: str
    rep: Literal["sl2", "burau", "exponent"]


class RepResponse(BaseModel):
    rep: str
    matrix: Optional[List[List[Union[int, str]]]] = None
    vector: Optional[Tuple[int, int]] = None


@app.post("/words/rep", response_model=RepResponse,
          response_model_exclude_none=True)
def rep_endpoint(req: RepRequest) -> RepResponse:
    w = _parse(req.word)
    if req.rep == "sl2":
        return RepResponse(rep="sl2", matrix=eval_sl2(w).rows())
    if req.rep == "burau":
        rows = [[repr(p) for p in row] for row in eval_burau(w).rows()]
        return RepResponse(rep="burau", matrix=rows)
    return RepResponse(rep="exponent", vector=exponent_vector(w))


class OrderRequest(BaseModel):
    word: str
    intersection: int = Field(ge=0)
    torus: bool = False


class OrderResponse(BaseModel):
    order: Union[int, str]


@app.post("/words/order", response_model=OrderResponse)
def order_endpoint(req: OrderRequest) -> OrderResponse:
    ctx = _context(req.intersection, req.torus)
    return OrderResponse(order=_index_json(order_of(_parse(req.word), ctx)))


class SubgroupRequest(BaseModel):
    generators: List[str]
    word: Optional[str] = None
    dump: bool = False


class SubgroupResponse(BaseModel):
    index: Union[int, str]
    rank: int
    member: Optional[bool] = None
    graph: Optional[str] = None


@app.post("/subgroup", response_model=SubgroupResponse,
          response_model_exclude_none=True)
def subgroup_endpoint(req: SubgroupRequest) -> SubgroupResponse:
    graph = stallings.build_subgroup_graph([_parse(g) for g in req.generators])
    index, rank = graph.index_and_rank()
    return SubgroupResponse(
        index=_index_json(index),
        rank=rank,
        member=graph.member(_parse(req.word)) if req.word is not None else None,
        graph=graph.dump() if req.dump else None,
    )


class WitnessRequest(BaseModel):
    form: FormName
    k: int


class WitnessResponse(BaseModel):
    witness: List[str]
    substituted: str


@app.post("/witness", response_model=WitnessResponse)
def witness_endpoint(req: WitnessRequest) -> WitnessResponse:
    x = XSpec(req.form, req.k)
    try:
        tokens = generation_witness(x)
    except NoWitnessError as exc:
        raise HTTPException(status_code=404, detail=str(exc))
    return WitnessResponse(
        witness=tokens,
        substituted=print_word(free_reduce(substitute_witness(tokens, x))),
    )


class ConjRequest(BaseModel):
    form: FormName
    k: int
    direction: Literal["by_X", "by_X_inverse"] = "by_X"


class ConjResponse(BaseModel):
    conjugate: str


@app.post("/conjugation", response_model=ConjResponse)
def conjugation_endpoint(req: ConjRequest) -> ConjResponse:
    try:
        name = conjugation_class(XSpec(req.form, req.k), req.direction)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return ConjResponse(conjugate=name)


class CurveModel(BaseModel):
    p: int
    q: int

    def to_class(self) -> CurveClass:
        try:
            return CurveClass(self.p, self.q)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))


class TorusIntersectionRequest(BaseModel):
    u: CurveModel
    v: CurveModel


class TorusIntersectionResponse(BaseModel):
    intersection: int


@app.post("/torus/intersection", response_model=TorusIntersectionResponse)
def torus_intersection_endpoint(
    req: TorusIntersectionRequest,
) -> TorusIntersectionResponse:
    return TorusIntersectionResponse(
        intersection=intersection(req.u.to_class(), req.v.to_class())
    )


class TorusTwistRequest(BaseModel):
    v: CurveModel
    w: CurveModel
    n: int = 1


class TorusTwistResponse(BaseModel):
    result: Tuple[int, int]


@app.post("/torus/twist", response_model=TorusTwistResponse)
def torus_twist_endpoint(req: TorusTwistRequest) -> TorusTwistResponse:
    result = twist_action(req.v.to_class(), req.w.to_class(), req.n)
    return TorusTwistResponse(result=result.vector())


class TorusMatrixRequest(BaseModel):
    v: CurveModel


class TorusMatrixResponse(BaseModel):
    matrix: List[List[int]]


@app.post("/torus/matrix", response_model=TorusMatrixResponse)
def torus_matrix_endpoint(req: TorusMatrixRequest) -> TorusMatrixResponse:
    return TorusMatrixResponse(matrix=twist_matrix(req.v.to_class()).rows())


class LatticeRequest(BaseModel):
    v1: Tuple[int, int]
    v2: Tuple[int, int]


class LatticeResponse(BaseModel):
    index: Union[int, str]


@app.post("/lattice/index", response_model=LatticeResponse)
def lattice_endpoint(req: LatticeRequest) -> LatticeResponse:
    return LatticeResponse(index=_index_json(lattice_index(req.v1, req.v2)))


class VerifyRequest(BaseModel):
    suite: str = "all"
    kmax: Optional[int] = None


class VerifyCheck(BaseModel):
    name: str
    ok: bool


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    total: int
    failures: int
    checks: List[VerifyCheck]


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    try:
        checks = run_suite(req.suite, req.kmax)
    except KeyError as exc:
        raise HTTPException(status_code=422, detail=str(exc.args[0]))
    failures = sum(1 for _, ok in checks if not ok)
    return VerifyResponse(
        suite=req.suite,
        passed=failures == 0,
        total=len(checks),
        failures=failures,
        checks=[VerifyCheck(name=n, ok=ok) for n, ok in checks],
    )
