"""FastAPI front end over the exact-spectrum and number-theory machinery.

Every computation is pure and deterministic, so the endpoints are plain
request/response wrappers: 404 for an unknown group, 400 for malformed or
out-of-range rationals, 200 with the exact result otherwise.
"""

from __future__ import annotations

from fractions import Fraction as Q

from fastapi import FastAPI, HTTPException

from . import __version__
from .groups import GROUP_NAMES, descriptor, GroupDescriptor
from .number_theory import (
    jacobi_symbol,
    l2,
    l3,
    n2,
    n2_prime,
    n3,
    theta_coeffs,
)
from .schemas import (
    CheckRequest,
    CheckResponse,
    GroupInfo,
    MismatchOut,
    NumberTheoryRequest,
    NumberTheoryResponse,
    RationalSyntaxError,
    SpectrumEntryOut,
    SpectrumRecord,
    SpectrumRequest,
    ValidateRequest,
    ValidateResponse,
    WeightOut,
    format_rational,
    parse_rational,
)
from .spectrum import enumerate_spectrum
from .theorems import check_eigenvalue, cross_validate

app = FastAPI(title="liespec", version=__version__)


def _rational(text: str, name: str, positive: bool = False, negative: bool = False) -> Q:
    try:
        q = parse_rational(text)
    except RationalSyntaxError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None
    if positive and q <= 0:
        raise HTTPException(status_code=400, detail=f"{name} must be positive, got {text!r}")
    if negative and q >= 0:
        raise HTTPException(status_code=400, detail=f"{name} must be negative, got {text!r}")
    return q


def _group(name: str) -> GroupDescriptor:
    try:
        return descriptor(name)
    except KeyError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from None


@app.get("/groups", response_model=list[GroupInfo])
def list_groups() -> list[GroupInfo]:
    return [
        GroupInfo(
            name=g.name,
            display_name=g.display_name,
            root_system=g.root_system_name,
            dim=g.dim,
            pi1_order=g.pi1_order,
            center_order=g.center_order,
            aliases=list(g.aliases),
        )
        for g in (descriptor(n) for n in GROUP_NAMES)
    ]


@app.post("/spectrum", response_model=SpectrumRecord, response_model_by_alias=True)
def spectrum(req: SpectrumRequest) -> SpectrumRecord:
    g = _group(req.group)
    cutoff = _rational(req.cutoff, "cutoff", positive=True)
    gamma = _rational(req.gamma, "gamma", positive=True)
    entries = enumerate_spectrum(g, cutoff, gamma, workers=max(1, req.workers))
    return SpectrumRecord(
        group=g.name,
        gamma=format_rational(gamma),
        entries=[
            SpectrumEntryOut(
                lam=format_rational(e.lam),
                multiplicity=e.multiplicity,
                weights=[
                    WeightOut(Lambda=[x - 1 for x in nu], nu=list(nu), dim=d)
                    for nu, d in e.weights
                ],
            )
            for e in entries
        ],
    )


@app.post("/check", response_model=CheckResponse, response_model_by_alias=True)
def check(req: CheckRequest) -> CheckResponse:
    g = _group(req.group)
    lam = _rational(req.lam, "lambda", negative=True)
    gamma = _rational(req.gamma, "gamma", positive=True)
    v = check_eigenvalue(g, lam, gamma)
    return CheckResponse(
        group=g.name,
        lam=format_rational(lam),
        gamma=format_rational(gamma),
        is_eigenvalue=v.is_eigenvalue,
        weight_count=v.weight_count,
        case_tag=v.case_tag,
        k=v.trace.k,
        l2=v.trace.l2,
        l3=v.trace.l3,
        formula=v.trace.formula,
    )


@app.post("/validate", response_model=ValidateResponse)
def validate(req: ValidateRequest) -> ValidateResponse:
    g = _group(req.group)
    cutoff = _rational(req.cutoff, "cutoff", positive=True)
    report = cross_validate(g, cutoff)
    return ValidateResponse(
        group=report.group,
        cutoff=format_rational(report.cutoff),
        candidates_checked=report.candidates_checked,
        ok=report.ok,
        mismatches=[
            MismatchOut(
                lam=format_rational(m.lam),
                enumerated_weights=m.enumerated_weights,
                theorem_weights=m.theorem_weights,
                case_tag=m.case_tag,
            )
            for m in report.mismatches
        ],
    )


def _positive_int(text: str, name: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise HTTPException(status_code=400, detail=f"{name} must be an integer, got {text!r}") from None
    if value < 1:
        raise HTTPException(status_code=400, detail=f"{name} must be >= 1, got {value}")
    return value


@app.post("/nt", response_model=NumberTheoryResponse)
def number_theory(req: NumberTheoryRequest) -> NumberTheoryResponse:
    op = req.op.strip().lower()
    args = req.args
    try:
        if op in ("n2", "n2p", "n3", "l2", "l3"):
            if len(args) != 1:
                raise HTTPException(status_code=400, detail=f"{op} takes one integer argument")
            k = _positive_int(args[0], "k")
            fn = {"n2": n2, "n2p": n2_prime, "n3": n3, "l2": l2, "l3": l3}[op]
            return NumberTheoryResponse(op=op, args=args, result=fn(k))
        if op == "theta":
            if len(args) != 2:
                raise HTTPException(status_code=400, detail="theta takes a lattice name and max_k")
            max_k = _positive_int(args[1], "max_k")
            try:
                coeffs = theta_coeffs(args[0], max_k)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
            return NumberTheoryResponse(op=op, args=args, result=coeffs)
        if op == "jacobi":
            if len(args) != 2:
                raise HTTPException(status_code=400, detail="jacobi takes two integers a, n")
            try:
                a = int(args[0])
            except ValueError:
                raise HTTPException(status_code=400, detail=f"a must be an integer, got {args[0]!r}") from None
            n = _positive_int(args[1], "n")
            try:
                return NumberTheoryResponse(op=op, args=args, result=jacobi_symbol(a, n))
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
    except HTTPException:
        raise
    raise HTTPException(status_code=400, detail=f"unknown nt operation {req.op!r}")
