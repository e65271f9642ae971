"""FastAPI service wrapping the lab; the CLI is a thin client of these routes."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import lab, laws
from ..complexes import SimplicialComplex
from ..measure import ParameterVector
from ..sampling import SampleConfig, sample_stream
from . import schemas


def _params(values) -> ParameterVector:
    return ParameterVector(tuple(values))


def _decode(model: schemas.ComplexModel) -> SimplicialComplex:
    return SimplicialComplex.from_json_dict(model.model_dump())


def create_app() -> FastAPI:
    app = FastAPI(title="randcomplex lab", version="0.1.0")

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(lab.EnumerationGuardError)
    async def _guard_error(request: Request, exc: lab.EnumerationGuardError):
        return JSONResponse(status_code=413, content={"detail": str(exc)})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/sample", response_model=schemas.SampleResponse)
    def sample_endpoint(req: schemas.SampleRequest):
        config = SampleConfig(
            n=req.n, r=req.r, params=_params(req.p), seed=req.seed, count=req.count
        )
        return schemas.SampleResponse(
            complexes=[
                schemas.ComplexModel(**Y.to_json_dict()) for Y in sample_stream(config)
            ]
        )

    @app.post("/enumerate", response_model=schemas.EnumerateResponse)
    def enumerate_endpoint(req: schemas.EnumerateRequest):
        if req.p is None:
            space = lab.enumerate_space(req.n, req.r, req.guard)
            entries = [
                schemas.EnumerateEntry(
                    maximal_faces=[list(f) for f in Y.maximal_faces()]
                )
                for Y in space
            ]
        else:
            dist = lab.enumerate_distribution(req.n, req.r, _params(req.p), req.guard)
            entries = [
                schemas.EnumerateEntry(
                    maximal_faces=[list(f) for f in key], probability=prob
                )
                for key, prob in dist.entries.items()
            ]
        return schemas.EnumerateResponse(
            n=req.n, r=req.r, count=len(entries), entries=entries
        )

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify_endpoint(req: schemas.VerifyRequest):
        reports = lab.verify_identities(
            req.n, req.r, [_params(vec) for vec in req.p_grid], req.guard
        )
        return schemas.VerifyResponse(
            reports=[schemas.IdentityReportModel(**vars(rep)) for rep in reports],
            all_passed=all(rep.passed for rep in reports),
        )

    @app.post("/mc", response_model=schemas.ReportModel)
    def mc_endpoint(req: schemas.McRequest):
        config = SampleConfig(
            n=req.n, r=req.r, params=_params(req.p), seed=req.seed, count=req.trials
        )
        report = lab.monte_carlo(req.metric, config)
        return schemas.ReportModel(**vars(report))

    @app.post("/sweep", response_model=schemas.SweepResponse)
    def sweep_endpoint(req: schemas.SweepRequest):
        grid = lab.SweepGrid(
            alpha0=tuple(req.alpha0),
            alpha1=tuple(req.alpha1),
            alpha2=tuple(req.alpha2),
            n=req.n,
            trials=req.trials,
            metric=req.metric,
        )
        rows = lab.sweep(grid, req.seed)
        return schemas.SweepResponse(
            rows=[schemas.SweepRow(**row) for row in rows], csv=lab.sweep_csv(rows)
        )

    @app.post("/check", response_model=schemas.CheckResponse)
    def check_endpoint(req: schemas.CheckRequest):
        verdicts = [lab.check_complex(_decode(c), req.what) for c in req.complexes]
        return schemas.CheckResponse(verdicts=verdicts)

    @app.post("/law/link", response_model=schemas.VectorResponse)
    def law_link(req: schemas.LinkLawRequest):
        return schemas.VectorResponse(p=list(laws.link_parameters(_params(req.p), req.k).p))

    @app.post("/law/links-intersection", response_model=schemas.VectorResponse)
    def law_links_intersection(req: schemas.LinksIntersectionRequest):
        return schemas.VectorResponse(
            p=list(laws.links_intersection_parameters(_params(req.p), req.k).p)
        )

    @app.post("/law/intersection", response_model=schemas.VectorResponse)
    def law_intersection(req: schemas.IntersectionLawRequest):
        return schemas.VectorResponse(
            p=list(laws.intersection_parameters(_params(req.p), _params(req.q)).p)
        )

    @app.post("/law/restriction", response_model=schemas.VectorResponse)
    def law_restriction(req: schemas.RestrictionLawRequest):
        return schemas.VectorResponse(p=list(laws.restriction_parameters(_params(req.p)).p))

    @app.post("/law/degree", response_model=schemas.DegreeLawResponse)
    def law_degree(req: schemas.DegreeLawRequest):
        law = laws.degree_law(_params(req.p), req.n, req.k)
        return schemas.DegreeLawResponse(trials=law.trials, success=law.success, mean=law.mean())

    @app.post("/law/preset", response_model=schemas.VectorResponse)
    def law_preset(req: schemas.PresetRequest):
        factory = laws.preset(req.name)
        if req.name == "meshulam_wallach":
            if req.r is None:
                raise ValueError("meshulam_wallach needs r")
            vec = factory(req.r, req.p)
        elif req.name == "clique":
            if req.r is None:
                raise ValueError("clique needs r")
            vec = factory(req.p, req.r)
        else:
            vec = factory(req.p)
        return schemas.VectorResponse(p=list(vec.p))

    return app
