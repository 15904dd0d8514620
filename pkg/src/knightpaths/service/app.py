"""FastAPI service exposing the enumeration engines.

All handlers are pure: a request either computes a value from scratch or
reports a domain violation as HTTP 400.  Engine disagreement (method=all)
and failed verification are not protocol errors; they come back as regular
responses with `agreement`/`passed` flags, and the CLI maps them to exit
codes.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import bijections, checks, closed_forms, counting, oeis, series
from ..paths import (
    Measure,
    PathClass,
    WordError,
    enumerate_partial,
    parse_word,
    render_word,
)
from . import models

#: Listing caps per measure; lifted by force=true.
LIST_CAPS = {Measure.SIZE: 24, Measure.LENGTH: 18}

#: Brute-force counting caps per measure (method=all skips brute beyond).
BRUTE_CAPS = {Measure.SIZE: 20, Measure.LENGTH: 14}


def _path_class(name):
    return PathClass.KNIGHT if name is models.PathClassName.knight else PathClass.ZIGZAG


def _measure(name):
    return Measure.SIZE if name is models.MeasureName.size else Measure.LENGTH


def _closed_count(path_class, measure, n, k):
    """Closed-form count, or None where no closed form exists."""
    if path_class is PathClass.ZIGZAG:
        evaluate = (
            closed_forms.size_coefficient
            if measure is Measure.SIZE
            else closed_forms.length_coefficient
        )
        return evaluate("up", n, k) + evaluate("down", n, k)
    if measure is Measure.LENGTH and k == 0:
        return closed_forms.knight_length_axis_count(n)
    return None


def create_app():
    app = FastAPI(
        title="knight-paths",
        description="Exact enumeration of knight's paths and zigzag knight's paths.",
        version="0.1.0",
    )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/count", response_model=models.CountResponse)
    def count(request: models.CountRequest):
        path_class = _path_class(request.path_class)
        measure = _measure(request.measure)
        n, k = request.value, request.height

        engines = {}
        if request.method in (models.CountMethod.dp, models.CountMethod.all):
            engines["dp"] = counting.count_partial(path_class, measure, n, k)
        if request.method in (models.CountMethod.closed, models.CountMethod.all):
            value = _closed_count(path_class, measure, n, k)
            if value is None:
                if request.method is models.CountMethod.closed:
                    raise HTTPException(
                        status_code=400,
                        detail="no closed form for this class/measure/height",
                    )
            else:
                engines["closed"] = value
        if request.method in (models.CountMethod.brute, models.CountMethod.all):
            if n > BRUTE_CAPS[measure]:
                if request.method is models.CountMethod.brute:
                    raise HTTPException(
                        status_code=400,
                        detail=f"brute-force counting is capped at "
                        f"{measure.value} {BRUTE_CAPS[measure]}",
                    )
            else:
                engines["brute"] = len(enumerate_partial(path_class, measure, n, k))

        agreement = None
        if request.method is models.CountMethod.all:
            agreement = len(set(engines.values())) == 1
        primary = engines.get("dp", next(iter(engines.values())))
        return models.CountResponse(
            path_class=request.path_class,
            measure=request.measure,
            n=n,
            k=k,
            count=str(primary),
            method=request.method,
            engines={name: str(v) for name, v in engines.items()}
            if request.method is models.CountMethod.all
            else None,
            agreement=agreement,
        )

    @app.post("/list", response_model=models.ListResponse)
    def list_words(request: models.ListRequest):
        path_class = _path_class(request.path_class)
        measure = _measure(request.measure)
        cap = LIST_CAPS[measure]
        if request.value > cap and not request.force:
            raise HTTPException(
                status_code=400,
                detail=f"listing is capped at {measure.value} {cap}; "
                f"set force to override",
            )
        words = enumerate_partial(path_class, measure, request.value, request.height)
        return models.ListResponse(
            path_class=request.path_class,
            measure=request.measure,
            n=request.value,
            k=request.height,
            count=len(words),
            words=[render_word(w) for w in words],
        )

    @app.post("/series", response_model=models.SeriesResponse)
    def series_endpoint(request: models.SeriesRequest):
        order = request.order
        gf = request.gf
        builders = {
            models.GeneratingFunctionName.A: lambda: series.knight_size_axis(order),
            models.GeneratingFunctionName.A1: lambda: series.knight_size_height1(order),
            models.GeneratingFunctionName.E: lambda: series.knight_length_axis(order),
            models.GeneratingFunctionName.r_size: lambda: series.small_root(
                Measure.SIZE, order
            ),
            models.GeneratingFunctionName.r_length: lambda: series.small_root(
                Measure.LENGTH, order
            ),
            models.GeneratingFunctionName.axis_size: lambda: series.zigzag_axis(
                Measure.SIZE, order
            ),
            models.GeneratingFunctionName.axis_length: lambda: series.zigzag_axis(
                Measure.LENGTH, order
            ),
            models.GeneratingFunctionName.total_size: lambda: series.zigzag_total(
                Measure.SIZE, order
            ),
            models.GeneratingFunctionName.total_length: lambda: series.zigzag_total(
                Measure.LENGTH, order
            ),
        }
        value = builders[gf]()
        return models.SeriesResponse(
            gf=gf, order=order, text=str(value), coefficients=value.to_strings()
        )

    @app.post("/map", response_model=models.MapResponse)
    def map_word(request: models.MapRequest):
        try:
            if request.bijection is models.BijectionName.psi:
                image = bijections.psi(parse_word(request.word))
            elif request.bijection is models.BijectionName.phi:
                image = bijections.phi(parse_word(request.word))
            elif request.bijection is models.BijectionName.psi_inv:
                image = render_word(bijections.psi_inv(request.word))
            else:
                image = render_word(bijections.phi_inv(request.word))
        except (WordError, bijections.LatticeWordError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return models.MapResponse(
            bijection=request.bijection, input=request.word, image=image
        )

    @app.post("/verify", response_model=models.VerifyResponse)
    def verify(request: models.VerifyRequest):
        results = checks.run_suite(request.suite.value, request.max_value)
        failures = sum(1 for r in results if not r.passed)
        return models.VerifyResponse(
            suite=request.suite,
            passed=failures == 0,
            failures=failures,
            checks=[
                models.CheckReport(
                    suite=r.suite, name=r.name, passed=r.passed, detail=r.detail
                )
                for r in results
            ],
        )

    @app.post("/oeis", response_model=models.OeisResponse)
    def oeis_endpoint(request: models.OeisRequest):
        try:
            result = oeis.compare(
                request.id,
                max_terms=request.max_terms,
                fetch=request.fetch,
                cache_dir=request.cache_dir,
            )
        except oeis.UnknownSequence:
            raise HTTPException(
                status_code=400,
                detail=f"unknown sequence {request.id}; known: "
                + ", ".join(oeis.known_ids()),
            )
        except oeis.FetchFailure as exc:
            return models.OeisResponse(
                id=request.id,
                outcome=models.OeisOutcome.fetch_error,
                detail=str(exc),
            )
        if result.passed:
            outcome = models.OeisOutcome.match
        else:
            outcome = models.OeisOutcome.mismatch
        return models.OeisResponse(
            id=request.id,
            outcome=outcome,
            compared=result.compared,
            source=result.source,
            what=oeis.describe(request.id),
            mismatch_index=result.mismatch_index,
            expected=None if result.expected is None else str(result.expected),
            computed=None if result.computed is None else str(result.computed),
        )

    return app


app = create_app()
