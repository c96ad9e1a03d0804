"""Market API routes.

Stateless endpoints over the simulator: a one-shot analysis of a single
market instance and full experiment tables. Computation runs in the
thread pool, off the event loop.
"""

import logging

from fastapi import APIRouter, Depends, HTTPException, status
from fastapi.concurrency import run_in_threadpool

from levelk_market.config import Settings, get_settings
from levelk_market.core.experiments import analyze, build_table
from levelk_market.exceptions import ZeroWelfareError
from levelk_market.models import (
    AnalysisReport,
    AnalyzeRequest,
    ExperimentConfig,
    ExperimentResponse,
    LevelSpec,
)

logger = logging.getLogger(__name__)

router = APIRouter(prefix=get_settings().api_v1_prefix, tags=["markets"])


@router.post("/markets/analyze", response_model=AnalysisReport)
async def analyze_market(
    request: AnalyzeRequest,
    settings: Settings = Depends(get_settings),
):
    """Analyze one market instance.

    Args:
        request: Market constants, levels and distribution parameters
        settings: Application settings dependency

    Returns:
        AnalysisReport: Quantities, welfare, PoR and planner recommendations

    Raises:
        HTTPException: 400 for invalid levels, 422 for a zero-welfare ratio
    """
    try:
        spec = LevelSpec(k=request.k, delta=request.delta)
        report = await run_in_threadpool(
            analyze,
            request.params,
            spec,
            tau=request.tau,
            k_max=request.k_max,
            settings=settings,
        )
        logger.info(f"Analyzed market f={request.params.f} k={spec.k} delta={spec.delta}")
        return report

    except ZeroWelfareError as e:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e))
    except ValueError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))


@router.post("/experiments", response_model=ExperimentResponse)
async def run_experiment_table(
    config: ExperimentConfig,
    settings: Settings = Depends(get_settings),
):
    """Compute an experiment table; the output path of the config is ignored.

    Args:
        config: Experiment configuration
        settings: Application settings dependency

    Returns:
        ExperimentResponse: Column names and one record per sweep point

    Raises:
        HTTPException: 400 when the sweep is invalid
    """
    try:
        frame = await run_in_threadpool(build_table, config, workers=settings.sweep_workers)
        logger.info(f"Computed {config.experiment.value}: {len(frame)} rows")
        rows = frame.astype(object).where(frame.notna(), None).to_dict(orient="records")
        return ExperimentResponse(
            experiment=config.experiment, columns=list(frame.columns), rows=rows
        )

    except ZeroWelfareError as e:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e))
    except ValueError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))
