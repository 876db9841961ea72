from typing import Optional

import structlog
from fastapi import FastAPI
from sentry_sdk.integrations.fastapi import FastApiIntegration

from symtope.api.api_v1.api import api_router
from symtope.core.config import Settings, resolve
from symtope.core.logging import configure_logging, configure_sentry

logger = structlog.get_logger(__name__)


def create_app(settings: Optional[Settings] = None) -> FastAPI:
    settings = resolve(settings)
    configure_logging(settings)
    configure_sentry(
        settings, integrations=[FastApiIntegration(transaction_style="url")]
    )

    app = FastAPI(
        title=settings.PROJECT_NAME,
        version=settings.VERSION,
        description=(
            "Exact symmetric homology and cohomology polytopes of simplicial complexes"
        ),
        openapi_url=f"{settings.API_V1_STR}/openapi.json",
    )
    app.include_router(api_router, prefix=settings.API_V1_STR)

    @app.get("/health")
    async def health():
        """
        Health check endpoint
        """
        return {"status": "ok", "message": f"{settings.PROJECT_NAME} is healthy"}

    logger.info("app_created", version=settings.VERSION)
    return app


app = create_app()


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="0.0.0.0", port=8000)
