from fastapi import APIRouter

from symtope.api.api_v1.endpoints import analysis, corpus, health

api_router = APIRouter()

api_router.include_router(health.router, prefix="/health", tags=["health"])
api_router.include_router(corpus.router, prefix="/corpus", tags=["corpus"])
api_router.include_router(analysis.router, tags=["analysis"])
