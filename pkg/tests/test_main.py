import pytest
from fastapi.testclient import TestClient

from symtope.api.dependencies import get_settings
from symtope.core.config import Settings
from symtope.main import app, create_app

client = TestClient(app)


@pytest.fixture
def tight_client(tight_settings):
    """Client whose endpoints see small guards"""
    tight_app = create_app()
    tight_app.dependency_overrides[get_settings] = lambda: tight_settings
    return TestClient(tight_app)


def test_health_check():
    """Test the health check endpoint"""
    response = client.get("/health")
    assert response.status_code == 200
    data = response.json()
    assert data["status"] == "ok"
    assert "symtope" in data["message"]


def test_api_health_check():
    response = client.get("/api/v1/health/health")
    assert response.status_code == 200
    assert response.json()["schema"] == "symtope/1"


def test_api_docs():
    """Test that API docs are accessible"""
    response = client.get("/docs")
    assert response.status_code == 200
    assert "text/html" in response.headers["content-type"]


def test_openapi_json():
    """Test that OpenAPI JSON is accessible"""
    response = client.get("/api/v1/openapi.json")
    assert response.status_code == 200
    data = response.json()
    assert "openapi" in data
    assert data["info"]["title"] == "symtope"
    assert "/api/v1/analyze" in data["paths"]


def test_custom_project_name():
    custom = TestClient(create_app(Settings(PROJECT_NAME="polytopes")))
    assert custom.get("/api/v1/openapi.json").json()["info"]["title"] == "polytopes"


# Corpus
def test_list_corpus():
    response = client.get("/api/v1/corpus", params={"limit": 3})
    assert response.status_code == 200
    body = response.json()
    assert len(body["data"]["entries"]) == 3
    assert body["meta"]["schema_version"] == "symtope/1"


def test_get_builtin():
    response = client.get("/api/v1/corpus/tetra_boundary")
    assert response.status_code == 200
    facets = response.json()["data"]["facets"]
    assert facets == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]


def test_unknown_builtin_is_404():
    response = client.get("/api/v1/corpus/klein_bottle")
    assert response.status_code == 404
    assert response.json()["detail"]["error"]["code"] == "UNKNOWN_BUILTIN"


# Analysis
def test_analyze_builtin():
    response = client.post(
        "/api/v1/analyze",
        json={"builtin": "triangle", "options": {"which": "homology"}},
    )
    assert response.status_code == 200
    data = response.json()["data"]
    assert data["schema"] == "symtope/1"
    assert data["polytopes"]["homology"]["vertices"] == 6


def test_analyze_inline_complex():
    payload = {
        "complex": {"name": "disk", "facets": [[1, 2, 3], [2, 3, 4]]},
        "options": {"which": "cohomology"},
    }
    response = client.post("/api/v1/analyze", json=payload)
    assert response.status_code == 200
    assert response.json()["data"]["name"] == "disk"


def test_analyze_needs_exactly_one_source():
    response = client.post("/api/v1/analyze", json={})
    assert response.status_code == 400
    assert response.json()["detail"]["error"]["code"] == "BAD_REQUEST"


def test_analyze_unknown_builtin():
    response = client.post("/api/v1/analyze", json={"builtin": "klein_bottle"})
    assert response.status_code == 404


def test_analyze_invalid_complex():
    response = client.post("/api/v1/analyze", json={"complex": {"facets": [[0, 1]]}})
    assert response.status_code == 422


def test_analyze_reports_guard_skips(tight_client):
    response = tight_client.post(
        "/api/v1/analyze",
        json={"builtin": "bjorner", "options": {"which": "homology", "hstar": True}},
    )
    assert response.status_code == 200
    summary = response.json()["data"]["polytopes"]["homology"]
    assert summary["reflexivity"]["skipped"] == "max_hull_dim"
    assert summary["facet_count"] == 672


def test_compare():
    payload = {
        "first": {"builtin": "triangle"},
        "second": {"builtin": "cycle_3"},
        "which": "homology",
    }
    response = client.post("/api/v1/compare", json=payload)
    assert response.status_code == 200
    assert response.json()["data"]["fingerprints_agree"] is True


def test_sweep():
    response = client.post("/api/v1/sweep", json={"builtin": "two_triangles"})
    assert response.status_code == 200
    assert response.json()["data"]["reflexive"] == 3
