import json

import pytest
from fastapi.testclient import TestClient

from foldex.formats import polyline_to_dict
from foldex.service import create_app
from foldex.synth import CombSpec, generate_comb


@pytest.fixture()
def client():
    return TestClient(create_app())


def comb_doc(teeth=3, name="comb"):
    p, _ = generate_comb(CombSpec(teeth=teeth))
    return polyline_to_dict(p, name=name)


class TestUpload:
    def test_created_with_id(self, client):
        r = client.post("/api/datasets", json=comb_doc())
        assert r.status_code == 201
        assert r.json()["id"]

    def test_distinct_ids_for_same_body(self, client):
        doc = comb_doc()
        a = client.post("/api/datasets", json=doc).json()["id"]
        b = client.post("/api/datasets", json=doc).json()["id"]
        assert a != b

    def test_single_vertex_rejected(self, client):
        r = client.post("/api/datasets",
                        json={"version": 1, "vertices": [[0, 0]]})
        assert r.status_code == 400
        assert "error" in r.json()

    def test_invalid_json_rejected(self, client):
        r = client.post("/api/datasets", content=b"{nope",
                        headers={"content-type": "application/json"})
        assert r.status_code == 400

    def test_listing(self, client):
        ds = client.post("/api/datasets", json=comb_doc()).json()["id"]
        assert ds in client.get("/api/datasets").json()["ids"]


class TestAnalysis:
    def test_defaults_find_comb_folds(self, client):
        ds = client.post("/api/datasets", json=comb_doc()).json()["id"]
        r = client.get(f"/api/datasets/{ds}/analysis")
        assert r.status_code == 200
        body = r.json()
        assert len(body["folds"]) == 3
        assert body["orientation"]["m"] == len(body["orientation"]["smoothed"])

    def test_parameters_change_result(self, client):
        ds = client.post("/api/datasets", json=comb_doc()).json()["id"]
        loose = client.get(f"/api/datasets/{ds}/analysis").json()
        tight = client.get(f"/api/datasets/{ds}/analysis",
                           params={"tau": 3.1}).json()
        assert len(tight["folds"]) <= len(loose["folds"])

    def test_out_of_range_tau(self, client):
        ds = client.post("/api/datasets", json=comb_doc()).json()["id"]
        r = client.get(f"/api/datasets/{ds}/analysis", params={"tau": 7})
        assert r.status_code == 400

    def test_non_numeric_param(self, client):
        ds = client.post("/api/datasets", json=comb_doc()).json()["id"]
        r = client.get(f"/api/datasets/{ds}/analysis", params={"delta": "wide"})
        assert r.status_code == 400

    def test_unknown_dataset(self, client):
        r = client.get("/api/datasets/deadbeef/analysis")
        assert r.status_code == 404

    def test_repeat_is_byte_identical(self, client):
        ds = client.post("/api/datasets", json=comb_doc()).json()["id"]
        a = client.get(f"/api/datasets/{ds}/analysis", params={"delta": 1.0})
        b = client.get(f"/api/datasets/{ds}/analysis", params={"delta": 1.0})
        assert a.content == b.content


class TestStatic:
    def test_placeholder_index(self, client):
        r = client.get("/")
        assert r.status_code == 200
        assert "foldex" in r.text

    def test_head_index(self, client):
        assert client.head("/").status_code == 200

    def test_static_dir_served(self, tmp_path):
        (tmp_path / "index.html").write_text("<html><body>ui</body></html>")
        (tmp_path / "app.js").write_text("console.log(1);")
        c = TestClient(create_app(static_dir=str(tmp_path)))
        assert "ui" in c.get("/").text
        assert c.get("/app.js").status_code == 200
        assert c.get("/missing.js").status_code == 404


class TestPersistence:
    def test_datasets_survive_restart(self, tmp_path):
        c1 = TestClient(create_app(persist_dir=str(tmp_path)))
        ds = c1.post("/api/datasets", json=comb_doc(teeth=2)).json()["id"]
        c2 = TestClient(create_app(persist_dir=str(tmp_path)))
        r = c2.get(f"/api/datasets/{ds}/analysis")
        assert r.status_code == 200
        assert len(r.json()["folds"]) == 2
