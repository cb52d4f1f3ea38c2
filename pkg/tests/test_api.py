"""HTTP surface, exercised in-process through the FastAPI test client."""


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_evolve(client):
    response = client.post("/v1/evolve", json={"state": "11100000", "steps": 2})
    assert response.status_code == 200
    body = response.json()
    assert body["rows"] == ["11100000", "00011100", "10000011"]
    assert body["blocks"] == "Q=3;W=5;offset=6"
    assert body["L"] == 8


def test_young_graph_example(client):
    response = client.post("/v1/young", json={"state": "Q=5,1,6;W=3,2,12"})
    assert response.status_code == 200
    body = response.json()
    assert body["rows"] == [7, 4, 1]
    assert body["columns"] == [3, 2, 2, 2, 1, 1, 1]
    assert body["U"] == [12, 5, 1]
    assert body["P"] == [6, 1]
    assert body["M"] == -14.5


def test_invariants_agree(client):
    body = client.post("/v1/invariants", json={"state": "Q=5,1,6;W=3,2,12"}).json()
    assert body["agree"] is True
    assert body["U"] == body["young"]["U"]


def test_cycle(client):
    body = client.post("/v1/cycle", json={"state": "1110100000"}).json()
    assert (body["f"], body["r"]) == (30, 3)
    assert (body["f_formula"], body["r_formula"]) == (30, 3)
    assert body["internal_symmetry"] is False


def test_cycle_cap_exceeded(client):
    response = client.post("/v1/cycle", json={"state": "Q=5,1,6;W=3,2,12", "cap": 10})
    assert response.status_code == 400
    assert response.json()["detail"]["error"] == "BoundedSearchError"


def test_degenerate_state_is_400(client):
    response = client.post("/v1/young", json={"state": "1111"})
    assert response.status_code == 400
    assert response.json()["detail"]["error"] == "DegenerateStateError"


def test_negative_steps_fail_validation(client):
    response = client.post("/v1/evolve", json={"state": "11100000", "steps": -1})
    assert response.status_code == 422


def test_toda(client):
    response = client.post(
        "/v1/toda", json={"state": "Q=3,1;W=5,6", "eps": [0.1, 0.05, 0.02], "steps": 4}
    )
    assert response.status_code == 200
    body = response.json()
    assert body["N"] == 2
    assert body["steps"] == 4
    assert len(body["max_error_Q"]) == 3


def test_toda_rejects_increasing_ladder(client):
    response = client.post("/v1/toda", json={"state": "Q=3,1;W=5,6", "eps": [0.02, 0.1]})
    assert response.status_code == 422


def test_spectrum(client):
    response = client.post("/v1/spectrum", json={"state": "Q=3,1;W=5,6", "eps": 0.1})
    assert response.status_code == 200
    body = response.json()
    assert body["valuations"]["predicted"] == [3, 1]
    assert len(body["lambda"]) == 2
    assert len(body["mu"]) == 1


def test_spectrum_low_precision_is_400(client):
    response = client.post("/v1/spectrum", json={"state": "Q=5,1,6;W=3,2,12", "eps": 0.1, "prec": 64})
    assert response.status_code == 400
    body = response.json()["detail"]
    assert body["error"] == "PrecisionError"
    assert "901" in body["detail"]
