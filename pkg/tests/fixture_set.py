"""The CLI fixture set: input files plus one invocation per subcommand and fixture."""
import json
from pathlib import Path

from perscap.cli import run

OCTA_CYCLE = [[f"t{i}", "1"] for i in range(4)] + [[f"u{i}", "-1"] for i in range(4)]


def _write(root: Path, name: str, obj) -> str:
    path = root / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj, indent=1) + "\n")
    return str(path)


def write_fixture_set(root) -> dict:
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    p = {}

    def fixture(name, out, *extra):
        p[out] = str(root / f"{out}.json")
        p[out + "-action"] = str(root / f"{out}-action.json")
        code = run(["fixture", name, *extra, "--out", p[out], "--action-out", p[out + "-action"]])
        assert code == 0, (name, extra)

    fixture("point", "point", "--k", "4")
    fixture("polygon-circle", "hexagon", "--k", "6", "--m", "1")
    fixture("polygon-circle", "circle-2x3", "--k", "3", "--m", "2", "--field", "3")
    fixture("bipyramid-sphere", "sphere3", "--k", "3", "--field", "3")
    fixture("bipyramid-sphere", "octa", "--k", "4", "--heights=-1,0,1")
    fixture("bipyramid-sphere", "octa-R", "--k", "4", "--heights", "0,1.25,2.5")
    p["interval"] = _write(root, "interval.json", {"field": {"kind": "prime", "q": 2}, "cells": [
        {"id": "a", "dim": 0, "birth": "0", "boundary": []},
        {"id": "b", "dim": 0, "birth": "0", "boundary": []},
        {"id": "e", "dim": 1, "birth": "1", "boundary": [["a", "1"], ["b", "1"]]}]})
    p["bad"] = _write(root, "bad.json", {"field": {"kind": "prime", "q": 2}, "cells": [
        {"id": "a", "dim": 0, "birth": "1", "boundary": []},
        {"id": "b", "dim": 0, "birth": "0", "boundary": []},
        {"id": "e", "dim": 1, "birth": "0", "boundary": [["a", "1"], ["b", "1"]]}]})
    p["interval-class"] = _write(root, "interval-class.json", {"level": "0", "degree": 0, "chain": [["a", "1"], ["b", "1"]]})
    p["octa-class"] = _write(root, "octa-class.json", {"level": "1", "degree": 2, "chain": OCTA_CYCLE})
    kappa = {"level": "-0.5", "degree": 0, "chain": [["s", "1"]]}
    eta = {"level": "-0.5", "degree": 2, "chain": OCTA_CYCLE}
    p["spec-eta"] = _write(root, "spec-eta.json", {"class": eta, "kill": [kappa]})
    p["spec-kappa"] = _write(root, "spec-kappa.json", {"class": kappa, "kill": [kappa]})
    p["spec-auto"] = _write(root, "spec-auto.json", {"kill": "auto"})
    p["saddle"] = _write(root, "saddle.json", [["1", "0", "1"], ["0", "-1", "0"], ["1", "0", "1"]])
    p["vertex-function"] = _write(root, "vertex-function.json", {
        "complex": {"field": {"kind": "prime", "q": 2}, "cells": [
            {"id": "a", "dim": 0}, {"id": "b", "dim": 0}, {"id": "c", "dim": 0},
            {"id": "ab", "dim": 1, "boundary": [["a", "1"], ["b", "1"]]},
            {"id": "bc", "dim": 1, "boundary": [["b", "1"], ["c", "1"]]},
            {"id": "ac", "dim": 1, "boundary": [["a", "1"], ["c", "1"]]}]},
        "values": {"a": "0", "b": "0.5", "c": "2"}})
    p["dgm-a"] = _write(root, "dgm-a.csv", "degree,birth,death\n0,0,2\n0,-1,inf\n1,1,4\n")
    p["dgm-b"] = _write(root, "dgm-b.csv", "degree,birth,death\n0,0,3\n0,-1.5,inf\n")
    return p


def commands(p: dict) -> list:
    """One argv per CLI use, covering every subcommand."""
    return [
        ["validate", p["octa"]],
        ["validate", p["hexagon"], "--action", p["hexagon-action"]],
        ["validate", p["bad"]],
        ["persist", p["octa"], "--field", "2"],
        ["persist", p["octa-R"]],
        ["persist", p["interval"], "--field", "rational"],
        ["window", p["interval"], "--a", "0", "--b", "1"],
        ["window", p["octa"], "--a=-inf", "--b", "inf", "--degree", "2"],
        ["window", p["sphere3"], "--a=-inf", "--b", "inf", "--action", p["sphere3-action"], "--cap", "8"],
        ["class-rho", p["interval"], "--class", p["interval-class"]],
        ["class-rho", p["octa"], "--class", p["octa-class"]],
        ["capacity", p["octa-R"], "--degree", "2", "--spec", p["spec-eta"]],
        ["capacity", p["octa-R"], "--degree", "0", "--spec", p["spec-kappa"]],
        ["capacity", p["octa-R"], "--degree", "2"],
        ["equiv-persist", p["point"], p["point-action"], "--k", "4", "--field", "2", "--cap", "10"],
        ["equiv-persist", p["sphere3"], p["sphere3-action"], "--cap", "8"],
        ["equiv-persist", p["circle-2x3"], p["circle-2x3-action"], "--cap", "6"],
        ["equiv-capacity", p["octa-R"], p["octa-R-action"], "--cap", "8", "--degree", "2"],
        ["equiv-capacity", p["octa-R"], p["octa-R-action"], "--cap", "8", "--degree", "4", "--spec", p["spec-auto"]],
        ["bottleneck", p["dgm-a"], p["dgm-b"]],
        ["bottleneck", p["dgm-a"], p["dgm-b"], "--degree", "0"],
        ["fixture", "bipyramid-sphere", "--k", "5", "--field", "5"],
        ["fixture", "polygon-circle", "--k", "2", "--m", "3"],
        ["sublevel", p["saddle"]],
        ["sublevel", p["vertex-function"], "--field", "3"],
        ["plot", p["dgm-a"], "--kind", "diagram"],
        ["plot", p["dgm-a"], "--kind", "barcode"],
    ]
