"""JSON round trips, strict parsing diagnostics, and the CLI surface."""

from __future__ import annotations

import io
import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from riesz_lab import (
    Element,
    Functional,
    Measure,
    Polynomial,
    ProductFunctionalPolynomial,
    Space,
    SymTensor,
    attach_instance,
    dumps_canonical,
    orthogonal_additivity_check,
    parse_element,
    parse_instance,
    parse_instance_file,
    reverify_counterexample,
    structured_pair_count,
    to_obj,
    to_polynomial,
)
from riesz_lab.checks import OA_DISJOINT_ADD
from riesz_lab.cli import main
from riesz_lab.errors import MalformedInstanceError
from riesz_lab.jsonio import parse_rational
from riesz_lab.report import PropertyResult, Report
from riesz_lab.sampling import element, matrix_form, measure, rng_for, sym_tensor

F3 = Space.finite(3)
OM = Space.omega_plus_one()


def _cli(*argv, env=None):
    proc = subprocess.run(
        [sys.executable, "-m", "riesz_lab", *argv],
        capture_output=True,
        env={**os.environ, **(env or {})},
    )
    return proc.returncode, proc.stdout, proc.stderr


class TestRationals:
    def test_accepted_forms(self):
        assert parse_rational("3", "$") == 3
        assert parse_rational("-1/2", "$") == Fraction(-1, 2)
        assert parse_rational(4, "$") == 4

    def test_zero_denominator(self):
        with pytest.raises(MalformedInstanceError) as err:
            parse_rational("1/0", "$.atoms[0].weight")
        assert "zero denominator" in str(err.value)
        assert "$.atoms[0].weight" in str(err.value)

    def test_rejected_forms(self):
        for bad in (True, 1.5, None, "three"):
            with pytest.raises(MalformedInstanceError):
                parse_rational(bad, "$")


class TestRoundTrips:
    def test_instances_survive_serialisation(self):
        for i in range(60):
            rng = rng_for("roundtrip", i)
            space = F3 if i % 2 else OM
            candidates = [element(rng, space), measure(rng, space), to_polynomial(measure(rng, space), 2 + i % 3)]
            if space.is_finite:
                candidates += [
                    sym_tensor(rng, space, 2 + i % 3),
                    matrix_form(rng, space),
                    Polynomial.from_tensor(sym_tensor(rng, space, 2)),
                ]
            for original in candidates:
                parsed = parse_instance(json.loads(dumps_canonical(to_obj(original))))
                assert parsed == original

    def test_product_polynomial_round_trip(self):
        poly = ProductFunctionalPolynomial(
            3, Functional.of_measure(Measure(OM, {2: Fraction(1, 3)}, limit_atom=-1)), Functional.limit()
        )
        assert parse_instance(to_obj(poly)) == poly

    def test_descriptor_shape(self):
        from riesz_lab import carrier, null_ideal

        poly = to_polynomial(Measure(OM, {3: 1}, limit_atom=1), 2)
        assert to_obj(carrier(poly)) == {"space": {"kind": "omega1"}, "isolatedSupport": [3]}
        assert to_obj(null_ideal(poly)) == {
            "space": {"kind": "omega1"},
            "cofinite": True,
            "excludedPoints": [3],
            "includesLimit": False,
        }


class TestParseErrors:
    def test_wrong_value_count(self):
        obj = {"space": {"kind": "finite", "n": 3}, "values": ["1", "2"]}
        with pytest.raises(MalformedInstanceError) as err:
            parse_element(obj)
        assert "expected 3 values" in str(err.value)

    def test_duplicate_atom_point(self):
        obj = {
            "space": {"kind": "omega1"},
            "atoms": [{"point": 2, "weight": "1"}, {"point": 2, "weight": "3"}],
        }
        with pytest.raises(MalformedInstanceError) as err:
            parse_instance(obj)
        assert "duplicate atom point 2" in str(err.value)
        assert "atoms[1].point" in str(err.value)

    def test_duplicate_tensor_index_after_sorting(self):
        obj = {
            "m": 2,
            "space": {"kind": "finite", "n": 2},
            "entries": [{"idx": [1, 2], "val": "1"}, {"idx": [2, 1], "val": "2"}],
        }
        with pytest.raises(MalformedInstanceError) as err:
            parse_instance(obj)
        assert "duplicate index [1, 2]" in str(err.value)

    def test_declared_oa_with_off_diagonal_mass(self):
        obj = {
            "degree": 2,
            "kind": "tensor",
            "oa": True,
            "tensor": {
                "m": 2,
                "space": {"kind": "finite", "n": 2},
                "entries": [{"idx": [1, 2], "val": "1"}],
            },
        }
        with pytest.raises(MalformedInstanceError) as err:
            parse_instance(obj)
        assert "off-diagonal entry [1, 2]" in str(err.value)
        obj.pop("oa")
        assert isinstance(parse_instance(obj), Polynomial)

    def test_unknown_kinds(self):
        with pytest.raises(MalformedInstanceError):
            parse_instance({"space": {"kind": "interval"}, "values": []})
        with pytest.raises(MalformedInstanceError):
            parse_instance({"degree": 2, "kind": "fourier"})
        with pytest.raises(MalformedInstanceError):
            parse_instance({"degree": 2, "kind": "product", "phi": {"kind": "nope"}, "psi": {"kind": "limit"}})

    def test_matrix_shape(self):
        obj = {"space": {"kind": "finite", "n": 2}, "rows": [["1", "2"]]}
        with pytest.raises(MalformedInstanceError) as err:
            parse_instance(obj)
        assert "expected 2 rows" in str(err.value)

    def test_unrecognised_shape(self):
        with pytest.raises(MalformedInstanceError):
            parse_instance({"foo": 1})
        with pytest.raises(MalformedInstanceError):
            parse_instance([1, 2])

    def test_booleans_are_not_integers(self):
        obj = {"space": {"kind": "finite", "n": True}, "values": ["1"]}
        with pytest.raises(MalformedInstanceError):
            parse_instance(obj)

    def test_stream_and_invalid_json(self, tmp_path):
        stream = io.StringIO(dumps_canonical(to_obj(Element.finite([1, 2]))))
        assert parse_instance_file(stream) == Element.finite([1, 2])
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(MalformedInstanceError) as err:
            parse_instance_file(str(bad))
        assert "invalid JSON" in str(err.value)


class TestCanonicalJson:
    def test_key_order_is_irrelevant(self):
        a = {"b": 1, "a": [1, 2], "c": {"y": "2", "x": "1"}}
        b = {"c": {"x": "1", "y": "2"}, "a": [1, 2], "b": 1}
        assert dumps_canonical(a) == dumps_canonical(b)
        assert dumps_canonical(a).endswith("\n")

    def test_atom_lists_are_sorted(self):
        mu = Measure(F3, {3: 1, 1: 2})
        points = [a["point"] for a in to_obj(mu)["atoms"]]
        assert points == [1, 3]


class TestReverify:
    def _failing_payload(self):
        poly = Polynomial.from_tensor(SymTensor(F3, 2, {(1, 2): 1}))
        verdict = orthogonal_additivity_check(
            poly, OA_DISJOINT_ADD, samples=structured_pair_count(3, 2), seed=0
        )
        assert not verdict.passed
        return attach_instance(verdict.counterexample, to_obj(poly))

    def test_replay_after_json_round_trip(self):
        payload = json.loads(dumps_canonical(self._failing_payload()))
        assert reverify_counterexample(payload)

    def test_tampered_sides_fail(self):
        payload = self._failing_payload()
        tampered = dict(payload, lhs="0")
        assert not reverify_counterexample(tampered)

    def test_missing_field(self):
        payload = self._failing_payload()
        payload.pop("instance")
        with pytest.raises(MalformedInstanceError):
            reverify_counterexample(payload)


class TestCliSubprocess:
    def test_byte_identical_reports(self):
        argv = ("check", "--suite", "orthosymmetry", "--n", "3", "--m", "2",
                "--trials", "15", "--seed", "7", "--format", "json")
        code_a, out_a, _ = _cli(*argv)
        code_b, out_b, _ = _cli(*argv)
        assert code_a == code_b == 0
        assert out_a == out_b
        report = json.loads(out_a)
        assert report["suite"] == "orthosymmetry"
        assert all(p["passed"] for p in report["properties"])

    def test_positional_suite_and_out_file(self, tmp_path):
        out = tmp_path / "report.json"
        code, stdout, _ = _cli(
            "check", "lattice-axioms", "--trials", "5", "--seed", "1",
            "--format", "json", "--out", str(out),
        )
        assert code == 0 and stdout == b""
        assert json.loads(out.read_bytes())["suite"] == "lattice-axioms"

    def test_env_seed_matches_explicit_flag(self):
        argv = ("check", "--suite", "rearrangement", "--trials", "10", "--format", "json")
        _, out_env, _ = _cli(*argv, env={"RIESZ_LAB_SEED": "123"})
        _, out_flag, _ = _cli(*argv, "--seed", "123")
        assert out_env == out_flag
        assert json.loads(out_env)["config"]["seed"] == "123"

    def test_demo_counterexample(self):
        code, out, _ = _cli("demo", "counterexample", "--m", "3", "--depth", "6")
        assert code == 0
        payload = json.loads(out)
        assert payload["gap"] == "1"
        assert len(payload["netSamples"]) == 6
        assert set(payload["values"]) == {"0"}
        assert payload["basePoint"] == {"space": {"kind": "omega1"}, "prefix": [], "tail": "1"}

    def test_carrier_and_nakano(self, tmp_path):
        p_path = tmp_path / "p.json"
        q_path = tmp_path / "q.json"
        p_path.write_text(dumps_canonical(to_obj(to_polynomial(Measure(OM, {}, limit_atom=1), 2))))
        q_path.write_text(dumps_canonical(to_obj(to_polynomial(Measure(OM, {}, limit_atom=1), 2))))
        code, out, _ = _cli("carrier", "--poly", str(p_path))
        assert code == 0
        assert json.loads(out)["isolatedSupport"] == []
        code, out, _ = _cli("nakano", "--p", str(p_path), "--q", str(q_path))
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "orderContinuousP": False,
            "orderContinuousQ": False,
            "polysDisjoint": False,
            "carriersDisjoint": True,
            "hypothesisMet": False,
            "equivalenceHolds": False,
        }

    def test_localize(self, tmp_path):
        obj_path = tmp_path / "mu.json"
        gen_path = tmp_path / "gen.json"
        obj_path.write_text(dumps_canonical(to_obj(Measure(F3, {1: 1, 2: 2}))))
        gen_path.write_text(dumps_canonical(to_obj(Element.finite([0, 1, 1]))))
        code, out, _ = _cli("localize", "--obj", str(obj_path), "--gen", str(gen_path))
        assert code == 0
        assert parse_instance(json.loads(out)) == Measure(F3, {2: 2})

    def test_single_poly_dichotomy(self, tmp_path):
        poly_path = tmp_path / "poly.json"
        poly_path.write_text(dumps_canonical(to_obj(to_polynomial(Measure(OM, {1: 1}, limit_atom=1), 2))))
        code, out, _ = _cli(
            "check", "order-continuity", "--poly", str(poly_path), "--depth", "10", "--format", "json"
        )
        assert code == 0
        report = json.loads(out)
        assert report["properties"][0]["name"] == "normality-dichotomy"
        assert "order continuous = False" in report["properties"][0]["detail"]

    def test_usage_errors_exit_two(self, tmp_path):
        code, _, err = _cli("check", "--suite", "no-such-suite")
        assert code == 2 and b"error:" in err
        code, _, err = _cli("check", "lattice-axioms", "--poly", "whatever.json")
        assert code == 2 and b"--poly targets the order-continuity" in err
        code, _, err = _cli("carrier", "--poly", str(tmp_path / "missing.json"))
        assert code == 2
        bad = tmp_path / "bad.json"
        bad.write_text('{"atoms": [{"point": 1, "weight": "1/0"}], "space": {"kind": "omega1"}}')
        code, _, err = _cli("carrier", "--poly", str(bad))
        assert code == 2 and b"zero denominator" in err


class TestCliInProcess:
    def test_failing_suite_exits_one(self, monkeypatch, capsys):
        def fake(config):
            return Report(config.suite, {"seed": "0"}, (PropertyResult("broken", False, samples=1),))

        monkeypatch.setattr("riesz_lab.cli.run_suite", fake)
        assert main(["check", "--suite", "lattice-axioms", "--format", "json"]) == 1
        payload = json.loads(capsys.readouterr().out)
        assert payload["passed"] is False

    def test_demo_without_witness_exits_one(self, monkeypatch, capsys):
        from riesz_lab.errors import NoWitnessError

        def fake(poly, probe_depth=50):
            raise NoWitnessError("nothing to show")

        monkeypatch.setattr("riesz_lab.cli.discontinuity_witness", fake)
        assert main(["demo", "counterexample"]) == 1
        assert "nothing to show" in capsys.readouterr().err

    def test_suite_listing_in_error(self, capsys):
        assert main(["check"]) == 2
        err = capsys.readouterr().err
        assert "pick a suite" in err and "nakano" in err
