"""Tests for spec-file loading and validation."""

import os

import pytest

from radlog.config import SpecDocument, SpecOptions, load_spec, parse_spec
from radlog.core.models import BasisMode
from radlog.errors import SpecFileError

SPECS = os.path.join(os.path.dirname(__file__), "specs")


def spec_path(name: str) -> str:
    return os.path.join(SPECS, name)


class TestLoadSpec:
    def test_laplace(self):
        doc = load_spec(spec_path("laplace3.json"))
        spec = doc.to_problem()
        assert spec.p == 2
        assert spec.n == 3
        assert spec.factors[0].alphas == (0.0, 0.0, 0.0)
        assert doc.options.seed == 7
        assert doc.options.points == 20

    def test_defaults(self):
        doc = load_spec(spec_path("euler_i2.json"))
        assert doc.options == SpecOptions()
        assert doc.options.h_rel == 1e-4
        assert doc.options.mode == BasisMode.PER_FACTOR
        assert doc.fd_config().h_rel == 1e-4

    def test_mode_alias(self):
        doc = load_spec(spec_path("shared_root.json"))
        assert doc.options.mode == BasisMode.COMBINED

    def test_missing_file(self):
        with pytest.raises(SpecFileError, match="cannot read"):
            load_spec(spec_path("does_not_exist.json"))


class TestDiagnostics:
    def test_bad_k_reports_line(self):
        with pytest.raises(SpecFileError) as info:
            load_spec(spec_path("bad_k.json"))
        err = info.value
        assert err.line == 6
        assert err.field == "factors.1.k"
        assert str(err).startswith(f"{spec_path('bad_k.json')}:6: factors.1.k:")

    def test_alpha_count_mismatch(self):
        with pytest.raises(SpecFileError) as info:
            load_spec(spec_path("bad_alphas.json"))
        assert info.value.field == "factors.0.alphas"
        assert info.value.line == 5
        assert "expected 3 alphas" in str(info.value)

    def test_unknown_option(self):
        with pytest.raises(SpecFileError) as info:
            load_spec(spec_path("unknown_option.json"))
        assert info.value.field == "options.stepsize"
        assert info.value.line == 9

    def test_invalid_json(self):
        with pytest.raises(SpecFileError, match="invalid JSON") as info:
            parse_spec('{\n  "p": 2,\n  "n": \n}')
        assert info.value.line == 4

    def test_nonpositive_p(self):
        with pytest.raises(SpecFileError) as info:
            parse_spec('{"p": -1, "n": 1, "factors": [{"alphas": [1], "lambda": 0, "k": 1}]}')
        assert info.value.field == "p"
        assert info.value.line == 1

    def test_empty_factor_list(self):
        with pytest.raises(SpecFileError) as info:
            parse_spec('{"p": 1, "n": 1, "factors": []}')
        assert info.value.field == "factors"

    def test_negative_seed(self):
        with pytest.raises(SpecFileError) as info:
            parse_spec(
                '{"p": 1, "n": 1, "factors": [{"alphas": [1], "lambda": 0, "k": 1}],'
                ' "options": {"seed": -3}}'
            )
        assert info.value.field == "options.seed"

    def test_unknown_mode(self):
        with pytest.raises(SpecFileError) as info:
            parse_spec(
                '{"p": 1, "n": 1, "factors": [{"alphas": [1], "lambda": 0, "k": 1}],'
                ' "options": {"mode": "exotic"}}'
            )
        assert info.value.field == "options.mode"

    def test_no_path_placeholder(self):
        with pytest.raises(SpecFileError) as info:
            parse_spec("[")
        assert str(info.value).startswith("<spec>:1:")


class TestOverrides:
    def test_apply(self):
        doc = load_spec(spec_path("laplace3.json"))
        updated = doc.with_overrides(seed=11, points=None, mode="combined")
        assert updated.options.seed == 11
        assert updated.options.points == 20
        assert updated.options.mode == BasisMode.COMBINED
        assert doc.options.seed == 7

    def test_no_overrides_returns_same_document(self):
        doc = load_spec(spec_path("laplace3.json"))
        assert doc.with_overrides(seed=None) is doc

    def test_invalid_override(self):
        doc = load_spec(spec_path("laplace3.json"))
        with pytest.raises(SpecFileError) as info:
            doc.with_overrides(h_rel=0.9)
        assert info.value.field == "options.h_rel"

    def test_document_round_trip(self):
        doc = load_spec(spec_path("laplace3.json"))
        again = SpecDocument.model_validate_json(doc.model_dump_json(by_alias=True))
        assert again == doc
