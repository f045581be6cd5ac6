import json
from fractions import Fraction as F

import pytest

from critlocus.cli import (
    AnalysisRequest,
    InputError,
    main,
    request_from_args,
    request_from_echo,
    run,
)


def req(command, variables, **kwargs):
    return AnalysisRequest(command=command, variables=tuple(variables), **kwargs)


class TestRun:
    def test_analyze_morse_plane(self):
        report = run(
            req("analyze", ["x", "y"], functional="x^2+y^2", points=("0,0",), bound=8)
        )
        assert report.exit_status == 0
        data = report.data
        assert data["schema"] == 1
        assert data["strict_locus"]["milnor_number"] == 1
        assert data["lambda_equivalence"]["regular_sequence"] is True
        point = data["points"][0]
        assert point["nondegenerate"] is True
        assert point["alpha_matrix"] == [["1/2", "0"], ["0", "1/2"]]
        assert data["strict_locus"]["fat_point_signal"] is False

    def test_family_degenerate(self):
        report = run(req("family", ["x", "y"], functional="x^2*y", tangent=("y",), bound=8))
        assert report.exit_status == 0
        fam = report.data["family"]
        assert fam["normal_hessian"] == [["2*y"]]
        assert fam["normal_hessian_nondegenerate"] is False
        assert fam["phi_comparison"]["verdict"] == "unequal"
        assert fam["phi_comparison"]["biconditional_holds"] is True

    def test_oneform_non_closed(self):
        report = run(req("oneform", ["x", "y"], one_form="y;0", bound=4))
        assert report.exit_status == 0
        section = report.data["one_form"]
        assert section["closed"] is False
        assert section["lagrangian_flag"] is False
        assert section["zero_locus_groebner_basis"] == ["y"]
        assert section["pairing_internal_differential_vanishes"] is False

    def test_point_fat_point_signal(self):
        report = run(req("point", ["x"], functional="x^3/3", points=("0",)))
        assert report.exit_status == 0
        assert report.data["strict_locus"]["milnor_number"] == 2
        assert report.data["strict_locus"]["fat_point_signal"] is True
        point = report.data["points"][0]
        assert point["on_locus"] is True
        assert point["nondegenerate"] is False
        assert point["alpha_matrix"] is None

    def test_milnor_infinite_serialized(self):
        report = run(req("analyze", ["x", "y"], functional="x^2*y", bound=6))
        assert report.data["strict_locus"]["milnor_number"] == "infinite"

    def test_unit_jacobian_dimension_empty(self):
        report = run(req("analyze", ["x"], functional="x", bound=4))
        assert report.data["strict_locus"]["dimension"] == "empty"
        assert report.data["strict_locus"]["milnor_number"] == 0


class TestDeterminism:
    def test_json_is_byte_stable(self):
        r = req(
            "analyze",
            ["x", "y"],
            functional="x^2+y^2",
            points=("0,0", "1,1"),
            bound=6,
            output_format="json",
        )
        assert run(r).to_json() == run(r).to_json()

    def test_round_trip_echo(self):
        for r in (
            req("analyze", ["x", "y"], functional="x^2+y^2", points=("0,0",), bound=6),
            req("oneform", ["x", "y"], one_form="y;x", bound=4, output_format="json"),
            req("family", ["x", "y"], functional="x^2", tangent=("y",), bound=8),
            req("point", ["x"], functional="x^3/3", points=("0", "1/2")),
        ):
            echo = run(r).data["request"]
            assert request_from_echo(echo) == r


class TestArgumentParsing:
    def test_args_to_request(self):
        r = request_from_args(
            [
                "analyze",
                "--vars",
                "x,y",
                "--f",
                "x^2+y^2",
                "--point",
                "0,0",
                "--bound",
                "12",
                "--format",
                "json",
            ]
        )
        assert r == req(
            "analyze",
            ["x", "y"],
            functional="x^2+y^2",
            points=("0,0",),
            bound=12,
            output_format="json",
        )

    def test_main_json_output(self, capsys):
        status = main(
            ["analyze", "--vars", "x", "--f", "x^2", "--bound", "4", "--format", "json"]
        )
        out = capsys.readouterr().out
        assert status == 0
        data = json.loads(out)
        assert data["schema"] == 1 and data["strict_locus"]["milnor_number"] == 1


GOLDEN_CORPUS = [
    # (argv, expected exit status)
    (["analyze", "--vars", "x,y,z", "--f", "x^2+y^2+z^2", "--point", "0,0,0", "--bound", "6"], 0),
    (["analyze", "--vars", "x", "--f", "x^3/3", "--point", "0", "--bound", "6"], 0),
    (["analyze", "--vars", "x,y", "--f", "x^3 - y^2", "--bound", "6"], 0),
    (["family", "--vars", "x,y", "--f", "x^2", "--tangent", "y", "--bound", "8"], 0),
    (["family", "--vars", "x,y", "--f", "x^2*y", "--tangent", "y", "--bound", "8"], 0),
    (["oneform", "--vars", "x,y", "--alpha", "y;x", "--bound", "4"], 0),
    (["oneform", "--vars", "x,y", "--alpha", "y;0", "--bound", "4"], 0),
    (["point", "--vars", "x,y", "--f", "x^2+y^2", "--point", "1,1"], 0),
    (["analyze", "--vars", "x,y", "--f", "x^2 + w"], 2),
    (["family", "--vars", "x,y", "--f", "x^2", "--tangent", "x"], 2),
    (["point", "--vars", "x", "--f", "x^2", "--point", "0,0"], 2),
    (["analyze", "--vars", "x,y", "--f", "x^3+y^3", "--bound", "1"], 3),
]


class TestExitStatusContract:
    @pytest.mark.parametrize("argv,expected", GOLDEN_CORPUS)
    def test_golden_corpus(self, argv, expected, capsys):
        assert main(argv) == expected
        capsys.readouterr()

    def test_parse_error_reports_byte_offset(self, capsys):
        assert main(["analyze", "--vars", "x,y", "--f", "x^2 + w"]) == 2
        err = capsys.readouterr().err
        assert "byte 6" in err and "unknown variable" in err

    def test_splitting_error_surfaced_verbatim(self, capsys):
        assert main(["family", "--vars", "x,y", "--f", "x^2", "--tangent", "x"]) == 2
        err = capsys.readouterr().err
        assert "splitting not tangent to critical locus" in err

    def test_bound_too_small_reports_minimal(self, capsys):
        status = main(
            ["analyze", "--vars", "x,y", "--f", "x^3+y^3", "--bound", "1", "--format", "json"]
        )
        assert status == 3
        data = json.loads(capsys.readouterr().out)
        assert data["homology"]["error"] == "bound too small"
        assert data["homology"]["minimal_safe_bound"] == 2


class TestInputValidation:
    def test_missing_functional(self):
        with pytest.raises(InputError):
            run(req("analyze", ["x"]))

    def test_duplicate_variables(self):
        with pytest.raises(InputError):
            run(req("analyze", ["x", "x"], functional="x"))

    def test_bad_point_coordinate(self):
        with pytest.raises(InputError):
            run(req("point", ["x"], functional="x^2", points=("a",)))

    def test_oneform_component_count(self):
        with pytest.raises(InputError):
            run(req("oneform", ["x", "y"], one_form="x"))

    def test_unknown_tangent_name(self):
        with pytest.raises(InputError):
            run(req("family", ["x", "y"], functional="x^2", tangent=("q",)))
