"""Parsers and serializers for the two framework text formats."""

import pytest

from afsat.fileformats import (
    ParseError,
    parse,
    parse_apx,
    parse_tgf,
    serialize,
    serialize_apx,
    serialize_tgf,
    sniff_format,
)

from conftest import MUTUAL


APX_SAMPLE = """\
% a mutual attack
arg(a).
arg(b).

att(a, b).  % spaces inside statements are fine
att(b,a).
"""

TGF_SAMPLE = """\
a
b
#
a b
b a
"""


class TestApx:
    def test_parse_sample(self):
        af = parse_apx(APX_SAMPLE)
        assert af == MUTUAL

    def test_round_trip(self, small_afs):
        for af in small_afs:
            assert parse_apx(serialize_apx(af)) == af

    def test_serialize_deterministic(self):
        assert serialize_apx(MUTUAL) == "arg(a).\narg(b).\natt(a,b).\natt(b,a).\n"

    def test_declaration_order_preserved(self):
        af = parse_apx("arg(z).\narg(a).\n")
        assert af.arguments == ("z", "a")

    def test_errors(self):
        with pytest.raises(ParseError, match="line 2.*duplicate"):
            parse_apx("arg(a).\narg(a).\n")
        with pytest.raises(ParseError, match="line 1.*unrecognized"):
            parse_apx("argument(a).\n")
        with pytest.raises(ParseError, match="undeclared"):
            parse_apx("arg(a).\natt(a,b).\n")
        with pytest.raises(ParseError, match="no arguments"):
            parse_apx("% nothing here\n")
        with pytest.raises(ParseError):
            parse_apx("arg(a)\n")  # missing trailing dot

    def test_attack_before_declaration(self):
        af = parse_apx("att(b,a).\narg(a).\narg(b).\n")
        assert af.has_attack(2, 1)


class TestTgf:
    def test_parse_sample(self):
        af = parse_tgf(TGF_SAMPLE)
        assert af == MUTUAL

    def test_round_trip(self, small_afs):
        for af in small_afs:
            assert parse_tgf(serialize_tgf(af)) == af

    def test_serialize_deterministic(self):
        assert serialize_tgf(MUTUAL) == "a\nb\n#\na b\nb a\n"

    def test_errors(self):
        with pytest.raises(ParseError, match="missing '#'"):
            parse_tgf("a\nb\n")
        with pytest.raises(ParseError, match="line 4.*second separator"):
            parse_tgf("a\nb\n#\n#\n")
        with pytest.raises(ParseError, match="duplicate"):
            parse_tgf("a\na\n#\n")
        with pytest.raises(ParseError, match="expected 'attacker target'"):
            parse_tgf("a\n#\na\n")
        with pytest.raises(ParseError, match="undeclared"):
            parse_tgf("a\n#\na b\n")
        with pytest.raises(ParseError, match="bad argument name"):
            parse_tgf("a-b\n#\n")


class TestDispatch:
    def test_sniff(self):
        assert sniff_format(APX_SAMPLE) == "apx"
        assert sniff_format(TGF_SAMPLE) == "tgf"
        assert sniff_format("% comment\narg(a).\n") == "apx"

    def test_auto_parse(self):
        assert parse(APX_SAMPLE) == MUTUAL
        assert parse(TGF_SAMPLE) == MUTUAL
        assert parse(APX_SAMPLE, fmt="apx") == MUTUAL

    def test_cross_format_round_trip(self, small_afs):
        for af in small_afs:
            assert parse(serialize(af, "tgf"), "tgf") == parse(serialize(af, "apx"), "apx")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            parse("x\n#\n", fmt="xml")
        with pytest.raises(ValueError):
            serialize(MUTUAL, "xml")
