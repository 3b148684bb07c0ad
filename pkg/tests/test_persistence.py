"""Round trips through the .agts document and through the URL form."""

import json

import pytest

from agt import persistence, scripts
from agt.errors import MalformedDocument, VersionUnsupported
from agt.printer import program_text
from agt.session import Session


def build_session():
    """A small session with a macro, an edit history and a random array."""
    s = Session(seed=7)
    text = """\
    var int n = 4
    array int r 3 = 5 5 5
    array int z 4
    macro simple Note
    record Note
    apply % n 2 n
    write "reste " n
    stop
    """
    for _, action in scripts.parse_script(text):
        s.apply(action)
    return s


class TestDocumentRoundTrip:
    def test_save_load_preserves_everything(self):
        s = build_session()
        doc = persistence.document_of(s)
        back = persistence.loads(persistence.dumps(doc))
        assert back.seed == s.seed
        assert back.draws == s.draws == 4
        assert back.workspace.to_dict() == s.ws.to_dict()
        assert program_text(back.program) == program_text(s.program)
        assert back.actions == s.log

    def test_dumps_is_a_fixed_point(self):
        s = build_session()
        doc = persistence.document_of(s)
        once = persistence.dumps(doc)
        twice = persistence.dumps(persistence.loads(once))
        assert once == twice

    def test_restored_session_continues_the_random_stream(self):
        s = build_session()
        s2 = persistence.restore_session(
            persistence.loads(persistence.dumps(persistence.document_of(s))))
        s.apply({"op": "array", "name": "w", "type": "int", "length": 5})
        s2.apply({"op": "array", "name": "w", "type": "int", "length": 5})
        assert s.ws.array("w").cells == s2.ws.array("w").cells

    def test_restored_session_is_independent(self):
        s = build_session()
        doc = persistence.document_of(s)
        s2 = persistence.restore_session(doc)
        s2.apply({"op": "delete", "macro": "Note", "section": "body",
                  "path": [0]})
        assert program_text(s.program) != program_text(s2.program)
        assert program_text(doc.program) == program_text(s.program)

    def test_ui_object_rides_along_untouched(self):
        s = build_session()
        ui = {"zoom": 1.5, "panes": ["data", "code"], "theme": {"hue": 210}}
        doc = persistence.document_of(s, ui=ui)
        back = persistence.loads(persistence.dumps(doc))
        assert back.ui == ui

    def test_actions_can_be_left_out(self):
        s = build_session()
        doc = persistence.document_of(s, with_actions=False)
        raw = json.loads(persistence.dumps(doc))
        assert "actions" not in raw
        assert persistence.loads(persistence.dumps(doc)).actions is None

    def test_file_save_and_load(self, tmp_path):
        s = build_session()
        path = tmp_path / "tri.agts"
        persistence.save(persistence.document_of(s), path)
        back = persistence.load(path)
        assert back.workspace.to_dict() == s.ws.to_dict()


class TestUrlForm:
    @pytest.mark.parametrize("compress", ["auto", "always", "never"])
    def test_param_round_trip(self, compress):
        s = build_session()
        doc = persistence.document_of(s)
        value = persistence.to_url_param(doc, compress)
        back = persistence.from_url_param(value)
        assert back.workspace.to_dict() == s.ws.to_dict()
        assert program_text(back.program) == program_text(s.program)

    @pytest.mark.parametrize("compress", ["auto", "always", "never"])
    def test_full_url_round_trip(self, compress):
        s = build_session()
        doc = persistence.document_of(s)
        url = persistence.to_url(doc, "https://example.test/bench",
                                 compress)
        back = persistence.from_url(url)
        assert back.workspace.to_dict() == s.ws.to_dict()

    def test_url_value_stays_urlsafe(self):
        s = build_session()
        # the write prompt contains a space; percent-encoding must cover it
        for compress in ("always", "never"):
            value = persistence.to_url_param(
                persistence.document_of(s), compress)
            assert " " not in value and "\n" not in value
            assert all(c.isalnum() or c in "%-_.~:" for c in value), value

    def test_compressed_is_marked_and_shorter_here(self):
        s = build_session()
        doc = persistence.document_of(s)
        always = persistence.from_url_param(
            persistence.to_url_param(doc, "always"))
        assert always.seed == doc.seed
        assert len(persistence.to_url_param(doc, "always")) < \
            len(persistence.to_url_param(doc, "never"))

    def test_url_without_the_parameter(self):
        with pytest.raises(MalformedDocument):
            persistence.from_url("https://example.test/bench?x=1")


class TestBadDocuments:
    def test_not_json(self):
        with pytest.raises(MalformedDocument):
            persistence.loads("this is not json")

    def test_not_an_object(self):
        with pytest.raises(MalformedDocument):
            persistence.loads("[1, 2, 3]")

    def test_wrong_format_marker(self):
        with pytest.raises(MalformedDocument):
            persistence.loads('{"format": "quelquechose", "version": 1}')

    def test_future_version_is_refused(self):
        with pytest.raises(VersionUnsupported):
            persistence.loads('{"format": "agts", "version": 99}')

    def test_version_must_be_an_integer(self):
        with pytest.raises(MalformedDocument):
            persistence.loads('{"format": "agts", "version": "one"}')

    def test_broken_macro_text(self):
        with pytest.raises(MalformedDocument):
            persistence.loads(json.dumps({
                "format": "agts", "version": 1, "seed": 0,
                "palette": [-1, 0, 1], "entities": [],
                "macros": "Define Oops\n    Do\n        x = ;\nEnd\n"}))

    def test_broken_entity_list(self):
        with pytest.raises(MalformedDocument):
            persistence.loads(json.dumps({
                "format": "agts", "version": 1, "seed": 0,
                "palette": [-1, 0, 1],
                "entities": [{"kind": "array", "name": "t"}],
                "macros": ""}))

    def test_broken_compressed_payload(self):
        with pytest.raises(MalformedDocument):
            persistence.from_url_param("z:%%%not-base64%%%")
