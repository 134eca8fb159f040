import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from touchline.attributes import ALL_ATTRIBUTES, AttributeId
from touchline.errors import (
    DuplicateNameError,
    LibraryParseError,
    NegativeSigmaError,
    OutOfRangeError,
)
from touchline.library import (
    StrategyCategory,
    builtin_canonical,
    dump_library,
    load_default_library,
    load_library,
    perturb_template,
)


class TestBuiltinCanonical:
    def test_contains_exactly_the_five_published_templates(self):
        lib = builtin_canonical()
        assert len(lib) == 5
        assert lib.names() == (
            "High Pressing",
            "Fast Counterattack",
            "Positional Defense",
            "Build-up Play",
            "Gegenpressing",
        )

    def test_published_spot_values(self):
        lib = builtin_canonical()
        assert lib.by_name("Build-up Play").profile[AttributeId.A12] == 0.80
        assert lib.by_name("Positional Defense").profile[AttributeId.A5] == 0.20
        assert lib.by_name("High Pressing").profile[AttributeId.A4] == 0.90
        assert lib.by_name("Gegenpressing").profile[AttributeId.A4] == 0.80
        assert lib.by_name("Fast Counterattack").profile[AttributeId.A1] == 0.90

    def test_referentially_transparent(self):
        assert builtin_canonical() == builtin_canonical()

    def test_canonical_profiles_respect_encoding_floor_and_ceiling(self):
        for t in builtin_canonical():
            for a in ALL_ATTRIBUTES:
                assert 0.2 <= t.profile[a] <= 0.9

    def test_all_flagged_canonical(self):
        assert all(t.canonical for t in builtin_canonical())


class TestLoadLibrary:
    def test_round_trip_of_canonical_entries(self, tmp_path):
        path = tmp_path / "strategies.json"
        dump_library(builtin_canonical(), path)
        assert load_library(path) == builtin_canonical()

    def test_default_file_has_twenty_entries(self):
        lib = load_default_library()
        assert len(lib) == 20
        assert sum(t.canonical for t in lib) == 5
        # load order is id order is tie-break order
        assert [t.id for t in lib] == list(range(1, 21))

    def test_default_file_covers_all_five_categories(self):
        lib = load_default_library()
        assert {t.category for t in lib} == set(StrategyCategory)

    def test_duplicate_name_rejected(self):
        entries = json.loads(json.dumps(builtin_canonical().to_json()))
        entries.append(dict(entries[0]))
        with pytest.raises(DuplicateNameError):
            load_library(entries)

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(LibraryParseError):
            load_library(path)

    def test_non_array_payload(self, tmp_path):
        path = tmp_path / "obj.json"
        path.write_text("{}")
        with pytest.raises(LibraryParseError):
            load_library(path)

    def test_out_of_range_profile_value(self):
        entries = builtin_canonical().to_json()
        entries[0]["profile"]["A1"] = 1.3
        with pytest.raises(OutOfRangeError):
            load_library(entries)

    def test_canonical_flag_enforces_published_range(self):
        entries = builtin_canonical().to_json()
        entries[0]["profile"]["A1"] = 0.05
        with pytest.raises(OutOfRangeError):
            load_library(entries)

    def test_sub_floor_value_warns_but_loads_for_custom_templates(self):
        entries = builtin_canonical().to_json()
        entries[0]["name"] = "Ultra Defensive Custom"
        entries[0]["canonical"] = False
        entries[0]["profile"]["A1"] = 0.05
        with pytest.warns(UserWarning, match="below 0.2"):
            lib = load_library(entries)
        assert lib[0].profile[AttributeId.A1] == 0.05

    def test_serialize_round_trip_preserves_order(self, tmp_path):
        lib = load_default_library()
        path = tmp_path / "out.json"
        dump_library(lib, path)
        assert load_library(path).names() == lib.names()


class TestPerturbTemplate:
    def test_zero_sigma_identity(self):
        t = builtin_canonical()[0]
        out = perturb_template(t, 0.0, np.random.default_rng(41))
        assert out.profile == t.profile
        assert out.name == t.name and out.id == t.id
        assert out.canonical is False

    def test_seeded_perturbation_is_deterministic_and_bounded(self):
        t = builtin_canonical()[0]
        a = perturb_template(t, 0.05, np.random.default_rng(41))
        b = perturb_template(t, 0.05, np.random.default_rng(41))
        assert a.profile == b.profile
        assert a.profile != t.profile
        for attr in ALL_ATTRIBUTES:
            assert 0.0 <= a.profile[attr] <= 1.0

    def test_negative_sigma(self):
        with pytest.raises(NegativeSigmaError):
            perturb_template(builtin_canonical()[0], -0.1, np.random.default_rng(41))

    @settings(max_examples=25)
    @given(st.floats(min_value=0.0, max_value=0.5), st.integers(min_value=0, max_value=2**32 - 1))
    def test_any_sigma_yields_valid_vector(self, sigma, seed):
        t = builtin_canonical()[1]
        out = perturb_template(t, sigma, np.random.default_rng(seed))
        for attr in ALL_ATTRIBUTES:
            assert 0.0 <= out.profile[attr] <= 1.0

    def test_intensity_definition(self):
        gp = builtin_canonical().by_name("Gegenpressing")
        assert gp.intensity == pytest.approx((0.8 + 0.9) / 2, abs=1e-12)
