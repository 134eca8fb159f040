import pytest
from hypothesis import given
from hypothesis import strategies as st

from touchline.attributes import (
    ALL_ATTRIBUTES,
    AttributeCategory,
    AttributeId,
    AttributeVector,
    MatchState,
    ParamSet,
    PartialAttributeVector,
    decode_vector,
    encode_vector,
    from_categorical,
    make_vector,
    project,
)
from touchline.errors import (
    EmptyMaskError,
    InactiveAttributeError,
    OutOfRangeError,
    UnknownLevelError,
    WrongArityError,
)

HIGH_PRESS = (0.70, 0.80, 0.60, 0.90, 0.90, 0.50, 0.80, 0.70, 0.80, 0.60, 0.90, 0.70, 0.80, 0.80)
BUILD_UP = (0.80, 0.50, 0.70, 0.50, 0.40, 0.60, 0.70, 0.60, 0.80, 0.70, 0.80, 0.80, 0.60, 0.80)

PILOT_MASK = (AttributeId.A1, AttributeId.A2, AttributeId.A4, AttributeId.A5, AttributeId.A8)

unit_floats = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


class TestAttributeIds:
    def test_exactly_fourteen_total_ordered(self):
        assert len(ALL_ATTRIBUTES) == 14
        assert list(ALL_ATTRIBUTES) == sorted(ALL_ATTRIBUTES)
        assert AttributeId.A1 < AttributeId.A2 < AttributeId.A14

    def test_category_groupings(self):
        technical = {a for a in ALL_ATTRIBUTES if a.category is AttributeCategory.TECHNICAL}
        physical = {a for a in ALL_ATTRIBUTES if a.category is AttributeCategory.PHYSICAL}
        psych = {a for a in ALL_ATTRIBUTES if a.category is AttributeCategory.PSYCHOLOGICAL}
        assert technical == {AttributeId[f"A{i}"] for i in range(1, 7)}
        assert physical == {AttributeId.A8, AttributeId.A12, AttributeId.A13}
        assert psych == {AttributeId.A7, AttributeId.A9, AttributeId.A10, AttributeId.A11, AttributeId.A14}

    def test_display_names(self):
        assert AttributeId.A1.display_name == "Offensive Strength"
        assert AttributeId.A8.display_name == "Residual Energy"
        assert AttributeId.A14.display_name == "Relational Cohesion"


class TestMakeVector:
    def test_all_zeros_is_valid(self):
        v = make_vector([0.0] * 14)
        assert all(v[a] == 0.0 for a in ALL_ATTRIBUTES)

    def test_high_press_profile_is_valid(self):
        v = make_vector(HIGH_PRESS)
        assert v[AttributeId.A1] == 0.70
        assert v[AttributeId.A5] == 0.90
        assert v.components == HIGH_PRESS

    def test_out_of_range_component_rejected(self):
        values = [0.5] * 14
        values[0] = 1.05
        with pytest.raises(OutOfRangeError) as exc:
            make_vector(values)
        assert exc.value.where == AttributeId.A1
        assert exc.value.value == 1.05

    @pytest.mark.parametrize("n", [0, 13, 15])
    def test_wrong_arity(self, n):
        with pytest.raises(WrongArityError):
            make_vector([0.5] * n)

    def test_clamp_variant_clips_instead_of_raising(self):
        v = make_vector([1.4] + [-0.2] + [0.5] * 12, clamp=True)
        assert v[AttributeId.A1] == 1.0
        assert v[AttributeId.A2] == 0.0

    @given(st.lists(unit_floats, min_size=14, max_size=14))
    def test_round_trip_reproduces_inputs_exactly(self, values):
        v = make_vector(values)
        assert [v[a] for a in ALL_ATTRIBUTES] == values


class TestCategoricalMapping:
    @pytest.mark.parametrize(
        "level,expected",
        [("High", 0.85), ("Medium", 0.50), ("Low", 0.20)],
    )
    def test_default_anchors(self, level, expected):
        assert from_categorical(level) == expected

    @pytest.mark.parametrize("level", ["Hoch", "Mittel", "Niedrig"])
    def test_accepts_source_language_labels(self, level):
        assert from_categorical(level) in (0.85, 0.50, 0.20)

    def test_unknown_level(self):
        with pytest.raises(UnknownLevelError):
            from_categorical("Extreme")

    @given(
        st.floats(min_value=-0.10, max_value=0.10),
        st.floats(min_value=-0.10, max_value=0.10),
        st.floats(min_value=-0.10, max_value=0.10),
    )
    def test_monotone_under_any_anchor_shift_within_tolerance(self, dh, dm, dl):
        anchors = {"High": 0.85 + dh, "Medium": 0.50 + dm, "Low": 0.20 + dl}
        high = from_categorical("High", anchors)
        medium = from_categorical("Medium", anchors)
        low = from_categorical("Low", anchors)
        assert high > medium > low


class TestProjection:
    def test_pilot_mask_on_build_up(self):
        v = make_vector(BUILD_UP)
        p = project(v, PILOT_MASK)
        assert p.components == (0.80, 0.50, 0.50, 0.40, 0.60)

    def test_full_mask_is_identity(self):
        v = make_vector(HIGH_PRESS)
        p = project(v, ALL_ATTRIBUTES)
        assert p.components == v.components
        assert p.active == ALL_ATTRIBUTES

    def test_empty_mask(self):
        with pytest.raises(EmptyMaskError):
            project(make_vector(HIGH_PRESS), [])

    def test_reprojection_is_idempotent(self):
        v = make_vector(BUILD_UP)
        once = project(v, PILOT_MASK)
        twice = project(once, PILOT_MASK)
        assert once == twice

    @given(st.lists(unit_floats, min_size=14, max_size=14), st.sets(st.sampled_from(ALL_ATTRIBUTES), min_size=1))
    def test_projection_preserves_values(self, values, mask):
        v = make_vector(values)
        p = project(v, mask)
        for a in mask:
            assert p[a] == v[a]

    def test_partial_vector_rejects_inactive_lookup(self):
        p = project(make_vector(BUILD_UP), PILOT_MASK)
        with pytest.raises(InactiveAttributeError):
            p[AttributeId.A14]


class TestMatchState:
    def test_valid_defaults(self):
        s = MatchState()
        assert s.time_remaining == 1.0 and s.score_state == 0 and s.energy is None

    @pytest.mark.parametrize("kwargs", [
        {"time_remaining": 1.2},
        {"time_remaining": -0.1},
        {"score_state": 2},
        {"energy": 1.5},
    ])
    def test_rejects_out_of_range(self, kwargs):
        with pytest.raises(OutOfRangeError):
            MatchState(**kwargs)


class TestParamSet:
    def test_defaults_match_published_table(self):
        p = ParamSet()
        assert (p.tau_e, p.gamma_e, p.gamma_g, p.tau_t, p.gamma_t, p.alpha) == (
            0.50, 1.50, 1.00, 0.25, 2.00, 0.20,
        )

    def test_alpha_bounded(self):
        with pytest.raises(OutOfRangeError):
            ParamSet(alpha=1.2)
        with pytest.raises(OutOfRangeError):
            ParamSet(alpha=-0.1)

    def test_replace_ignores_none(self):
        p = ParamSet().replace(alpha=None, gamma_e=2.0)
        assert p.alpha == 0.20 and p.gamma_e == 2.0


class TestJsonCodec:
    def test_full_vector_round_trip(self):
        v = make_vector(HIGH_PRESS)
        assert decode_vector(encode_vector(v)) == v

    def test_partial_vector_round_trip(self):
        p = project(make_vector(BUILD_UP), PILOT_MASK)
        obj = encode_vector(p)
        assert obj["active"] == ["A1", "A2", "A4", "A5", "A8"]
        assert decode_vector(obj) == p

    def test_partial_mapping_builder(self):
        p = PartialAttributeVector.from_mapping({"A8": 0.35, "A1": 0.85})
        assert p.active == (AttributeId.A1, AttributeId.A8)
        assert p[AttributeId.A8] == 0.35
