import pytest

from src.ends.classifier import (
    CANONICAL_TYPES,
    VIOLATION_CANTOR,
    VIOLATION_CUSPS,
    VIOLATION_GENUS,
    SurfaceKind,
    SurfaceType,
    canonical_descriptor,
    check_irs_admissible,
    classify,
)
from src.ends.descriptor import CuspEnds, EndsDescriptor, NonCuspEnds, finite_type_descriptor
from src.errors import InconsistentDescriptorError, InvalidArgumentError, NotAdmissibleError


@pytest.mark.parametrize("surface", CANONICAL_TYPES, ids=lambda s: s.name)
def test_canonical_descriptors_classify_back(surface):
    descriptor = canonical_descriptor(surface)
    assert check_irs_admissible(descriptor).admissible
    assert classify(descriptor) == surface


def test_twelve_infinite_types():
    assert len(CANONICAL_TYPES) == 12
    assert len({s.name for s in CANONICAL_TYPES}) == 12


@pytest.mark.parametrize("name, realizable", [
    ("Plane", False),
    ("Cylinder", False),
    ("Punctured(Plane)", True),
    ("Punctured(Cylinder)", True),
    ("LochNess", True),
    ("BloomingCantorTree", True),
])
def test_realizability(name, realizable):
    assert SurfaceType.from_name(name).realizable is realizable


def test_names_round_trip():
    for surface in CANONICAL_TYPES:
        assert SurfaceType.from_name(surface.name) == surface


def test_unknown_name():
    with pytest.raises(InvalidArgumentError):
        SurfaceType.from_name("Torus")


def test_finite_type():
    descriptor = finite_type_descriptor(2, 3)
    report = check_irs_admissible(descriptor)
    assert report.admissible
    assert report.notes
    surface = classify(descriptor)
    assert surface.kind == SurfaceKind.FINITE_TYPE
    assert surface.name == "FiniteType(2, 3)"


class TestAdmissibility:

    def test_many_isolated_ends(self):
        d = EndsDescriptor(total_genus=None, noncusp_ends=NonCuspEnds.MANY_ISOLATED, every_end_infinite_genus=True)
        assert check_irs_admissible(d).violations == [VIOLATION_CANTOR]

    def test_genus_zero_end_on_positive_genus_surface(self):
        d = EndsDescriptor(total_genus=None, noncusp_ends=NonCuspEnds.TWO, some_end_genus_zero=True)
        assert check_irs_admissible(d).violations == [VIOLATION_GENUS]

    def test_finite_genus_with_planar_end(self):
        d = EndsDescriptor(total_genus=3, noncusp_ends=NonCuspEnds.ONE, some_end_genus_zero=True)
        assert VIOLATION_GENUS in check_irs_admissible(d).violations

    @pytest.mark.parametrize("cusps, count", [(CuspEnds.FINITE, 2), (CuspEnds.INFINITE_SPARSE, None)])
    def test_cusps_not_dense(self, cusps, count):
        d = EndsDescriptor(total_genus=None, noncusp_ends=NonCuspEnds.ONE, every_end_infinite_genus=True,
                           cusp_ends=cusps, cusp_count=count)
        assert check_irs_admissible(d).violations == [VIOLATION_CUSPS]

    def test_all_violations_reported(self):
        d = EndsDescriptor(total_genus=1, noncusp_ends=NonCuspEnds.MANY_ISOLATED, some_end_genus_zero=True,
                           cusp_ends=CuspEnds.FINITE, cusp_count=1)
        assert check_irs_admissible(d).violations == [VIOLATION_CANTOR, VIOLATION_GENUS, VIOLATION_CUSPS]

    def test_classify_raises_with_violations(self):
        d = EndsDescriptor(total_genus=None, noncusp_ends=NonCuspEnds.MANY_ISOLATED, every_end_infinite_genus=True)
        with pytest.raises(NotAdmissibleError) as info:
            classify(d)
        assert info.value.violations == [VIOLATION_CANTOR]


class TestConsistency:

    @pytest.mark.parametrize("fields", [
        dict(total_genus=3, noncusp_ends=NonCuspEnds.ONE, every_end_infinite_genus=True),
        dict(total_genus=-1, noncusp_ends=NonCuspEnds.ZERO, finite_type=(-1, 0)),
        dict(total_genus=0, noncusp_ends=NonCuspEnds.ONE),
        dict(total_genus=None, noncusp_ends=NonCuspEnds.ONE, every_end_infinite_genus=True, some_end_genus_zero=True),
        dict(total_genus=1, noncusp_ends=NonCuspEnds.ZERO, finite_type=(2, 0)),
        dict(total_genus=1, noncusp_ends=NonCuspEnds.ZERO),
        dict(total_genus=None, noncusp_ends=NonCuspEnds.ONE, every_end_infinite_genus=True,
             cusp_ends=CuspEnds.FINITE),
    ])
    def test_inconsistent(self, fields):
        with pytest.raises(InconsistentDescriptorError):
            check_irs_admissible(EndsDescriptor(**fields))


def test_descriptor_dict_form():
    d = canonical_descriptor(SurfaceType(SurfaceKind.JACOB_LADDER, punctured=True))
    data = d.to_dict()
    assert data["total_genus"] == "infinite"
    assert data["cusp_ends"] == "infinite_dense"
    assert EndsDescriptor.from_dict(data) == d


def test_descriptor_unknown_enum_value():
    with pytest.raises(InvalidArgumentError):
        EndsDescriptor.from_dict({"noncusp_ends": "three"})
