"""Tests for the generating function cache and its service."""

import json

import pytest

from app.combinatorics import BoundaryKind
from app.core.errors import BudgetExceededError
from app.exact.closedform import closed_form_genfun
from app.exact.genfun import GenFun
from app.memory.genfun_cache import GenFunCache
from app.schemas.genfun import GenFunPayload
from app.services.generating import GenFunService

PE, PO, RE = BoundaryKind.PERIODIC_EVEN, BoundaryKind.PERIODIC_ODD, BoundaryKind.REFLECTING_EVEN


class TestGenFunCache:
    """Test the on-disk cache."""

    @pytest.fixture
    def cache(self, tmp_path):
        return GenFunCache(root=tmp_path, version="1.0.0")

    @pytest.fixture
    def genfun(self):
        return GenFun(kind=PE, size=6, coeffs=(0, 2, 3, 2), z=7)

    def test_miss_then_hit(self, cache, genfun):
        """Test that a stored entry is returned unchanged."""
        assert cache.get(PE, 6) is None
        cache.put(genfun)
        assert cache.get(PE, 6) == genfun
        assert (cache.hits, cache.misses) == (1, 1)

    def test_one_file_per_key(self, cache, genfun):
        """Test the file layout."""
        path = cache.put(genfun)
        assert path.name == "periodic-even-L6.json"
        assert not list(path.parent.glob("*.tmp"))

    def test_version_change_invalidates(self, cache, genfun, tmp_path):
        """Test that entries of another tool version are dropped."""
        cache.put(genfun)
        newer = GenFunCache(root=tmp_path, version="2.0.0")
        assert newer.get(PE, 6) is None
        assert newer.invalidated == 1
        assert not cache.path_for(PE, 6).exists()

    def test_corrupt_entry_invalidates(self, cache, genfun):
        """Test that an unreadable file counts as a miss."""
        path = cache.put(genfun)
        path.write_text("{not json", encoding="utf-8")
        assert cache.get(PE, 6) is None
        assert cache.invalidated == 1

    def test_unnormalized_entry_invalidates(self, cache, genfun):
        """Test that coefficients not summing to Z are dropped."""
        path = cache.put(genfun)
        data = json.loads(path.read_text(encoding="utf-8"))
        data["payload"]["z"] = "8"
        path.write_text(json.dumps(data), encoding="utf-8")
        assert cache.get(PE, 6) is None

    def test_get_or_compute(self, cache):
        """Test that the computation runs once."""
        calls = []

        def compute(kind, size):
            calls.append(size)
            return closed_form_genfun(kind, size)

        first = cache.get_or_compute(RE, 8, compute)
        second = cache.get_or_compute(RE, 8, compute)
        assert first == second
        assert calls == [8]

    def test_clear(self, cache, genfun):
        """Test that clear removes every entry."""
        cache.put(genfun)
        cache.put(closed_form_genfun(RE, 4))
        assert cache.clear() == 2
        assert cache.get_statistics()["entries"] == 0

    def test_statistics(self, cache, genfun):
        """Test the statistics counters."""
        cache.put(genfun)
        cache.get(PE, 6)
        stats = cache.get_statistics()
        assert stats["entries"] == 1
        assert stats["hits"] == 1
        assert stats["bytes"] > 0


class TestPayload:
    """Test the JSON payload of a generating function."""

    def test_round_trip(self):
        """Test that big integers survive as decimal strings."""
        genfun = closed_form_genfun(PE, 40)
        payload = GenFunPayload.from_genfun(genfun)
        assert GenFunPayload.model_validate_json(payload.model_dump_json()).to_genfun() == genfun

    def test_rejects_non_integers(self):
        """Test that coefficients must be decimal integers."""
        with pytest.raises(ValueError):
            GenFunPayload(kind=PE, size=2, coefficients=["0", "1.5"], z="1")


class TestGenFunService:
    """Test source selection."""

    def test_closed_form_source(self, tmp_path):
        """Test that kinds with a closed form use it."""
        service = GenFunService(cache=GenFunCache(root=tmp_path))
        genfun, source = service.genfun(RE, 6)
        assert source == "closed-form"
        assert genfun.coeffs == (0, 4, 11, 11)

    def test_odd_cylinder_uses_oracle(self):
        """Test that the odd cylinder goes through the ground state."""
        genfun, source = GenFunService().genfun(PO, 5)
        assert source == "oracle"
        assert genfun.coeffs == (10, 11, 4)

    def test_odd_cylinder_budget(self):
        """Test that the odd cylinder respects the state-space cap."""
        with pytest.raises(BudgetExceededError):
            GenFunService(max_sites=9).genfun(PO, 11)

    def test_oracle_summary(self):
        """Test ground-state statistics."""
        summary = GenFunService().oracle_summary(PE, 6)
        assert summary.dimension == 5
        assert summary.z == "7"
        assert summary.min_component == "1"
        assert summary.max_component == "2"
        assert summary.genfun.polynomial == "2x^3 + 3x^2 + 2x"
