import pytest

from clopen.errors import ResourceBoundError
from clopen.verify import VerifyConfig, ring_corpus, run_verify

SMALL = VerifyConfig(max_points=3, max_modulus=60, fiber_samples=120)


class TestOrchestrator:
    def test_small_run_passes(self):
        result = run_verify(SMALL)
        assert result.passed
        assert all(r.passed for r in result.reports)

    def test_deterministic_given_seed(self):
        a = run_verify(SMALL)
        b = run_verify(SMALL)
        assert a.to_json_dicts() == b.to_json_dicts()

    def test_reports_sorted(self):
        result = run_verify(SMALL)
        keys = [(r.check, r.instance) for r in result.reports]
        assert keys == sorted(keys)

    def test_parallel_matches_sequential(self):
        tiny = VerifyConfig(max_points=2, max_modulus=30, fiber_samples=40)
        seq = run_verify(tiny)
        par = run_verify(VerifyConfig(max_points=2, max_modulus=30,
                                      fiber_samples=40, jobs=2))
        assert seq.to_json_dicts() == par.to_json_dicts()

    def test_enumeration_guard(self):
        with pytest.raises(ResourceBoundError):
            run_verify(VerifyConfig(max_points=6))

    def test_positive_bounds_required(self):
        with pytest.raises(ResourceBoundError):
            run_verify(VerifyConfig(max_modulus=0))


class TestCorpus:
    def test_extra_instance_classes(self):
        corpus = ring_corpus(VerifyConfig())
        from clopen.ring import PolyQuot, Product, Table, Zmod

        extras = [r for r in corpus if not isinstance(r, Zmod)]
        assert len(extras) >= 50
        assert any(isinstance(r, PolyQuot) for r in extras)
        assert any(isinstance(r, Product) for r in extras)
        assert any(isinstance(r, Table) for r in extras)
