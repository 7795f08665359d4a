from fractions import Fraction

from weylppav import Matrix, RootSystemId, riemann_family
from weylppav import reference
from weylppav import verify
from weylppav.verify import (_proportional, _same_span, _spanned_by,
                             run_verification)


class TestHelpers:
    def test_spanned_by(self):
        assert _spanned_by((2, 4), [(1, 2)])
        assert not _spanned_by((2, 5), [(1, 2)])
        assert _spanned_by((0, 0), [])
        assert not _spanned_by((1, 0), [])

    def test_same_span(self):
        a = Matrix([[2, 0], [0, 0]])
        b = Matrix([[0, 0], [0, 3]])
        assert _same_span((a, b), (a + b, a - b))
        assert not _same_span((a,), (b,))
        assert not _same_span((a,), (a, b))

    def test_proportional(self):
        z0 = riemann_family(RootSystemId.parse("A2")).z0
        assert _proportional(3 * z0, z0)
        assert _proportional(Fraction(-1, 7) * z0, z0)
        assert not _proportional(z0 + Matrix.identity(2), z0)


class TestRunVerification:
    def test_small_rank(self):
        report = run_verification(4)
        assert report["status"] == "pass"
        assert report["summary"]["fail"] == 0
        # only the witness sign flip is in range below rank 7
        assert report["summary"]["documented_discrepancy"] == 1

    def test_rejects_rank_below_two(self):
        import pytest

        with pytest.raises(ValueError):
            run_verification(1)

    def test_wrong_expectation_fails_run(self, monkeypatch):
        original = reference.expected_divisor_chain

        def wrong(system):
            if str(system) == "G2":
                return (9, 1)
            return original(system)

        monkeypatch.setattr(reference, "expected_divisor_chain", wrong)
        report = run_verification(2)
        assert report["status"] == "fail"
        assert report["summary"]["fail"] >= 1

    def test_documented_misprint_cannot_mask_new_mismatch(self, monkeypatch):
        # corrupt one more cell of the printed E8 table: the run must fail
        # even though (6,6) stays whitelisted
        rows = [list(reference.PRINTED_Z0_E8.row(i)) for i in range(8)]
        rows[0][1] = 99
        rows[1][0] = 99
        monkeypatch.setattr(reference, "PRINTED_Z0_E8", Matrix(rows))
        sec = verify.check_riemann_matrices(8)
        assert any(c.status == "fail" for c in sec.checks)

    def test_e7_section_documents_not_fails(self):
        sec = verify.check_riemann_matrices(7)
        statuses = {c.name: c.status for c in sec.checks}
        assert statuses["E7: computed z0 vs printed table"] == \
            "documented-discrepancy"
        assert all(s != "fail" for s in statuses.values())
