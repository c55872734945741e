from semivar import verify
from semivar.report import Report
from semivar.varieties import LZ, RZ


class TestSuiteShape:
    def test_check_ids_unique(self):
        for profile in verify.PROFILES.values():
            ids = [cid for cid, _ in verify.suite_checks(profile)]
            assert len(ids) == len(set(ids))

    def test_quick_is_a_subset_of_full_ids(self):
        quick = {cid for cid, _ in verify.suite_checks(verify.QUICK)}
        full = {cid for cid, _ in verify.suite_checks(verify.FULL)}
        assert quick == full  # same checks, different bounds


class TestHarness:
    def test_detects_wrong_model_pairing(self):
        # RZ criterion against the left-zero model must disagree somewhere
        status, witness = verify.check_exact_agreement(RZ, "LZ2", 2, 2)
        assert status == "fail" and witness is not None

    def test_exceptions_become_failures(self):
        report = Report(suite="x")
        calls = {"n": 0}

        def boom():
            calls["n"] += 1
            raise RuntimeError("kaput")

        # run through the runner with a single exploding check
        import semivar.verify as v

        original = v.suite_checks
        try:
            v.suite_checks = lambda profile: [("boom", boom)]
            report = v.run_suite(verify.QUICK)
        finally:
            v.suite_checks = original
        assert report.checks[0].status == "fail"
        assert "kaput" in (report.checks[0].witness or "")
        assert report.exit_code == 1

    def test_soundness_checker_direction(self):
        # LZ identities are not all satisfied by the right-zero model
        status, _ = verify.check_soundness(LZ, ("RZ2",), 2, 2)
        assert status == "fail"


class TestSwapIdentity:
    def test_shape(self):
        from semivar.words import word

        eq = verify.swap_identity(word("aaabb"))
        assert str(eq) == "caaabbd = daaabbc"
